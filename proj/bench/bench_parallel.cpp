// Timings of the OpenMP kernels against their serial reference paths:
// Monte Carlo experiment runs, exhaustive enumeration, and the per-simplex
// sphere-link verification. The two paths must produce identical results;
// the benchmark asserts that before reporting speedups.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "rsc/gallery.hpp"
#include "rsc/harness.hpp"
#include "rsc/subcomplex_v.hpp"

using namespace rsc;

namespace {

double seconds(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void row(const std::string& name, double serial, double parallel, bool equal) {
    std::printf("%-32s %10.3fs %10.3fs %8.2fx  %s\n", name.c_str(), serial, parallel,
                serial / parallel, equal ? "identical" : "MISMATCH");
    if (!equal) std::exit(1);
}

} // namespace

int main(int argc, char** argv) {
    std::int64_t trials = 4000;
    if (argc > 1) trials = std::atoll(argv[1]);

#ifdef _OPENMP
    std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
    std::printf("OpenMP not enabled; both columns run the serial path\n");
#endif
    std::printf("%-32s %11s %11s %9s\n", "kernel", "serial", "parallel", "speedup");

    {
        ExperimentSpec spec;
        spec.complex = boundary_sphere(4);
        spec.k = 1;
        spec.nu = Rat(1, 2);
        spec.depth = 1;
        spec.mode = ExperimentMode::MonteCarlo;
        spec.trials = trials;
        spec.seed = 7;
        auto t0 = std::chrono::steady_clock::now();
        ExperimentReport serial = run_serial(spec);
        const double ts = seconds(t0);
        t0 = std::chrono::steady_clock::now();
        ExperimentReport parallel = run(spec);
        const double tp = seconds(t0);
        bool equal = serial.stats.size() == parallel.stats.size();
        for (std::size_t i = 0; equal && i < serial.stats.size(); ++i)
            equal = serial.stats[i].mean == parallel.stats[i].mean &&
                    serial.stats[i].sample_variance == parallel.stats[i].sample_variance;
        row("montecarlo bd_delta_4 d=1", ts, tp, equal);
    }
    {
        ExperimentSpec spec;
        spec.complex = boundary_sphere(3);
        spec.k = 1;
        spec.nu = Rat(1, 3);
        spec.depth = 1;
        spec.mode = ExperimentMode::Exhaustive;
        auto t0 = std::chrono::steady_clock::now();
        ExperimentReport serial = run_serial(spec);
        const double ts = seconds(t0);
        t0 = std::chrono::steady_clock::now();
        ExperimentReport parallel = run(spec);
        const double tp = seconds(t0);
        bool equal = serial.stats.size() == parallel.stats.size();
        for (std::size_t i = 0; equal && i < serial.stats.size(); ++i)
            equal = serial.stats[i].exact_value == parallel.stats[i].exact_value;
        row("exhaustive sd(bd_delta_3)", ts, tp, equal);
    }
    {
        SurfaceConstruction c = genus_surface_epsilon(5, 2);
        GalleryVerification v = verify_construction(c);
        auto t0 = std::chrono::steady_clock::now();
        auto serial = find_sphere_link_violation_serial(v.v);
        const double ts = seconds(t0);
        t0 = std::chrono::steady_clock::now();
        auto parallel = find_sphere_link_violation(v.v);
        const double tp = seconds(t0);
        row("sphere links, genus-5 surface", ts, tp,
            serial.has_value() == parallel.has_value());
    }
    return 0;
}
