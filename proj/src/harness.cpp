#include "rsc/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "rsc/errors.hpp"
#include "rsc/expectation.hpp"
#include "rsc/rng.hpp"

namespace rsc {

namespace {

constexpr double kZTwoSided99 = 2.5758293035489004;

/// Preprocessed machinery for evaluating V_eps statistics many times over a
/// fixed host: the host's facet structure (for coboundaries), the flags of
/// Sd(host) with their ini entries, and the flag facet ordinals (for boundary
/// matrices). All per-trial state lives in Scratch.
class VEngine {
public:
    struct Options {
        bool betti = true;
        bool census = true;
    };

    VEngine(const SimplicialComplex& host, int k, std::vector<std::int64_t> carrier_top,
            Options options, const Caps& caps)
        : host_(host), k_(k), n_(host.dim()), vdim_(host.dim() - k),
          carrier_top_(std::move(carrier_top)), options_(options) {
        FlagComplex sd = barycentric_subdivide(host_, caps.max_simplices);
        sd_ = sd.complex();

        // facet ordinals of host k-simplices, for the coboundary bits
        if (k_ <= n_) {
            kfacets_.reserve(host_.f(k_) * (k_ + 1));
            Simplex facet(static_cast<std::size_t>(k_));
            for (const Simplex& s : host_.simplices(k_)) {
                for (std::size_t drop = 0; drop < s.size(); ++drop) {
                    std::size_t w = 0;
                    for (std::size_t i = 0; i < s.size(); ++i)
                        if (i != drop) facet[w++] = s[i];
                    kfacets_.push_back(static_cast<std::int32_t>(host_.find(facet)->index));
                }
            }
        }
        // facet gids of host simplices above dimension k, for nonvanishing propagation
        hfacets_.resize(n_ + 1);
        for (int q = k_ + 1; q <= n_; ++q) {
            hfacets_[q].reserve(host_.f(q) * (q + 1));
            Simplex facet(static_cast<std::size_t>(q));
            for (const Simplex& s : host_.simplices(q)) {
                for (std::size_t drop = 0; drop < s.size(); ++drop) {
                    std::size_t w = 0;
                    for (std::size_t i = 0; i < s.size(); ++i)
                        if (i != drop) facet[w++] = s[i];
                    hfacets_[q].push_back(static_cast<std::int32_t>(host_.global_id_of(facet)));
                }
            }
        }
        // ini of every flag, and flag facet ordinals
        const int sdim = sd_.dim();
        ini_.resize(sdim + 1);
        sdfacets_.resize(sdim + 1);
        for (int p = 0; p <= sdim; ++p) {
            ini_[p].reserve(sd_.f(p));
            for (const Simplex& flag : sd_.simplices(p))
                ini_[p].push_back(static_cast<std::int32_t>(FlagComplex::ini(flag)));
            if (p == 0) continue;
            sdfacets_[p].reserve(sd_.f(p) * (p + 1));
            Simplex sub(static_cast<std::size_t>(p));
            for (const Simplex& flag : sd_.simplices(p)) {
                for (std::size_t drop = 0; drop < flag.size(); ++drop) {
                    std::size_t w = 0;
                    for (std::size_t i = 0; i < flag.size(); ++i)
                        if (i != drop) sub[w++] = flag[i];
                    sdfacets_[p].push_back(static_cast<std::int32_t>(sd_.find(sub)->index));
                }
            }
        }
        build_stat_names();
    }

    const SimplicialComplex& host() const { return host_; }
    const SimplicialComplex& sd() const { return sd_; }
    std::int64_t eps_bits() const { return host_.f(k_ - 1); }
    const std::vector<std::string>& stat_names() const { return names_; }

    struct Scratch {
        std::vector<char> deps;
        std::vector<char> nv;
        std::vector<std::vector<char>> member;
        std::vector<std::vector<std::int32_t>> rowidx; // -1 except inside one computation
        std::vector<std::int32_t> parent;
        std::vector<std::int32_t> comp_of_root;
    };

    Scratch make_scratch() const {
        Scratch s;
        s.deps.assign(static_cast<std::size_t>(k_ <= n_ ? host_.f(k_) : 0), 0);
        s.nv.assign(static_cast<std::size_t>(host_.num_simplices()), 0);
        s.member.resize(sd_.dim() + 1);
        s.rowidx.resize(sd_.dim() + 1);
        for (int p = 0; p <= sd_.dim(); ++p) {
            s.member[p].assign(static_cast<std::size_t>(sd_.f(p)), 0);
            s.rowidx[p].assign(static_cast<std::size_t>(sd_.f(p)), -1);
        }
        s.parent.assign(static_cast<std::size_t>(host_.num_simplices()), 0);
        s.comp_of_root.assign(static_cast<std::size_t>(host_.num_simplices()), -1);
        return s;
    }

    using CensusTally = std::vector<std::pair<std::vector<std::int64_t>, std::int64_t>>;

    void evaluate(const Cochain& eps, Scratch& sc, std::vector<std::int64_t>& values,
                  CensusTally& census) const {
        values.assign(names_.size(), 0);
        census.clear();

        // coboundary bits on host k-simplices
        if (k_ <= n_) {
            const std::int64_t fk = host_.f(k_);
            for (std::int64_t i = 0; i < fk; ++i) {
                bool parity = false;
                for (int j = 0; j <= k_; ++j) parity ^= eps.get(kfacets_[i * (k_ + 1) + j]);
                sc.deps[i] = parity;
            }
        }
        // nonvanishing restriction per host simplex
        std::fill(sc.nv.begin(), sc.nv.end(), 0);
        if (k_ <= n_) {
            const std::int64_t base_k = host_.global_id(k_, 0);
            for (std::int64_t i = 0; i < host_.f(k_); ++i) sc.nv[base_k + i] = sc.deps[i];
            for (int q = k_ + 1; q <= n_; ++q) {
                const std::int64_t base = host_.global_id(q, 0);
                for (std::int64_t i = 0; i < host_.f(q); ++i) {
                    char hit = 0;
                    for (int j = 0; j <= q && !hit; ++j)
                        hit = sc.nv[hfacets_[q][i * (q + 1) + j]];
                    sc.nv[base + i] = hit;
                }
            }
        }
        // nonvanishing counts per host dimension -> CW and block statistics
        std::vector<std::int64_t> nv_by_dim(n_ + 1, 0);
        for (int q = k_; q <= n_; ++q) {
            const std::int64_t base = host_.global_id(q, 0);
            for (std::int64_t i = 0; i < host_.f(q); ++i) nv_by_dim[q] += sc.nv[base + i];
        }
        // members of V by flag dimension
        const int top = std::min(sd_.dim(), vdim_);
        std::vector<std::int64_t> f(vdim_ + 1, 0);
        for (int p = 0; p <= top; ++p) {
            const std::int64_t fp = sd_.f(p);
            for (std::int64_t i = 0; i < fp; ++i) {
                const char m = sc.nv[ini_[p][i]];
                sc.member[p][i] = m;
                f[p] += m;
            }
        }
        std::int64_t chi = 0;
        for (int p = 0; p <= vdim_; ++p) chi += (p % 2 == 0 ? f[p] : -f[p]);

        std::vector<std::int64_t> b(vdim_ + 1, 0);
        if (options_.betti) {
            std::vector<std::int64_t> rank(vdim_ + 2, 0);
            for (int p = 1; p <= top; ++p) rank[p] = member_rank(sc, p);
            for (int p = 0; p <= vdim_; ++p) b[p] = f[p] - rank[p] - rank[p + 1];
        }

        std::int64_t components = 0, interior_sphere_tops = 0, sphere_components = 0;
        if (options_.census) {
            census_pass(sc, top, components, interior_sphere_tops, sphere_components, census);
        }

        // flatten in the declared stat order
        std::size_t w = 0;
        for (int p = 0; p <= vdim_; ++p) values[w++] = f[p];
        values[w++] = chi;
        if (options_.betti)
            for (int p = 0; p <= vdim_; ++p) values[w++] = b[p];
        if (k_ == 1)
            for (int p = 0; p + 1 <= n_; ++p) values[w++] = nv_by_dim[p + 1];
        for (int i = 0; i <= vdim_; ++i) values[w++] = nv_by_dim[n_ - i];
        if (options_.census) {
            values[w++] = components;
            values[w++] = interior_sphere_tops;
            values[w++] = sphere_components;
        }
    }

private:
    void build_stat_names() {
        for (int p = 0; p <= vdim_; ++p) names_.push_back("f_" + std::to_string(p));
        names_.push_back("chi");
        if (options_.betti)
            for (int p = 0; p <= vdim_; ++p) names_.push_back("b_" + std::to_string(p));
        if (k_ == 1)
            for (int p = 0; p + 1 <= n_; ++p) names_.push_back("cw_" + std::to_string(p));
        for (int i = 0; i <= vdim_; ++i) names_.push_back("block_" + std::to_string(i));
        if (options_.census) {
            names_.push_back("components");
            names_.push_back("interior_sphere_tops");
            names_.push_back("sphere_components");
        }
    }

    std::int64_t member_rank(Scratch& sc, int p) const {
        // numbering of the (p-1)-members
        std::int64_t rows = 0;
        const std::int64_t fprev = sd_.f(p - 1);
        for (std::int64_t i = 0; i < fprev; ++i)
            if (sc.member[p - 1][i]) sc.rowidx[p - 1][i] = static_cast<std::int32_t>(rows++);
        std::int64_t cols = 0;
        const std::int64_t fp = sd_.f(p);
        for (std::int64_t i = 0; i < fp; ++i) cols += sc.member[p][i];
        BitMatrix m(rows, cols);
        std::int64_t c = 0;
        for (std::int64_t i = 0; i < fp; ++i) {
            if (!sc.member[p][i]) continue;
            for (int j = 0; j <= p; ++j)
                m.set(sc.rowidx[p - 1][sdfacets_[p][i * (p + 1) + j]], c);
            ++c;
        }
        for (std::int64_t i = 0; i < fprev; ++i) sc.rowidx[p - 1][i] = -1;
        return rank_gf2(std::move(m));
    }

    std::int32_t uf_find(Scratch& sc, std::int32_t x) const {
        while (sc.parent[x] != x) {
            sc.parent[x] = sc.parent[sc.parent[x]];
            x = sc.parent[x];
        }
        return x;
    }

    void census_pass(Scratch& sc, int top, std::int64_t& components,
                     std::int64_t& interior_sphere_tops, std::int64_t& sphere_components,
                     CensusTally& census) const {
        const std::int64_t nverts = sd_.f(0); // vertex ordinal == host gid
        for (std::int64_t v = 0; v < nverts; ++v) sc.parent[v] = static_cast<std::int32_t>(v);
        if (top >= 1) {
            const std::int64_t fe = sd_.f(1);
            for (std::int64_t i = 0; i < fe; ++i) {
                if (!sc.member[1][i]) continue;
                const Simplex& e = sd_.simplex(1, i);
                auto a = uf_find(sc, e[0]), bb = uf_find(sc, e[1]);
                if (a != bb) sc.parent[std::max(a, bb)] = std::min(a, bb);
            }
        }
        std::vector<std::int32_t> roots;
        for (std::int64_t v = 0; v < nverts; ++v) {
            if (!sc.member[0][v]) continue;
            auto r = uf_find(sc, static_cast<std::int32_t>(v));
            if (sc.comp_of_root[r] < 0) {
                sc.comp_of_root[r] = static_cast<std::int32_t>(roots.size());
                roots.push_back(r);
            }
        }
        components = static_cast<std::int64_t>(roots.size());

        // bucket member ordinals by component and dimension
        std::vector<std::vector<std::vector<std::int32_t>>> buckets(
            roots.size(), std::vector<std::vector<std::int32_t>>(top + 1));
        for (int p = 0; p <= top; ++p) {
            const std::int64_t fp = sd_.f(p);
            for (std::int64_t i = 0; i < fp; ++i) {
                if (!sc.member[p][i]) continue;
                const auto comp = sc.comp_of_root[uf_find(sc, sd_.simplex(p, i)[0])];
                buckets[comp][p].push_back(static_cast<std::int32_t>(i));
            }
        }

        std::map<std::vector<std::int64_t>, std::int64_t> tally;
        std::vector<std::int64_t> sphere_tops;
        for (std::size_t c = 0; c < roots.size(); ++c) {
            int ctop = 0;
            for (int p = 0; p <= top; ++p)
                if (!buckets[c][p].empty()) ctop = p;
            std::vector<std::int64_t> rank(ctop + 2, 0);
            for (int p = 1; p <= ctop; ++p) {
                std::int64_t rows = 0;
                for (auto i : buckets[c][p - 1]) sc.rowidx[p - 1][i] = static_cast<std::int32_t>(rows++);
                BitMatrix m(rows, static_cast<std::int64_t>(buckets[c][p].size()));
                std::int64_t col = 0;
                for (auto i : buckets[c][p]) {
                    for (int j = 0; j <= p; ++j)
                        m.set(sc.rowidx[p - 1][sdfacets_[p][static_cast<std::int64_t>(i) * (p + 1) + j]],
                              col);
                    ++col;
                }
                for (auto i : buckets[c][p - 1]) sc.rowidx[p - 1][i] = -1;
                rank[p] = rank_gf2(std::move(m));
            }
            std::vector<std::int64_t> type(ctop + 1);
            for (int p = 0; p <= ctop; ++p)
                type[p] = static_cast<std::int64_t>(buckets[c][p].size()) - rank[p] - rank[p + 1];
            const bool is_sphere_type =
                type.size() == 3 && type[0] == 1 && type[1] == 0 && type[2] == 1;
            if (is_sphere_type) {
                ++sphere_components;
                std::int64_t owner = -1;
                bool interior = true;
                for (auto v : buckets[c][0]) {
                    const std::int64_t t = carrier_top_[v];
                    if (t < 0 || (owner >= 0 && t != owner)) {
                        interior = false;
                        break;
                    }
                    owner = t;
                }
                if (interior && owner >= 0) sphere_tops.push_back(owner);
            }
            ++tally[type];
        }
        std::sort(sphere_tops.begin(), sphere_tops.end());
        interior_sphere_tops = static_cast<std::int64_t>(
            std::unique(sphere_tops.begin(), sphere_tops.end()) - sphere_tops.begin());

        for (auto r : roots) sc.comp_of_root[r] = -1;
        census.assign(tally.begin(), tally.end());
    }

    SimplicialComplex host_;
    int k_, n_, vdim_;
    SimplicialComplex sd_;
    std::vector<std::int32_t> kfacets_;
    std::vector<std::vector<std::int32_t>> hfacets_;
    std::vector<std::vector<std::int32_t>> ini_;
    std::vector<std::vector<std::int32_t>> sdfacets_;
    std::vector<std::int64_t> carrier_top_;
    Options options_;
    std::vector<std::string> names_;
};

void validate_spec(const ExperimentSpec& spec) {
    if (spec.complex.empty()) throw validation_error("experiment: complex is empty");
    if (spec.k < 1 || spec.k > spec.complex.dim())
        throw validation_error("experiment: need 1 <= k <= dim");
    if (spec.nu < 0 || spec.nu > 1) throw validation_error("experiment: nu must lie in [0,1]");
    if (spec.depth < 0) throw validation_error("experiment: depth must be >= 0");
    if (spec.mode == ExperimentMode::MonteCarlo && spec.trials < 1)
        throw validation_error("experiment: Monte Carlo requires trials >= 1");
}

std::vector<std::int64_t> carrier_top_map(const SimplicialComplex& root,
                                          const IteratedSubdivision& it) {
    const int n = root.dim();
    std::vector<std::int64_t> out(it.complex.num_simplices());
    for (std::int64_t g = 0; g < it.complex.num_simplices(); ++g) {
        const std::int64_t r = it.carrier[g];
        out[g] = (root.from_global(r).dim == n) ? r : -1;
    }
    return out;
}

ExperimentReport run_impl(const ExperimentSpec& spec, bool parallel) {
    validate_spec(spec);
    const auto t0 = std::chrono::steady_clock::now();

    IteratedSubdivision it = subdivide_iterated(spec.complex, spec.depth, spec.caps.max_simplices);
    VEngine engine(it.complex, spec.k, carrier_top_map(spec.complex, it),
                   VEngine::Options{spec.compute_betti, spec.census}, spec.caps);

    const auto& names = engine.stat_names();
    const std::size_t nstats = names.size();

    ExperimentReport report;
    report.complex_name = spec.complex.name();
    report.n = spec.complex.dim();
    report.k = spec.k;
    report.nu = spec.nu;
    report.depth = spec.depth;
    report.mode = spec.mode;
    report.seed = spec.seed;
    report.normalization =
        int_pow(factorial(static_cast<unsigned>(report.n + 1)), static_cast<unsigned>(spec.depth)) *
        Int(spec.complex.f(report.n));

    if (spec.mode == ExperimentMode::Exhaustive) {
        const std::int64_t bits = engine.eps_bits();
        if (bits > spec.caps.max_enum_bits || bits > 62)
            throw cap_exceeded("experiment: exhaustive enumeration over 2^" +
                               std::to_string(bits) + " cochains exceeds the bound");
        const Int a = numerator(spec.nu), den = denominator(spec.nu);
        std::vector<Int> weight(bits + 1); // mass numerator by zero count, over den^bits
        for (std::int64_t z = 0; z <= bits; ++z)
            weight[z] = int_pow(a, static_cast<unsigned>(z)) *
                        int_pow(den - a, static_cast<unsigned>(bits - z));

        const std::int64_t total = std::int64_t(1) << bits;
        std::vector<Int> sums(nstats, Int(0));
        std::map<std::vector<std::int64_t>, Int> census_sums;

        auto body = [&](std::vector<Int>& local_sums,
                        std::map<std::vector<std::int64_t>, Int>& local_census,
                        VEngine::Scratch& sc, std::int64_t lo, std::int64_t hi) {
            Cochain eps(spec.k - 1, bits);
            std::vector<std::int64_t> values;
            VEngine::CensusTally tally;
            for (std::int64_t m = lo; m < hi; ++m) {
                eps.assign_mask(static_cast<std::uint64_t>(m));
                engine.evaluate(eps, sc, values, tally);
                const Int& w = weight[bits - __builtin_popcountll(static_cast<std::uint64_t>(m))];
                if (w == 0) continue;
                for (std::size_t s = 0; s < nstats; ++s)
                    if (values[s] != 0) local_sums[s] += w * values[s];
                for (auto& [type, count] : tally) local_census[type] += w * count;
            }
        };

#ifdef _OPENMP
        if (parallel) {
            const int nthreads = omp_get_max_threads();
            std::vector<std::vector<Int>> tsums(nthreads, std::vector<Int>(nstats, Int(0)));
            std::vector<std::map<std::vector<std::int64_t>, Int>> tcensus(nthreads);
#pragma omp parallel num_threads(nthreads)
            {
                const int t = omp_get_thread_num();
                VEngine::Scratch sc = engine.make_scratch();
                const std::int64_t chunk = (total + nthreads - 1) / nthreads;
                const std::int64_t lo = std::min<std::int64_t>(total, t * chunk);
                const std::int64_t hi = std::min<std::int64_t>(total, lo + chunk);
                body(tsums[t], tcensus[t], sc, lo, hi);
            }
            for (int t = 0; t < nthreads; ++t) {
                for (std::size_t s = 0; s < nstats; ++s) sums[s] += tsums[t][s];
                for (auto& [type, w] : tcensus[t]) census_sums[type] += w;
            }
        } else
#endif
        {
            (void)parallel;
            VEngine::Scratch sc = engine.make_scratch();
            body(sums, census_sums, sc, 0, total);
        }

        const Int denom = int_pow(den, static_cast<unsigned>(bits));
        for (std::size_t s = 0; s < nstats; ++s) {
            StatSummary st;
            st.name = names[s];
            st.exact = true;
            st.exact_value = Rat(sums[s], denom);
            st.mean = st.exact_value.convert_to<double>();
            report.stats.push_back(std::move(st));
        }
        for (auto& [type, w] : census_sums) {
            CensusRow row;
            row.betti = type;
            row.exact = true;
            row.exact_mean = Rat(w, denom);
            row.mean = row.exact_mean.convert_to<double>();
            report.census.push_back(std::move(row));
        }
    } else {
        const std::int64_t T = spec.trials;
        std::vector<std::int64_t> values_by_trial(static_cast<std::size_t>(T) * nstats);
        std::map<std::vector<std::int64_t>, std::int64_t> census_sums;

        auto trial_body = [&](std::int64_t t, VEngine::Scratch& sc, Cochain& eps,
                              std::vector<std::int64_t>& values, VEngine::CensusTally& tally,
                              std::map<std::vector<std::int64_t>, std::int64_t>& local_census) {
            Rng rng = derive_stream(spec.seed, static_cast<std::uint64_t>(t));
            eps = sample(Measure{spec.nu}, engine.host(), spec.k - 1, rng);
            engine.evaluate(eps, sc, values, tally);
            std::copy(values.begin(), values.end(),
                      values_by_trial.begin() + static_cast<std::size_t>(t) * nstats);
            for (auto& [type, count] : tally) local_census[type] += count;
        };

#ifdef _OPENMP
        if (parallel) {
            const int nthreads = omp_get_max_threads();
            std::vector<std::map<std::vector<std::int64_t>, std::int64_t>> tcensus(nthreads);
#pragma omp parallel num_threads(nthreads)
            {
                const int tid = omp_get_thread_num();
                VEngine::Scratch sc = engine.make_scratch();
                Cochain eps;
                std::vector<std::int64_t> values;
                VEngine::CensusTally tally;
#pragma omp for schedule(dynamic, 16)
                for (std::int64_t t = 0; t < T; ++t)
                    trial_body(t, sc, eps, values, tally, tcensus[tid]);
            }
            for (auto& m : tcensus)
                for (auto& [type, c] : m) census_sums[type] += c;
        } else
#endif
        {
            VEngine::Scratch sc = engine.make_scratch();
            Cochain eps;
            std::vector<std::int64_t> values;
            VEngine::CensusTally tally;
            for (std::int64_t t = 0; t < T; ++t)
                trial_body(t, sc, eps, values, tally, census_sums);
        }

        report.trials = T;
        for (std::size_t s = 0; s < nstats; ++s) {
            Int sum = 0, sumsq = 0;
            for (std::int64_t t = 0; t < T; ++t) {
                const std::int64_t v = values_by_trial[static_cast<std::size_t>(t) * nstats + s];
                sum += v;
                sumsq += Int(v) * v;
            }
            StatSummary st;
            st.name = names[s];
            st.mean = Rat(sum, T).convert_to<double>();
            if (T > 1) {
                const Rat var = (Rat(sumsq) - Rat(sum * sum, T)) / (T - 1);
                st.sample_variance = var.convert_to<double>();
                st.ci99_radius = kZTwoSided99 * std::sqrt(st.sample_variance / static_cast<double>(T));
            }
            report.stats.push_back(std::move(st));
        }
        for (auto& [type, c] : census_sums) {
            CensusRow row;
            row.betti = type;
            row.mean = static_cast<double>(c) / static_cast<double>(T);
            report.census.push_back(std::move(row));
        }
    }

    report.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return report;
}

} // namespace

const StatSummary& ExperimentReport::stat(const std::string& name) const {
    for (const auto& s : stats)
        if (s.name == name) return s;
    throw validation_error("report has no statistic named " + name);
}

ExperimentReport run(const ExperimentSpec& spec) { return run_impl(spec, true); }
ExperimentReport run_serial(const ExperimentSpec& spec) { return run_impl(spec, false); }

SigmaCount component_census(const SimplicialComplex& V) {
    SigmaCount out;
    if (V.empty()) return out;
    const auto labels = connected_component_labels(V);
    std::map<std::int64_t, std::vector<std::vector<Simplex>>> parts;
    for (int p = 0; p <= V.dim(); ++p) {
        for (const Simplex& s : V.simplices(p)) {
            const auto root = labels[V.find({s[0]})->index];
            auto& bucket = parts[root];
            if (bucket.empty()) bucket.resize(V.dim() + 1);
            bucket[p].push_back(s);
        }
    }
    for (auto& [root, by_dim] : parts) {
        auto comp = SimplicialComplex::from_closed_set("component", std::move(by_dim));
        BettiVector bv = betti(comp);
        out.by_betti[bv.b] += 1;
        out.components += 1;
    }
    return out;
}

ConvergenceTable convergence_table(const SimplicialComplex& K, int k, const Rat& nu, int d_max,
                                   std::int64_t trials, std::uint64_t seed, const Caps& caps) {
    if (K.empty()) throw validation_error("convergence_table: complex is empty");
    const int n = K.dim();
    if (k < 1 || k > n) throw validation_error("convergence_table: need 1 <= k <= dim");

    ConvergenceTable table;
    table.n = n;
    table.k = k;
    table.nu = nu;
    table.c_plus_reference = c_plus(n, k, nu);
    table.chi_limit = c_plus_alternating_sum(n, k, nu);

    std::vector<Rat> taus(n + 1);
    std::vector<std::vector<Rat>> deltas(n + 1);
    for (int p = k; p <= n; ++p) {
        taus[p] = tau(p, k, nu);
        deltas[p] = delta_polynomial(p, k, nu).coefficients(n - k + 1);
    }

    std::vector<Int> f(n + 1);
    for (int p = 0; p <= n; ++p) f[p] = K.f(p);
    const Int factor = factorial(static_cast<unsigned>(n + 1));
    Int norm = K.f(n);

    for (int d = 0; d <= d_max; ++d) {
        ConvergenceRow row;
        row.d = d;
        row.f_host = f;
        row.normalization = norm;
        Rat chi = 0;
        for (int p = k; p <= n; ++p) chi += Rat(f[p]) * taus[p];
        row.chi_expected = chi;
        row.chi_normalized = chi / Rat(norm);
        row.f_expected_normalized.resize(n - k + 1);
        for (int i = 0; i <= n - k; ++i) {
            Rat e = 0;
            for (int p = k + i; p <= n; ++p) e += Rat(f[p]) * deltas[p][i];
            row.f_expected_normalized[i] = e / Rat(norm);
        }
        if (trials > 0) {
            try {
                ExperimentSpec spec;
                spec.complex = K;
                spec.k = k;
                spec.nu = nu;
                spec.depth = d;
                spec.mode = ExperimentMode::MonteCarlo;
                spec.trials = trials;
                spec.seed = seed + static_cast<std::uint64_t>(d);
                spec.census = false;
                spec.caps = caps;
                ExperimentReport rep = run(spec);
                for (int i = 0; i <= n - k; ++i)
                    row.mc_betti.push_back(rep.stat("b_" + std::to_string(i)));
            } catch (const cap_exceeded&) {
                // leave the Monte Carlo columns empty for depths past the cap
            }
        }
        table.rows.push_back(std::move(row));
        f = apply_transfer(n, std::move(f), 1);
        norm *= factor;
    }
    return table;
}

Rat p_sigma_lower_bound(int n, int k, int m) {
    if (n < 1 || k < 1 || k > n || m < 0) throw validation_error("p_sigma: bad parameters");
    std::vector<Int> f(n + 1);
    for (int p = 0; p <= n; ++p) f[p] = binomial(n + 1, p + 1);
    f = apply_transfer(n, std::move(f), m);
    const Int bits = f[k - 1] - 1;
    if (bits > 4'000'000) throw cap_exceeded("p_sigma: subdivided f-vector entry too large");
    return Rat(Int(1), Int(1) << static_cast<unsigned>(bits));
}

Rat c_sigma(int n, int k, int m) {
    return p_sigma_lower_bound(n, k, m) /
           Rat(int_pow(factorial(static_cast<unsigned>(n + 1)), static_cast<unsigned>(m)));
}

} // namespace rsc
