#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "rsc/cochain.hpp"
#include "rsc/complex.hpp"
#include "rsc/homology.hpp"
#include "rsc/subdivision.hpp"

namespace rsc {

struct Caps {
    std::int64_t max_simplices = kDefaultSubdivisionCap;
    int max_enum_bits = kDefaultEnumBits;
    std::int64_t max_betti_simplices = kDefaultBettiCap;
};

enum class ExperimentMode { Exhaustive, MonteCarlo };

struct ExperimentSpec {
    SimplicialComplex complex; ///< the root complex K
    int k = 1;
    Rat nu = Rat(1, 2);
    int depth = 0; ///< cochains live on Sd^depth(K)
    ExperimentMode mode = ExperimentMode::Exhaustive;
    std::int64_t trials = 0; ///< Monte Carlo only
    std::uint64_t seed = 0;
    bool compute_betti = true;
    bool census = true;
    Caps caps;
};

struct StatSummary {
    std::string name;
    bool exact = false;
    Rat exact_value;
    double mean = 0;
    double sample_variance = 0;
    double ci99_radius = 0;
};

struct CensusRow {
    std::vector<std::int64_t> betti; ///< component homology type
    bool exact = false;
    Rat exact_mean;
    double mean = 0;
};

struct ExperimentReport {
    std::string complex_name;
    int n = 0;
    int k = 1;
    Rat nu;
    int depth = 0;
    ExperimentMode mode = ExperimentMode::Exhaustive;
    std::int64_t trials = 0;
    std::uint64_t seed = 0;
    Int normalization; ///< (n+1)!^depth * f_n(K)
    std::vector<StatSummary> stats;
    std::vector<CensusRow> census;
    double wall_seconds = 0; ///< informational only, never serialized

    const StatSummary& stat(const std::string& name) const;
};

/// Exhaustive mode integrates every statistic against mu_nu exactly (sums of
/// statistic * mass over all cochains); Monte Carlo averages `trials`
/// independent samples, each trial on its own derived RNG stream, reduced in
/// trial-index order. Statistics: f_i(V_eps), chi, b_i, CW cell counts (k=1),
/// dual block counts, component counts, and sphere-component placement.
ExperimentReport run(const ExperimentSpec& spec);
/// Single-threaded reference producing bit-identical reports.
ExperimentReport run_serial(const ExperimentSpec& spec);

struct SigmaCount {
    std::map<std::vector<std::int64_t>, std::int64_t> by_betti;
    std::int64_t components = 0;

    std::int64_t count(const std::vector<std::int64_t>& type) const {
        auto it = by_betti.find(type);
        return it == by_betti.end() ? 0 : it->second;
    }
    std::int64_t spheres() const { return count({1, 0, 1}); }
    std::int64_t circles() const { return count({1, 1}); }
    std::int64_t genus(int g) const { return count({1, 2 * g, 1}); }
};

/// Splits V into connected components and tallies them by Z/2 Betti vector
/// (trailing zeros trimmed to the component's top occupied dimension).
SigmaCount component_census(const SimplicialComplex& V);

struct ConvergenceRow {
    int d = 0;
    std::vector<Int> f_host;                 ///< f-vector of Sd^d(K)
    Int normalization;                       ///< (n+1)!^d f_n(K)
    Rat chi_expected;                        ///< exact E_nu(chi) over Sd^d(K)
    Rat chi_normalized;                      ///< divided by the normalization
    std::vector<Rat> f_expected_normalized;  ///< exact E_nu(f_i), normalized
    std::vector<StatSummary> mc_betti;       ///< optional Monte Carlo b_i columns
};

struct ConvergenceTable {
    int n = 0, k = 1;
    Rat nu;
    std::vector<ConvergenceRow> rows;
    std::vector<Rat> c_plus_reference; ///< c_i^+(n,k)
    Rat chi_limit;                     ///< sum_i (-1)^i c_i^+(n,k)
};

/// Exact normalized expectation columns for d = 0..d_max (f-vectors advance
/// through the transfer matrix, nothing is materialized); when trials > 0,
/// Monte Carlo Betti columns are attached for every depth whose subdivision
/// fits the caps.
ConvergenceTable convergence_table(const SimplicialComplex& K, int k, const Rat& nu, int d_max,
                                   std::int64_t trials = 0, std::uint64_t seed = 0,
                                   const Caps& caps = Caps{});

/// 1 / 2^{f_{k-1}(Sd^m(Delta_n)) - 1}
Rat p_sigma_lower_bound(int n, int k, int m);
/// p_sigma / (n+1)!^m
Rat c_sigma(int n, int k, int m);

} // namespace rsc
