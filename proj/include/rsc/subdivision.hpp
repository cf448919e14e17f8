#pragma once

#include <cstdint>
#include <vector>

#include "rsc/complex.hpp"
#include "rsc/rational.hpp"

namespace rsc {

inline constexpr std::int64_t kDefaultSubdivisionCap = 5'000'000;

/// First barycentric subdivision of a base complex. Vertices of the
/// subdivision are the global simplex ids of the base; its simplices are
/// flags, i.e. strictly increasing chains in the face order, stored as
/// increasing id sequences. ini/fin of a flag are its first/last entries.
class FlagComplex {
public:
    FlagComplex(SimplicialComplex base, SimplicialComplex sd)
        : base_(std::move(base)), sd_(std::move(sd)) {}

    const SimplicialComplex& base() const { return base_; }
    const SimplicialComplex& complex() const { return sd_; }

    static std::int64_t ini(const Simplex& flag) { return flag.front(); }
    static std::int64_t fin(const Simplex& flag) { return flag.back(); }

private:
    SimplicialComplex base_;
    SimplicialComplex sd_;
};

/// Throws cap_exceeded if the projected simplex count of the result exceeds cap.
FlagComplex barycentric_subdivide(const SimplicialComplex& K,
                                  std::int64_t cap = kDefaultSubdivisionCap);

struct IteratedSubdivision {
    SimplicialComplex complex; ///< Sd^d(K)
    /// Per global id of `complex`: global id of the K-simplex whose relative
    /// interior contains this simplex's relative interior.
    std::vector<std::int64_t> carrier;
};

IteratedSubdivision subdivide_iterated(const SimplicialComplex& K, int depth,
                                       std::int64_t cap = kDefaultSubdivisionCap);

/// lambda(l, i): number of interior (i-1)-faces of Sd(Delta_{l-1});
/// lambda(0,0) = 1 and lambda(l,0) = 0 for l > 0.
class LambdaTable {
public:
    /// surjection-count formula: sum_j C(i,j) (-1)^{i-j} j^l
    static LambdaTable from_formula(int max_l);
    /// direct count of interior faces of materialized subdivisions
    static LambdaTable from_direct_count(int max_l);

    int max_l() const { return static_cast<int>(table_.size()) - 1; }
    const Int& at(int l, int i) const;

    friend bool operator==(const LambdaTable&, const LambdaTable&) = default;

private:
    std::vector<std::vector<Int>> table_; // table_[l][i], 0 <= i <= l
};

/// Number of i-simplices of Sd(Delta_p) of the form [s_0 < ... < s_i] with
/// dim s_0 = l and dim s_i = p, via the product formula C(p+1,l+1)*lambda(p-l,i).
Int flag_count_by_ends(int l, int p, int i);
/// The same count by explicit flag enumeration (test oracle).
Int flag_count_by_ends_direct(int l, int p, int i);

/// Matrix M with f(Sd K) = M f(K) for any complex of dimension <= n;
/// M[j][l] = lambda(l+1, j+1), diagonal (j+1)!.
std::vector<std::vector<Int>> transfer_matrix(int n);

/// f-vector of Sd^times(K) given f(K), without materializing anything.
std::vector<Int> apply_transfer(int n, std::vector<Int> f, int times);

/// Exact eigenvector q of the transfer action for the eigenvalue (n+1)!,
/// normalized q[n] = 1; all entries positive. f_p(Sd^d K) / ((n+1)!^d f_n(K))
/// converges to q[p] as d grows.
std::vector<Rat> q_coefficients(int n);

/// Evaluates sum_p q[p] t^p.
Rat q_infinity_eval(int n, const Rat& t);

} // namespace rsc
