#pragma once

#include <cstdint>
#include <vector>

#include "rsc/cochain.hpp"
#include "rsc/complex.hpp"
#include "rsc/subdivision.hpp"

namespace rsc {

/// The subcomplex of Sd(K) dual to the coboundary of a (k-1)-cochain eps:
/// a flag belongs iff the coboundary of eps restricted to its ini is nonzero
/// (some k-face of ini carries a 1). Vertices of `complex` are global ids of
/// the base K.
struct VSubcomplex {
    SimplicialComplex complex;
    Cochain epsilon;
    int k = 1;
};

/// Per K-simplex (by global id): true iff d(eps) restricted to it is nonzero,
/// i.e. some k-face tau satisfies <d eps, tau> = 1. False in dimensions < k.
std::vector<char> nonvanishing_coboundary(const SimplicialComplex& K, const Cochain& eps, int k);

VSubcomplex build_v(const FlagComplex& sd, const Cochain& eps, int k);

/// Same subcomplex built the other way: flags whose ini has dimension exactly
/// k and coboundary value 1, closed downward under the face relation.
SimplicialComplex build_v_via_k_face_closure(const FlagComplex& sd, const Cochain& eps, int k);

/// k = 1 only: number of p-cells of the CW structure on V_eps, one for every
/// (p+1)-simplex of K on which eps is not constant; p = 0..dim-1.
std::vector<std::int64_t> cw_cell_counts(const SimplicialComplex& K, const Cochain& eps);

/// Number of i-dimensional dual blocks contained in V_eps, i = 0..n-k:
/// count of (n-i)-simplices with nonvanishing restricted coboundary.
std::vector<std::int64_t> block_counts(const SimplicialComplex& K, const Cochain& eps, int k);

/// Plain simplicial link of a flag inside V.
SimplicialComplex v_link(const VSubcomplex& v, const Simplex& flag);

/// The join (V_eps within Bd s_0) * Sd(Bd Lk(s_0,s_1)) * ... * Sd(Lk(s_p, K)),
/// canonically isomorphic to the link of the flag [s_0,...,s_p] in V_eps.
SimplicialComplex link_join_decomposition(const FlagComplex& sd, const Cochain& eps, int k,
                                          const Simplex& flag);

} // namespace rsc
