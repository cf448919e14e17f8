#pragma once

#include <utility>
#include <vector>

#include "rsc/cochain.hpp"
#include "rsc/complex.hpp"
#include "rsc/polynomial.hpp"
#include "rsc/subdivision.hpp"

namespace rsc {

/// Expected interior face polynomial of V_eps inside the open standard
/// p-simplex: coefficient i is the expected number of interior i-simplices,
/// computed from flag counts weighted by cocycle measures. 1 <= k <= p.
Polynomial delta_polynomial(int p, int k, const Rat& nu);

/// The same polynomial through the surjection-count expansion of the
/// interior-face numbers.
Polynomial delta_polynomial_surjection(int p, int k, const Rat& nu);

/// Expected Euler characteristic of the interior part, equal to
/// delta_polynomial(p,k,nu) evaluated at -1 but computed by its own
/// alternating binomial sum.
Rat tau(int p, int k, const Rat& nu);

/// E_nu(q_{V_eps}(T)) = sum_{p=k}^n f_p(K) * delta^{p,k}(T)
Polynomial expected_face_polynomial(const SimplicialComplex& K, int k, const Rat& nu);

/// The same expectation grouped by dual blocks: the integral of q_{D(s)}(T)
/// against the measure m_k, computed from a materialized subdivision.
Polynomial expected_face_polynomial_blocks(const FlagComplex& sd, int k, const Rat& nu);

/// E_nu(chi(V_eps)) = sum_{p=k}^n f_p(K) tau_p
Rat expected_chi(const SimplicialComplex& K, int k, const Rat& nu);

/// k = 1 closed form: E_nu(chi) = nu q_K(-nu) + (1-nu) q_K(nu-1) - chi(K)
Rat expected_chi_k1(const SimplicialComplex& K, const Rat& nu);

/// k = 1: expected CW cell-count polynomial E_nu(q~), coefficient p equals
/// f_{p+1}(K) (1 - nu^{p+2} - (1-nu)^{p+2}).
Polynomial expected_cw_polynomial(const SimplicialComplex& K, const Rat& nu);
Rat expected_cw_count(const SimplicialComplex& K, const Rat& nu, int p);

/// E_nu(block count of dimension i) = m_k(K^{[n-i]}), i = 0..n-k.
std::vector<Rat> expected_block_counts(const SimplicialComplex& K, int k, const Rat& nu);

/// Universal constants c_i^+(n,k) = sum_{p=k+i}^n delta^{p,k}_i q_{p,n}.
std::vector<Rat> c_plus(int n, int k, const Rat& nu);

/// sum_i (-1)^i c_i^+(n,k), also expressible as sum_p tau_p q_{p,n}.
Rat c_plus_alternating_sum(int n, int k, const Rat& nu);
Rat c_plus_alternating_sum_via_tau(int n, int k, const Rat& nu);

/// k = 1 on a compact triangulated homology n-manifold:
/// E_nu(chi) = ((-1)^n - 1) R_K(-nu). Manifoldness is the caller's claim.
Rat expected_chi_homology_manifold(const SimplicialComplex& K, const Rat& nu);

/// (chi(K), sum_p (-1/2)^p f_p(K)); the two agree on compact homology
/// manifolds of even dimension.
std::pair<Rat, Rat> euler_identity_even_manifold(const SimplicialComplex& K);

/// (chi(K), nu q_K(-nu) + (1-nu) q_K(nu-1)); same hypotheses, general nu.
std::pair<Rat, Rat> euler_identity_general(const SimplicialComplex& K, const Rat& nu);

} // namespace rsc
