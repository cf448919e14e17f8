#include "rsc/subcomplex_v.hpp"

#include <algorithm>

#include "rsc/errors.hpp"

namespace rsc {

std::vector<char> nonvanishing_coboundary(const SimplicialComplex& K, const Cochain& eps, int k) {
    if (k < 1) throw validation_error("nonvanishing_coboundary: k must be >= 1");
    if (eps.degree() != k - 1 || eps.size() != K.f(k - 1))
        throw validation_error("cochain degree/length does not match k and the complex");
    std::vector<char> nv(K.num_simplices(), 0);
    if (k > K.dim()) return nv;
    const Cochain d = coboundary(eps, K);
    for (std::int64_t i = 0; i < K.f(k); ++i) nv[K.global_id(k, i)] = d.get(i);
    Simplex facet;
    for (int q = k + 1; q <= K.dim(); ++q) {
        for (std::int64_t i = 0; i < K.f(q); ++i) {
            const Simplex& s = K.simplex(q, i);
            facet.assign(s.size() - 1, 0);
            bool hit = false;
            for (std::size_t drop = 0; drop < s.size() && !hit; ++drop) {
                std::size_t w = 0;
                for (std::size_t j = 0; j < s.size(); ++j)
                    if (j != drop) facet[w++] = s[j];
                hit = nv[K.global_id_of(facet)];
            }
            nv[K.global_id(q, i)] = hit;
        }
    }
    return nv;
}

VSubcomplex build_v(const FlagComplex& sd, const Cochain& eps, int k) {
    const SimplicialComplex& K = sd.base();
    const SimplicialComplex& S = sd.complex();
    const auto nv = nonvanishing_coboundary(K, eps, k);
    std::vector<std::vector<Simplex>> by_dim(S.dim() + 1);
    for (int p = 0; p <= S.dim(); ++p)
        for (const Simplex& flag : S.simplices(p))
            if (nv[FlagComplex::ini(flag)]) by_dim[p].push_back(flag);
    VSubcomplex v;
    v.complex = SimplicialComplex::from_closed_set("v(" + K.name() + ")", std::move(by_dim));
    v.epsilon = eps;
    v.k = k;
    return v;
}

SimplicialComplex build_v_via_k_face_closure(const FlagComplex& sd, const Cochain& eps, int k) {
    const SimplicialComplex& K = sd.base();
    const SimplicialComplex& S = sd.complex();
    std::vector<char> member(S.num_simplices(), 0);
    std::vector<char> dval(K.num_simplices(), 0);
    if (k <= K.dim()) {
        const Cochain d = coboundary(eps, K);
        for (std::int64_t i = 0; i < K.f(k); ++i) dval[K.global_id(k, i)] = d.get(i);
    }
    // seed: flags whose ini has dimension exactly k and coboundary value 1
    for (int p = 0; p <= S.dim(); ++p) {
        for (std::int64_t i = 0; i < S.f(p); ++i) {
            const Simplex& flag = S.simplex(p, i);
            const auto ref = K.from_global(FlagComplex::ini(flag));
            if (ref.dim == k && dval[FlagComplex::ini(flag)]) member[S.global_id(p, i)] = 1;
        }
    }
    // close downward: every face of a member is a member
    Simplex sub;
    for (int p = S.dim(); p >= 1; --p) {
        for (std::int64_t i = 0; i < S.f(p); ++i) {
            if (!member[S.global_id(p, i)]) continue;
            const Simplex& flag = S.simplex(p, i);
            for (std::size_t drop = 0; drop < flag.size(); ++drop) {
                sub.clear();
                for (std::size_t j = 0; j < flag.size(); ++j)
                    if (j != drop) sub.push_back(flag[j]);
                member[S.global_id_of(sub)] = 1;
            }
        }
    }
    std::vector<std::vector<Simplex>> by_dim(S.dim() + 1);
    for (int p = 0; p <= S.dim(); ++p)
        for (std::int64_t i = 0; i < S.f(p); ++i)
            if (member[S.global_id(p, i)]) by_dim[p].push_back(S.simplex(p, i));
    return SimplicialComplex::from_closed_set("v(" + K.name() + ")", std::move(by_dim));
}

std::vector<std::int64_t> cw_cell_counts(const SimplicialComplex& K, const Cochain& eps) {
    if (eps.degree() != 0) throw validation_error("cw_cell_counts: requires a degree-0 cochain (k = 1)");
    const auto nv = nonvanishing_coboundary(K, eps, 1);
    std::vector<std::int64_t> counts(std::max(K.dim(), 0), 0);
    for (int p = 0; p + 1 <= K.dim(); ++p)
        for (std::int64_t i = 0; i < K.f(p + 1); ++i)
            counts[p] += nv[K.global_id(p + 1, i)];
    return counts;
}

std::vector<std::int64_t> block_counts(const SimplicialComplex& K, const Cochain& eps, int k) {
    const auto nv = nonvanishing_coboundary(K, eps, k);
    const int n = K.dim();
    std::vector<std::int64_t> counts(n - k + 1, 0);
    for (int i = 0; i <= n - k; ++i)
        for (std::int64_t j = 0; j < K.f(n - i); ++j)
            counts[i] += nv[K.global_id(n - i, j)];
    return counts;
}

SimplicialComplex v_link(const VSubcomplex& v, const Simplex& flag) {
    if (!v.complex.contains(flag)) throw validation_error("v_link: flag is not in V");
    return v.complex.link(flag);
}

namespace {

SimplicialComplex boundary_of_simplex(const Simplex& s) {
    if (s.size() == 1) return {};
    std::vector<Simplex> facets;
    for (std::size_t drop = 0; drop < s.size(); ++drop) {
        Simplex f;
        for (std::size_t i = 0; i < s.size(); ++i)
            if (i != drop) f.push_back(s[i]);
        facets.push_back(std::move(f));
    }
    return SimplicialComplex::from_maximal("bd", facets);
}

} // namespace

SimplicialComplex link_join_decomposition(const FlagComplex& sd, const Cochain& eps, int k,
                                          const Simplex& flag) {
    const SimplicialComplex& K = sd.base();
    const auto nv = nonvanishing_coboundary(K, eps, k);
    if (!nv[FlagComplex::ini(flag)])
        throw validation_error("link_join_decomposition: flag is not in V");

    std::vector<Simplex> entries;
    for (VertexId gid : flag) entries.push_back(K.simplex(K.from_global(gid)));

    // V restricted to the boundary sphere of the first entry
    SimplicialComplex result;
    {
        const Simplex& s0 = entries.front();
        SimplicialComplex bd = boundary_of_simplex(s0);
        if (!bd.empty() && k <= bd.dim()) {
            Cochain restricted(k - 1, bd.f(k - 1));
            for (std::int64_t i = 0; i < bd.f(k - 1); ++i) {
                const Simplex& face = bd.simplex(k - 1, i);
                restricted.set(i, eps.get(K.find(face)->index));
            }
            result = build_v(barycentric_subdivide(bd), restricted, k).complex;
        }
    }
    // Sd(Bd Lk(s_j, s_{j+1})): boundary of the complementary simplex
    for (std::size_t j = 0; j + 1 < entries.size(); ++j) {
        Simplex rest;
        std::set_difference(entries[j + 1].begin(), entries[j + 1].end(), entries[j].begin(),
                            entries[j].end(), std::back_inserter(rest));
        SimplicialComplex bd = boundary_of_simplex(rest);
        if (bd.empty()) continue;
        result = join(result, barycentric_subdivide(bd).complex());
    }
    // Sd(Lk(s_p, K))
    {
        SimplicialComplex lk = K.link(entries.back());
        if (!lk.empty()) result = join(result, barycentric_subdivide(lk).complex());
    }
    return result;
}

} // namespace rsc
