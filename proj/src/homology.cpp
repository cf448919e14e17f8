#include "rsc/homology.hpp"

#include <algorithm>
#include <numeric>

#include "rsc/errors.hpp"

namespace rsc {

std::int64_t rank_gf2(BitMatrix m) {
    const std::int64_t w = m.words_per_col();
    if (m.rows() == 0 || m.cols() == 0) return 0;
    std::vector<std::int64_t> pivot_col(m.rows(), -1);
    std::int64_t rank = 0;
    for (std::int64_t c = 0; c < m.cols(); ++c) {
        std::uint64_t* col = m.col(c);
        for (;;) {
            std::int64_t low = -1;
            for (std::int64_t i = 0; i < w; ++i) {
                if (col[i]) {
                    low = i * 64 + __builtin_ctzll(col[i]);
                    break;
                }
            }
            if (low < 0) break;
            if (pivot_col[low] < 0) {
                pivot_col[low] = c;
                ++rank;
                break;
            }
            const std::uint64_t* pc = m.col(pivot_col[low]);
            for (std::int64_t i = low >> 6; i < w; ++i) col[i] ^= pc[i];
        }
    }
    return rank;
}

BitMatrix boundary_matrix(const SimplicialComplex& K, int p) {
    if (p <= 0 || p > K.dim()) return BitMatrix(p == 0 ? 0 : K.f(p - 1), K.f(p));
    BitMatrix m(K.f(p - 1), K.f(p));
    const auto& cells = K.simplices(p);
    Simplex facet(p);
    for (std::int64_t c = 0; c < static_cast<std::int64_t>(cells.size()); ++c) {
        const Simplex& s = cells[c];
        for (std::size_t drop = 0; drop <= s.size() - 1; ++drop) {
            std::size_t w = 0;
            for (std::size_t i = 0; i < s.size(); ++i)
                if (i != drop) facet[w++] = s[i];
            m.set(K.find(facet)->index, c);
        }
    }
    return m;
}

BettiVector betti(const SimplicialComplex& K, std::int64_t cap) {
    if (K.empty()) return {};
    if (K.num_simplices() > cap) throw cap_exceeded("betti: complex exceeds size cap");
    const int n = K.dim();
    std::vector<std::int64_t> rank(n + 2, 0);
    for (int p = 1; p <= n; ++p) rank[p] = rank_gf2(boundary_matrix(K, p));
    BettiVector bv;
    bv.b.resize(n + 1);
    for (int p = 0; p <= n; ++p) bv.b[p] = K.f(p) - rank[p] - rank[p + 1];
    return bv;
}

bool is_sphere_homology(const BettiVector& bv, int dim, int m) {
    if (m < -1) return false;
    if (m == -1) return dim < 0; // the empty complex is the (-1)-sphere
    if (dim < 0) return false;
    int top = std::max(dim, m);
    for (int i = 0; i <= top; ++i) {
        std::int64_t want = 0;
        if (m == 0)
            want = (i == 0) ? 2 : 0;
        else
            want = (i == 0 || i == m) ? 1 : 0;
        if (bv.at(i) != want) return false;
    }
    return true;
}

bool is_sphere_homology(const SimplicialComplex& K, int m) {
    if (K.empty()) return m == -1;
    return is_sphere_homology(betti(K), K.dim(), m);
}

namespace {

/// Link of the simplex with the given global id, assembled from its coface list.
SimplicialComplex link_from_cofaces(const SimplicialComplex& V, std::int64_t gid,
                                    const std::vector<std::int64_t>& cofaces) {
    const auto ref = V.from_global(gid);
    const Simplex& s = V.simplex(ref);
    std::vector<std::vector<Simplex>> by_dim;
    for (std::int64_t cg : cofaces) {
        const Simplex& t = V.simplex(V.from_global(cg));
        Simplex rest;
        rest.reserve(t.size() - s.size());
        std::set_difference(t.begin(), t.end(), s.begin(), s.end(), std::back_inserter(rest));
        const int d = static_cast<int>(rest.size()) - 1;
        if (static_cast<int>(by_dim.size()) <= d) by_dim.resize(d + 1);
        by_dim[d].push_back(std::move(rest));
    }
    return SimplicialComplex::from_closed_set("link", std::move(by_dim));
}

std::optional<LinkViolation> check_link(const SimplicialComplex& V, std::int64_t gid,
                                        const std::vector<std::int64_t>& cofaces) {
    const auto ref = V.from_global(gid);
    SimplicialComplex lk = link_from_cofaces(V, gid, cofaces);
    BettiVector bv = lk.empty() ? BettiVector{} : betti(lk);
    if (!is_sphere_homology(bv, lk.dim(), V.dim() - ref.dim - 1))
        return LinkViolation{V.simplex(ref), bv};
    return std::nullopt;
}

} // namespace

std::optional<LinkViolation> find_sphere_link_violation_serial(const SimplicialComplex& V) {
    if (V.empty()) return std::nullopt;
    const auto cofaces = proper_coface_lists(V);
    for (std::int64_t gid = 0; gid < V.num_simplices(); ++gid) {
        auto violation = check_link(V, gid, cofaces[gid]);
        if (violation) return violation;
    }
    return std::nullopt;
}

std::optional<LinkViolation> find_sphere_link_violation(const SimplicialComplex& V) {
    if (V.empty()) return std::nullopt;
    const auto cofaces = proper_coface_lists(V);
    const std::int64_t total = V.num_simplices();
    std::int64_t first_bad = total;
#ifdef _OPENMP
#pragma omp parallel
    {
        std::int64_t local_bad = total;
#pragma omp for schedule(dynamic, 256) nowait
        for (std::int64_t gid = 0; gid < total; ++gid) {
            if (gid >= local_bad) continue;
            if (check_link(V, gid, cofaces[gid])) local_bad = std::min(local_bad, gid);
        }
#pragma omp critical
        first_bad = std::min(first_bad, local_bad);
    }
#else
    for (std::int64_t gid = 0; gid < total && first_bad == total; ++gid)
        if (check_link(V, gid, cofaces[gid])) first_bad = gid;
#endif
    if (first_bad == total) return std::nullopt;
    return check_link(V, first_bad, cofaces[first_bad]);
}

std::vector<std::int64_t> connected_component_labels(const SimplicialComplex& K) {
    const std::int64_t n = K.f(0);
    std::vector<std::int64_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::int64_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    for (const auto& e : K.simplices(1)) {
        auto a = find(K.find({e[0]})->index);
        auto b = find(K.find({e[1]})->index);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
    std::vector<std::int64_t> label(n);
    for (std::int64_t i = 0; i < n; ++i) label[i] = find(i);
    return label;
}

std::int64_t connected_component_count(const SimplicialComplex& K) {
    auto labels = connected_component_labels(K);
    std::int64_t count = 0;
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(labels.size()); ++i)
        if (labels[i] == i) ++count;
    return count;
}

} // namespace rsc
