#include "rsc/gallery.hpp"

#include <algorithm>
#include <queue>

#include "rsc/errors.hpp"
#include "rsc/harness.hpp"
#include "rsc/subcomplex_v.hpp"
#include "rsc/subdivision.hpp"

namespace rsc {

namespace {

std::int64_t ipow(std::int64_t b, int e) {
    std::int64_t r = 1;
    for (int i = 0; i < e; ++i) r *= b;
    return r;
}

/// eps on Sd(base): vertex gid of the subdivision corresponds to a simplex of
/// `base`; label(dim, gid) decides the bit.
template <typename Label>
Cochain label_by_base(const SimplicialComplex& base, const SimplicialComplex& host, Label&& label) {
    Cochain eps(0, host.f(0));
    for (std::int64_t v = 0; v < host.f(0); ++v) {
        // vertex ordinal equals the base global id
        const auto ref = base.from_global(v);
        if (label(ref.dim, v)) eps.set(v, true);
    }
    return eps;
}

} // namespace

SurfaceConstruction sphere_epsilon() { return holed_sphere_epsilon(0); }

SurfaceConstruction holed_sphere_epsilon(int r) {
    if (r < 0 || r > 4) throw validation_error("holed_sphere_epsilon: r must lie in 0..4");
    SurfaceConstruction c;
    c.target = (r == 0) ? "sphere" : "holed_sphere";
    c.depth = 1;
    c.holes = r;
    const SimplicialComplex base = standard_simplex(3);
    c.host = barycentric_subdivide(base).complex();
    // triangles of Delta_3 occupy a contiguous gid range; flip the first r
    const std::int64_t tri0 = base.global_id(2, 0);
    c.epsilon = label_by_base(base, c.host, [&](int dim, std::int64_t gid) {
        if (dim == 3) return false;
        if (dim == 2) return gid >= tri0 + r;
        return true;
    });
    c.expected_chi = 2 - r;
    c.expected_betti = {1, std::max<std::int64_t>(r - 1, 0), r == 0 ? 1 : 0};
    c.closed = (r == 0);
    return c;
}

std::int64_t interior_triangle_count(int d) {
    if (d < 1) throw validation_error("interior_triangle_count: d must be >= 1");
    return 2 * (ipow(24, d - 1) - ipow(6, d - 1));
}

std::int64_t max_genus_for_depth(int d) {
    if (d < 1) throw validation_error("max_genus_for_depth: d must be >= 1");
    // 2 - 2g >= 4*6^{d-1} - 2*24^{d-1}
    return 1 - 2 * ipow(6, d - 1) + ipow(24, d - 1);
}

SurfaceConstruction genus_surface_epsilon(int g, int d) {
    if (d < 1) throw validation_error("genus_surface_epsilon: depth must be >= 1");
    if (g < 0) throw validation_error("genus_surface_epsilon: genus must be >= 0");
    if (g > max_genus_for_depth(d))
        throw validation_error("genus_surface_epsilon: genus " + std::to_string(g) +
                               " violates the Euler characteristic bound at depth " +
                               std::to_string(d) + " (max " +
                               std::to_string(max_genus_for_depth(d)) + ")");

    SurfaceConstruction c;
    c.target = "genus";
    c.depth = d;
    c.genus = g;
    const SimplicialComplex base = subdivide_iterated(standard_simplex(3), d - 1).complex;
    c.host = barycentric_subdivide(base).complex();

    // dual graph of the top simplices of `base`: nodes are tetrahedra,
    // edges are interior triangles (triangles with two tetrahedron cofaces)
    const std::int64_t ntet = base.f(3);
    const std::int64_t ntri = base.f(2);
    std::vector<std::array<std::int64_t, 2>> tri_tets(ntri, {-1, -1});
    Simplex facet(3);
    for (std::int64_t t = 0; t < ntet; ++t) {
        const Simplex& tet = base.simplex(3, t);
        for (std::size_t drop = 0; drop < 4; ++drop) {
            std::size_t w = 0;
            for (std::size_t i = 0; i < 4; ++i)
                if (i != drop) facet[w++] = tet[i];
            const std::int64_t tri = base.find(facet)->index;
            if (tri_tets[tri][0] < 0)
                tri_tets[tri][0] = t;
            else
                tri_tets[tri][1] = t;
        }
    }
    std::vector<std::vector<std::pair<std::int64_t, std::int64_t>>> adj(ntet); // (tri, other tet)
    std::int64_t interior = 0;
    for (std::int64_t tri = 0; tri < ntri; ++tri) {
        if (tri_tets[tri][1] < 0) continue;
        ++interior;
        adj[tri_tets[tri][0]].push_back({tri, tri_tets[tri][1]});
        adj[tri_tets[tri][1]].push_back({tri, tri_tets[tri][0]});
    }
    if (interior != interior_triangle_count(d))
        throw std::logic_error("genus_surface_epsilon: interior triangle count mismatch");
    if (ntet - 1 + g > interior)
        throw validation_error("genus_surface_epsilon: dual graph has too few interior triangles");
    for (auto& v : adj) std::sort(v.begin(), v.end());

    // breadth-first spanning tree from the lexicographically least tetrahedron
    std::vector<char> seen(ntet, 0);
    std::vector<char> tri_used(ntri, 0);
    std::vector<std::int64_t> tree;
    std::queue<std::int64_t> frontier;
    seen[0] = 1;
    frontier.push(0);
    while (!frontier.empty()) {
        const std::int64_t t = frontier.front();
        frontier.pop();
        for (auto [tri, other] : adj[t]) {
            if (seen[other]) continue;
            seen[other] = 1;
            tri_used[tri] = 1;
            tree.push_back(tri);
            frontier.push(other);
        }
    }
    if (static_cast<std::int64_t>(tree.size()) != ntet - 1)
        throw std::logic_error("genus_surface_epsilon: dual graph is not connected");

    // extra handles: the first g unused interior triangles in ordinal order
    std::vector<std::int64_t> handles;
    for (std::int64_t tri = 0; tri < ntri && static_cast<std::int64_t>(handles.size()) < g; ++tri) {
        if (tri_tets[tri][1] < 0 || tri_used[tri]) continue;
        tri_used[tri] = 1;
        handles.push_back(tri);
    }

    const std::int64_t tri0 = base.global_id(2, 0);
    for (auto t : tree) c.tree_triangles.push_back(tri0 + t);
    for (auto t : handles) c.handle_triangles.push_back(tri0 + t);

    std::vector<char> zero_tri(ntri, 0);
    for (auto t : tree) zero_tri[t] = 1;
    for (auto t : handles) zero_tri[t] = 1;

    c.epsilon = label_by_base(base, c.host, [&](int dim, std::int64_t gid) {
        if (dim == 3) return false;
        if (dim == 2) return !zero_tri[gid - tri0];
        return true;
    });
    c.expected_chi = 2 - 2 * g;
    c.expected_betti = {1, 2 * g, 1};
    c.closed = true;
    return c;
}

GalleryVerification verify_construction(const SurfaceConstruction& c, std::int64_t cap) {
    GalleryVerification out;
    FlagComplex sd = barycentric_subdivide(c.host, cap);
    VSubcomplex v = build_v(sd, c.epsilon, 1);
    out.v = v.complex;
    out.betti_vector = betti(out.v);
    out.chi = out.betti_vector.chi();
    out.components = connected_component_count(out.v);
    out.pass = true;

    if (out.betti_vector.b != c.expected_betti) {
        out.pass = false;
        out.failure = "betti mismatch";
        return out;
    }
    if (out.chi != c.expected_chi) {
        out.pass = false;
        out.failure = "euler characteristic mismatch";
        return out;
    }
    if (out.components != 1) {
        out.pass = false;
        out.failure = "not connected";
        return out;
    }
    if (c.closed) {
        auto violation = find_sphere_link_violation(out.v);
        if (violation) {
            out.links_ok = false;
            out.pass = false;
            out.failure = "sphere-link condition fails at a simplex of dimension " +
                          std::to_string(static_cast<int>(violation->simplex.size()) - 1);
        }
    }
    return out;
}

} // namespace rsc
