#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rsc/cochain.hpp"
#include "rsc/complex.hpp"
#include "rsc/homology.hpp"

namespace rsc {

/// A vertex labelling of Sd^depth(Delta_3) whose dual subcomplex V_eps (k=1)
/// realizes a prescribed surface inside the open tetrahedron.
struct SurfaceConstruction {
    std::string target;      ///< "sphere", "holed_sphere", "genus"
    int depth = 1;           ///< eps lives on Sd^depth(Delta_3)
    int holes = 0;           ///< holed_sphere only
    int genus = 0;           ///< genus only
    SimplicialComplex host;  ///< Sd^depth(Delta_3)
    Cochain epsilon;         ///< degree 0 on host
    std::vector<std::int64_t> expected_betti;
    std::int64_t expected_chi = 0;
    bool closed = true; ///< whether the target surface is closed (link test applies)
    /// genus targets: chosen dual-graph spanning-tree and handle triangles,
    /// as global ids in Sd^{depth-1}(Delta_3)
    std::vector<std::int64_t> tree_triangles;
    std::vector<std::int64_t> handle_triangles;
};

/// eps = 0 on the barycenter of Delta_3 and 1 on every other vertex of
/// Sd(Delta_3); V_eps is a 2-sphere.
SurfaceConstruction sphere_epsilon();

/// r of the four 2-face barycenters flipped to 0 (the lexicographically first
/// r), producing a sphere with r holes; 0 <= r <= 4.
SurfaceConstruction holed_sphere_epsilon(int r);

/// Spheres around the top simplices of Sd^{d-1}(Delta_3), merged along a
/// breadth-first spanning tree of the dual graph and with g extra interior
/// triangles flipped to 0 to add handles. Requires the Euler-characteristic
/// bound 2 - 2g >= 4*6^{d-1} - 2*24^{d-1}.
SurfaceConstruction genus_surface_epsilon(int g, int d);

/// Largest genus admitted at depth d by the bound above.
std::int64_t max_genus_for_depth(int d);
/// 2 (24^{d-1} - 6^{d-1}), the number of interior triangles of Sd^{d-1}(Delta_3).
std::int64_t interior_triangle_count(int d);

struct GalleryVerification {
    bool pass = false;
    BettiVector betti_vector;
    std::int64_t chi = 0;
    std::int64_t components = 0;
    bool links_ok = true;
    std::string failure;
    SimplicialComplex v; ///< the built subcomplex
};

/// Builds V_eps, checks the expected Betti vector, connectedness and Euler
/// characteristic, and (for closed targets) the sphere-link condition at
/// every simplex.
GalleryVerification verify_construction(const SurfaceConstruction& c,
                                        std::int64_t cap = kDefaultSubdivisionCap);

/// Best verified upper bounds on the subdivision depth realizing each target.
struct ComplexityRecord {
    std::string target;
    int upper_bound = 0; ///< witnessed depth
};

} // namespace rsc
