#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "rsc/complex.hpp"
#include "rsc/homology.hpp"

namespace rsc::testing {

/// Minimal 6-vertex triangulation of the projective plane (closed surface,
/// Z/2 Betti vector (1,1,1)).
inline SimplicialComplex projective_plane() {
    return SimplicialComplex::from_maximal("rp2_6", {{0, 1, 2},
                                                     {0, 2, 3},
                                                     {0, 3, 4},
                                                     {0, 4, 5},
                                                     {0, 1, 5},
                                                     {1, 2, 4},
                                                     {2, 3, 5},
                                                     {1, 3, 4},
                                                     {2, 4, 5},
                                                     {1, 3, 5}});
}

/// Deterministic random small complex: face closure of a few random simplices
/// on up to `verts` vertices.
inline SimplicialComplex random_complex(std::mt19937_64& gen, int verts, int max_cells,
                                        int max_cell_verts) {
    std::uniform_int_distribution<int> ncell(1, max_cells);
    std::uniform_int_distribution<int> size(1, max_cell_verts);
    std::uniform_int_distribution<int> vert(0, verts - 1);
    std::vector<Simplex> cells;
    const int n = ncell(gen);
    for (int c = 0; c < n; ++c) {
        std::vector<char> used(verts, 0);
        Simplex s;
        const int len = size(gen);
        while (static_cast<int>(s.size()) < len) {
            const int v = vert(gen);
            if (!used[v]) {
                used[v] = 1;
                s.push_back(v);
            }
        }
        std::sort(s.begin(), s.end());
        cells.push_back(std::move(s));
    }
    return SimplicialComplex::from_maximal("random", cells);
}

/// Plain dense row-echelon rank over GF(2); independent of the bit-packed path.
inline std::int64_t dense_rank_oracle(std::vector<std::vector<std::uint8_t>> m) {
    if (m.empty()) return 0;
    const std::size_t rows = m.size(), cols = m[0].size();
    std::int64_t rank = 0;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t pivot = row;
        while (pivot < rows && !m[pivot][col]) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[pivot], m[row]);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r != row && m[r][col])
                for (std::size_t c = col; c < cols; ++c) m[r][c] ^= m[row][c];
        }
        ++row;
        ++rank;
    }
    return rank;
}

inline std::vector<std::vector<std::uint8_t>> dense_boundary(const SimplicialComplex& K, int p) {
    std::vector<std::vector<std::uint8_t>> m(
        static_cast<std::size_t>(K.f(p - 1)),
        std::vector<std::uint8_t>(static_cast<std::size_t>(K.f(p)), 0));
    for (std::int64_t c = 0; c < K.f(p); ++c) {
        const Simplex& s = K.simplex(p, c);
        Simplex facet;
        for (std::size_t drop = 0; drop < s.size(); ++drop) {
            facet.clear();
            for (std::size_t i = 0; i < s.size(); ++i)
                if (i != drop) facet.push_back(s[i]);
            m[K.find(facet)->index][c] = 1;
        }
    }
    return m;
}

} // namespace rsc::testing
