#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "rsc/complex.hpp"

namespace rsc {

/// Column-major bit matrix over GF(2).
class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(std::int64_t rows, std::int64_t cols)
        : rows_(rows), cols_(cols), words_per_col_((rows + 63) / 64), data_(words_per_col_ * cols) {}

    std::int64_t rows() const { return rows_; }
    std::int64_t cols() const { return cols_; }

    void set(std::int64_t r, std::int64_t c) { data_[c * words_per_col_ + (r >> 6)] |= 1ull << (r & 63); }
    bool get(std::int64_t r, std::int64_t c) const {
        return (data_[c * words_per_col_ + (r >> 6)] >> (r & 63)) & 1ull;
    }

    std::uint64_t* col(std::int64_t c) { return data_.data() + c * words_per_col_; }
    const std::uint64_t* col(std::int64_t c) const { return data_.data() + c * words_per_col_; }
    std::int64_t words_per_col() const { return words_per_col_; }

    static BitMatrix identity(std::int64_t n) {
        BitMatrix m(n, n);
        for (std::int64_t i = 0; i < n; ++i) m.set(i, i);
        return m;
    }

private:
    std::int64_t rows_ = 0, cols_ = 0, words_per_col_ = 0;
    std::vector<std::uint64_t> data_;
};

/// Rank over GF(2); columns processed left to right, pivot on the lowest set
/// bit, no column swaps. Consumes its argument.
std::int64_t rank_gf2(BitMatrix m);

/// Boundary operator from p-simplices to (p-1)-simplices; zero-size matrix for p = 0.
BitMatrix boundary_matrix(const SimplicialComplex& K, int p);

struct BettiVector {
    std::vector<std::int64_t> b; // b[i], i = 0..dim; empty for the empty complex

    std::int64_t at(int i) const {
        if (i < 0 || i >= static_cast<int>(b.size())) return 0;
        return b[i];
    }
    std::int64_t chi() const {
        std::int64_t c = 0;
        for (std::size_t i = 0; i < b.size(); ++i) c += (i % 2 == 0 ? 1 : -1) * b[i];
        return c;
    }
    friend bool operator==(const BettiVector&, const BettiVector&) = default;
};

inline constexpr std::int64_t kDefaultBettiCap = 5'000'000;

/// Unreduced Z/2 Betti numbers; empty complex yields an empty vector (chi 0).
BettiVector betti(const SimplicialComplex& K, std::int64_t cap = kDefaultBettiCap);

/// True iff K has the Z/2 homology of S^m: b_0 = b_m = 1 (b_0 = 2 for m = 0),
/// all other Betti numbers zero. False for the empty complex when m >= 0;
/// m = -1 designates the empty sphere and holds only for the empty complex.
bool is_sphere_homology(const SimplicialComplex& K, int m);
bool is_sphere_homology(const BettiVector& bv, int dim, int m);

struct LinkViolation {
    Simplex simplex;
    BettiVector link_betti;
};

/// Checks that the link of every simplex of V has the Z/2 homology of a
/// sphere of complementary dimension (dim V - dim simplex - 1). Necessary
/// condition for V to be a closed Z/2-homology manifold of dimension dim V.
/// Links are processed in parallel; reports the violation of lowest global id.
std::optional<LinkViolation> find_sphere_link_violation(const SimplicialComplex& V);
/// Single-threaded reference with the same result.
std::optional<LinkViolation> find_sphere_link_violation_serial(const SimplicialComplex& V);

inline bool has_sphere_link_everywhere(const SimplicialComplex& V) {
    return !find_sphere_link_violation(V).has_value();
}

/// Component label per vertex ordinal (union-find over edges).
std::vector<std::int64_t> connected_component_labels(const SimplicialComplex& K);
std::int64_t connected_component_count(const SimplicialComplex& K);

} // namespace rsc
