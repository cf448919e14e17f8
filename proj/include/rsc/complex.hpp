#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "rsc/polynomial.hpp"

namespace rsc {

using VertexId = int;

/// Strictly increasing, non-empty vertex list; dimension = size - 1.
using Simplex = std::vector<VertexId>;

bool is_valid_simplex(const Simplex& s);

struct SimplexRef {
    int dim = -1;
    std::int64_t index = -1;
    friend bool operator==(const SimplexRef&, const SimplexRef&) = default;
};

struct SimplexHash {
    std::size_t operator()(const Simplex& s) const {
        std::size_t h = 1469598103934665603ull;
        for (VertexId v : s) {
            h ^= static_cast<std::size_t>(v) + 0x9e3779b9u;
            h *= 1099511628211ull;
        }
        return h;
    }
};

/// Immutable face-closed simplicial complex over dense non-negative vertex
/// ids, with deterministic per-dimension lexicographic ordinals. The empty
/// complex is allowed and has dimension -1.
class SimplicialComplex {
public:
    SimplicialComplex() = default;

    /// Face closure of the given maximal simplices (inputs need not be
    /// maximal or distinct, only well-formed).
    static SimplicialComplex from_maximal(std::string name, const std::vector<Simplex>& maximal);

    /// Adopts an already face-closed set; validates closure and uniqueness.
    static SimplicialComplex from_closed_set(std::string name, std::vector<std::vector<Simplex>> by_dim);

    const std::string& name() const { return name_; }
    int dim() const { return static_cast<int>(by_dim_.size()) - 1; }
    bool empty() const { return by_dim_.empty(); }

    std::int64_t f(int p) const {
        if (p < 0 || p > dim()) return 0;
        return static_cast<std::int64_t>(by_dim_[p].size());
    }
    std::vector<std::int64_t> f_vector() const;
    std::int64_t num_simplices() const { return total_; }

    const std::vector<Simplex>& simplices(int p) const;
    const Simplex& simplex(int p, std::int64_t index) const { return by_dim_[p][index]; }
    const Simplex& simplex(const SimplexRef& r) const { return by_dim_[r.dim][r.index]; }

    bool contains(const Simplex& s) const { return index_.count(s) > 0; }
    std::optional<SimplexRef> find(const Simplex& s) const;

    /// Dense id across dimensions: all p-simplices precede all (p+1)-simplices.
    std::int64_t global_id(int p, std::int64_t index) const { return offsets_[p] + index; }
    std::int64_t global_id(const SimplexRef& r) const { return offsets_[r.dim] + r.index; }
    SimplexRef from_global(std::int64_t gid) const;
    std::int64_t global_id_of(const Simplex& s) const;

    std::int64_t euler_characteristic() const;
    Polynomial face_polynomial() const;
    /// R_K(T) = T q_K(T) - chi(K) T
    Polynomial r_polynomial() const;

    /// Simplices whose interior lies in the open star of s (s itself included).
    std::vector<Simplex> star(const Simplex& s) const;
    SimplicialComplex closed_star(const Simplex& s) const;
    SimplicialComplex link(const Simplex& s) const;

    friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
        return a.by_dim_ == b.by_dim_;
    }

private:
    void build_index();

    std::string name_;
    std::vector<std::vector<Simplex>> by_dim_;
    std::unordered_map<Simplex, SimplexRef, SimplexHash> index_;
    std::vector<std::int64_t> offsets_;
    std::int64_t total_ = 0;
};

/// For every simplex (by global id), the global ids of its proper cofaces,
/// sorted ascending.
std::vector<std::vector<std::int64_t>> proper_coface_lists(const SimplicialComplex& K);

SimplicialComplex standard_simplex(int n);
SimplicialComplex boundary_sphere(int n);

/// Join with L's vertices relabelled above K's.
SimplicialComplex join(const SimplicialComplex& K, const SimplicialComplex& L);

/// R_K(-1-T) == (-1)^{n+1} R_K(T), the exact polynomial symmetry satisfied by
/// compact triangulated homology n-manifolds. Purely algebraic; does not check
/// manifoldness.
bool macdonald_symmetry_check(const SimplicialComplex& K);

} // namespace rsc
