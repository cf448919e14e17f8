#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "rsc/complex.hpp"
#include "rsc/rational.hpp"
#include "rsc/rng.hpp"

namespace rsc {

/// Z/2 cochain of degree `degree` on a complex: bit i is the value on the
/// simplex with ordinal i in dimension `degree`. The bit layout is fixed by
/// the complex's lexicographic ordinal order, so hex serialization is
/// reproducible.
class Cochain {
public:
    Cochain() = default;
    Cochain(int degree, std::int64_t size)
        : degree_(degree), size_(size), words_((size + 63) / 64, 0) {}

    int degree() const { return degree_; }
    std::int64_t size() const { return size_; }

    bool get(std::int64_t i) const { return (words_[i >> 6] >> (i & 63)) & 1ull; }
    void set(std::int64_t i, bool v) {
        if (v)
            words_[i >> 6] |= 1ull << (i & 63);
        else
            words_[i >> 6] &= ~(1ull << (i & 63));
    }
    void flip(std::int64_t i) { words_[i >> 6] ^= 1ull << (i & 63); }
    void clear() { std::fill(words_.begin(), words_.end(), 0); }

    std::int64_t popcount() const {
        std::int64_t c = 0;
        for (auto w : words_) c += __builtin_popcountll(w);
        return c;
    }
    bool is_zero() const {
        for (auto w : words_)
            if (w) return false;
        return true;
    }

    /// Low 64 bits; valid as a full image only when size <= 64.
    std::uint64_t low_word() const { return words_.empty() ? 0 : words_[0]; }
    void assign_mask(std::uint64_t mask) {
        clear();
        if (!words_.empty()) words_[0] = mask;
    }

    std::string to_hex() const;
    static Cochain from_hex(int degree, std::int64_t size, const std::string& hex);

    friend bool operator==(const Cochain&, const Cochain&) = default;

private:
    int degree_ = 0;
    std::int64_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

/// <d eps, s> = parity of the number of facets of s on which eps is 1,
/// for every simplex s of dimension degree+1.
Cochain coboundary(const Cochain& eps, const SimplicialComplex& K);

bool is_cocycle(const Cochain& eps, const SimplicialComplex& K);

inline constexpr int kDefaultEnumBits = 24;

/// |Z^degree(K)| by enumeration of all 2^{f_degree} cochains.
std::int64_t cocycle_count(const SimplicialComplex& K, int degree, int max_bits = kDefaultEnumBits);

/// Calls f once per cochain of the given degree (all 2^{f_degree} of them).
/// The cochain passed to f is reused between calls.
void enumerate_cochains(const SimplicialComplex& K, int degree,
                        const std::function<void(const Cochain&)>& f,
                        int max_bits = kDefaultEnumBits);

/// Bernoulli product measure: each bit is 0 with probability nu.
struct Measure {
    Rat nu;
};

/// nu^{#zeros} (1-nu)^{#ones}
Rat mass(const Measure& mu, const Cochain& eps);

Cochain sample(const Measure& mu, const SimplicialComplex& K, int degree, Rng& rng);

/// Threshold for integer Bernoulli sampling: bit is 0 iff next() < threshold.
std::uint64_t zero_threshold(const Rat& nu);

enum class MuZRoute { Auto, Enumeration, Recursive, Closed };

/// mu_nu(Z^{k-1}(Delta_p)), the measure of the (k-1)-cocycle subspace of the
/// standard p-simplex, 1 <= k <= p. Route Auto picks closed form when one
/// applies, else enumeration, else the one-vertex-extension recursion.
Rat mu_z(const Rat& nu, int k, int p, MuZRoute route = MuZRoute::Auto,
         int max_bits = kDefaultEnumBits);

/// Computes every route that applies within the enumeration budget and
/// throws if any two disagree. Returns the common value.
Rat mu_z_cross_checked(const Rat& nu, int k, int p, int max_bits = kDefaultEnumBits);

/// Density of the measure m_k at a p-dimensional simplex: 0 for p < k,
/// otherwise 1 - mu_z(nu, k, p). k = 0 yields density 1 in every dimension.
Rat m_k_density(const Rat& nu, int k, int p);

/// m_k(K^{[p]}) = f_p(K) * density
Rat m_k_of_dimension_class(const SimplicialComplex& K, int k, const Rat& nu, int p);

} // namespace rsc
