#include "rsc/cochain.hpp"

#include <algorithm>

#include "rsc/errors.hpp"

namespace rsc {

namespace {

const char* kHexDigits = "0123456789abcdef";

int hex_value(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    throw validation_error(std::string("invalid hex digit: ") + c);
}

} // namespace

std::string Cochain::to_hex() const {
    const std::int64_t nbytes = (size_ + 7) / 8;
    std::string out;
    out.reserve(2 * nbytes);
    for (std::int64_t b = 0; b < nbytes; ++b) {
        const unsigned byte = (words_[b >> 3] >> ((b & 7) * 8)) & 0xffu;
        out.push_back(kHexDigits[byte >> 4]);
        out.push_back(kHexDigits[byte & 0xf]);
    }
    return out;
}

Cochain Cochain::from_hex(int degree, std::int64_t size, const std::string& hex) {
    const std::int64_t nbytes = (size + 7) / 8;
    if (static_cast<std::int64_t>(hex.size()) != 2 * nbytes)
        throw validation_error("bits_hex has wrong length for this complex");
    Cochain c(degree, size);
    for (std::int64_t b = 0; b < nbytes; ++b) {
        const unsigned byte =
            static_cast<unsigned>(hex_value(hex[2 * b]) << 4 | hex_value(hex[2 * b + 1]));
        c.words_[b >> 3] |= static_cast<std::uint64_t>(byte) << ((b & 7) * 8);
    }
    for (std::int64_t i = size; i < nbytes * 8; ++i)
        if (c.get(i)) throw validation_error("bits_hex has set bits beyond the cochain length");
    return c;
}

Cochain coboundary(const Cochain& eps, const SimplicialComplex& K) {
    const int k = eps.degree() + 1;
    if (k < 0 || k > K.dim() + 1)
        throw validation_error("coboundary: degree out of range for this complex");
    if (eps.size() != K.f(k - 1))
        throw validation_error("coboundary: cochain length does not match the complex");
    Cochain d(k, K.f(k));
    Simplex facet(static_cast<std::size_t>(k));
    for (std::int64_t idx = 0; idx < K.f(k); ++idx) {
        const Simplex& s = K.simplex(k, idx);
        bool parity = false;
        for (std::size_t drop = 0; drop < s.size(); ++drop) {
            std::size_t w = 0;
            for (std::size_t i = 0; i < s.size(); ++i)
                if (i != drop) facet[w++] = s[i];
            parity ^= eps.get(K.find(facet)->index);
        }
        if (parity) d.set(idx, true);
    }
    return d;
}

bool is_cocycle(const Cochain& eps, const SimplicialComplex& K) {
    if (eps.degree() >= K.dim()) return true; // no simplices one dimension up
    return coboundary(eps, K).is_zero();
}

namespace {

/// For each (degree+1)-simplex, the bit mask of its facet ordinals.
/// Requires f_degree <= 64.
std::vector<std::uint64_t> facet_masks(const SimplicialComplex& K, int degree) {
    std::vector<std::uint64_t> masks;
    masks.reserve(K.f(degree + 1));
    Simplex facet(static_cast<std::size_t>(degree) + 1);
    for (const Simplex& s : K.simplices(degree + 1)) {
        std::uint64_t m = 0;
        for (std::size_t drop = 0; drop < s.size(); ++drop) {
            std::size_t w = 0;
            for (std::size_t i = 0; i < s.size(); ++i)
                if (i != drop) facet[w++] = s[i];
            m |= 1ull << K.find(facet)->index;
        }
        masks.push_back(m);
    }
    return masks;
}

void check_enum_bits(std::int64_t bits, int max_bits, const char* who) {
    if (bits > max_bits || bits > 62)
        throw cap_exceeded(std::string(who) + ": enumeration over 2^" + std::to_string(bits) +
                           " cochains exceeds the configured bound");
}

} // namespace

std::int64_t cocycle_count(const SimplicialComplex& K, int degree, int max_bits) {
    const std::int64_t bits = K.f(degree);
    check_enum_bits(bits, max_bits, "cocycle_count");
    if (degree >= K.dim()) return std::int64_t(1) << bits;
    const auto masks = facet_masks(K, degree);
    std::int64_t count = 0;
    for (std::uint64_t m = 0; m < (1ull << bits); ++m) {
        bool ok = true;
        for (auto fm : masks) {
            if (__builtin_popcountll(m & fm) & 1) {
                ok = false;
                break;
            }
        }
        count += ok;
    }
    return count;
}

void enumerate_cochains(const SimplicialComplex& K, int degree,
                        const std::function<void(const Cochain&)>& f, int max_bits) {
    const std::int64_t bits = K.f(degree);
    check_enum_bits(bits, max_bits, "enumerate_cochains");
    Cochain eps(degree, bits);
    for (std::uint64_t m = 0; m < (1ull << bits); ++m) {
        eps.assign_mask(m);
        f(eps);
    }
}

Rat mass(const Measure& mu, const Cochain& eps) {
    const std::int64_t ones = eps.popcount();
    const std::int64_t zeros = eps.size() - ones;
    return rat_pow(mu.nu, static_cast<unsigned>(zeros)) *
           rat_pow(Rat(1) - mu.nu, static_cast<unsigned>(ones));
}

std::uint64_t zero_threshold(const Rat& nu) {
    if (nu <= 0) return 0;
    if (nu >= 1) return ~0ull;
    Int t = (numerator(nu) << 64) / denominator(nu);
    return static_cast<std::uint64_t>(t);
}

Cochain sample(const Measure& mu, const SimplicialComplex& K, int degree, Rng& rng) {
    const std::int64_t bits = K.f(degree);
    Cochain eps(degree, bits);
    if (mu.nu >= 1) return eps;
    if (mu.nu <= 0) {
        for (std::int64_t i = 0; i < bits; ++i) eps.set(i, true);
        return eps;
    }
    const std::uint64_t thr = zero_threshold(mu.nu);
    for (std::int64_t i = 0; i < bits; ++i)
        if (!rng.bernoulli(thr)) eps.set(i, true);
    return eps;
}

namespace {

Rat weighted_sum(const std::vector<std::int64_t>& count_by_zeros, const Rat& nu) {
    // sum_z N_z nu^z (1-nu)^{F-z}, F = count_by_zeros.size() - 1
    const std::size_t F = count_by_zeros.size() - 1;
    Rat acc = 0;
    for (std::size_t z = 0; z <= F; ++z) {
        if (count_by_zeros[z] == 0) continue;
        acc += Rat(count_by_zeros[z]) * rat_pow(nu, static_cast<unsigned>(z)) *
               rat_pow(Rat(1) - nu, static_cast<unsigned>(F - z));
    }
    return acc;
}

bool closed_form_applies(const Rat& nu, int k, int p) {
    return nu == 0 || nu == 1 || k == 1 || nu == Rat(1, 2) || k == p || k == 2;
}

Rat mu_z_closed(const Rat& nu, int k, int p) {
    if (nu == 0 || nu == 1 || k == p) {
        // (1 + (2 nu - 1)^{k+1}) / 2; exact for k = p and at the endpoints
        return (Rat(1) + rat_pow(2 * nu - 1, static_cast<unsigned>(k + 1))) / 2;
    }
    if (k == 1)
        return rat_pow(nu, static_cast<unsigned>(p + 1)) +
               rat_pow(Rat(1) - nu, static_cast<unsigned>(p + 1));
    if (nu == Rat(1, 2)) return Rat(1, int_pow(Int(2), static_cast<unsigned>(binomial(p, k))));
    if (k == 2) {
        // sum over the number of 0-labelled vertices of Delta_{p-1}
        Rat acc = 0;
        for (int l = 0; l <= p; ++l) {
            const unsigned ez = static_cast<unsigned>(Int(l) + binomial(l, 2) + binomial(p - l, 2));
            const unsigned eo = static_cast<unsigned>((p - l) + l * (p - l));
            acc += Rat(binomial(p, l)) * rat_pow(nu, ez) * rat_pow(Rat(1) - nu, eo);
        }
        return acc;
    }
    throw validation_error("mu_z: no closed form for these parameters");
}

Rat mu_z_enumeration(const Rat& nu, int k, int p, int max_bits) {
    const SimplicialComplex delta = standard_simplex(p);
    const std::int64_t bits = delta.f(k - 1);
    check_enum_bits(bits, max_bits, "mu_z enumeration");
    const auto masks = facet_masks(delta, k - 1);
    std::vector<std::int64_t> by_zeros(bits + 1, 0);
    for (std::uint64_t m = 0; m < (1ull << bits); ++m) {
        bool cocycle = true;
        for (auto fm : masks) {
            if (__builtin_popcountll(m & fm) & 1) {
                cocycle = false;
                break;
            }
        }
        if (cocycle) ++by_zeros[bits - __builtin_popcountll(m)];
    }
    return weighted_sum(by_zeros, nu);
}

Rat mu_z_recursive(const Rat& nu, int k, int p, int max_bits) {
    if (k < 2) throw validation_error("mu_z recursion requires k >= 2");
    // expectation of eta -> mass(d eta) over C^{k-2}(Delta_{p-1})
    const SimplicialComplex delta = standard_simplex(p - 1);
    const std::int64_t bits = delta.f(k - 2);
    check_enum_bits(bits, max_bits, "mu_z recursion");
    const std::int64_t dbits = delta.f(k - 1);
    const auto masks = facet_masks(delta, k - 2);
    std::vector<std::int64_t> by_zeros(bits + dbits + 1, 0);
    for (std::uint64_t m = 0; m < (1ull << bits); ++m) {
        std::int64_t dz = 0;
        for (auto fm : masks) dz += !(__builtin_popcountll(m & fm) & 1);
        by_zeros[(bits - __builtin_popcountll(m)) + dz] += 1;
    }
    return weighted_sum(by_zeros, nu);
}

void check_mu_z_args(const Rat& nu, int k, int p) {
    if (nu < 0 || nu > 1) throw validation_error("mu_z: nu must lie in [0,1]");
    if (k < 1 || k > p) throw validation_error("mu_z: parameters must satisfy 1 <= k <= p");
}

} // namespace

Rat mu_z(const Rat& nu, int k, int p, MuZRoute route, int max_bits) {
    check_mu_z_args(nu, k, p);
    switch (route) {
    case MuZRoute::Closed:
        return mu_z_closed(nu, k, p);
    case MuZRoute::Enumeration:
        return mu_z_enumeration(nu, k, p, max_bits);
    case MuZRoute::Recursive:
        return mu_z_recursive(nu, k, p, max_bits);
    case MuZRoute::Auto:
        break;
    }
    if (closed_form_applies(nu, k, p)) return mu_z_closed(nu, k, p);
    if (binomial(p + 1, k) <= max_bits) return mu_z_enumeration(nu, k, p, max_bits);
    if (k >= 2 && binomial(p, k - 1) <= max_bits) return mu_z_recursive(nu, k, p, max_bits);
    throw cap_exceeded("mu_z: enumeration too large and no closed form applies");
}

Rat mu_z_cross_checked(const Rat& nu, int k, int p, int max_bits) {
    check_mu_z_args(nu, k, p);
    std::vector<Rat> values;
    if (closed_form_applies(nu, k, p)) values.push_back(mu_z_closed(nu, k, p));
    if (binomial(p + 1, k) <= max_bits) values.push_back(mu_z_enumeration(nu, k, p, max_bits));
    if (k >= 2 && binomial(p, k - 1) <= max_bits)
        values.push_back(mu_z_recursive(nu, k, p, max_bits));
    if (values.empty()) throw cap_exceeded("mu_z: no route applies within the enumeration bound");
    for (const Rat& v : values)
        if (v != values.front())
            throw std::logic_error("mu_z: routes disagree for k=" + std::to_string(k) +
                                   " p=" + std::to_string(p));
    return values.front();
}

Rat m_k_density(const Rat& nu, int k, int p) {
    if (k == 0) return Rat(1);
    if (p < k) return Rat(0);
    return Rat(1) - mu_z(nu, k, p);
}

Rat m_k_of_dimension_class(const SimplicialComplex& K, int k, const Rat& nu, int p) {
    return Rat(K.f(p)) * m_k_density(nu, k, p);
}

} // namespace rsc
