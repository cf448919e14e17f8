#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rsc/rational.hpp"

namespace rsc {

/// Dense polynomial with exact rational coefficients, coeff(i) the coefficient of T^i.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Polynomial from_counts(const std::vector<std::int64_t>& counts) {
        std::vector<Rat> c(counts.size());
        for (std::size_t i = 0; i < counts.size(); ++i) c[i] = counts[i];
        return Polynomial(std::move(c));
    }

    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }

    Rat coeff(int i) const {
        if (i < 0 || i >= static_cast<int>(c_.size())) return Rat(0);
        return c_[i];
    }

    bool is_zero() const { return c_.empty(); }

    Rat eval(const Rat& t) const {
        Rat acc = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
        return acc;
    }

    /// P(s*T)
    Polynomial scale_arg(const Rat& s) const {
        std::vector<Rat> c = c_;
        Rat sp = 1;
        for (std::size_t i = 1; i < c.size(); ++i) {
            sp *= s;
            c[i] *= sp;
        }
        return Polynomial(std::move(c));
    }

    /// P(a + b*T), by Horner in the polynomial ring
    Polynomial substitute_affine(const Rat& a, const Rat& b) const {
        Polynomial acc;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
            Polynomial shifted;
            if (!acc.is_zero()) {
                std::vector<Rat> s(acc.c_.size() + 1);
                for (std::size_t i = 0; i < acc.c_.size(); ++i) {
                    s[i] += acc.c_[i] * a;
                    s[i + 1] += acc.c_[i] * b;
                }
                shifted = Polynomial(std::move(s));
            }
            shifted += Polynomial({*it});
            acc = std::move(shifted);
        }
        return acc;
    }

    Polynomial& operator+=(const Polynomial& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }
    Polynomial& operator*=(const Rat& s) {
        for (auto& c : c_) c *= s;
        trim();
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Rat& s) { return a *= s; }

    /// T * P(T)
    Polynomial shift_up() const {
        if (is_zero()) return {};
        std::vector<Rat> c(c_.size() + 1);
        for (std::size_t i = 0; i < c_.size(); ++i) c[i + 1] = c_[i];
        return Polynomial(std::move(c));
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    std::vector<Rat> coefficients(int min_len = 0) const {
        std::vector<Rat> c = c_;
        if (static_cast<int>(c.size()) < min_len) c.resize(min_len);
        return c;
    }

    std::string to_string() const {
        if (is_zero()) return "0";
        std::string s;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] == 0) continue;
            if (!s.empty()) s += " + ";
            s += rat_to_string(c_[i]);
            if (i >= 1) s += "*T";
            if (i >= 2) s += "^" + std::to_string(i);
        }
        return s;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<Rat> c_;
};

} // namespace rsc
