#include "rsc/subdivision.hpp"

#include <algorithm>
#include <numeric>

#include "rsc/errors.hpp"

namespace rsc {

namespace {

Int projected_subdivision_size(const SimplicialComplex& K) {
    if (K.empty()) return 0;
    const int n = K.dim();
    std::vector<Int> f(n + 1);
    for (int p = 0; p <= n; ++p) f[p] = K.f(p);
    f = apply_transfer(n, std::move(f), 1);
    return std::accumulate(f.begin(), f.end(), Int(0));
}

} // namespace

FlagComplex barycentric_subdivide(const SimplicialComplex& K, std::int64_t cap) {
    if (K.empty()) return FlagComplex(K, {});
    if (projected_subdivision_size(K) > cap)
        throw cap_exceeded("barycentric_subdivide: projected simplex count exceeds cap");

    const auto cofaces = proper_coface_lists(K);
    std::vector<std::vector<Simplex>> by_dim(K.dim() + 1);
    Simplex chain;
    auto extend = [&](auto&& self, std::int64_t last) -> void {
        by_dim[chain.size() - 1].push_back(chain);
        for (std::int64_t c : cofaces[last]) {
            chain.push_back(static_cast<VertexId>(c));
            self(self, c);
            chain.pop_back();
        }
    };
    for (std::int64_t g = 0; g < K.num_simplices(); ++g) {
        chain.assign(1, static_cast<VertexId>(g));
        extend(extend, g);
    }
    auto sd = SimplicialComplex::from_closed_set("sd(" + K.name() + ")", std::move(by_dim));
    return FlagComplex(K, std::move(sd));
}

IteratedSubdivision subdivide_iterated(const SimplicialComplex& K, int depth, std::int64_t cap) {
    IteratedSubdivision out;
    out.complex = K;
    out.carrier.resize(K.num_simplices());
    std::iota(out.carrier.begin(), out.carrier.end(), 0);
    for (int step = 0; step < depth; ++step) {
        FlagComplex sd = barycentric_subdivide(out.complex, cap);
        const SimplicialComplex& S = sd.complex();
        std::vector<std::int64_t> carrier(S.num_simplices());
        for (int p = 0; p <= S.dim(); ++p) {
            for (std::int64_t i = 0; i < S.f(p); ++i) {
                const Simplex& flag = S.simplex(p, i);
                carrier[S.global_id(p, i)] = out.carrier[FlagComplex::fin(flag)];
            }
        }
        out.complex = S;
        out.carrier = std::move(carrier);
    }
    return out;
}

LambdaTable LambdaTable::from_formula(int max_l) {
    LambdaTable t;
    t.table_.resize(max_l + 1);
    for (int l = 0; l <= max_l; ++l) {
        t.table_[l].resize(l + 1);
        for (int i = 0; i <= l; ++i) {
            Int acc = 0;
            for (int j = 0; j <= i; ++j) {
                // int_pow(0, 0) = 1, matching the 0^0 = 1 convention
                Int term = binomial(i, j) * int_pow(Int(j), static_cast<unsigned>(l));
                if ((i - j) % 2 != 0) term = -term;
                acc += term;
            }
            t.table_[l][i] = acc;
        }
    }
    return t;
}

LambdaTable LambdaTable::from_direct_count(int max_l) {
    LambdaTable t;
    t.table_.resize(max_l + 1);
    t.table_[0] = {Int(1)};
    for (int l = 1; l <= max_l; ++l) {
        t.table_[l].assign(l + 1, Int(0));
        FlagComplex sd = barycentric_subdivide(standard_simplex(l - 1));
        const SimplicialComplex& S = sd.complex();
        const std::int64_t top = sd.base().num_simplices() - 1;
        for (int p = 0; p <= S.dim(); ++p)
            for (const Simplex& flag : S.simplices(p))
                if (FlagComplex::fin(flag) == top) t.table_[l][p + 1] += 1;
    }
    return t;
}

const Int& LambdaTable::at(int l, int i) const {
    if (l < 0 || l > max_l() || i < 0 || i > l)
        throw validation_error("lambda table index out of range");
    return table_[l][i];
}

Int flag_count_by_ends(int l, int p, int i) {
    static const LambdaTable table = LambdaTable::from_formula(12);
    return binomial(p + 1, l + 1) * table.at(p - l, i);
}

Int flag_count_by_ends_direct(int l, int p, int i) {
    FlagComplex sd = barycentric_subdivide(standard_simplex(p));
    const SimplicialComplex& S = sd.complex();
    const SimplicialComplex& B = sd.base();
    Int count = 0;
    for (const Simplex& flag : S.simplices(i)) {
        const auto ini_ref = B.from_global(FlagComplex::ini(flag));
        const auto fin_ref = B.from_global(FlagComplex::fin(flag));
        if (ini_ref.dim == l && fin_ref.dim == p) count += 1;
    }
    return count;
}

std::vector<std::vector<Int>> transfer_matrix(int n) {
    if (n < 0) throw validation_error("transfer_matrix: n must be >= 0");
    const LambdaTable table = LambdaTable::from_formula(n + 1);
    std::vector<std::vector<Int>> m(n + 1, std::vector<Int>(n + 1));
    for (int j = 0; j <= n; ++j)
        for (int l = 0; l <= n; ++l) m[j][l] = (j <= l) ? table.at(l + 1, j + 1) : Int(0);
    return m;
}

std::vector<Int> apply_transfer(int n, std::vector<Int> f, int times) {
    f.resize(n + 1);
    const auto m = transfer_matrix(n);
    for (int t = 0; t < times; ++t) {
        std::vector<Int> next(n + 1, Int(0));
        for (int j = 0; j <= n; ++j)
            for (int l = j; l <= n; ++l) next[j] += m[j][l] * f[l];
        f = std::move(next);
    }
    return f;
}

std::vector<Rat> q_coefficients(int n) {
    if (n < 1) throw validation_error("q_coefficients: n must be >= 1");
    const auto m = transfer_matrix(n);
    const Int top_eig = factorial(static_cast<unsigned>(n + 1));
    std::vector<Rat> q(n + 1);
    q[n] = 1;
    for (int j = n - 1; j >= 0; --j) {
        Rat s = 0;
        for (int l = j + 1; l <= n; ++l) s += Rat(m[j][l]) * q[l];
        q[j] = s / Rat(top_eig - m[j][j]);
    }
    return q;
}

Rat q_infinity_eval(int n, const Rat& t) {
    const auto q = q_coefficients(n);
    Rat acc = 0;
    for (int p = n; p >= 0; --p) acc = acc * t + q[p];
    return acc;
}

} // namespace rsc
