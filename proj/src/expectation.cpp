#include "rsc/expectation.hpp"

#include "rsc/errors.hpp"

namespace rsc {

namespace {

void check_pk(int p, int k) {
    if (k < 1 || k > p) throw validation_error("requires 1 <= k <= p");
}

const LambdaTable& lambda_table_shared() {
    static const LambdaTable table = LambdaTable::from_formula(16);
    return table;
}

} // namespace

Polynomial delta_polynomial(int p, int k, const Rat& nu) {
    check_pk(p, k);
    const LambdaTable& lt = lambda_table_shared();
    std::vector<Rat> coeffs(p - k + 1);
    for (int i = 0; i <= p - k; ++i) {
        Rat acc = 0;
        for (int l = k; l <= p - i; ++l)
            acc += Rat(binomial(p + 1, l + 1) * lt.at(p - l, i)) * (Rat(1) - mu_z(nu, k, l));
        coeffs[i] = acc;
    }
    return Polynomial(std::move(coeffs));
}

Polynomial delta_polynomial_surjection(int p, int k, const Rat& nu) {
    check_pk(p, k);
    std::vector<Rat> coeffs(p - k + 1);
    for (int i = 0; i <= p - k; ++i) {
        Rat acc = 0;
        for (int j = 0; j <= i; ++j) {
            Rat inner = 0;
            for (int l = i; l <= p - k; ++l)
                inner += Rat(binomial(p + 1, l) * int_pow(Int(j), static_cast<unsigned>(l))) *
                         (Rat(1) - mu_z(nu, k, p - l));
            Rat term = Rat(binomial(i, j)) * inner;
            acc += ((i - j) % 2 == 0) ? term : -term;
        }
        coeffs[i] = acc;
    }
    return Polynomial(std::move(coeffs));
}

Rat tau(int p, int k, const Rat& nu) {
    check_pk(p, k);
    Rat acc = 0;
    for (int l = k; l <= p; ++l) {
        Rat term = Rat(binomial(p + 1, l + 1)) * (Rat(1) - mu_z(nu, k, l));
        acc += ((p - l) % 2 == 0) ? term : -term;
    }
    return acc;
}

Polynomial expected_face_polynomial(const SimplicialComplex& K, int k, const Rat& nu) {
    if (k < 1 || k > K.dim()) throw validation_error("expected_face_polynomial: need 1 <= k <= dim");
    Polynomial acc;
    for (int p = k; p <= K.dim(); ++p) acc += delta_polynomial(p, k, nu) * Rat(K.f(p));
    return acc;
}

Polynomial expected_face_polynomial_blocks(const FlagComplex& sd, int k, const Rat& nu) {
    const SimplicialComplex& K = sd.base();
    const SimplicialComplex& S = sd.complex();
    if (k < 1 || k > K.dim())
        throw validation_error("expected_face_polynomial_blocks: need 1 <= k <= dim");
    std::vector<Rat> density(K.dim() + 1);
    for (int p = 0; p <= K.dim(); ++p) density[p] = m_k_density(nu, k, p);
    std::vector<Rat> coeffs(K.dim() - k + 1);
    for (int i = 0; i <= S.dim(); ++i) {
        for (const Simplex& flag : S.simplices(i)) {
            const int d0 = K.from_global(FlagComplex::ini(flag)).dim;
            if (d0 < k) continue;
            coeffs[i] += density[d0];
        }
    }
    return Polynomial(std::move(coeffs));
}

Rat expected_chi(const SimplicialComplex& K, int k, const Rat& nu) {
    if (k < 1 || k > K.dim()) throw validation_error("expected_chi: need 1 <= k <= dim");
    Rat acc = 0;
    for (int p = k; p <= K.dim(); ++p) acc += Rat(K.f(p)) * tau(p, k, nu);
    return acc;
}

Rat expected_chi_k1(const SimplicialComplex& K, const Rat& nu) {
    const Polynomial q = K.face_polynomial();
    return nu * q.eval(-nu) + (Rat(1) - nu) * q.eval(nu - 1) - Rat(K.euler_characteristic());
}

Polynomial expected_cw_polynomial(const SimplicialComplex& K, const Rat& nu) {
    const int n = K.dim();
    std::vector<Rat> coeffs(std::max(n, 0));
    for (int p = 0; p < n; ++p) coeffs[p] = expected_cw_count(K, nu, p);
    return Polynomial(std::move(coeffs));
}

Rat expected_cw_count(const SimplicialComplex& K, const Rat& nu, int p) {
    if (p < 0 || p >= K.dim()) throw validation_error("expected_cw_count: p out of range");
    return Rat(K.f(p + 1)) * (Rat(1) - rat_pow(nu, static_cast<unsigned>(p + 2)) -
                              rat_pow(Rat(1) - nu, static_cast<unsigned>(p + 2)));
}

std::vector<Rat> expected_block_counts(const SimplicialComplex& K, int k, const Rat& nu) {
    const int n = K.dim();
    if (k < 1 || k > n) throw validation_error("expected_block_counts: need 1 <= k <= dim");
    std::vector<Rat> out(n - k + 1);
    for (int i = 0; i <= n - k; ++i) out[i] = m_k_of_dimension_class(K, k, nu, n - i);
    return out;
}

std::vector<Rat> c_plus(int n, int k, const Rat& nu) {
    if (k < 1 || k > n) throw validation_error("c_plus: need 1 <= k <= n");
    const auto q = q_coefficients(n);
    std::vector<Rat> out(n - k + 1);
    for (int i = 0; i <= n - k; ++i) {
        Rat acc = 0;
        for (int p = k + i; p <= n; ++p) acc += delta_polynomial(p, k, nu).coeff(i) * q[p];
        out[i] = acc;
    }
    return out;
}

Rat c_plus_alternating_sum(int n, int k, const Rat& nu) {
    const auto c = c_plus(n, k, nu);
    Rat acc = 0;
    for (std::size_t i = 0; i < c.size(); ++i) acc += (i % 2 == 0) ? c[i] : -c[i];
    return acc;
}

Rat c_plus_alternating_sum_via_tau(int n, int k, const Rat& nu) {
    if (k < 1 || k > n) throw validation_error("need 1 <= k <= n");
    const auto q = q_coefficients(n);
    Rat acc = 0;
    for (int p = k; p <= n; ++p) acc += tau(p, k, nu) * q[p];
    return acc;
}

Rat expected_chi_homology_manifold(const SimplicialComplex& K, const Rat& nu) {
    const int sign = (K.dim() % 2 == 0) ? 1 : -1;
    return Rat(sign - 1) * K.r_polynomial().eval(-nu);
}

std::pair<Rat, Rat> euler_identity_even_manifold(const SimplicialComplex& K) {
    return {Rat(K.euler_characteristic()), K.face_polynomial().eval(Rat(-1, 2))};
}

std::pair<Rat, Rat> euler_identity_general(const SimplicialComplex& K, const Rat& nu) {
    const Polynomial q = K.face_polynomial();
    return {Rat(K.euler_characteristic()),
            nu * q.eval(-nu) + (Rat(1) - nu) * q.eval(nu - 1)};
}

} // namespace rsc
