#include "rsc/complex.hpp"

#include <algorithm>
#include <set>

#include "rsc/errors.hpp"

namespace rsc {

bool is_valid_simplex(const Simplex& s) {
    if (s.empty()) return false;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] < 0) return false;
        if (i > 0 && s[i] <= s[i - 1]) return false;
    }
    return true;
}

namespace {

void faces_of(const Simplex& s, std::vector<Simplex>& out) {
    // all non-empty proper subsets plus s itself
    const std::size_t n = s.size();
    for (std::uint64_t mask = 1; mask < (1ull << n); ++mask) {
        Simplex f;
        f.reserve(static_cast<std::size_t>(__builtin_popcountll(mask)));
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (1ull << i)) f.push_back(s[i]);
        out.push_back(std::move(f));
    }
}

} // namespace

SimplicialComplex SimplicialComplex::from_maximal(std::string name, const std::vector<Simplex>& maximal) {
    std::set<Simplex> all;
    std::vector<Simplex> scratch;
    for (const Simplex& s : maximal) {
        if (!is_valid_simplex(s))
            throw validation_error("malformed simplex (vertices must be distinct, sorted, non-negative)");
        if (s.size() > 62) throw validation_error("simplex too large");
        scratch.clear();
        faces_of(s, scratch);
        for (auto& f : scratch) all.insert(std::move(f));
    }
    int dim = -1;
    for (const auto& s : all) dim = std::max(dim, static_cast<int>(s.size()) - 1);
    std::vector<std::vector<Simplex>> by_dim(dim + 1);
    for (const auto& s : all) by_dim[s.size() - 1].push_back(s);

    SimplicialComplex K;
    K.name_ = std::move(name);
    K.by_dim_ = std::move(by_dim);
    K.build_index();
    return K;
}

SimplicialComplex SimplicialComplex::from_closed_set(std::string name,
                                                     std::vector<std::vector<Simplex>> by_dim) {
    while (!by_dim.empty() && by_dim.back().empty()) by_dim.pop_back();
    SimplicialComplex K;
    K.name_ = std::move(name);
    K.by_dim_ = std::move(by_dim);
    for (int p = 0; p <= K.dim(); ++p) {
        auto& v = K.by_dim_[p];
        std::sort(v.begin(), v.end());
        if (std::adjacent_find(v.begin(), v.end()) != v.end())
            throw validation_error("duplicate simplex");
        for (const auto& s : v) {
            if (!is_valid_simplex(s) || static_cast<int>(s.size()) != p + 1)
                throw validation_error("malformed simplex in dimension " + std::to_string(p));
        }
    }
    K.build_index();
    // closure check: every facet of every simplex must be present
    for (int p = 1; p <= K.dim(); ++p) {
        for (const auto& s : K.by_dim_[p]) {
            Simplex facet(s.size() - 1);
            for (std::size_t drop = 0; drop < s.size(); ++drop) {
                std::size_t w = 0;
                for (std::size_t i = 0; i < s.size(); ++i)
                    if (i != drop) facet[w++] = s[i];
                if (!K.contains(facet)) throw validation_error("set of simplices is not face-closed");
            }
        }
    }
    return K;
}

void SimplicialComplex::build_index() {
    index_.clear();
    offsets_.assign(by_dim_.size() + 1, 0);
    total_ = 0;
    for (int p = 0; p <= dim(); ++p) {
        auto& v = by_dim_[p];
        std::sort(v.begin(), v.end());
        offsets_[p] = total_;
        for (std::int64_t i = 0; i < static_cast<std::int64_t>(v.size()); ++i)
            index_.emplace(v[i], SimplexRef{p, i});
        total_ += static_cast<std::int64_t>(v.size());
    }
    if (!by_dim_.empty()) offsets_[by_dim_.size()] = total_;
}

std::vector<std::int64_t> SimplicialComplex::f_vector() const {
    std::vector<std::int64_t> f(dim() + 1);
    for (int p = 0; p <= dim(); ++p) f[p] = static_cast<std::int64_t>(by_dim_[p].size());
    return f;
}

const std::vector<Simplex>& SimplicialComplex::simplices(int p) const {
    static const std::vector<Simplex> kEmpty;
    if (p < 0 || p > dim()) return kEmpty;
    return by_dim_[p];
}

std::optional<SimplexRef> SimplicialComplex::find(const Simplex& s) const {
    auto it = index_.find(s);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

SimplexRef SimplicialComplex::from_global(std::int64_t gid) const {
    for (int p = 0; p <= dim(); ++p)
        if (gid < offsets_[p + 1]) return SimplexRef{p, gid - offsets_[p]};
    throw validation_error("global simplex id out of range");
}

std::int64_t SimplicialComplex::global_id_of(const Simplex& s) const {
    auto r = find(s);
    if (!r) throw validation_error("simplex not in complex");
    return global_id(*r);
}

std::int64_t SimplicialComplex::euler_characteristic() const {
    std::int64_t chi = 0;
    for (int p = 0; p <= dim(); ++p)
        chi += (p % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(by_dim_[p].size());
    return chi;
}

Polynomial SimplicialComplex::face_polynomial() const { return Polynomial::from_counts(f_vector()); }

Polynomial SimplicialComplex::r_polynomial() const {
    Polynomial r = face_polynomial().shift_up();
    std::vector<Rat> lin{Rat(0), Rat(euler_characteristic())};
    r -= Polynomial(std::move(lin));
    return r;
}

std::vector<Simplex> SimplicialComplex::star(const Simplex& s) const {
    if (!contains(s)) throw validation_error("star: simplex not in complex");
    std::vector<Simplex> out;
    for (int p = static_cast<int>(s.size()) - 1; p <= dim(); ++p) {
        for (const auto& t : by_dim_[p]) {
            if (std::includes(t.begin(), t.end(), s.begin(), s.end())) out.push_back(t);
        }
    }
    return out;
}

SimplicialComplex SimplicialComplex::closed_star(const Simplex& s) const {
    return from_maximal(name_ + "|closed_star", star(s));
}

SimplicialComplex SimplicialComplex::link(const Simplex& s) const {
    if (!contains(s)) throw validation_error("link: simplex not in complex");
    std::vector<std::vector<Simplex>> by_dim;
    for (int p = static_cast<int>(s.size()); p <= dim(); ++p) {
        for (const auto& t : by_dim_[p]) {
            if (!std::includes(t.begin(), t.end(), s.begin(), s.end())) continue;
            Simplex rest;
            rest.reserve(t.size() - s.size());
            std::set_difference(t.begin(), t.end(), s.begin(), s.end(), std::back_inserter(rest));
            int d = static_cast<int>(rest.size()) - 1;
            if (static_cast<int>(by_dim.size()) <= d) by_dim.resize(d + 1);
            by_dim[d].push_back(std::move(rest));
        }
    }
    return from_closed_set(name_ + "|link", std::move(by_dim));
}

std::vector<std::vector<std::int64_t>> proper_coface_lists(const SimplicialComplex& K) {
    std::vector<std::vector<std::int64_t>> cofaces(K.num_simplices());
    Simplex face;
    for (int q = 1; q <= K.dim(); ++q) {
        for (std::int64_t idx = 0; idx < K.f(q); ++idx) {
            const Simplex& t = K.simplex(q, idx);
            const std::int64_t tg = K.global_id(q, idx);
            const std::size_t sz = t.size();
            for (std::uint64_t mask = 1; mask + 1 < (1ull << sz); ++mask) {
                face.clear();
                for (std::size_t i = 0; i < sz; ++i)
                    if (mask & (1ull << i)) face.push_back(t[i]);
                cofaces[K.global_id_of(face)].push_back(tg);
            }
        }
    }
    for (auto& v : cofaces) std::sort(v.begin(), v.end());
    return cofaces;
}

SimplicialComplex standard_simplex(int n) {
    if (n < 0) throw validation_error("standard_simplex: n must be >= 0");
    Simplex top(n + 1);
    for (int i = 0; i <= n; ++i) top[i] = i;
    return SimplicialComplex::from_maximal("delta_" + std::to_string(n), {top});
}

SimplicialComplex boundary_sphere(int n) {
    if (n < 1) throw validation_error("boundary_sphere: n must be >= 1");
    std::vector<Simplex> facets;
    for (int drop = 0; drop <= n; ++drop) {
        Simplex f;
        for (int i = 0; i <= n; ++i)
            if (i != drop) f.push_back(i);
        facets.push_back(std::move(f));
    }
    return SimplicialComplex::from_maximal("bd_delta_" + std::to_string(n), facets);
}

SimplicialComplex join(const SimplicialComplex& K, const SimplicialComplex& L) {
    if (L.empty()) {
        if (K.empty()) return {};
        return SimplicialComplex::from_maximal(K.name() + "*" + L.name(), [&] {
            std::vector<Simplex> all;
            for (int p = 0; p <= K.dim(); ++p)
                for (const auto& s : K.simplices(p)) all.push_back(s);
            return all;
        }());
    }
    if (K.empty()) return join(L, K);

    VertexId shift = 0;
    for (const auto& v : K.simplices(0)) shift = std::max(shift, v[0] + 1);

    std::vector<std::vector<Simplex>> by_dim(K.dim() + L.dim() + 2);
    auto add = [&](Simplex s) { by_dim[s.size() - 1].push_back(std::move(s)); };
    for (int p = 0; p <= K.dim(); ++p)
        for (const auto& s : K.simplices(p)) add(s);
    for (int q = 0; q <= L.dim(); ++q) {
        for (const auto& t : L.simplices(q)) {
            Simplex ts = t;
            for (auto& v : ts) v += shift;
            add(ts);
            for (int p = 0; p <= K.dim(); ++p) {
                for (const auto& s : K.simplices(p)) {
                    Simplex u = s;
                    u.insert(u.end(), ts.begin(), ts.end());
                    add(std::move(u));
                }
            }
        }
    }
    return SimplicialComplex::from_closed_set(K.name() + "*" + L.name(), std::move(by_dim));
}

bool macdonald_symmetry_check(const SimplicialComplex& K) {
    if (K.empty()) return false;
    const Polynomial r = K.r_polynomial();
    Polynomial lhs = r.substitute_affine(Rat(-1), Rat(-1));
    Polynomial rhs = r;
    if ((K.dim() + 1) % 2 != 0) rhs *= Rat(-1);
    return lhs == rhs;
}

} // namespace rsc
