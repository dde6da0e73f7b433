#pragma once

#include "coxeter.hpp"
#include "laurent.hpp"
#include "tropical.hpp"

namespace cxc {

struct SeedError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Cluster variables live in LaurentPoly with slots 0..n-1 for the initial
// cluster and n..n+N-1 for the coefficient generators.
struct Seed {
    std::vector<LaurentPoly> cluster;
    std::vector<TropMonomial> coeffs;
    IntMatrix b;
    std::vector<std::string> generators;

    std::size_t rank() const { return cluster.size(); }
    std::size_t num_generators() const { return generators.size(); }
    std::size_t nvars() const { return rank() + num_generators(); }

    std::vector<std::string> variable_names() const {
        auto names = cxc::variable_names("x", rank());
        names.insert(names.end(), generators.begin(), generators.end());
        return names;
    }

    friend bool operator==(const Seed& a, const Seed& c) {
        return a.cluster == c.cluster && a.coeffs == c.coeffs && a.b == c.b && a.generators == c.generators;
    }
};

inline Monomial coefficient_monomial(std::size_t n, const TropMonomial& t) {
    Monomial m;
    for (std::size_t g = 0; g < t.size(); ++g)
        if (t.e[g]) m.set(n + g, t.e[g]);
    return m;
}

inline IntMatrix mutate_matrix(const IntMatrix& b, std::size_t k) {
    const std::size_t n = b.rows();
    IntMatrix r(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i == k || j == k) r(i, j) = -b(i, j);
            else r(i, j) = b(i, j) + pos_part(b(i, k)) * pos_part(b(k, j)) - neg_part(b(i, k)) * neg_part(b(k, j));
        }
    return r;
}

inline std::vector<TropMonomial> mutate_coefficients(const std::vector<TropMonomial>& y, const IntMatrix& b, std::size_t k) {
    std::vector<TropMonomial> r(y.size());
    const auto denom = one_plus(y[k]);
    for (std::size_t j = 0; j < y.size(); ++j) {
        if (j == k) r[j] = y[k].inverse();
        else r[j] = y[j] * y[k].pow(pos_part(b(k, j))) * denom.pow(-b(k, j));
    }
    return r;
}

// Numerator of the exchange relation at k, already divided by (y_k (+) 1).
template <class Factor>
LaurentPoly exchange_numerator(std::size_t nvars, std::size_t n, const TropMonomial& yk, const IntMatrix& b, std::size_t k,
                               Factor factor) {
    LaurentPoly plus = LaurentPoly::monomial(nvars, coefficient_monomial(n, yk.positive_part()));
    LaurentPoly minus = LaurentPoly::monomial(nvars, coefficient_monomial(n, yk.negative_part()));
    for (std::size_t i = 0; i < n; ++i) {
        if (b(i, k) > 0) plus *= factor(i).pow(static_cast<unsigned>(b(i, k)));
        if (b(i, k) < 0) minus *= factor(i).pow(static_cast<unsigned>(-b(i, k)));
    }
    return plus + minus;
}

inline Seed mutate(const Seed& s, std::size_t k) {
    const std::size_t n = s.rank();
    if (k >= n) throw SeedError("mutation direction out of range");
    Seed r;
    r.generators = s.generators;
    r.b = mutate_matrix(s.b, k);
    r.coeffs = mutate_coefficients(s.coeffs, s.b, k);
    r.cluster = s.cluster;
    auto num = exchange_numerator(s.nvars(), n, s.coeffs[k], s.b, k, [&](std::size_t i) -> const LaurentPoly& { return s.cluster[i]; });
    r.cluster[k] = num.exact_divide(s.cluster[k]);
    return r;
}

inline Seed initial_seed(const IntMatrix& b, std::vector<TropMonomial> coeffs, std::vector<std::string> generators) {
    Seed s;
    const std::size_t n = b.rows();
    s.b = b;
    s.coeffs = std::move(coeffs);
    s.generators = std::move(generators);
    const std::size_t nv = n + s.generators.size();
    for (std::size_t i = 0; i < n; ++i) s.cluster.push_back(LaurentPoly::variable(nv, i));
    return s;
}

inline Seed principal_seed(const CoxeterData& cd) {
    const std::size_t n = cd.rank();
    std::vector<TropMonomial> y;
    for (std::size_t i = 0; i < n; ++i) y.push_back(TropMonomial::generator(n, i));
    return initial_seed(cd.b(), std::move(y), variable_names("y", n));
}

// Coefficients p[gamma], gamma in Pi(c), in the order of cd.labels().
inline Seed universal_seed(const CoxeterData& cd) {
    const std::size_t n = cd.rank(), s = cd.size();
    std::vector<TropMonomial> y;
    for (std::size_t j = 0; j < n; ++j) {
        TropMonomial t(s);
        const std::size_t wj = cd.index(j, 0), cwj = cd.index(j, 1);
        t.e[wj] += 1;
        t.e[cwj] -= 1;
        for (std::size_t g = 0; g < s; ++g) {
            if (g == wj || g == cwj) continue;
            std::int64_t e = cd.compat(g, cwj);
            for (std::size_t i = 0; i < n; ++i)
                if (cd.prec(i, j)) e += cd.cartan()(i, j) * cd.compat(g, cd.index(i, 1));
            t.e[g] += e;
        }
        y.push_back(std::move(t));
    }
    return initial_seed(cd.b(), std::move(y), variable_names("p", s));
}

// Monomial map between tropical semifields, given by the images of generators.
struct SemifieldHom {
    std::vector<TropMonomial> images;
    std::vector<std::string> target;

    void validate() const {
        for (const auto& im : images) {
            if (im.size() != target.size()) throw SeedError("image over the wrong semifield");
            if (!im.nonnegative()) throw SeedError("semifield homomorphism image has a negative exponent");
        }
        for (std::size_t g = 0; g < target.size(); ++g) {
            int users = 0;
            for (const auto& im : images) users += im.e[g] > 0;
            if (users > 1) throw SeedError("two generator images share the factor " + target[g]);
        }
    }
    TropMonomial apply(const TropMonomial& t) const {
        if (t.size() != images.size()) throw SeedError("monomial over the wrong semifield");
        TropMonomial r(target.size());
        for (std::size_t g = 0; g < t.size(); ++g)
            if (t.e[g]) r = r * images[g].pow(t.e[g]);
        return r;
    }
};

inline SemifieldHom identity_hom(const std::vector<std::string>& gens) {
    SemifieldHom h;
    h.target = gens;
    for (std::size_t g = 0; g < gens.size(); ++g) h.images.push_back(TropMonomial::generator(gens.size(), g));
    return h;
}

inline LaurentPoly specialize_poly(const LaurentPoly& p, std::size_t n, const SemifieldHom& hom) {
    const std::size_t nv = n + hom.target.size();
    std::vector<LaurentPoly> images;
    for (std::size_t i = 0; i < n; ++i) images.push_back(LaurentPoly::variable(nv, i));
    for (const auto& im : hom.images) images.push_back(LaurentPoly::monomial(nv, coefficient_monomial(n, im)));
    return p.substitute(images);
}

inline Seed specialize(const Seed& s, const SemifieldHom& hom) {
    hom.validate();
    if (hom.images.size() != s.num_generators()) throw SeedError("homomorphism does not match the seed's semifield");
    Seed r;
    r.b = s.b;
    r.generators = hom.target;
    for (const auto& y : s.coeffs) r.coeffs.push_back(hom.apply(y));
    for (const auto& x : s.cluster) r.cluster.push_back(specialize_poly(x, s.rank(), hom));
    return r;
}

// phi: p[omega_i] -> y_i, every other p[gamma] -> 1.
inline SemifieldHom universal_to_principal(const CoxeterData& cd) {
    const std::size_t n = cd.rank();
    SemifieldHom h;
    h.target = variable_names("y", n);
    for (std::size_t k = 0; k < cd.size(); ++k) {
        const auto& l = cd.label(k);
        h.images.push_back(l.m == 0 ? TropMonomial::generator(n, l.i) : TropMonomial(n));
    }
    return h;
}

struct ClusterVariableRecord {
    std::optional<PiLabel> label;
    LaurentPoly expansion;
    Weight g;
    Root denom;
    LaurentPoly fpoly;
};

struct ExtractionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// g-vector by the grading deg x_j = omega_j, deg y_j = -sum_i b_ij omega_i.
inline ClusterVariableRecord extract_record(const Seed& s0, const LaurentPoly& z, const CoxeterData* cd = nullptr) {
    const std::size_t n = s0.rank();
    if (s0.num_generators() != n) throw ExtractionError("extraction needs a principal-coefficient seed");
    if (z.is_zero()) throw ExtractionError("zero expansion");
    ClusterVariableRecord rec;
    rec.expansion = z;
    std::optional<Weight> g;
    std::vector<Term> f;
    for (const auto& t : z.terms()) {
        Weight deg(n);
        Monomial tm;
        for (std::size_t i = 0; i < n; ++i) {
            deg[i] = t.mono[i];
            for (std::size_t j = 0; j < n; ++j) deg[i] -= s0.b(i, j) * t.mono[n + j];
            int e = t.mono[n + i];
            if (e < 0) throw ExtractionError("negative coefficient exponent in expansion");
            if (e) tm.set(i, e);
        }
        if (g && *g != deg) throw ExtractionError("expansion is not homogeneous");
        g = deg;
        f.push_back({tm, t.coef});
    }
    rec.g = *g;
    rec.fpoly = LaurentPoly::from_terms(n, std::move(f));
    rec.denom = Root(n);
    for (std::size_t i = 0; i < n; ++i) {
        rec.denom[i] = -z.min_exponent(i);
        if (rec.fpoly.min_exponent(i) != 0) throw ExtractionError("F-polynomial divisible by t" + std::to_string(i + 1));
    }
    if (cd) {
        auto k = cd->find(rec.g);
        if (!k) throw ExtractionError("g-vector not in Pi(c)");
        rec.label = cd->label(*k);
    }
    return rec;
}

struct MoveIsomorphismReport {
    bool matrix = false, coefficients = false, variable = false;
    bool ok() const { return matrix && coefficients && variable; }
};

// Mutation of the principal seed of c at the source i against the data of c~ = c' s_i.
inline MoveIsomorphismReport verify_move_isomorphism(const CoxeterData& cd, std::size_t i) {
    const auto& m = cd.cartan();
    const std::size_t n = cd.rank();
    auto ct = cyclical_move(m, cd.element(), i);
    auto s = principal_seed(cd);
    auto mu = mutate(s, i);
    MoveIsomorphismReport rep;
    rep.matrix = mu.b == b_matrix(m, ct);
    rep.coefficients = true;
    for (std::size_t j = 0; j < n; ++j) {
        TropMonomial want = j == i ? s.coeffs[i].inverse() : s.coeffs[j] * s.coeffs[i].pow(-m(i, j));
        rep.coefficients = rep.coefficients && mu.coeffs[j] == want;
    }
    LaurentPoly num = LaurentPoly::variable(2 * n, n + i);
    LaurentPoly prod = LaurentPoly::constant(2 * n, 1);
    for (std::size_t j = 0; j < n; ++j)
        if (j != i && m(j, i) != 0) prod *= LaurentPoly::variable(2 * n, j, -m(j, i));
    LaurentPoly want = (num + prod) * LaurentPoly::variable(2 * n, i, -1);
    rep.variable = mu.cluster[i] == want;
    for (std::size_t j = 0; j < n; ++j) rep.variable = rep.variable && (j == i || mu.cluster[j] == s.cluster[j]);
    return rep;
}

} // namespace cxc
