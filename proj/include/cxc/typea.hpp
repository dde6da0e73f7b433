#pragma once

#include "explore.hpp"

#include <bit>

namespace cxc::typea {

using PolyMatrix = std::vector<std::vector<LaurentPoly>>;

// Polynomial ring Z[v_1..v_{n+1}, y_1..y_n]: slot s-1 is v_s, slot n+s is y_s.
inline std::size_t ring_vars(std::size_t n) { return 2 * n + 1; }
inline LaurentPoly v(std::size_t n, std::size_t s) { return LaurentPoly::variable(ring_vars(n), s - 1); }
inline LaurentPoly y(std::size_t n, std::size_t s) { return LaurentPoly::variable(ring_vars(n), n + s); }
inline LaurentPoly one(std::size_t nv) { return LaurentPoly::constant(nv, 1); }
inline std::vector<std::string> ring_names(std::size_t n) {
    auto names = variable_names("v", n + 1);
    auto ys = variable_names("y", n);
    names.insert(names.end(), ys.begin(), ys.end());
    return names;
}

// Diagonal v_s, superdiagonal y_s, subdiagonal 1.
inline PolyMatrix sym_tri_matrix(std::size_t n) {
    const std::size_t nv = ring_vars(n);
    PolyMatrix m(n + 1, std::vector<LaurentPoly>(n + 1, LaurentPoly(nv)));
    for (std::size_t r = 0; r <= n; ++r) {
        m[r][r] = v(n, r + 1);
        if (r < n) {
            m[r][r + 1] = y(n, r + 1);
            m[r + 1][r] = one(nv);
        }
    }
    return m;
}

// x_[i,j] by the three-term recurrence; 1 unless 1 <= i <= j <= n+1.
inline LaurentPoly interval_minor(std::size_t n, long i, long j) {
    const std::size_t nv = ring_vars(n);
    if (!(1 <= i && i <= j && j <= static_cast<long>(n) + 1)) return one(nv);
    LaurentPoly prev = one(nv), cur = v(n, static_cast<std::size_t>(i));
    for (long k = i; k < j; ++k) {
        LaurentPoly next = v(n, static_cast<std::size_t>(k + 1)) * cur - y(n, static_cast<std::size_t>(k)) * prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

// Determinant by expansion along rows, memoized over column subsets.
inline LaurentPoly determinant(const PolyMatrix& a, std::size_t nv) {
    const std::size_t k = a.size();
    if (k == 0) return one(nv);
    if (k > 20) throw std::invalid_argument("determinant too large");
    std::vector<LaurentPoly> f(std::size_t{1} << k, LaurentPoly(nv));
    f[0] = one(nv);
    for (std::size_t mask = 1; mask < f.size(); ++mask) {
        const std::size_t row = static_cast<std::size_t>(std::popcount(mask)) - 1;
        LaurentPoly acc(nv);
        int sign = 1;
        for (std::size_t c = k; c-- > 0;) {
            if (!(mask >> c & 1u)) continue;
            // sign from the number of chosen columns to the right of c
            if (!a[row][c].is_zero() && !f[mask ^ (std::size_t{1} << c)].is_zero()) {
                auto term = a[row][c] * f[mask ^ (std::size_t{1} << c)];
                acc = sign > 0 ? acc + term : acc - term;
            }
            sign = -sign;
        }
        f[mask] = std::move(acc);
    }
    return f.back();
}

inline LaurentPoly minor(const PolyMatrix& a, const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols,
                         std::size_t nv) {
    PolyMatrix sub(rows.size(), std::vector<LaurentPoly>(cols.size(), LaurentPoly(nv)));
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < cols.size(); ++c) sub[r][c] = a[rows[r]][cols[c]];
    return determinant(sub, nv);
}

inline std::vector<std::size_t> range0(std::size_t from1, std::size_t to1) {
    std::vector<std::size_t> r;
    for (std::size_t s = from1; s <= to1; ++s) r.push_back(s - 1);
    return r;
}

struct RelationReport {
    std::size_t relations = 0;
    std::size_t identity_failures = 0;  // as polynomials, x_[1,n+1] kept
    std::size_t reduced_failures = 0;   // x_[1,n+1] -> 1, checked modulo det(M) - 1
    bool ok() const { return relations > 0 && identity_failures == 0 && reduced_failures == 0; }
};

inline bool divisible(const LaurentPoly& p, const LaurentPoly& d) {
    if (p.is_zero()) return true;
    try {
        auto q = p.exact_divide(d);
        return q * d == p;
    } catch (const NonExactDivision&) {
        return false;
    }
}

// x_[i,k] x_[j,l] = y_{j-1}..y_k x_[i,j-2] x_[k+2,l] + x_[i,l] x_[j,k], 1 <= i <= j-1 <= k <= l-1 <= n.
inline RelationReport verify_interval_relations(std::size_t n) {
    if (n == 0) throw std::invalid_argument("rank must be positive");
    const std::size_t nv = ring_vars(n);
    const long top = static_cast<long>(n) + 1;
    const LaurentPoly det = interval_minor(n, 1, top);
    const LaurentPoly det_minus_one = det - one(nv);
    auto x = [&](long a, long b, bool reduce) {
        if (reduce && a == 1 && b == top) return one(nv);
        return interval_minor(n, a, b);
    };
    RelationReport rep;
    for (long i = 1; i <= top; ++i)
        for (long j = i + 1; j <= top; ++j)
            for (long k = j - 1; k <= static_cast<long>(n); ++k)
                for (long l = k + 1; l <= top; ++l) {
                    ++rep.relations;
                    LaurentPoly ys = one(nv);
                    for (long s = j - 1; s <= k; ++s) ys *= y(n, static_cast<std::size_t>(s));
                    for (bool reduce : {false, true}) {
                        LaurentPoly lhs = x(i, k, reduce) * x(j, l, reduce);
                        LaurentPoly rhs = ys * x(i, j - 2, reduce) * x(k + 2, l, reduce) + x(i, l, reduce) * x(j, k, reduce);
                        if (!reduce && !(lhs == rhs)) ++rep.identity_failures;
                        if (reduce && !divisible(lhs - rhs, det_minus_one)) ++rep.reduced_failures;
                    }
                }
    return rep;
}

inline CoxeterData standard_data(std::size_t n) {
    auto m = cartan_from_label('A', static_cast<int>(n));
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    return CoxeterData(m, CoxeterElement(m, order));
}

// Interval [m+1, m+k] of the label c^m omega_k (label.i = k-1).
inline std::pair<long, long> interval_of_label(const PiLabel& l) {
    const long k = static_cast<long>(l.i) + 1;
    return {l.m + 1, l.m + k};
}

struct MinorReport {
    std::size_t variables = 0;
    std::size_t mismatches = 0;
    std::set<std::pair<long, long>> intervals;
    bool ok(std::size_t n) const {
        return mismatches == 0 && variables == (n + 1) * (n + 2) / 2 - 1 && intervals.size() == variables;
    }
};

// Each engine variable, evaluated at x_k = x_[1,k], equals its interval minor modulo det(M) - 1.
inline MinorReport verify_variables_are_minors(std::size_t n, const ExchangeGraph& g, const CoxeterData& cd) {
    const std::size_t nv = ring_vars(n);
    const LaurentPoly dm1 = interval_minor(n, 1, static_cast<long>(n) + 1) - one(nv);
    const Seed s0 = principal_seed(cd);
    MinorReport rep;
    std::vector<LaurentPoly> images;
    for (std::size_t i = 1; i <= n; ++i) images.push_back(interval_minor(n, 1, static_cast<long>(i)));
    for (std::size_t j = 1; j <= n; ++j) images.push_back(y(n, j));
    for (const auto& z : g.variables) {
        ++rep.variables;
        auto rec = extract_record(s0, z, &cd);
        auto [a, b] = interval_of_label(*rec.label);
        rep.intervals.emplace(a, b);
        Monomial shift;
        LaurentPoly clear = one(nv);
        for (std::size_t i = 0; i < n; ++i) {
            int d = std::max(0, -z.min_exponent(i));
            if (d) {
                shift.set(i, d);
                clear *= images[i].pow(static_cast<unsigned>(d));
            }
        }
        LaurentPoly num = z.times_monomial(shift).substitute(images);
        if (!divisible(num - interval_minor(n, a, b) * clear, dm1)) ++rep.mismatches;
    }
    return rep;
}

// Minor on rows/cols {m+1..m+k} of x_1bar(1)..x_nbar(1) x_n(t_n)..x_1(t_1).
inline LaurentPoly f_poly_via_matrix(std::size_t n, const PiLabel& l) {
    if (l.i >= n || l.m < 0 || l.m + static_cast<long>(l.i) + 1 > static_cast<long>(n) + 1)
        throw std::out_of_range("label out of range for the standard Coxeter element");
    const std::size_t d = n + 1;
    auto identity = [&] {
        PolyMatrix e(d, std::vector<LaurentPoly>(d, LaurentPoly(n)));
        for (std::size_t r = 0; r < d; ++r) e[r][r] = one(n);
        return e;
    };
    auto mul = [&](const PolyMatrix& a, const PolyMatrix& b) {
        PolyMatrix c(d, std::vector<LaurentPoly>(d, LaurentPoly(n)));
        for (std::size_t r = 0; r < d; ++r)
            for (std::size_t s = 0; s < d; ++s)
                for (std::size_t q = 0; q < d; ++q)
                    if (!a[r][q].is_zero() && !b[q][s].is_zero()) c[r][s] += a[r][q] * b[q][s];
        return c;
    };
    PolyMatrix p = identity();
    for (std::size_t i = 1; i <= n; ++i) {
        auto e = identity();
        e[i][i - 1] = one(n);
        p = mul(p, e);
    }
    for (std::size_t i = n; i >= 1; --i) {
        auto e = identity();
        e[i - 1][i] = LaurentPoly::variable(n, i - 1);
        p = mul(p, e);
    }
    auto [a, b] = interval_of_label(l);
    auto idx = range0(static_cast<std::size_t>(a), static_cast<std::size_t>(b));
    return minor(p, idx, idx, n);
}

// 1 + t_m + t_m t_{m+1} + ... + t_m..t_{m+k-1}, with t_0 = 0.
inline LaurentPoly f_poly_closed_form(std::size_t n, const PiLabel& l) {
    const long k = static_cast<long>(l.i) + 1;
    LaurentPoly f = one(n);
    if (l.m == 0) return f;
    LaurentPoly run = one(n);
    for (long s = l.m; s <= l.m + k - 1; ++s) {
        run *= LaurentPoly::variable(n, static_cast<std::size_t>(s - 1));
        f += run;
    }
    return f;
}

// Vertices 1..n+3 counter-clockwise.
struct Diagonal {
    long a = 0, b = 0;
    friend auto operator<=>(const Diagonal&, const Diagonal&) = default;
};

inline bool is_side(std::size_t n, const Diagonal& d) {
    const long v = static_cast<long>(n) + 3;
    return d.b - d.a == 1 || (d.a == 1 && d.b == v);
}

inline Diagonal diagonal_of_label(const PiLabel& l) {
    auto [i, j] = interval_of_label(l);
    return {i, j + 2};
}

inline std::optional<PiLabel> label_of_diagonal(std::size_t n, Diagonal d) {
    if (d.a > d.b) std::swap(d.a, d.b);
    const long v = static_cast<long>(n) + 3;
    if (d.a < 1 || d.b > v || d.a == d.b) throw std::out_of_range("vertex out of range");
    if (is_side(n, d)) return std::nullopt;
    return PiLabel{static_cast<std::size_t>(d.b - d.a - 2), d.a - 1};
}

inline std::vector<Diagonal> all_diagonals(std::size_t n) {
    std::vector<Diagonal> out;
    const long v = static_cast<long>(n) + 3;
    for (long a = 1; a <= v; ++a)
        for (long b = a + 2; b <= v; ++b)
            if (!(a == 1 && b == v)) out.push_back({a, b});
    return out;
}

namespace geom {

// Doubled coordinates: vertex p at (2p, 2p^2); side midpoints are then integral.
struct Pt {
    long x, y;
};
inline Pt vertex(long p) { return {2 * p, 2 * p * p}; }
// p' = midpoint of the side (p-1, p); 1' is the midpoint of (n+3, 1).
inline Pt dual_vertex(std::size_t n, long p) {
    const long q = p == 1 ? static_cast<long>(n) + 3 : p - 1;
    return {q + p, q * q + p * p};
}
inline long side(Pt a, Pt b, Pt x) { return (b.x - a.x) * (x.y - a.y) - (b.y - a.y) * (x.x - a.x); }
inline int sgn(long v) { return (v > 0) - (v < 0); }

} // namespace geom

// Closed region of the polygon between the supporting lines of two non-crossing chords.
inline bool in_strip(const Diagonal& d1, const Diagonal& d2, geom::Pt x) {
    using namespace geom;
    auto inside = [&](const Diagonal& l, const Diagonal& other) {
        Pt a = vertex(l.a), b = vertex(l.b);
        int ref = sgn(side(a, b, vertex(other.a)));
        if (ref == 0) ref = sgn(side(a, b, vertex(other.b)));
        return sgn(side(a, b, x)) * ref >= 0;
    };
    return inside(d1, d2) && inside(d2, d1);
}

// The dual diagonal crosses the strip: its line separates the two chords.
inline bool spans_strip(const Diagonal& d1, const Diagonal& d2, geom::Pt p, geom::Pt q) {
    using namespace geom;
    int s1a = sgn(side(p, q, vertex(d1.a))), s1b = sgn(side(p, q, vertex(d1.b)));
    int s2a = sgn(side(p, q, vertex(d2.a))), s2b = sgn(side(p, q, vertex(d2.b)));
    return s1a == s1b && s2a == s2b && s1a * s2a < 0;
}

inline std::vector<Diagonal> strip_generators(std::size_t n, const Diagonal& d1, const Diagonal& d2) {
    std::vector<Diagonal> out;
    for (const auto& g : all_diagonals(n)) {
        auto p = geom::dual_vertex(n, g.a), q = geom::dual_vertex(n, g.b);
        if (in_strip(d1, d2, p) && in_strip(d1, d2, q) && spans_strip(d1, d2, p, q)) out.push_back(g);
    }
    return out;
}

struct PolygonCoefficients {
    std::vector<Diagonal> plus, minus;
};

// Exchange of <i,k> and <j,l>: p+ from the strip of <i,j>,<k,l>; p- from <i,l>,<j,k>.
inline PolygonCoefficients universal_coeff_typea(std::size_t n, long i, long j, long k, long l) {
    const long v = static_cast<long>(n) + 3;
    if (!(1 <= i && i < j && j < k && k < l && l <= v)) throw std::invalid_argument("degenerate quadrilateral");
    return {strip_generators(n, {i, j}, {k, l}), strip_generators(n, {i, l}, {j, k})};
}

struct PolygonReport {
    std::size_t relations = 0;
    std::size_t mismatches = 0;
    bool ok() const { return relations > 0 && mismatches == 0; }
};

inline std::vector<std::int64_t> generator_vector(const CoxeterData& cd, std::size_t n, const std::vector<Diagonal>& ds) {
    std::vector<std::int64_t> e(cd.size(), 0);
    for (const auto& d : ds) e[cd.index(*label_of_diagonal(n, d))] += 1;
    return e;
}

// Relations from exploring the universal seed, against the polygon rule.
inline PolygonReport verify_polygon_rule(std::size_t n) {
    auto cd = standard_data(n);
    auto su = universal_seed(cd);
    auto g = explore(su);
    auto phi = universal_to_principal(cd);
    auto s0 = principal_seed(cd);
    std::vector<std::size_t> label_of;
    for (const auto& z : g.variables) {
        auto rec = extract_record(s0, specialize_poly(z, n, phi), &cd);
        label_of.push_back(cd.index(*rec.label));
    }
    PolygonReport rep;
    for (const auto& r : relabel_relations(g, label_of)) {
        ++rep.relations;
        Diagonal d1 = diagonal_of_label(cd.label(r.a)), d2 = diagonal_of_label(cd.label(r.b));
        std::vector<long> vs{d1.a, d1.b, d2.a, d2.b};
        std::sort(vs.begin(), vs.end());
        const long i = vs[0], j = vs[1], k = vs[2], l = vs[3];
        if (std::adjacent_find(vs.begin(), vs.end()) != vs.end() || !((d1 == Diagonal{i, k} && d2 == Diagonal{j, l}) ||
                                                                       (d2 == Diagonal{i, k} && d1 == Diagonal{j, l}))) {
            ++rep.mismatches;
            continue;
        }
        auto rule = universal_coeff_typea(n, i, j, k, l);
        auto term = [&](Diagonal e, Diagonal f, const std::vector<Diagonal>& coef) {
            RelationTerm t;
            for (auto d : {e, f})
                if (auto lab = label_of_diagonal(n, d)) detail::add_var(t, cd.index(*lab), 1);
            t.coef = generator_vector(cd, n, coef);
            return t;
        };
        ExchangeRelation want;
        want.a = r.a;
        want.b = r.b;
        want.terms = {term({i, j}, {k, l}, rule.plus), term({i, l}, {j, k}, rule.minus)};
        want.normalize();
        if (!(want == r)) ++rep.mismatches;
    }
    return rep;
}

} // namespace cxc::typea
