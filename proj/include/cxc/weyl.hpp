#pragma once

#include "cartan.hpp"

#include <functional>
#include <unordered_set>
#include <vector>

namespace cxc {

template <class Tag>
struct LatticeVector {
    std::vector<std::int64_t> c;

    LatticeVector() = default;
    explicit LatticeVector(std::size_t n) : c(n, 0) {}
    explicit LatticeVector(std::vector<std::int64_t> v) : c(std::move(v)) {}
    LatticeVector(std::initializer_list<std::int64_t> v) : c(v) {}

    static LatticeVector unit(std::size_t n, std::size_t i) {
        LatticeVector v(n);
        v.c[i] = 1;
        return v;
    }

    std::size_t size() const { return c.size(); }
    std::int64_t operator[](std::size_t i) const { return c[i]; }
    std::int64_t& operator[](std::size_t i) { return c[i]; }

    bool is_zero() const {
        return std::all_of(c.begin(), c.end(), [](auto x) { return x == 0; });
    }
    bool nonnegative() const {
        return std::all_of(c.begin(), c.end(), [](auto x) { return x >= 0; });
    }

    LatticeVector operator-() const {
        LatticeVector r = *this;
        for (auto& x : r.c) x = -x;
        return r;
    }
    LatticeVector& operator+=(const LatticeVector& o) {
        for (std::size_t i = 0; i < c.size(); ++i) c[i] += o.c[i];
        return *this;
    }
    LatticeVector& operator-=(const LatticeVector& o) {
        for (std::size_t i = 0; i < c.size(); ++i) c[i] -= o.c[i];
        return *this;
    }
    friend LatticeVector operator+(LatticeVector a, const LatticeVector& b) { return a += b; }
    friend LatticeVector operator-(LatticeVector a, const LatticeVector& b) { return a -= b; }
    friend LatticeVector operator*(std::int64_t k, LatticeVector a) {
        for (auto& x : a.c) x *= k;
        return a;
    }

    friend bool operator==(const LatticeVector&, const LatticeVector&) = default;
    friend auto operator<=>(const LatticeVector&, const LatticeVector&) = default;
    friend std::ostream& operator<<(std::ostream& os, const LatticeVector& v) {
        os << '(';
        for (std::size_t k = 0; k < v.c.size(); ++k) os << (k ? "," : "") << v.c[k];
        return os << ')';
    }
};

struct WeightTag {};
struct RootTag {};
using Weight = LatticeVector<WeightTag>;  // omega-coordinates
using Root = LatticeVector<RootTag>;      // alpha-coordinates

struct LatticeHash {
    template <class T>
    std::size_t operator()(const LatticeVector<T>& v) const {
        std::size_t h = 1469598103934665603ull;
        for (auto x : v.c) h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ull;
        return h;
    }
};

using WeylWord = std::vector<std::size_t>;

inline Root reflect_root(const CartanMatrix& m, std::size_t i, Root r) {
    std::int64_t pairing = 0;
    for (std::size_t j = 0; j < m.rank(); ++j) pairing += m(i, j) * r[j];
    r[i] -= pairing;
    return r;
}

inline Weight reflect_weight(const CartanMatrix& m, std::size_t i, Weight w) {
    const std::int64_t gi = w[i];
    if (gi == 0) return w;
    for (std::size_t k = 0; k < m.rank(); ++k) w[k] -= gi * m(k, i);
    return w;
}

inline Root reflect(const CartanMatrix& m, std::size_t i, const Root& r) { return reflect_root(m, i, r); }
inline Weight reflect(const CartanMatrix& m, std::size_t i, const Weight& w) { return reflect_weight(m, i, w); }

// s_{w[0]} s_{w[1]} ... s_{w[k-1]} x : the rightmost letter acts first.
template <class V>
V apply_word(const CartanMatrix& m, const WeylWord& w, V x) {
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
        if (*it >= m.rank()) throw std::out_of_range("Weyl word letter out of range");
        x = reflect(m, *it, x);
    }
    return x;
}

inline Weight root_to_weight_coords(const CartanMatrix& m, const Root& r) {
    Weight w(m.rank());
    for (std::size_t k = 0; k < m.rank(); ++k)
        for (std::size_t j = 0; j < m.rank(); ++j) w[k] += m(k, j) * r[j];
    return w;
}

struct RationalRoot {
    std::vector<Rational> c;
    bool integral() const {
        return std::all_of(c.begin(), c.end(), [](const Rational& q) { return boost::multiprecision::denominator(q) == 1; });
    }
    Root to_root() const {
        if (!integral()) throw std::domain_error("root coordinates are not integral");
        Root r(c.size());
        for (std::size_t i = 0; i < c.size(); ++i) r[i] = static_cast<std::int64_t>(boost::multiprecision::numerator(c[i]));
        return r;
    }
};

// Solves A d = g exactly.
inline RationalRoot weight_to_root_coords(const CartanMatrix& m, const Weight& w) {
    const std::size_t n = m.rank();
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n + 1));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) a[i][j] = m(i, j);
        a[i][n] = w[i];
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t p = col;
        while (a[p][col] == 0) ++p;
        std::swap(a[p], a[col]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col] == 0) continue;
            Rational f = a[r][col] / a[col][col];
            for (std::size_t k = col; k <= n; ++k) a[r][k] -= f * a[col][k];
        }
    }
    RationalRoot out;
    out.c.resize(n);
    for (std::size_t i = 0; i < n; ++i) out.c[i] = a[i][n] / a[i][i];
    return out;
}

// Positive roots, by closing the simple roots under reflections.
inline std::vector<Root> positive_roots(const CartanMatrix& m) {
    const std::size_t n = m.rank();
    std::vector<Root> out;
    std::vector<Root> frontier;
    std::unordered_set<Root, LatticeHash> seen;
    for (std::size_t i = 0; i < n; ++i) {
        auto a = Root::unit(n, i);
        seen.insert(a);
        frontier.push_back(a);
    }
    while (!frontier.empty()) {
        std::vector<Root> next;
        for (auto& r : frontier) {
            out.push_back(r);
            for (std::size_t i = 0; i < n; ++i) {
                auto s = reflect_root(m, i, r);
                if (s.nonnegative() && !s.is_zero() && seen.insert(s).second) next.push_back(s);
            }
        }
        frontier = std::move(next);
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace cxc
