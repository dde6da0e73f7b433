#pragma once

#include "matrix.hpp"

#include <array>
#include <cstring>
#include <queue>
#include <string>
#include <unordered_map>
#include <vector>

namespace cxc {

constexpr std::size_t kMaxVars = 64;

struct NonExactDivision : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Exponent vector; stored biased by 128 so that memcmp is lexicographic order.
class Monomial {
public:
    Monomial() { e_.fill(128); }

    int operator[](std::size_t i) const { return static_cast<int>(e_[i]) - 128; }
    void set(std::size_t i, long v) {
        if (i >= kMaxVars) throw std::out_of_range("monomial variable index out of range");
        if (v < -127 || v > 127) throw std::overflow_error("monomial exponent out of range");
        e_[i] = static_cast<std::uint8_t>(v + 128);
    }
    static Monomial unit(std::size_t i, long e = 1) {
        Monomial m;
        m.set(i, e);
        return m;
    }

    Monomial operator*(const Monomial& o) const {
        Monomial r;
        int bad = 0;
        for (std::size_t i = 0; i < kMaxVars; ++i) {
            int s = static_cast<int>(e_[i]) + static_cast<int>(o.e_[i]) - 128;
            bad |= (s < 1) | (s > 255);
            r.e_[i] = static_cast<std::uint8_t>(s);
        }
        if (bad) throw std::overflow_error("monomial exponent out of range");
        return r;
    }
    Monomial operator/(const Monomial& o) const {
        Monomial r;
        int bad = 0;
        for (std::size_t i = 0; i < kMaxVars; ++i) {
            int s = static_cast<int>(e_[i]) - static_cast<int>(o.e_[i]) + 128;
            bad |= (s < 1) | (s > 255);
            r.e_[i] = static_cast<std::uint8_t>(s);
        }
        if (bad) throw std::overflow_error("monomial exponent out of range");
        return r;
    }

    bool is_one() const {
        for (auto b : e_)
            if (b != 128) return false;
        return true;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) { return std::memcmp(a.e_.data(), b.e_.data(), kMaxVars) == 0; }
    friend bool operator<(const Monomial& a, const Monomial& b) { return std::memcmp(a.e_.data(), b.e_.data(), kMaxVars) < 0; }
    friend bool operator>(const Monomial& a, const Monomial& b) { return b < a; }

    std::size_t hash() const {
        std::uint64_t w[kMaxVars / 8];
        std::memcpy(w, e_.data(), kMaxVars);
        std::uint64_t h = 0x9e3779b97f4a7c15ull;
        for (auto x : w) {
            h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        }
        return static_cast<std::size_t>(h);
    }

private:
    std::array<std::uint8_t, kMaxVars> e_;
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

struct Term {
    Monomial mono;
    Integer coef;
};

// Laurent polynomial over Z in nvars variables. Terms are kept sorted by
// increasing exponent vector with no zero coefficients.
class LaurentPoly {
public:
    explicit LaurentPoly(std::size_t nvars = 0) : n_(nvars) {
        if (nvars > kMaxVars) throw std::out_of_range("too many polynomial variables");
    }
    static LaurentPoly constant(std::size_t nvars, Integer c) {
        LaurentPoly p(nvars);
        if (c != 0) p.t_.push_back({Monomial{}, std::move(c)});
        return p;
    }
    static LaurentPoly monomial(std::size_t nvars, const Monomial& m, Integer c = 1) {
        LaurentPoly p(nvars);
        if (c != 0) p.t_.push_back({m, std::move(c)});
        return p;
    }
    static LaurentPoly variable(std::size_t nvars, std::size_t i, long e = 1) {
        if (i >= nvars) throw std::out_of_range("variable index out of range");
        return monomial(nvars, Monomial::unit(i, e));
    }
    static LaurentPoly from_terms(std::size_t nvars, std::vector<Term> terms) {
        LaurentPoly p(nvars);
        std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.mono < b.mono; });
        for (auto& t : terms) {
            if (!p.t_.empty() && p.t_.back().mono == t.mono) p.t_.back().coef += t.coef;
            else p.t_.push_back(std::move(t));
            if (p.t_.back().coef == 0) p.t_.pop_back();
        }
        return p;
    }

    std::size_t nvars() const { return n_; }
    const std::vector<Term>& terms() const { return t_; }
    std::size_t size() const { return t_.size(); }
    bool is_zero() const { return t_.empty(); }
    bool is_monomial() const { return t_.size() == 1; }

    Integer coefficient(const Monomial& m) const {
        auto it = std::lower_bound(t_.begin(), t_.end(), m, [](const Term& t, const Monomial& x) { return t.mono < x; });
        return it != t_.end() && it->mono == m ? it->coef : Integer(0);
    }

    int min_exponent(std::size_t i) const {
        int r = 0;
        bool first = true;
        for (const auto& t : t_) {
            if (first || t.mono[i] < r) r = t.mono[i];
            first = false;
        }
        return r;
    }
    int max_exponent(std::size_t i) const {
        int r = 0;
        bool first = true;
        for (const auto& t : t_) {
            if (first || t.mono[i] > r) r = t.mono[i];
            first = false;
        }
        return r;
    }

    LaurentPoly operator-() const {
        LaurentPoly r = *this;
        for (auto& t : r.t_) t.coef = -t.coef;
        return r;
    }

    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) { return merge(a, b, false); }
    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return merge(a, b, true); }
    LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }
    LaurentPoly& operator-=(const LaurentPoly& o) { return *this = *this - o; }

    LaurentPoly times_monomial(const Monomial& m, const Integer& c = 1) const {
        LaurentPoly r(n_);
        if (c == 0) return r;
        r.t_.reserve(t_.size());
        for (const auto& t : t_) r.t_.push_back({t.mono * m, t.coef * c});
        return r;
    }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        check_same(a, b);
        if (a.is_zero() || b.is_zero()) return LaurentPoly(a.n_);
        if (a.size() == 1) return b.times_monomial(a.t_[0].mono, a.t_[0].coef);
        if (b.size() == 1) return a.times_monomial(b.t_[0].mono, b.t_[0].coef);
        std::unordered_map<Monomial, Integer, MonomialHash> acc;
        acc.reserve(a.size() * b.size() / 2 + 1);
        for (const auto& x : a.t_)
            for (const auto& y : b.t_) acc[x.mono * y.mono] += x.coef * y.coef;
        LaurentPoly r(a.n_);
        r.t_.reserve(acc.size());
        for (auto& [m, c] : acc)
            if (c != 0) r.t_.push_back({m, std::move(c)});
        std::sort(r.t_.begin(), r.t_.end(), [](const Term& p, const Term& q) { return p.mono < q.mono; });
        return r;
    }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    LaurentPoly pow(unsigned e) const {
        LaurentPoly r = constant(n_, 1);
        LaurentPoly base = *this;
        while (e) {
            if (e & 1u) r *= base;
            e >>= 1;
            if (e) base *= base;
        }
        return r;
    }

    // Exact quotient this / d; throws NonExactDivision if d does not divide.
    LaurentPoly exact_divide(const LaurentPoly& d) const;

    // Ring homomorphism sending variable i to images[i]. Negative exponents
    // require a monomial image.
    LaurentPoly substitute(const std::vector<LaurentPoly>& images) const;

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        if (a.n_ != b.n_ || a.t_.size() != b.t_.size()) return false;
        for (std::size_t k = 0; k < a.t_.size(); ++k)
            if (!(a.t_[k].mono == b.t_[k].mono) || a.t_[k].coef != b.t_[k].coef) return false;
        return true;
    }

    // Canonical total order: term sequences compared lexicographically.
    friend bool operator<(const LaurentPoly& a, const LaurentPoly& b) {
        std::size_t k = 0;
        for (; k < a.t_.size() && k < b.t_.size(); ++k) {
            if (a.t_[k].mono < b.t_[k].mono) return true;
            if (b.t_[k].mono < a.t_[k].mono) return false;
            if (a.t_[k].coef != b.t_[k].coef) return a.t_[k].coef < b.t_[k].coef;
        }
        return a.t_.size() < b.t_.size();
    }

    std::size_t hash() const {
        std::size_t h = n_ * 0x9e3779b97f4a7c15ull;
        for (const auto& t : t_) {
            h ^= t.mono.hash() + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
            h ^= std::hash<Integer>{}(t.coef) + (h << 6) + (h >> 2);
        }
        return h;
    }

    std::string to_string(const std::vector<std::string>& names) const;

private:
    static void check_same(const LaurentPoly& a, const LaurentPoly& b) {
        if (a.n_ != b.n_) throw std::invalid_argument("polynomials over different variable sets");
    }
    static LaurentPoly merge(const LaurentPoly& a, const LaurentPoly& b, bool sub) {
        check_same(a, b);
        LaurentPoly r(a.n_);
        r.t_.reserve(a.size() + b.size());
        std::size_t i = 0, j = 0;
        while (i < a.size() || j < b.size()) {
            if (j == b.size() || (i < a.size() && a.t_[i].mono < b.t_[j].mono)) {
                r.t_.push_back(a.t_[i++]);
            } else if (i == a.size() || b.t_[j].mono < a.t_[i].mono) {
                r.t_.push_back({b.t_[j].mono, sub ? Integer(-b.t_[j].coef) : b.t_[j].coef});
                ++j;
            } else {
                Integer c = sub ? Integer(a.t_[i].coef - b.t_[j].coef) : Integer(a.t_[i].coef + b.t_[j].coef);
                if (c != 0) r.t_.push_back({a.t_[i].mono, std::move(c)});
                ++i, ++j;
            }
        }
        return r;
    }

    std::size_t n_;
    std::vector<Term> t_;
};

struct LaurentHash {
    std::size_t operator()(const LaurentPoly& p) const { return p.hash(); }
};

inline LaurentPoly LaurentPoly::exact_divide(const LaurentPoly& d) const {
    check_same(*this, d);
    if (d.is_zero()) throw NonExactDivision("division by zero polynomial");
    if (is_zero()) return LaurentPoly(n_);
    if (d.size() == 1) {
        const auto& lt = d.t_[0];
        LaurentPoly r(n_);
        r.t_.reserve(t_.size());
        for (const auto& t : t_) {
            if (t.coef % lt.coef != 0) throw NonExactDivision("coefficient not divisible");
            r.t_.push_back({t.mono / lt.mono, t.coef / lt.coef});
        }
        return r;
    }
    // Every quotient exponent lies in a box fixed by per-variable degrees.
    std::vector<int> lo(n_), hi(n_);
    for (std::size_t v = 0; v < n_; ++v) {
        lo[v] = min_exponent(v) - d.min_exponent(v);
        hi[v] = max_exponent(v) - d.max_exponent(v);
        if (lo[v] > hi[v]) throw NonExactDivision("degree bounds exclude an exact quotient");
    }
    // Quotient-heap division, largest monomials first.
    const std::size_t nd = d.size();
    auto dterm = [&](std::size_t i) -> const Term& { return d.t_[nd - 1 - i]; };
    const Monomial& lm = dterm(0).mono;
    const Integer& lc = dterm(0).coef;
    struct Entry {
        Monomial prod;
        std::size_t i, j;
        bool operator<(const Entry& o) const { return prod < o.prod; }
    };
    std::priority_queue<Entry> heap;
    std::vector<Term> q;
    std::size_t k = t_.size();
    Integer c;
    while (k > 0 || !heap.empty()) {
        Monomial m;
        if (k > 0 && (heap.empty() || !(t_[k - 1].mono < heap.top().prod))) m = t_[k - 1].mono;
        else m = heap.top().prod;
        c = 0;
        if (k > 0 && t_[k - 1].mono == m) {
            c = t_[k - 1].coef;
            --k;
        }
        while (!heap.empty() && heap.top().prod == m) {
            Entry e = heap.top();
            heap.pop();
            c -= dterm(e.i).coef * q[e.j].coef;
            if (e.i + 1 < nd) heap.push({dterm(e.i + 1).mono * q[e.j].mono, e.i + 1, e.j});
        }
        if (c == 0) continue;
        Monomial t = m / lm;
        for (std::size_t v = 0; v < n_; ++v)
            if (t[v] < lo[v] || t[v] > hi[v]) throw NonExactDivision("nonzero remainder");
        if (c % lc != 0) throw NonExactDivision("coefficient not divisible");
        q.push_back({t, c / lc});
        heap.push({dterm(1).mono * t, 1, q.size() - 1});
    }
    LaurentPoly r(n_);
    r.t_.assign(std::make_move_iterator(q.rbegin()), std::make_move_iterator(q.rend()));
    return r;
}

inline LaurentPoly LaurentPoly::substitute(const std::vector<LaurentPoly>& images) const {
    if (images.size() != n_) throw std::invalid_argument("substitution needs one image per variable");
    const std::size_t target = images.empty() ? 0 : images[0].nvars();
    std::vector<std::vector<LaurentPoly>> powers(n_);
    auto power = [&](std::size_t v, int e) -> const LaurentPoly& {
        auto& cache = powers[v];
        if (e >= 0) {
            if (cache.empty()) cache.push_back(constant(target, 1));
            while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * images[v]);
            return cache[static_cast<std::size_t>(e)];
        }
        throw std::logic_error("negative power requested");
    };
    LaurentPoly r(target);
    std::vector<Term> acc;
    for (const auto& t : t_) {
        LaurentPoly p = constant(target, t.coef);
        for (std::size_t v = 0; v < n_; ++v) {
            int e = t.mono[v];
            if (e == 0) continue;
            if (e > 0) {
                p *= power(v, e);
            } else {
                if (!images[v].is_monomial()) throw std::domain_error("negative power of a non-monomial image");
                const auto& im = images[v].terms()[0];
                if (im.coef != 1 && im.coef != -1) throw std::domain_error("non-unit monomial image inverted");
                Monomial inv = Monomial{} / im.mono;
                LaurentPoly ip = monomial(target, inv, im.coef);
                p *= ip.pow(static_cast<unsigned>(-e));
            }
        }
        r += p;
    }
    return r;
}

inline std::string format_integer(const Integer& c) { return c.str(); }

inline std::string LaurentPoly::to_string(const std::vector<std::string>& names) const {
    if (names.size() < n_) throw std::invalid_argument("not enough variable names");
    if (t_.empty()) return "0";
    std::string out;
    for (std::size_t k = 0; k < t_.size(); ++k) {
        const auto& t = t_[k];
        std::string mono;
        for (std::size_t v = 0; v < n_; ++v) {
            int e = t.mono[v];
            if (e == 0) continue;
            if (!mono.empty()) mono += '*';
            mono += names[v];
            if (e != 1) mono += '^' + std::to_string(e);
        }
        Integer c = t.coef;
        bool neg = c < 0;
        if (neg) c = -c;
        std::string body;
        if (mono.empty()) body = format_integer(c);
        else if (c == 1) body = mono;
        else body = format_integer(c) + '*' + mono;
        if (k == 0) out += neg ? "-" + body : body;
        else out += (neg ? "-" : "+") + body;
    }
    return out;
}

inline std::vector<std::string> variable_names(const std::string& prefix, std::size_t count, std::size_t first = 1) {
    std::vector<std::string> v;
    for (std::size_t i = 0; i < count; ++i) v.push_back(prefix + std::to_string(i + first));
    return v;
}

} // namespace cxc
