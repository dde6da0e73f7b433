#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace cxc {

// Element of Trop(u_1, ..., u_N): a Laurent monomial, with u^a (+) u^b = u^min(a,b).
struct TropMonomial {
    std::vector<std::int64_t> e;

    TropMonomial() = default;
    explicit TropMonomial(std::size_t n) : e(n, 0) {}
    explicit TropMonomial(std::vector<std::int64_t> v) : e(std::move(v)) {}

    static TropMonomial generator(std::size_t n, std::size_t i) {
        TropMonomial t(n);
        t.e[i] = 1;
        return t;
    }

    std::size_t size() const { return e.size(); }
    bool is_one() const {
        return std::all_of(e.begin(), e.end(), [](auto x) { return x == 0; });
    }
    bool nonnegative() const {
        return std::all_of(e.begin(), e.end(), [](auto x) { return x >= 0; });
    }

    TropMonomial operator*(const TropMonomial& o) const {
        check(o);
        TropMonomial r = *this;
        for (std::size_t i = 0; i < e.size(); ++i) r.e[i] += o.e[i];
        return r;
    }
    TropMonomial inverse() const {
        TropMonomial r = *this;
        for (auto& x : r.e) x = -x;
        return r;
    }
    TropMonomial pow(std::int64_t k) const {
        TropMonomial r = *this;
        for (auto& x : r.e) x *= k;
        return r;
    }
    TropMonomial oplus(const TropMonomial& o) const {
        check(o);
        TropMonomial r = *this;
        for (std::size_t i = 0; i < e.size(); ++i) r.e[i] = std::min(e[i], o.e[i]);
        return r;
    }
    // y / (y (+) 1) and 1 / (y (+) 1).
    TropMonomial positive_part() const {
        TropMonomial r = *this;
        for (auto& x : r.e) x = std::max<std::int64_t>(x, 0);
        return r;
    }
    TropMonomial negative_part() const {
        TropMonomial r = *this;
        for (auto& x : r.e) x = std::max<std::int64_t>(-x, 0);
        return r;
    }

    friend bool operator==(const TropMonomial&, const TropMonomial&) = default;
    friend auto operator<=>(const TropMonomial&, const TropMonomial&) = default;

private:
    void check(const TropMonomial& o) const {
        if (o.e.size() != e.size()) throw std::invalid_argument("tropical monomials over different semifields");
    }
};

inline TropMonomial one_plus(const TropMonomial& y) { return y.oplus(TropMonomial(y.size())); }

} // namespace cxc
