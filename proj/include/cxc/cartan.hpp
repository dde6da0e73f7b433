#pragma once

#include "matrix.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <optional>
#include <queue>
#include <sstream>
#include <string>
#include <vector>

namespace cxc {

struct CartanError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Validated Cartan matrix of finite type. Indices are 0-based internally.
class CartanMatrix {
public:
    std::size_t rank() const { return a_.rows(); }
    std::int64_t operator()(std::size_t i, std::size_t j) const { return a_(i, j); }
    const IntMatrix& matrix() const { return a_; }
    const std::vector<std::int64_t>& symmetrizer() const { return d_; }
    const std::vector<std::vector<std::size_t>>& components() const { return components_; }
    std::size_t component_of(std::size_t i) const { return comp_of_[i]; }
    bool adjacent(std::size_t i, std::size_t j) const { return i != j && a_(i, j) != 0; }
    const std::string& label() const { return label_; }

    CartanMatrix transpose() const;

    friend bool operator==(const CartanMatrix& x, const CartanMatrix& y) { return x.a_ == y.a_; }

private:
    friend CartanMatrix validate(const IntMatrix&, std::string);
    IntMatrix a_;
    std::vector<std::int64_t> d_;
    std::vector<std::vector<std::size_t>> components_;
    std::vector<std::size_t> comp_of_;
    std::string label_;
};

namespace detail {

inline std::vector<std::vector<std::size_t>> graph_components(const IntMatrix& a) {
    const std::size_t n = a.rows();
    std::vector<int> seen(n, 0);
    std::vector<std::vector<std::size_t>> comps;
    for (std::size_t s = 0; s < n; ++s) {
        if (seen[s]) continue;
        std::vector<std::size_t> comp;
        std::queue<std::size_t> q;
        q.push(s);
        seen[s] = 1;
        while (!q.empty()) {
            auto i = q.front();
            q.pop();
            comp.push_back(i);
            for (std::size_t j = 0; j < n; ++j)
                if (j != i && a(i, j) != 0 && !seen[j]) {
                    seen[j] = 1;
                    q.push(j);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

} // namespace detail

inline CartanMatrix validate(const IntMatrix& a, std::string label = {}) {
    if (!a.square() || a.rows() == 0) throw CartanError("Cartan matrix must be square and nonempty");
    const std::size_t n = a.rows();
    for (std::size_t i = 0; i < n; ++i) {
        if (a(i, i) != 2) throw CartanError("not a generalized Cartan matrix: diagonal entry " + std::to_string(i + 1) + " is not 2");
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            if (a(i, j) > 0) throw CartanError("not a generalized Cartan matrix: positive off-diagonal entry");
            if ((a(i, j) == 0) != (a(j, i) == 0)) throw CartanError("not a generalized Cartan matrix: zero pattern not symmetric");
        }
    }
    CartanMatrix m;
    m.a_ = a;
    m.components_ = detail::graph_components(a);
    m.comp_of_.assign(n, 0);
    for (std::size_t c = 0; c < m.components_.size(); ++c)
        for (auto i : m.components_[c]) m.comp_of_[i] = c;

    // d_i a_ij = d_j a_ji, spread along a BFS tree, then checked on every edge.
    std::vector<Rational> d(n, 0);
    for (const auto& comp : m.components_) {
        d[comp[0]] = 1;
        std::queue<std::size_t> q;
        q.push(comp[0]);
        while (!q.empty()) {
            auto i = q.front();
            q.pop();
            for (std::size_t j = 0; j < n; ++j) {
                if (j == i || a(i, j) == 0) continue;
                Rational dj = d[i] * a(i, j) / a(j, i);
                if (d[j] == 0) {
                    d[j] = dj;
                    q.push(j);
                } else if (d[j] != dj) {
                    throw CartanError("not symmetrizable");
                }
            }
        }
        Integer l = 1;
        for (auto i : comp) l = boost::multiprecision::lcm(l, boost::multiprecision::denominator(d[i]));
        Integer g = 0;
        for (auto i : comp) {
            d[i] *= l;
            g = boost::multiprecision::gcd(g, boost::multiprecision::numerator(d[i]));
        }
        for (auto i : comp) d[i] /= g;
    }
    m.d_.resize(n);
    for (std::size_t i = 0; i < n; ++i) m.d_[i] = static_cast<std::int64_t>(boost::multiprecision::numerator(d[i]));

    for (std::size_t k = 1; k <= n; ++k) {
        std::vector<std::vector<Rational>> s(k, std::vector<Rational>(k));
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) s[i][j] = Rational(m.d_[i] * a(i, j));
        if (determinant(s) <= 0) throw CartanError("not of finite type: symmetrization is not positive definite");
    }
    m.label_ = std::move(label);
    return m;
}

inline CartanMatrix CartanMatrix::transpose() const {
    std::string l = label_.empty() ? std::string{} : label_ + "^T";
    return validate(a_.transpose(), l);
}

// Bourbaki numbering, a_ij = <alpha_i^vee, alpha_j>.
inline CartanMatrix cartan_from_label(char letter, int rank) {
    auto bad = [&] {
        return CartanError(std::string("invalid finite type ") + letter + std::to_string(rank));
    };
    bool ok = false;
    switch (letter) {
    case 'A': ok = rank >= 1; break;
    case 'B': ok = rank >= 2; break;
    case 'C': ok = rank >= 3; break;
    case 'D': ok = rank >= 4; break;
    case 'E': ok = rank >= 6 && rank <= 8; break;
    case 'F': ok = rank == 4; break;
    case 'G': ok = rank == 2; break;
    default: break;
    }
    if (!ok) throw bad();
    const std::size_t n = static_cast<std::size_t>(rank);
    IntMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i) a(i, i) = 2;
    auto link = [&](std::size_t i, std::size_t j, std::int64_t aij = -1, std::int64_t aji = -1) {
        a(i - 1, j - 1) = aij;
        a(j - 1, i - 1) = aji;
    };
    switch (letter) {
    case 'A':
        for (std::size_t i = 1; i < n; ++i) link(i, i + 1);
        break;
    case 'B':
        for (std::size_t i = 1; i + 1 < n; ++i) link(i, i + 1);
        link(n - 1, n, -1, -2);
        break;
    case 'C':
        for (std::size_t i = 1; i + 1 < n; ++i) link(i, i + 1);
        link(n - 1, n, -2, -1);
        break;
    case 'D':
        for (std::size_t i = 1; i + 1 < n; ++i) link(i, i + 1);
        link(n - 2, n);
        break;
    case 'E':
        link(1, 3);
        link(2, 4);
        for (std::size_t i = 3; i < n; ++i) link(i, i + 1);
        break;
    case 'F':
        link(1, 2);
        link(2, 3, -1, -2);
        link(3, 4);
        break;
    case 'G':
        link(1, 2, -3, -1);
        break;
    }
    return validate(a, std::string(1, letter) + std::to_string(rank));
}

inline CartanMatrix direct_sum(const CartanMatrix& x, const CartanMatrix& y) {
    const std::size_t n = x.rank(), k = y.rank();
    IntMatrix a(n + k, n + k);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a(i, j) = x(i, j);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) a(n + i, n + j) = y(i, j);
    std::string l;
    if (!x.label().empty() && !y.label().empty()) l = x.label() + "x" + y.label();
    return validate(a, l);
}

// Parses "A3", "E8", "A2xA1xG2".
inline CartanMatrix parse_type_label(const std::string& s) {
    if (s.empty()) throw CartanError("empty type label");
    std::optional<CartanMatrix> acc;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        auto next = s.find('x', pos);
        std::string part = s.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
        if (part.size() < 2 || !std::isupper(static_cast<unsigned char>(part[0])) ||
            !std::all_of(part.begin() + 1, part.end(), [](unsigned char ch) { return std::isdigit(ch); }))
            throw CartanError("malformed type label '" + s + "'");
        if (part.size() > 4) throw CartanError("rank too large in '" + part + "'");
        auto m = cartan_from_label(part[0], std::stoi(part.substr(1)));
        acc = acc ? direct_sum(*acc, m) : m;
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    return *acc;
}

// Rows of whitespace-separated integers; '#' starts a comment.
inline IntMatrix parse_matrix_text(const std::string& text) {
    std::vector<std::vector<std::int64_t>> rows;
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::vector<std::int64_t> row;
        std::size_t i = 0;
        while (i < line.size()) {
            if (std::isspace(static_cast<unsigned char>(line[i]))) {
                ++i;
                continue;
            }
            std::size_t start = i;
            if (line[i] == '-' || line[i] == '+') ++i;
            std::size_t digits = i;
            while (i < line.size() && std::isdigit(static_cast<unsigned char>(line[i]))) ++i;
            if (i == digits || (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))))
                throw CartanError("parse error at line " + std::to_string(lineno) + ", column " + std::to_string(start + 1) +
                                  ": expected integer");
            row.push_back(std::stoll(line.substr(start, i - start)));
        }
        if (row.empty()) continue;
        if (!rows.empty() && row.size() != rows[0].size())
            throw CartanError("parse error at line " + std::to_string(lineno) + ", column 1: row length " +
                              std::to_string(row.size()) + " differs from " + std::to_string(rows[0].size()));
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw CartanError("parse error: empty matrix");
    if (rows.size() != rows[0].size()) throw CartanError("parse error: matrix is not square");
    return IntMatrix::from_rows(rows);
}

// epsilon(i) in {+1,-1}; the lowest index of each component gets +1.
inline std::vector<int> bipartition(const CartanMatrix& m) {
    const std::size_t n = m.rank();
    std::vector<int> eps(n, 0);
    for (const auto& comp : m.components()) {
        eps[comp[0]] = 1;
        std::queue<std::size_t> q;
        q.push(comp[0]);
        while (!q.empty()) {
            auto i = q.front();
            q.pop();
            for (std::size_t j = 0; j < n; ++j) {
                if (!m.adjacent(i, j)) continue;
                if (eps[j] == 0) {
                    eps[j] = -eps[i];
                    q.push(j);
                } else if (eps[j] == eps[i]) {
                    throw CartanError("Coxeter graph has an odd cycle");
                }
            }
        }
    }
    return eps;
}

// All indecomposable finite types of rank at most max_rank.
inline std::vector<CartanMatrix> finite_types_up_to(int max_rank) {
    std::vector<CartanMatrix> out;
    for (int r = 1; r <= max_rank; ++r) {
        for (char l : {'A', 'B', 'C', 'D', 'E', 'F', 'G'}) {
            try {
                out.push_back(cartan_from_label(l, r));
            } catch (const CartanError&) {
            }
        }
    }
    return out;
}

} // namespace cxc
