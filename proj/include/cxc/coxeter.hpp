#pragma once

#include "weyl.hpp"

#include <map>
#include <memory>
#include <set>
#include <unordered_map>

namespace cxc {

struct CoxeterError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// c = s_{order[0]} s_{order[1]} ... ; stored as the lexicographically smallest
// ordering inducing the same orientation of the Coxeter graph.
class CoxeterElement {
public:
    CoxeterElement() = default;
    CoxeterElement(const CartanMatrix& m, const std::vector<std::size_t>& order) {
        const std::size_t n = m.rank();
        if (order.size() != n) throw CoxeterError("Coxeter element must use every index exactly once");
        std::vector<std::size_t> pos(n, n);
        for (std::size_t k = 0; k < n; ++k) {
            if (order[k] >= n || pos[order[k]] != n) throw CoxeterError("Coxeter element must be a permutation");
            pos[order[k]] = k;
        }
        order_ = canonical_extension(m, [&](std::size_t i, std::size_t j) { return pos[i] < pos[j]; });
        pos_.assign(n, 0);
        for (std::size_t k = 0; k < n; ++k) pos_[order_[k]] = k;
    }

    static CoxeterElement bipartite(const CartanMatrix& m) {
        auto eps = bipartition(m);
        std::vector<std::size_t> order;
        for (int s : {1, -1})
            for (std::size_t i = 0; i < m.rank(); ++i)
                if (eps[i] == s) order.push_back(i);
        return CoxeterElement(m, order);
    }

    const std::vector<std::size_t>& order() const { return order_; }
    std::size_t position(std::size_t i) const { return pos_[i]; }
    std::size_t rank() const { return order_.size(); }
    bool before(std::size_t i, std::size_t j) const { return pos_[i] < pos_[j]; }

    friend bool operator==(const CoxeterElement& a, const CoxeterElement& b) { return a.order_ == b.order_; }
    friend bool operator<(const CoxeterElement& a, const CoxeterElement& b) { return a.order_ < b.order_; }

    // Smallest topological order of the orientation i -> j when i, j adjacent and earlier(i, j).
    template <class Earlier>
    static std::vector<std::size_t> canonical_extension(const CartanMatrix& m, Earlier earlier) {
        const std::size_t n = m.rank();
        std::vector<std::size_t> indeg(n, 0);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (m.adjacent(i, j) && earlier(i, j)) ++indeg[j];
        std::set<std::size_t> ready;
        for (std::size_t i = 0; i < n; ++i)
            if (!indeg[i]) ready.insert(i);
        std::vector<std::size_t> out;
        while (!ready.empty()) {
            auto i = *ready.begin();
            ready.erase(ready.begin());
            out.push_back(i);
            for (std::size_t j = 0; j < n; ++j)
                if (m.adjacent(i, j) && earlier(i, j) && --indeg[j] == 0) ready.insert(j);
        }
        if (out.size() != n) throw CoxeterError("orientation has a cycle");
        return out;
    }

private:
    std::vector<std::size_t> order_;
    std::vector<std::size_t> pos_;
};

inline bool prec(const CartanMatrix& m, const CoxeterElement& c, std::size_t i, std::size_t j) {
    return m.adjacent(i, j) && c.before(i, j);
}

inline IntMatrix b_matrix(const CartanMatrix& m, const CoxeterElement& c) {
    const std::size_t n = m.rank();
    IntMatrix b(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (!m.adjacent(i, j)) continue;
            b(i, j) = c.before(i, j) ? -m(i, j) : m(i, j);
        }
    return b;
}

inline Weight apply_coxeter(const CartanMatrix& m, const CoxeterElement& c, Weight w) {
    return apply_word(m, c.order(), std::move(w));
}
inline Root apply_coxeter(const CartanMatrix& m, const CoxeterElement& c, Root r) {
    return apply_word(m, c.order(), std::move(r));
}
template <class V>
V apply_coxeter_inverse(const CartanMatrix& m, const CoxeterElement& c, V x) {
    WeylWord rev(c.order().rbegin(), c.order().rend());
    return apply_word(m, rev, std::move(x));
}

// All acyclic orientations of the Coxeter graph, as canonical Coxeter elements.
inline std::vector<CoxeterElement> all_coxeter_elements(const CartanMatrix& m) {
    const std::size_t n = m.rank();
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (m.adjacent(i, j)) edges.emplace_back(i, j);
    if (edges.size() > 20) throw CoxeterError("too many edges to enumerate orientations");
    std::vector<CoxeterElement> out;
    for (std::uint32_t mask = 0; mask < (1u << edges.size()); ++mask) {
        IntMatrix dir(n, n);
        for (std::size_t e = 0; e < edges.size(); ++e) {
            auto [i, j] = edges[e];
            if (mask >> e & 1u) dir(j, i) = 1;
            else dir(i, j) = 1;
        }
        auto order = CoxeterElement::canonical_extension(m, [&](std::size_t i, std::size_t j) { return dir(i, j) == 1; });
        out.emplace_back(m, order);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

inline bool is_source(const CartanMatrix& m, const CoxeterElement& c, std::size_t i) {
    for (std::size_t j = 0; j < m.rank(); ++j)
        if (prec(m, c, j, i)) return false;
    return true;
}

// c = s_i c'  |->  c' s_i.
inline CoxeterElement cyclical_move(const CartanMatrix& m, const CoxeterElement& c, std::size_t i) {
    if (!is_source(m, c, i)) throw CoxeterError("letter " + std::to_string(i + 1) + " cannot be moved to the front");
    std::vector<std::size_t> order;
    for (auto j : c.order())
        if (j != i) order.push_back(j);
    order.push_back(i);
    return CoxeterElement(m, order);
}
inline CoxeterElement cyclical_move(const CartanMatrix& m, const CoxeterElement& c) {
    return cyclical_move(m, c, c.order().front());
}

struct MoveGraph {
    std::vector<CoxeterElement> nodes;
    std::vector<std::pair<std::size_t, std::size_t>> edges;  // directed: node, moved node
    bool connected = false;
};

inline MoveGraph move_graph(const CartanMatrix& m) {
    MoveGraph g;
    g.nodes = all_coxeter_elements(m);
    auto index = [&](const CoxeterElement& c) {
        auto it = std::lower_bound(g.nodes.begin(), g.nodes.end(), c);
        if (it == g.nodes.end() || !(*it == c)) throw CoxeterError("move left the orientation set");
        return static_cast<std::size_t>(it - g.nodes.begin());
    };
    std::vector<std::vector<std::size_t>> adj(g.nodes.size());
    for (std::size_t k = 0; k < g.nodes.size(); ++k)
        for (std::size_t i = 0; i < m.rank(); ++i)
            if (is_source(m, g.nodes[k], i)) {
                auto t = index(cyclical_move(m, g.nodes[k], i));
                g.edges.emplace_back(k, t);
                adj[k].push_back(t);
                adj[t].push_back(k);
            }
    std::vector<int> seen(g.nodes.size(), 0);
    std::vector<std::size_t> stack{0};
    seen[0] = 1;
    std::size_t count = 1;
    while (!stack.empty()) {
        auto k = stack.back();
        stack.pop_back();
        for (auto t : adj[k])
            if (!seen[t]) {
                seen[t] = 1;
                ++count;
                stack.push_back(t);
            }
    }
    g.connected = count == g.nodes.size();
    return g;
}

struct PiLabel {
    std::size_t i = 0;
    std::int64_t m = 0;
    friend auto operator<=>(const PiLabel&, const PiLabel&) = default;
};

// Everything derived from (A, c): B(c), h, star, beta roots, Pi(c), tau_c and the
// compatibility table. Immutable after construction.
class CoxeterData {
public:
    CoxeterData(CartanMatrix m, CoxeterElement c) : m_(std::move(m)), c_(std::move(c)) {
        const std::size_t n = m_.rank();
        if (c_.rank() != n) throw CoxeterError("Coxeter element rank mismatch");
        b_ = b_matrix(m_, c_);
        compute_betas();
        compute_chains();
        compute_coxeter_numbers();
        compute_compatibility();
    }

    const CartanMatrix& cartan() const { return m_; }
    const CoxeterElement& element() const { return c_; }
    std::size_t rank() const { return m_.rank(); }
    bool prec(std::size_t i, std::size_t j) const { return cxc::prec(m_, c_, i, j); }
    const IntMatrix& b() const { return b_; }

    std::int64_t h(std::size_t i) const { return h_[i]; }
    std::size_t star(std::size_t i) const { return star_[i]; }
    const std::vector<std::int64_t>& h_vector() const { return h_; }
    const std::vector<std::size_t>& star_vector() const { return star_; }
    std::int64_t coxeter_number_of(std::size_t i) const { return cox_[m_.component_of(i)]; }
    const std::vector<std::int64_t>& coxeter_numbers() const { return cox_; }
    const std::vector<Root>& betas() const { return beta_; }

    std::size_t size() const { return labels_.size(); }
    const std::vector<PiLabel>& labels() const { return labels_; }
    const PiLabel& label(std::size_t k) const { return labels_[k]; }
    const Weight& weight(std::size_t k) const { return weights_[k]; }
    const Root& denom(std::size_t k) const { return denoms_[k]; }
    std::size_t index(const PiLabel& l) const {
        if (l.i >= rank() || l.m < 0 || l.m > h_[l.i]) throw CoxeterError("label out of range");
        return offset_[l.i] + static_cast<std::size_t>(l.m);
    }
    std::size_t index(std::size_t i, std::int64_t m) const { return index(PiLabel{i, m}); }
    std::optional<std::size_t> find(const Weight& w) const {
        auto it = by_weight_.find(w);
        if (it == by_weight_.end()) return std::nullopt;
        return it->second;
    }
    bool fundamental(std::size_t k) const { return labels_[k].m == 0; }

    std::size_t tau(std::size_t k) const {
        const auto& l = labels_[k];
        return l.m < h_[l.i] ? k + 1 : index(star_[l.i], 0);
    }
    std::size_t tau_inv(std::size_t k) const {
        const auto& l = labels_[k];
        return l.m > 0 ? k - 1 : index(star_[l.i], h_[star_[l.i]]);
    }

    std::int64_t compat(std::size_t g, std::size_t d) const { return compat_[g * size() + d]; }

    // The same degree, reduced with tau_c^{-1} instead of tau_c.
    std::int64_t compat_backward(std::size_t g, std::size_t d) const {
        std::size_t steps = 0;
        while (!fundamental(g)) {
            g = tau_inv(g);
            d = tau_inv(d);
            if (++steps > size()) throw CoxeterError("tau_c^{-1} reduction did not terminate");
        }
        return base_compat(g, d);
    }

private:
    std::int64_t base_compat(std::size_t g, std::size_t d) const {
        if (fundamental(d)) return 0;
        return denoms_[d][labels_[g].i];
    }

    void compute_betas() {
        const std::size_t n = rank();
        beta_.assign(n, Root(n));
        WeylWord prefix;
        for (auto i : c_.order()) {
            beta_[i] = apply_word(m_, prefix, Root::unit(n, i));
            prefix.push_back(i);
        }
    }

    void compute_chains() {
        const std::size_t n = rank();
        const std::int64_t cap = 2 * static_cast<std::int64_t>(n) + 30;
        h_.assign(n, 0);
        star_.assign(n, 0);
        offset_.assign(n, 0);
        std::vector<std::vector<Weight>> chain(n);
        std::vector<std::vector<Root>> diffs(n);
        for (std::size_t i = 0; i < n; ++i) {
            Weight w = Weight::unit(n, i);
            Root beta = beta_[i];
            chain[i].push_back(w);
            for (std::int64_t step = 1;; ++step) {
                if (step > cap) throw CoxeterError("h(i;c) iteration exceeded the Coxeter bound");
                Weight next = apply_coxeter(m_, c_, w);
                if (!(beta.nonnegative() && !beta.is_zero()))
                    throw CoxeterError("weight chain is not strictly decreasing");
                if (root_to_weight_coords(m_, beta) != w - next) throw CoxeterError("weight chain difference mismatch");
                diffs[i].push_back(beta);
                chain[i].push_back(next);
                w = next;
                auto neg = negative_fundamental(w);
                if (neg) {
                    h_[i] = step;
                    star_[i] = *neg;
                    break;
                }
                beta = apply_coxeter(m_, c_, beta);
            }
        }
        for (std::size_t i = 0; i < n; ++i)
            if (star_[star_[i]] != i) throw CoxeterError("star is not an involution");
        for (std::size_t i = 0; i < n; ++i) {
            offset_[i] = labels_.size();
            for (std::int64_t mm = 0; mm <= h_[i]; ++mm) {
                labels_.push_back({i, mm});
                weights_.push_back(chain[i][static_cast<std::size_t>(mm)]);
                denoms_.push_back(mm == 0 ? -Root::unit(n, i) : diffs[i][static_cast<std::size_t>(mm - 1)]);
            }
        }
        for (std::size_t k = 0; k < labels_.size(); ++k)
            if (!by_weight_.emplace(weights_[k], k).second) throw CoxeterError("weights of Pi(c) are not distinct");
    }

    static std::optional<std::size_t> negative_fundamental(const Weight& w) {
        std::optional<std::size_t> at;
        for (std::size_t k = 0; k < w.size(); ++k) {
            if (w[k] == 0) continue;
            if (w[k] != -1 || at) return std::nullopt;
            at = k;
        }
        return at;
    }

    void compute_coxeter_numbers() {
        const std::size_t n = rank();
        for (const auto& comp : m_.components()) {
            std::vector<Weight> ws;
            for (auto i : comp) ws.push_back(Weight::unit(n, i));
            std::int64_t order = 0;
            const std::int64_t cap = 2 * static_cast<std::int64_t>(n) + 31;
            while (true) {
                for (auto& w : ws) w = apply_coxeter(m_, c_, w);
                ++order;
                bool back = true;
                for (std::size_t k = 0; k < comp.size(); ++k) back = back && ws[k] == Weight::unit(n, comp[k]);
                if (back) break;
                if (order > cap) throw CoxeterError("Coxeter number iteration exceeded bound");
            }
            cox_.push_back(order);
        }
    }

    void compute_compatibility() {
        const std::size_t s = size();
        compat_.assign(s * s, 0);
        for (std::size_t g0 = 0; g0 < s; ++g0)
            for (std::size_t d0 = 0; d0 < s; ++d0) {
                std::size_t g = g0, d = d0, steps = 0;
                while (!fundamental(g)) {
                    g = tau(g);
                    d = tau(d);
                    if (++steps > s) throw CoxeterError("tau_c reduction did not terminate");
                }
                compat_[g0 * s + d0] = base_compat(g, d);
            }
    }

    CartanMatrix m_;
    CoxeterElement c_;
    IntMatrix b_;
    std::vector<Root> beta_;
    std::vector<std::int64_t> h_;
    std::vector<std::size_t> star_;
    std::vector<std::int64_t> cox_;
    std::vector<std::size_t> offset_;
    std::vector<PiLabel> labels_;
    std::vector<Weight> weights_;
    std::vector<Root> denoms_;
    std::unordered_map<Weight, std::size_t, LatticeHash> by_weight_;
    std::vector<std::int64_t> compat_;
};

using CoxeterDataPtr = std::shared_ptr<const CoxeterData>;

inline CoxeterDataPtr make_coxeter_data(const CartanMatrix& m, const CoxeterElement& c) {
    return std::make_shared<const CoxeterData>(m, c);
}

// Maximal pairwise compatible subsets of Pi(c), as sorted index vectors.
inline std::vector<std::vector<std::size_t>> clusters(const CoxeterData& cd) {
    const std::size_t s = cd.size();
    std::vector<std::vector<char>> adj(s, std::vector<char>(s, 0));
    for (std::size_t a = 0; a < s; ++a)
        for (std::size_t b = 0; b < s; ++b)
            adj[a][b] = a != b && cd.compat(a, b) == 0 && cd.compat(b, a) == 0;
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> r;
    // Bron-Kerbosch with pivoting.
    std::function<void(std::vector<std::size_t>, std::vector<std::size_t>)> bk = [&](std::vector<std::size_t> p,
                                                                                      std::vector<std::size_t> x) {
        if (p.empty() && x.empty()) {
            auto cl = r;
            std::sort(cl.begin(), cl.end());
            out.push_back(std::move(cl));
            return;
        }
        std::size_t pivot = p.empty() ? x.front() : p.front();
        std::size_t best = 0;
        for (auto v : p) {
            std::size_t cnt = 0;
            for (auto u : p) cnt += adj[v][u];
            if (cnt > best) best = cnt, pivot = v;
        }
        auto cand = p;
        for (auto v : cand) {
            if (adj[pivot][v]) continue;
            std::vector<std::size_t> p2, x2;
            for (auto u : p)
                if (adj[v][u]) p2.push_back(u);
            for (auto u : x)
                if (adj[v][u]) x2.push_back(u);
            r.push_back(v);
            bk(std::move(p2), std::move(x2));
            r.pop_back();
            p.erase(std::find(p.begin(), p.end(), v));
            x.push_back(v);
        }
    };
    std::vector<std::size_t> all(s);
    std::iota(all.begin(), all.end(), 0);
    bk(all, {});
    std::sort(out.begin(), out.end());
    for (const auto& cl : out)
        if (cl.size() != cd.rank()) throw CoxeterError("maximal compatible set of size " + std::to_string(cl.size()));
    return out;
}

// psi_{c, c~}: Pi(c~) -> Pi(c), where c = s_i c' and c~ = c' s_i.
inline std::size_t psi_move(const CoxeterData& c, const CoxeterData& ct, std::size_t i, std::size_t k) {
    if (!(cyclical_move(c.cartan(), c.element(), i) == ct.element())) throw CoxeterError("c~ is not one move from c");
    const auto& w = ct.weight(k);
    const std::size_t n = c.rank();
    std::optional<std::size_t> r;
    if (w == -Weight::unit(n, i)) r = c.index(i, 0);
    else r = c.find(reflect_weight(c.cartan(), i, w));
    if (!r) throw CoxeterError("psi image is not in Pi(c)");
    return *r;
}

inline bool is_bipartite(const CoxeterData& cd) {
    return cd.element() == CoxeterElement::bipartite(cd.cartan());
}

// psi: Pi(t) -> almost positive roots.
inline Root psi_bipartite(const CoxeterData& cd, std::size_t k) {
    if (!is_bipartite(cd)) throw CoxeterError("Coxeter element is not bipartite");
    return cd.denom(k);
}

// tau_eps on almost positive roots.
inline Root tau_eps(const CartanMatrix& m, const std::vector<int>& eps, int sign, const Root& a) {
    const std::size_t n = m.rank();
    for (std::size_t j = 0; j < n; ++j)
        if (eps[j] == -sign && a == -Root::unit(n, j)) return a;
    Root r = a;
    for (std::size_t i = 0; i < n; ++i)
        if (eps[i] == sign) r = reflect_root(m, i, r);
    return r;
}

inline std::int64_t root_compat(const CartanMatrix& m, Root a, Root b) {
    const std::size_t n = m.rank();
    auto eps = bipartition(m);
    const std::size_t cap = 4 * (n + 1) * (n + 30);
    for (std::size_t step = 0;; ++step) {
        for (std::size_t i = 0; i < n; ++i)
            if (a == -Root::unit(n, i)) return std::max<std::int64_t>(b[i], 0);
        if (step > cap) throw CoxeterError("root compatibility reduction did not terminate");
        int sign = step % 2 == 0 ? -1 : 1;
        a = tau_eps(m, eps, sign, a);
        b = tau_eps(m, eps, sign, b);
    }
}

// Exchange relation shape: x[a] x[b] = sum over two terms of coef * prod x[v]^e.
struct RelationTerm {
    std::vector<std::pair<std::size_t, std::int64_t>> vars;  // sorted Pi indices with exponents
    std::vector<std::int64_t> coef;                          // exponents over coefficient generators
    friend auto operator<=>(const RelationTerm&, const RelationTerm&) = default;
};

struct ExchangeRelation {
    std::size_t a = 0, b = 0;  // a <= b
    std::vector<RelationTerm> terms;  // sorted
    bool primitive() const {
        return std::any_of(terms.begin(), terms.end(), [](const RelationTerm& t) { return t.vars.empty(); });
    }
    void normalize() {
        if (a > b) std::swap(a, b);
        for (auto& t : terms) std::sort(t.vars.begin(), t.vars.end());
        std::sort(terms.begin(), terms.end());
    }
    friend auto operator<=>(const ExchangeRelation&, const ExchangeRelation&) = default;
};

namespace detail {

inline void add_var(RelationTerm& t, std::size_t v, std::int64_t e) {
    if (e == 0) return;
    for (auto& [u, x] : t.vars)
        if (u == v) {
            x += e;
            return;
        }
    t.vars.emplace_back(v, e);
}

// The two primitive families, with coefficient exponents supplied by callbacks.
template <class Special, class Chain>
std::vector<ExchangeRelation> primitive_family(const CoxeterData& cd, Special special, Chain chain) {
    const auto& m = cd.cartan();
    const std::size_t n = cd.rank();
    std::set<ExchangeRelation> out;
    for (std::size_t k = 0; k < n; ++k) {
        ExchangeRelation r;
        r.a = cd.index(cd.star(k), cd.h(cd.star(k)));  // -omega_k
        r.b = cd.index(k, 0);
        RelationTerm mono, cons;
        std::tie(mono.coef, cons.coef) = special(k);
        for (std::size_t i = 0; i < n; ++i) {
            if (cd.prec(i, k)) add_var(mono, cd.index(i, 0), -m(i, k));
            if (cd.prec(k, i)) add_var(mono, cd.index(cd.star(i), cd.h(cd.star(i))), -m(i, k));
        }
        r.terms = {mono, cons};
        r.normalize();
        out.insert(r);
        for (std::int64_t mm = 1; mm <= cd.h(k); ++mm) {
            ExchangeRelation q;
            q.a = cd.index(k, mm - 1);
            q.b = cd.index(k, mm);
            RelationTerm mono2, cons2;
            std::tie(mono2.coef, cons2.coef) = chain(k, mm);
            for (std::size_t i = 0; i < n; ++i) {
                if (cd.prec(i, k)) add_var(mono2, cd.index(i, mm), -m(i, k));
                if (cd.prec(k, i)) add_var(mono2, cd.index(i, mm - 1), -m(i, k));
            }
            q.terms = {mono2, cons2};
            q.normalize();
            out.insert(q);
        }
    }
    return {out.begin(), out.end()};
}

} // namespace detail

// Primitive exchange relations with principal coefficients y_1..y_n.
inline std::vector<ExchangeRelation> primitive_relations(const CoxeterData& cd) {
    const std::size_t n = cd.rank();
    return detail::primitive_family(
        cd,
        [&](std::size_t k) {
            std::vector<std::int64_t> y(n, 0);
            y[k] = 1;
            return std::make_pair(y, std::vector<std::int64_t>(n, 0));
        },
        [&](std::size_t k, std::int64_t mm) {
            const auto& d = cd.denom(cd.index(k, mm));
            auto exps = weight_to_root_coords(cd.cartan(), cd.weight(cd.index(k, mm - 1)) - cd.weight(cd.index(k, mm)));
            if (!exps.integral() || exps.to_root() != d) throw CoxeterError("non-integral coefficient exponent");
            return std::make_pair(std::vector<std::int64_t>(n, 0), d.c);
        });
}

// Primitive exchange relations with universal coefficients p[gamma], gamma in Pi(c).
inline std::vector<ExchangeRelation> universal_primitive_relations(const CoxeterData& cd) {
    const std::size_t s = cd.size();
    auto column = [&](std::size_t target) {
        std::vector<std::int64_t> e(s);
        for (std::size_t g = 0; g < s; ++g) e[g] = cd.compat(g, target);
        return e;
    };
    return detail::primitive_family(
        cd,
        [&](std::size_t k) {
            std::vector<std::int64_t> p(s, 0);
            p[cd.index(k, 0)] = 1;
            return std::make_pair(p, column(cd.index(k, 0)));
        },
        [&](std::size_t k, std::int64_t mm) {
            std::vector<std::int64_t> p(s, 0);
            p[cd.index(k, mm)] = 1;
            return std::make_pair(p, column(cd.index(k, mm)));
        });
}

} // namespace cxc
