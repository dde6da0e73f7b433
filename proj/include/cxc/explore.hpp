#pragma once

#include "seed.hpp"

#include <cstdlib>
#include <deque>
#include <random>
#include <unordered_map>

namespace cxc {

constexpr std::size_t kDefaultSeedCap = 100000;

struct CapExceeded : std::runtime_error {
    explicit CapExceeded(std::size_t cap) : std::runtime_error("seed cap of " + std::to_string(cap) + " exceeded"), cap(cap) {}
    std::size_t cap;
};

// Unlabeled seed: cluster as sorted variable ids, with y and B permuted to match.
struct SeedRecord {
    std::vector<std::size_t> cluster;
    std::vector<TropMonomial> coeffs;
    IntMatrix b;
};

struct ExchangeGraph {
    std::size_t rank = 0;
    std::vector<std::string> generators;
    std::vector<LaurentPoly> variables;  // canonical order
    std::vector<SeedRecord> seeds;       // canonical order
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    std::vector<ExchangeRelation> relations;  // indices into variables, coefficient exponents over generators
    std::size_t divisions = 0;

    std::optional<std::size_t> variable_index(const LaurentPoly& p) const {
        auto it = std::lower_bound(variables.begin(), variables.end(), p);
        if (it == variables.end() || !(*it == p)) return std::nullopt;
        return static_cast<std::size_t>(it - variables.begin());
    }
};

// By default every mutation is an exact Laurent division. With identify_by_evaluation a
// mutation is first evaluated at random points modulo 2^61-1 and matched against the
// variables already found; only unseen values trigger the exact division.
struct ExploreOptions {
    std::size_t cap = kDefaultSeedCap;
    bool identify_by_evaluation = false;
};

namespace detail {

namespace modp {
constexpr std::uint64_t P = (std::uint64_t{1} << 61) - 1;
inline std::uint64_t mul(std::uint64_t a, std::uint64_t b) {
    unsigned __int128 z = static_cast<unsigned __int128>(a) * b;
    std::uint64_t r = static_cast<std::uint64_t>(z & P) + static_cast<std::uint64_t>(z >> 61);
    return r >= P ? r - P : r;
}
inline std::uint64_t add(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r = a + b;
    return r >= P ? r - P : r;
}
inline std::uint64_t pow(std::uint64_t a, std::uint64_t e) {
    std::uint64_t r = 1;
    for (; e; e >>= 1, a = mul(a, a))
        if (e & 1) r = mul(r, a);
    return r;
}
inline std::uint64_t inv(std::uint64_t a) { return pow(a, P - 2); }
inline std::uint64_t pow_signed(std::uint64_t a, std::int64_t e) {
    return e >= 0 ? pow(a, static_cast<std::uint64_t>(e)) : inv(pow(a, static_cast<std::uint64_t>(-e)));
}
inline std::uint64_t reduce(const Integer& c) {
    Integer r = c % Integer(P);
    if (r < 0) r += Integer(P);
    return static_cast<std::uint64_t>(r);
}
} // namespace modp

constexpr std::size_t kPoints = 2;
using Values = std::array<std::uint64_t, kPoints>;

struct ValuesHash {
    std::size_t operator()(const Values& v) const { return static_cast<std::size_t>(v[0] * 0x9e3779b97f4a7c15ull ^ v[1]); }
};

inline void put(std::string& key, std::int64_t v) { key.append(reinterpret_cast<const char*>(&v), sizeof v); }

class Explorer {
public:
    Explorer(const Seed& s0, ExploreOptions opt) : s0_(s0), cap_(opt.cap), fast_(opt.identify_by_evaluation), n_(s0.rank()), nv_(s0.nvars()) {
        std::mt19937_64 rng(0x5eed);
        for (auto& pt : points_) {
            pt.resize(nv_);
            for (auto& c : pt) c = 2 + rng() % (modp::P - 3);
        }
    }

    ExchangeGraph run() {
        Work w;
        w.b = s0_.b;
        w.coeffs = s0_.coeffs;
        for (const auto& x : s0_.cluster) w.cluster.push_back(intern(x));
        add_seed(std::move(w));
        std::size_t head = 0;
        while (head < seeds_.size()) {
            const std::size_t cur = head++;
            for (std::size_t k = 0; k < n_; ++k) {
                Work next = mutate_at(seeds_[cur], k);
                std::size_t t = add_seed(std::move(next));
                edges_.emplace_back(std::min(cur, t), std::max(cur, t));
            }
        }
        return finish();
    }

private:
    struct Work {
        std::vector<std::size_t> cluster;
        std::vector<TropMonomial> coeffs;
        IntMatrix b;
    };

    Values evaluate(const LaurentPoly& p) const {
        Values out{};
        for (std::size_t k = 0; k < kPoints; ++k) {
            std::uint64_t acc = 0;
            for (const auto& t : p.terms()) {
                std::uint64_t m = modp::reduce(t.coef);
                for (std::size_t v = 0; v < nv_; ++v)
                    if (t.mono[v]) m = modp::mul(m, modp::pow_signed(points_[k][v], t.mono[v]));
                acc = modp::add(acc, m);
            }
            out[k] = acc;
        }
        return out;
    }

    std::size_t intern(const LaurentPoly& p) {
        auto [it, fresh] = ids_.emplace(p, vars_.size());
        if (fresh) {
            vars_.push_back(p);
            if (fast_) {
                values_.push_back(evaluate(p));
                by_value_.emplace(values_.back(), it->second);
            }
        }
        return it->second;
    }

    // Value of the exchange quotient, or nullopt if the old variable vanishes at a point.
    std::optional<Values> predict(const Work& w, std::size_t k) const {
        Values out{};
        const auto& yk = w.coeffs[k];
        for (std::size_t p = 0; p < kPoints; ++p) {
            std::uint64_t plus = 1, minus = 1;
            for (std::size_t g = 0; g < yk.size(); ++g) {
                if (yk.e[g] > 0) plus = modp::mul(plus, modp::pow(points_[p][n_ + g], static_cast<std::uint64_t>(yk.e[g])));
                if (yk.e[g] < 0) minus = modp::mul(minus, modp::pow(points_[p][n_ + g], static_cast<std::uint64_t>(-yk.e[g])));
            }
            for (std::size_t i = 0; i < n_; ++i) {
                auto b = w.b(i, k);
                if (b > 0) plus = modp::mul(plus, modp::pow(values_[w.cluster[i]][p], static_cast<std::uint64_t>(b)));
                if (b < 0) minus = modp::mul(minus, modp::pow(values_[w.cluster[i]][p], static_cast<std::uint64_t>(-b)));
            }
            std::uint64_t den = values_[w.cluster[k]][p];
            if (den == 0) return std::nullopt;
            out[p] = modp::mul(modp::add(plus, minus), modp::inv(den));
        }
        return out;
    }

    Work canonical(const Work& w) const {
        std::vector<std::size_t> perm(n_);
        std::iota(perm.begin(), perm.end(), 0);
        std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) { return w.cluster[a] < w.cluster[b]; });
        Work c;
        c.b = IntMatrix(n_, n_);
        for (std::size_t a = 0; a < n_; ++a) {
            c.cluster.push_back(w.cluster[perm[a]]);
            c.coeffs.push_back(w.coeffs[perm[a]]);
            for (std::size_t b = 0; b < n_; ++b) c.b(a, b) = w.b(perm[a], perm[b]);
        }
        return c;
    }

    std::string key_of(const Work& c) const {
        std::string key;
        for (auto id : c.cluster) put(key, static_cast<std::int64_t>(id));
        for (const auto& y : c.coeffs)
            for (auto e : y.e) put(key, e);
        for (auto e : c.b.data()) put(key, e);
        return key;
    }

    std::size_t add_seed(Work w) {
        auto key = key_of(canonical(w));
        auto [it, fresh] = seed_ids_.emplace(std::move(key), seeds_.size());
        if (fresh) {
            if (seeds_.size() + 1 > cap_) throw CapExceeded(cap_);
            seeds_.push_back(std::move(w));
        }
        return it->second;
    }

    Work mutate_at(const Work& w, std::size_t k) {
        const auto& yk = w.coeffs[k];
        // The exchange binomial is determined by these data; identical binomials share one division.
        std::string key;
        put(key, static_cast<std::int64_t>(w.cluster[k]));
        for (auto e : yk.e) put(key, e);
        RelationTerm plus, minus;
        plus.coef = yk.positive_part().e;
        minus.coef = yk.negative_part().e;
        for (std::size_t i = 0; i < n_; ++i) {
            if (w.b(i, k) > 0) plus.vars.emplace_back(w.cluster[i], w.b(i, k));
            if (w.b(i, k) < 0) minus.vars.emplace_back(w.cluster[i], -w.b(i, k));
        }
        std::sort(plus.vars.begin(), plus.vars.end());
        std::sort(minus.vars.begin(), minus.vars.end());
        for (auto* t : {&plus, &minus}) {
            put(key, -1);
            for (auto [id, e] : t->vars) {
                put(key, static_cast<std::int64_t>(id));
                put(key, e);
            }
        }
        std::size_t fresh_id;
        auto hit = memo_.find(key);
        std::optional<Values> predicted;
        if (hit == memo_.end() && fast_) predicted = predict(w, k);
        std::unordered_map<Values, std::size_t, ValuesHash>::const_iterator known;
        if (hit != memo_.end()) {
            fresh_id = hit->second;
        } else if (predicted && (known = by_value_.find(*predicted)) != by_value_.end()) {
            fresh_id = known->second;
            memo_.emplace(std::move(key), fresh_id);
        } else {
            auto num = exchange_numerator(nv_, n_, yk, w.b, k, [&](std::size_t i) -> const LaurentPoly& { return vars_[w.cluster[i]]; });
            auto q = num.exact_divide(vars_[w.cluster[k]]);
            ++divisions_;
            fresh_id = intern(q);
            if (predicted && values_[fresh_id] != *predicted) throw std::logic_error("modular evaluation disagrees with exact division");
            memo_.emplace(std::move(key), fresh_id);
        }
        ExchangeRelation rel;
        rel.a = w.cluster[k];
        rel.b = fresh_id;
        rel.terms = {plus, minus};
        rel.normalize();
        relations_.insert(std::move(rel));

        Work r;
        r.b = mutate_matrix(w.b, k);
        r.coeffs = mutate_coefficients(w.coeffs, w.b, k);
        r.cluster = w.cluster;
        r.cluster[k] = fresh_id;
        return r;
    }

    ExchangeGraph finish() {
        ExchangeGraph g;
        g.rank = n_;
        g.generators = s0_.generators;
        g.divisions = divisions_;
        std::vector<std::size_t> order(vars_.size());
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return vars_[a] < vars_[b]; });
        std::vector<std::size_t> rank_of(vars_.size());
        for (std::size_t r = 0; r < order.size(); ++r) rank_of[order[r]] = r;
        for (auto id : order) g.variables.push_back(vars_[id]);

        std::vector<std::pair<std::string, std::size_t>> keyed;
        std::vector<Work> relabeled;
        for (std::size_t s = 0; s < seeds_.size(); ++s) {
            Work w = seeds_[s];
            for (auto& id : w.cluster) id = rank_of[id];
            w = canonical(w);
            keyed.emplace_back(key_of(w), s);
            relabeled.push_back(std::move(w));
        }
        std::sort(keyed.begin(), keyed.end());
        std::vector<std::size_t> seed_rank(seeds_.size());
        for (std::size_t r = 0; r < keyed.size(); ++r) {
            seed_rank[keyed[r].second] = r;
            auto& w = relabeled[keyed[r].second];
            g.seeds.push_back({w.cluster, w.coeffs, w.b});
        }
        std::set<std::pair<std::size_t, std::size_t>> es;
        for (auto [a, b] : edges_) {
            auto x = seed_rank[a], y = seed_rank[b];
            es.emplace(std::min(x, y), std::max(x, y));
        }
        g.edges.assign(es.begin(), es.end());
        std::set<ExchangeRelation> rels;
        for (auto r : relations_) {
            r.a = rank_of[r.a];
            r.b = rank_of[r.b];
            for (auto& t : r.terms)
                for (auto& v : t.vars) v.first = rank_of[v.first];
            r.normalize();
            rels.insert(std::move(r));
        }
        g.relations.assign(rels.begin(), rels.end());
        return g;
    }

    const Seed& s0_;
    std::size_t cap_;
    bool fast_;
    std::size_t n_, nv_;
    std::array<std::vector<std::uint64_t>, kPoints> points_;
    std::vector<Values> values_;
    std::unordered_map<Values, std::size_t, ValuesHash> by_value_;
    std::vector<LaurentPoly> vars_;
    std::unordered_map<LaurentPoly, std::size_t, LaurentHash> ids_;
    std::vector<Work> seeds_;
    std::unordered_map<std::string, std::size_t> seed_ids_;
    std::vector<std::pair<std::size_t, std::size_t>> edges_;
    std::unordered_map<std::string, std::size_t> memo_;
    std::set<ExchangeRelation> relations_;
    std::size_t divisions_ = 0;
};

} // namespace detail

// Cap from the CXC_SEED_CAP environment variable, else the default.
inline std::size_t default_seed_cap() {
    if (const char* env = std::getenv("CXC_SEED_CAP")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    }
    return kDefaultSeedCap;
}

// Breadth-first closure of s0 under all mutations.
inline ExchangeGraph explore(const Seed& s0, ExploreOptions opt) { return detail::Explorer(s0, opt).run(); }
inline ExchangeGraph explore(const Seed& s0, std::size_t cap = kDefaultSeedCap) { return explore(s0, ExploreOptions{cap, false}); }

// Pi(c)-labels of the variables of a principal-coefficient exploration.
inline std::vector<std::size_t> label_variables(const CoxeterData& cd, const Seed& s0, const ExchangeGraph& g) {
    std::vector<std::size_t> out;
    for (const auto& v : g.variables) {
        auto rec = extract_record(s0, v, &cd);
        out.push_back(cd.index(*rec.label));
    }
    return out;
}

// Relations rewritten from variable ids to Pi(c) indices.
inline std::vector<ExchangeRelation> relabel_relations(const ExchangeGraph& g, const std::vector<std::size_t>& label_of) {
    std::set<ExchangeRelation> out;
    for (auto r : g.relations) {
        r.a = label_of[r.a];
        r.b = label_of[r.b];
        for (auto& t : r.terms)
            for (auto& v : t.vars) v.first = label_of[v.first];
        r.normalize();
        out.insert(std::move(r));
    }
    return {out.begin(), out.end()};
}

inline std::vector<std::vector<std::size_t>> cluster_family(const ExchangeGraph& g, const std::vector<std::size_t>& label_of) {
    std::set<std::vector<std::size_t>> out;
    for (const auto& s : g.seeds) {
        std::vector<std::size_t> c;
        for (auto id : s.cluster) c.push_back(label_of[id]);
        std::sort(c.begin(), c.end());
        out.insert(std::move(c));
    }
    return {out.begin(), out.end()};
}

} // namespace cxc
