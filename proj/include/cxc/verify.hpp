#pragma once

#include "typea.hpp"

#include <random>

namespace cxc {

struct CheckResult {
    std::string suite;
    std::string instance;
    bool ok = false;
    std::string expected;
    std::string actual;
};

class Report {
public:
    void add(std::string suite, std::string instance, bool ok, std::string expected = {}, std::string actual = {}) {
        results_.push_back({std::move(suite), std::move(instance), ok, std::move(expected), std::move(actual)});
    }
    template <class A, class B>
    void expect_eq(const std::string& suite, const std::string& instance, const A& expected, const B& actual) {
        std::ostringstream e, a;
        e << expected;
        a << actual;
        add(suite, instance, expected == actual, e.str(), a.str());
    }
    // Runs body, turning any exception except CapExceeded into a failed entry.
    template <class F>
    void guard(const std::string& suite, const std::string& instance, F body) {
        try {
            body();
        } catch (const CapExceeded&) {
            throw;
        } catch (const std::exception& e) {
            add(suite, instance, false, "no error", e.what());
        }
    }
    void merge(const Report& o) { results_.insert(results_.end(), o.results_.begin(), o.results_.end()); }

    const std::vector<CheckResult>& results() const { return results_; }
    std::size_t failures() const {
        return static_cast<std::size_t>(std::count_if(results_.begin(), results_.end(), [](const CheckResult& r) { return !r.ok; }));
    }
    bool ok() const { return !results_.empty() && failures() == 0; }

private:
    std::vector<CheckResult> results_;
};

inline std::string describe(const CoxeterElement& c) {
    std::string s;
    for (auto i : c.order()) s += (s.empty() ? "" : ",") + std::to_string(i + 1);
    return s;
}

inline std::string instance_name(const CartanMatrix& m, const CoxeterElement& c) {
    return (m.label().empty() ? std::string("matrix") : m.label()) + " c=" + describe(c);
}

template <class T>
std::string join(const std::vector<T>& v) {
    std::ostringstream os;
    os << '[';
    for (std::size_t k = 0; k < v.size(); ++k) os << (k ? "," : "") << v[k];
    os << ']';
    return os.str();
}

namespace suites {

inline void cartan(Report& rep, const CartanMatrix& m) {
    const std::string inst = m.label().empty() ? "matrix" : m.label();
    const std::size_t n = m.rank();
    const auto& d = m.symmetrizer();
    bool sym = true;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) sym = sym && d[i] * m(i, j) == d[j] * m(j, i);
    rep.add("cartan.symmetrizer", inst, sym, "d_i a_ij = d_j a_ji", sym ? "holds" : "violated");
    bool posdef = true;
    for (std::size_t k = 1; k <= n; ++k) {
        std::vector<std::vector<Rational>> s(k, std::vector<Rational>(k));
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) s[i][j] = Rational(d[i] * m(i, j));
        posdef = posdef && determinant(s) > 0;
    }
    rep.add("cartan.positive_definite", inst, posdef, "leading minors > 0", posdef ? "all positive" : "nonpositive minor");
    auto eps = bipartition(m);
    bool proper = true;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (m.adjacent(i, j)) proper = proper && eps[i] * eps[j] == -1;
    rep.add("cartan.bipartition", inst, proper, "proper 2-colouring", proper ? "proper" : "improper");
}

inline void weyl(Report& rep, const CartanMatrix& m) {
    const std::string inst = m.label().empty() ? "matrix" : m.label();
    const std::size_t n = m.rank();
    std::mt19937_64 rng(n * 7919 + 17);
    bool inv = true;
    for (int trial = 0; trial < 20; ++trial) {
        Root r(n);
        Weight w(n);
        for (std::size_t k = 0; k < n; ++k) {
            r[k] = static_cast<std::int64_t>(rng() % 11) - 5;
            w[k] = static_cast<std::int64_t>(rng() % 11) - 5;
        }
        for (std::size_t i = 0; i < n; ++i)
            inv = inv && reflect(m, i, reflect(m, i, r)) == r && reflect(m, i, reflect(m, i, w)) == w;
    }
    rep.add("weyl.involution", inst, inv, "s_i^2 = 1", inv ? "holds" : "violated");
    bool coords = true;
    auto roots = positive_roots(m);
    for (const auto& r : roots) {
        auto back = weight_to_root_coords(m, root_to_weight_coords(m, r));
        coords = coords && back.integral() && back.to_root() == r;
    }
    rep.add("weyl.coordinates", inst, coords, "round trip on roots", coords ? "identity" : "mismatch");
}

// Statements about a single Coxeter element that need no cluster algebra.
// full = false stops after the chain, h-vector, Pi(c) and tau checks.
inline void coxeter(Report& rep, const CoxeterData& cd, bool full = true) {
    const auto& m = cd.cartan();
    const auto& c = cd.element();
    const std::size_t n = cd.rank();
    const std::string inst = instance_name(m, c);

    bool chain = true;
    for (std::size_t k = 0; k < cd.size(); ++k) {
        const auto& l = cd.label(k);
        if (l.m == 0) continue;
        Root diff = weight_to_root_coords(m, cd.weight(k - 1) - cd.weight(k)).to_root();
        chain = chain && diff.nonnegative() && !diff.is_zero() && apply_coxeter(m, c, cd.weight(k - 1)) == cd.weight(k);
    }
    for (std::size_t i = 0; i < n; ++i) chain = chain && cd.weight(cd.index(i, cd.h(i))) == -Weight::unit(n, cd.star(i));
    rep.add("coxeter.chain", inst, chain, "strictly decreasing to -omega_{i*}", chain ? "holds" : "violated");

    bool diff_rule = true;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (!cd.prec(i, j)) continue;
            std::size_t is = cd.star(i), js = cd.star(j);
            std::int64_t want = cd.prec(js, is) ? 1 : 0;
            if (!cd.prec(js, is) && !cd.prec(is, js)) diff_rule = false;
            diff_rule = diff_rule && cd.h(i) - cd.h(j) == want;
        }
    rep.add("coxeter.h_difference", inst, diff_rule, "h(i)-h(j) = [j* < i*]", diff_rule ? "holds" : "violated");

    bool sum = true;
    for (std::size_t i = 0; i < n; ++i) sum = sum && cd.h(i) + cd.h(cd.star(i)) == cd.coxeter_number_of(i);
    rep.add("coxeter.h_sum", inst, sum, "h(i)+h(i*) = h", sum ? "holds" : "violated");

    std::size_t expect_size = 0;
    for (std::size_t comp = 0; comp < m.components().size(); ++comp) {
        auto nc = static_cast<std::size_t>(m.components()[comp].size());
        expect_size += nc * static_cast<std::size_t>(cd.coxeter_numbers()[comp] + 2) / 2;
    }
    rep.expect_eq("coxeter.pi_size", inst, expect_size, cd.size());

    bool tele = true;
    for (std::size_t j = 0; j < n; ++j) {
        Root s = cd.betas()[j];
        for (std::size_t i = 0; i < n; ++i)
            if (cd.prec(i, j)) s += m(i, j) * cd.betas()[i];
        tele = tele && s == Root::unit(n, j) && cd.betas()[j].nonnegative();
    }
    rep.add("coxeter.beta_telescoping", inst, tele, "beta_j + sum a_ij beta_i = alpha_j", tele ? "holds" : "violated");

    bool tau = true;
    std::set<std::size_t> image;
    for (std::size_t k = 0; k < cd.size(); ++k) {
        tau = tau && cd.tau_inv(cd.tau(k)) == k;
        image.insert(cd.tau(k));
    }
    tau = tau && image.size() == cd.size();
    rep.add("coxeter.tau_bijection", inst, tau, "tau_c bijective", tau ? "bijective" : "not bijective");
    if (!full) return;

    bool zero_sym = true, backward = true, nonneg = true;
    for (std::size_t g = 0; g < cd.size(); ++g)
        for (std::size_t d = 0; d < cd.size(); ++d) {
            zero_sym = zero_sym && (cd.compat(g, d) == 0) == (cd.compat(d, g) == 0);
            backward = backward && cd.compat_backward(g, d) == cd.compat(g, d);
            nonneg = nonneg && cd.compat(g, d) >= 0;
        }
    rep.add("coxeter.compat_zero_symmetric", inst, zero_sym, "(g||d)=0 <=> (d||g)=0", zero_sym ? "holds" : "violated");
    rep.add("coxeter.compat_nonnegative", inst, nonneg, ">= 0", nonneg ? "holds" : "negative value");
    rep.add("coxeter.compat_direction", inst, backward, "tau_c and tau_c^{-1} reductions agree", backward ? "agree" : "differ");

    if (n <= 4) {
        // each <c>-orbit on the roots has one beta_i and one -c^{-1} beta_i.
        auto pos = positive_roots(m);
        std::set<Root> all(pos.begin(), pos.end());
        for (const auto& r : pos) all.insert(-r);
        std::set<Root> seen;
        bool orbit_ok = true;
        std::set<Root> betas(cd.betas().begin(), cd.betas().end()), neg;
        for (const auto& b : cd.betas()) neg.insert(-apply_coxeter_inverse(m, c, b));
        for (const auto& r : all) {
            if (seen.count(r)) continue;
            int nb = 0, nn = 0;
            Root x = r;
            do {
                seen.insert(x);
                nb += static_cast<int>(betas.count(x));
                nn += static_cast<int>(neg.count(x));
                x = apply_coxeter(m, c, x);
            } while (x != r);
            orbit_ok = orbit_ok && nb == 1 && nn == 1;
        }
        rep.add("coxeter.orbits", inst, orbit_ok, "one beta and one -c^{-1}beta per orbit", orbit_ok ? "holds" : "violated");

        bool lemma = true;
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t g = 0; g < cd.size(); ++g) {
                std::int64_t lhs = cd.compat(g, cd.index(j, 1)), rhs = cd.compat(g, cd.index(j, 0));
                for (std::size_t i = 0; i < n; ++i) {
                    if (cd.prec(i, j)) lhs += m(i, j) * cd.compat(g, cd.index(i, 1));
                    if (cd.prec(j, i)) rhs += m(i, j) * cd.compat(g, cd.index(i, 0));
                }
                rhs = -rhs;
                if (g == cd.index(j, 0)) lemma = lemma && lhs == 1 && rhs == 0;
                else if (g == cd.index(j, 1)) lemma = lemma && lhs == 0 && rhs == -1;
                else lemma = lemma && lhs == rhs;
            }
        rep.add("coxeter.compat_linear_identity", inst, lemma, "identity with exceptional values", lemma ? "holds" : "violated");
    }

    if (is_bipartite(cd) && n <= 6) {
        bool oracle = true;
        std::set<Root> images;
        for (std::size_t g = 0; g < cd.size(); ++g) {
            images.insert(psi_bipartite(cd, g));
            for (std::size_t d = 0; d < cd.size(); ++d)
                oracle = oracle && cd.compat(g, d) == root_compat(m, psi_bipartite(cd, g), psi_bipartite(cd, d));
        }
        oracle = oracle && images.size() == cd.size();
        rep.add("coxeter.bipartite_oracle", inst, oracle, "(g||d)_t = (psi g||psi d)", oracle ? "holds" : "violated");
    }

    for (std::size_t i = 0; i < n; ++i) {
        if (!is_source(m, c, i)) continue;
        CoxeterData ct(m, cyclical_move(m, c, i));
        bool hmove = true;
        for (std::size_t j = 0; j < n; ++j) {
            std::int64_t want = cd.h(j);
            if (j == i && cd.star(j) != i) want -= 1;
            if (j != i && cd.star(j) == i) want += 1;
            hmove = hmove && ct.h(j) == want;
        }
        const std::string mi = inst + " move " + std::to_string(i + 1);
        rep.add("coxeter.h_move_rule", mi, hmove, "h(i;c~) per the three cases", hmove ? "holds" : "violated");
        bool transport = true;
        std::set<std::size_t> img;
        for (std::size_t g = 0; g < ct.size(); ++g) {
            img.insert(psi_move(cd, ct, i, g));
            transport = transport && psi_move(cd, ct, i, ct.tau(g)) == cd.tau(psi_move(cd, ct, i, g));
            for (std::size_t d = 0; d < ct.size(); ++d)
                transport = transport && ct.compat(g, d) == cd.compat(psi_move(cd, ct, i, g), psi_move(cd, ct, i, d));
        }
        transport = transport && img.size() == cd.size();
        rep.add("coxeter.move_transport", mi, transport, "psi bijective, tau-equivariant, compat preserved", transport ? "holds" : "violated");
    }
}

// Orientation sweep statements for one Cartan matrix.
inline void orientations(Report& rep, const CartanMatrix& m) {
    const std::string inst = m.label().empty() ? "matrix" : m.label();
    auto g = move_graph(m);
    rep.add("coxeter.move_graph", inst, g.connected, "connected", g.connected ? "connected" : "disconnected");
    CoxeterData t(m, CoxeterElement::bipartite(m));
    auto eps = bipartition(m);
    bool values = true;
    for (std::size_t i = 0; i < m.rank(); ++i) {
        auto h = t.coxeter_number_of(i);
        values = values && t.h(i) == (eps[i] < 0 ? h / 2 : (h + 1) / 2);
    }
    rep.add("coxeter.bipartite_h", inst, values, "floor/ceil of h/2", join(t.h_vector()));
}

// Label-level duality between A and its transpose.
inline void duality(Report& rep, const CartanMatrix& m, const CoxeterElement& c) {
    auto mt = m.transpose();
    CoxeterData a(m, c), t(mt, CoxeterElement(mt, c.order()));
    bool ok = a.h_vector() == t.h_vector();
    if (ok)
        for (std::size_t g = 0; g < a.size(); ++g)
            for (std::size_t d = 0; d < a.size(); ++d) ok = ok && a.compat(g, d) == t.compat(d, g);
    rep.add("coxeter.duality", instance_name(m, c), ok, "(g||d)_A = (d||g)_{A^T}", ok ? "holds" : "violated");
}

struct AlgebraOptions {
    std::size_t cap = kDefaultSeedCap;
    bool evaluation = false;
    bool universal = false;
};

// Principal-coefficient exploration checked against Pi(c), denominators, relations and clusters.
inline void algebra(Report& rep, const CoxeterData& cd, const AlgebraOptions& opt) {
    const auto& m = cd.cartan();
    const auto& c = cd.element();
    const std::size_t n = cd.rank();
    const std::string inst = instance_name(m, c);
    const Seed s0 = principal_seed(cd);
    ExchangeGraph g;
    try {
        g = explore(s0, ExploreOptions{opt.cap, opt.evaluation});
    } catch (const NonExactDivision& e) {
        rep.add("algebra.laurent", inst, false, "exact division", e.what());
        return;
    }
    rep.add("algebra.laurent", inst, true, "exact division", std::to_string(g.divisions) + " divisions");
    rep.expect_eq("algebra.variable_count", inst, cd.size(), g.variables.size());

    std::vector<std::size_t> label_of;
    std::vector<ClusterVariableRecord> recs;
    bool graded = true;
    for (const auto& z : g.variables) {
        try {
            recs.push_back(extract_record(s0, z, &cd));
            label_of.push_back(cd.index(*recs.back().label));
        } catch (const ExtractionError& e) {
            graded = false;
            rep.add("algebra.g_vectors", inst, false, "g-vector in Pi(c)", e.what());
        }
    }
    if (!graded) return;
    std::set<std::size_t> distinct(label_of.begin(), label_of.end());
    rep.add("algebra.g_vectors", inst, distinct.size() == cd.size() && label_of.size() == cd.size(), std::to_string(cd.size()) + " weights of Pi(c)",
            std::to_string(distinct.size()) + " distinct");

    auto fam = cluster_family(g, label_of);
    std::vector<std::vector<char>> together(cd.size(), std::vector<char>(cd.size(), 0));
    for (const auto& cl : fam)
        for (auto a : cl)
            for (auto b : cl) together[a][b] = 1;
    bool denoms = true, fconst = true;
    std::size_t bad_denom = 0;
    for (std::size_t v = 0; v < recs.size(); ++v) {
        const auto k = label_of[v];
        const auto& r = recs[v];
        fconst = fconst && r.fpoly.coefficient(Monomial{}) == 1;
        if (cd.fundamental(k)) {
            denoms = denoms && r.denom == -Root::unit(n, cd.label(k).i);
            continue;
        }
        const auto& gamma = cd.weight(k);
        auto want = weight_to_root_coords(m, apply_coxeter_inverse(m, c, gamma) - gamma);
        bool ok = want.integral() && want.to_root() == r.denom && r.denom.nonnegative();
        for (std::size_t i = 0; i < n; ++i) ok = ok && (r.denom[i] == 0) == (together[k][cd.index(i, 0)] != 0);
        if (!ok) ++bad_denom;
        denoms = denoms && ok;
    }
    rep.add("algebra.denominators", inst, denoms, "c^{-1}g - g, zero iff compatible with x_{omega_i}",
            std::to_string(bad_denom) + " mismatches");
    rep.add("algebra.f_constant_term", inst, fconst, "constant term 1", fconst ? "all 1" : "violated");

    auto rels = relabel_relations(g, label_of);
    std::vector<ExchangeRelation> prim;
    for (const auto& r : rels)
        if (r.primitive()) prim.push_back(r);
    auto want_prim = primitive_relations(cd);
    rep.add("algebra.primitive_relations", inst, prim == want_prim, std::to_string(want_prim.size()) + " closed-form relations",
            std::to_string(prim.size()) + " harvested" + (prim == want_prim ? "" : ", not equal"));

    auto cls = clusters(cd);
    rep.add("algebra.clusters", inst, cls == fam, std::to_string(cls.size()) + " compatible sets",
            std::to_string(fam.size()) + " explored clusters");

    for (std::size_t i = 0; i < n; ++i) {
        if (!is_source(m, c, i)) continue;
        auto iso = verify_move_isomorphism(cd, i);
        rep.add("algebra.move_isomorphism", inst + " move " + std::to_string(i + 1), iso.ok(), "matrix, coefficients, variable",
                std::string(iso.matrix ? "" : "matrix ") + (iso.coefficients ? "" : "coefficients ") + (iso.variable ? "" : "variable ") +
                    (iso.ok() ? "match" : "differ"));
    }

    if (n <= 6) {
        std::mt19937_64 rng(1000 + n);
        Seed s = s0;
        bool invol = true;
        for (int step = 0; step < 6; ++step) {
            std::size_t k = rng() % n;
            Seed t = mutate(s, k);
            invol = invol && mutate(t, k) == s;
            for (std::size_t i = 0; i < n; ++i) invol = invol && t.b(i, k) == -s.b(i, k) && t.b(k, i) == -s.b(k, i);
            s = std::move(t);
        }
        rep.add("algebra.mutation_involution", inst, invol, "mu_k mu_k = id, column k negated", invol ? "holds" : "violated");
    }

    if (!opt.universal) return;
    const Seed su = universal_seed(cd);
    auto gu = explore(su, ExploreOptions{opt.cap, opt.evaluation});
    auto phi = universal_to_principal(cd);
    std::vector<std::size_t> ulabel, uprincipal;
    bool mapped = true;
    for (const auto& z : gu.variables) {
        auto sp = specialize_poly(z, n, phi);
        auto idx = g.variable_index(sp);
        if (!idx) {
            mapped = false;
            break;
        }
        uprincipal.push_back(*idx);
        ulabel.push_back(label_of[*idx]);
    }
    if (!mapped) {
        rep.add("universal.specialization", inst, false, "every universal variable specializes to a principal one", "unmatched variable");
        return;
    }
    std::set<std::string> want_keys, got_keys;
    auto key = [](const std::vector<std::size_t>& ids, const std::vector<TropMonomial>& y, const IntMatrix& b) {
        std::ostringstream os;
        os << join(ids) << '|';
        for (const auto& t : y) os << join(t.e);
        os << '|' << join(b.data());
        return os.str();
    };
    for (const auto& s : g.seeds) want_keys.insert(key(s.cluster, s.coeffs, s.b));
    for (const auto& s : gu.seeds) {
        std::vector<std::size_t> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::sort(perm.begin(), perm.end(), [&](auto a, auto b) { return uprincipal[s.cluster[a]] < uprincipal[s.cluster[b]]; });
        std::vector<std::size_t> ids;
        std::vector<TropMonomial> ys;
        IntMatrix b(n, n);
        for (std::size_t a = 0; a < n; ++a) {
            ids.push_back(uprincipal[s.cluster[perm[a]]]);
            ys.push_back(phi.apply(s.coeffs[perm[a]]));
            for (std::size_t q = 0; q < n; ++q) b(a, q) = s.b(perm[a], perm[q]);
        }
        got_keys.insert(key(ids, ys, b));
    }
    bool onto = got_keys == want_keys && gu.seeds.size() == g.seeds.size();
    rep.add("universal.specialization", inst, onto, std::to_string(g.seeds.size()) + " principal seeds",
            std::to_string(got_keys.size()) + " images of " + std::to_string(gu.seeds.size()) + " universal seeds");
    std::vector<ExchangeRelation> uprim;
    for (const auto& r : relabel_relations(gu, ulabel))
        if (r.primitive()) uprim.push_back(r);
    auto want_u = universal_primitive_relations(cd);
    rep.add("universal.primitive_relations", inst, uprim == want_u, std::to_string(want_u.size()) + " relations with compatibility exponents",
            std::to_string(uprim.size()) + " harvested" + (uprim == want_u ? "" : ", not equal"));
}

inline std::size_t catalan(std::size_t k) {
    Integer c = 1;
    for (std::size_t j = 0; j < k; ++j) c = c * 2 * (2 * j + 1) / (j + 2);
    return static_cast<std::size_t>(c);
}

inline void typea(Report& rep, std::size_t n, std::size_t cap = kDefaultSeedCap) {
    using namespace cxc::typea;
    const std::string inst = "A" + std::to_string(n);
    const std::size_t nv = ring_vars(n);
    auto mat = sym_tri_matrix(n);
    const long top = static_cast<long>(n) + 1;

    if (n <= 6) {
        bool minors = true;
        for (long i = 1; i <= top; ++i)
            for (long j = i; j <= top; ++j) {
                auto idx = range0(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
                minors = minors && interval_minor(n, i, j) == minor(mat, idx, idx, nv);
            }
        rep.add("typea.interval_minor", inst, minors, "recurrence = determinant", minors ? "equal" : "differ");
    }
    bool prod = true, rec = true;
    for (std::size_t k = 1; k <= n; ++k) {
        LaurentPoly ys = one(nv);
        for (std::size_t s = 1; s <= k; ++s) ys *= y(n, s);
        prod = prod && minor(mat, range0(1, k), range0(2, k + 1), nv) == ys && minor(mat, range0(2, k + 1), range0(1, k), nv) == one(nv);
        long kk = static_cast<long>(k);
        rec = rec && interval_minor(n, 1, kk + 1) == v(n, k + 1) * interval_minor(n, 1, kk) - y(n, k) * interval_minor(n, 1, kk - 1);
    }
    rep.add("typea.product_minors", inst, prod, "y_1..y_k and 1", prod ? "holds" : "violated");
    rep.add("typea.recurrence", inst, rec, "x_[1,k+1] = v x_[1,k] - y x_[1,k-1]", rec ? "holds" : "violated");

    auto rel = verify_interval_relations(n);
    rep.add("typea.relations", inst, rel.ok(), std::to_string(rel.relations) + " relations",
            std::to_string(rel.identity_failures) + " identity failures, " + std::to_string(rel.reduced_failures) + " failures with det = 1");

    auto cd = standard_data(n);
    auto s0 = principal_seed(cd);
    auto g = explore(s0, cap);
    auto mr = verify_variables_are_minors(n, g, cd);
    rep.add("typea.variables_are_minors", inst, mr.ok(n), std::to_string((n + 1) * (n + 2) / 2 - 1) + " interval minors",
            std::to_string(mr.intervals.size()) + " intervals, " + std::to_string(mr.mismatches) + " mismatches");
    rep.expect_eq("typea.cluster_count", inst, catalan(n + 1), g.seeds.size());

    bool fp = true;
    for (const auto& z : g.variables) {
        auto r = extract_record(s0, z, &cd);
        fp = fp && f_poly_via_matrix(n, *r.label) == r.fpoly && r.fpoly == f_poly_closed_form(n, *r.label);
    }
    rep.add("typea.f_polynomials", inst, fp, "matrix minor = engine = closed form", fp ? "equal" : "differ");

    bool diag = true;
    std::set<Diagonal> seen;
    for (const auto& l : cd.labels()) {
        auto d = diagonal_of_label(l);
        seen.insert(d);
        diag = diag && !is_side(n, d) && label_of_diagonal(n, d) == std::optional<PiLabel>(l);
        if (l.m == 0) diag = diag && d.a == 1;
    }
    diag = diag && seen.size() == all_diagonals(n).size();
    rep.add("typea.diagonals", inst, diag, "bijection with diagonals", diag ? "bijective" : "not bijective");

    if (n <= 4) {
        auto pr = verify_polygon_rule(n);
        rep.add("typea.polygon_rule", inst, pr.ok(), std::to_string(pr.relations) + " universal relations",
                std::to_string(pr.mismatches) + " mismatches");
    }
}

} // namespace suites

struct VerifyOptions {
    suites::AlgebraOptions algebra;
    bool with_algebra = true;
};

// Everything that applies to (m, c).
inline Report verify_element(const CartanMatrix& m, const CoxeterElement& c, const VerifyOptions& opt) {
    Report rep;
    const std::string inst = instance_name(m, c);
    std::optional<CoxeterData> cd;
    rep.guard("coxeter.data", inst, [&] { cd.emplace(m, c); });
    if (!cd) return rep;
    rep.guard("coxeter", inst, [&] { suites::coxeter(rep, *cd); });
    if (!(m.matrix() == m.matrix().transpose())) rep.guard("coxeter.duality", inst, [&] { suites::duality(rep, m, c); });
    if (opt.with_algebra) rep.guard("algebra", inst, [&] { suites::algebra(rep, *cd, opt.algebra); });
    return rep;
}

inline Report verify_type(const CartanMatrix& m, const std::vector<CoxeterElement>& elements, const VerifyOptions& opt) {
    Report rep;
    const std::string inst = m.label().empty() ? "matrix" : m.label();
    rep.guard("cartan", inst, [&] { suites::cartan(rep, m); });
    rep.guard("weyl", inst, [&] { suites::weyl(rep, m); });
    rep.guard("coxeter.orientations", inst, [&] { suites::orientations(rep, m); });
    for (const auto& c : elements) rep.merge(verify_element(m, c, opt));
    return rep;
}

} // namespace cxc
