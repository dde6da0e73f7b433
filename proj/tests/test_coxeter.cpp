#include "cxc/coxeter.hpp"

#include <gtest/gtest.h>

using namespace cxc;

namespace {

CoxeterElement word(const CartanMatrix& m, std::vector<std::size_t> one_based) {
    for (auto& x : one_based) --x;
    return CoxeterElement(m, one_based);
}

CoxeterElement standard(const CartanMatrix& m) {
    std::vector<std::size_t> o(m.rank());
    std::iota(o.begin(), o.end(), 0);
    return CoxeterElement(m, o);
}

std::int64_t coxeter_number_table(const std::string& label) {
    char l = label[0];
    std::int64_t n = std::stoll(label.substr(1));
    switch (l) {
    case 'A': return n + 1;
    case 'B':
    case 'C': return 2 * n;
    case 'D': return 2 * n - 2;
    case 'E': return n == 6 ? 12 : n == 7 ? 18 : 30;
    case 'F': return 12;
    default: return 6;
    }
}

std::size_t binom(std::size_t n, std::size_t k) {
    std::size_t r = 1;
    for (std::size_t j = 1; j <= k; ++j) r = r * (n - k + j) / j;
    return r;
}

// Number of clusters per type.
std::size_t cluster_count_table(char l, std::size_t n) {
    switch (l) {
    case 'A': return binom(2 * n + 2, n + 1) / (n + 2);
    case 'B':
    case 'C': return binom(2 * n, n);
    case 'D': return (3 * n - 2) * binom(2 * n - 2, n - 1) / n;
    case 'E': return n == 6 ? 833 : n == 7 ? 4160 : 25080;
    case 'F': return 105;
    default: return 8;
    }
}

// -w0 as a permutation of the nodes.
std::vector<std::size_t> star_table(char l, std::size_t n) {
    std::vector<std::size_t> s(n);
    std::iota(s.begin(), s.end(), 0);
    if (l == 'A') std::reverse(s.begin(), s.end());
    if (l == 'D' && n % 2 == 1) std::swap(s[n - 2], s[n - 1]);
    if (l == 'E' && n == 6) {
        std::swap(s[0], s[5]);
        std::swap(s[2], s[4]);
    }
    return s;
}

// Maximal compatible subsets by scanning all subsets.
std::vector<std::vector<std::size_t>> brute_clusters(const CoxeterData& cd) {
    const std::size_t s = cd.size();
    std::vector<std::uint32_t> compatible;
    for (std::uint32_t mask = 0; mask < (1u << s); ++mask) {
        bool ok = true;
        for (std::size_t a = 0; a < s && ok; ++a)
            for (std::size_t b = 0; b < s && ok; ++b)
                if (a != b && (mask >> a & 1u) && (mask >> b & 1u)) ok = cd.compat(a, b) == 0;
        if (ok) compatible.push_back(mask);
    }
    std::vector<std::vector<std::size_t>> out;
    for (auto m : compatible) {
        bool maximal = true;
        for (auto o : compatible)
            if (o != m && (o & m) == m) maximal = false;
        if (!maximal) continue;
        std::vector<std::size_t> c;
        for (std::size_t a = 0; a < s; ++a)
            if (m >> a & 1u) c.push_back(a);
        out.push_back(c);
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

TEST(Coxeter, CanonicalOrdering) {
    auto a3 = cartan_from_label('A', 3);
    // s1 and s3 commute, so 3,1,2 and 1,3,2 are the same element
    EXPECT_EQ(word(a3, {3, 1, 2}), word(a3, {1, 3, 2}));
    EXPECT_EQ(word(a3, {3, 1, 2}).order(), (std::vector<std::size_t>{0, 2, 1}));
    EXPECT_NE(word(a3, {1, 2, 3}), word(a3, {2, 1, 3}));
    EXPECT_THROW(word(a3, {1, 1, 2}), CoxeterError);
    EXPECT_THROW(word(a3, {1, 2}), CoxeterError);
}

TEST(Coxeter, BMatrix) {
    auto a3 = cartan_from_label('A', 3);
    EXPECT_EQ(b_matrix(a3, standard(a3)), IntMatrix::from_rows({{0, 1, 0}, {-1, 0, 1}, {0, -1, 0}}));
    auto a2 = cartan_from_label('A', 2);
    EXPECT_EQ(b_matrix(a2, word(a2, {2, 1})), IntMatrix::from_rows({{0, -1}, {1, 0}}));
    auto a1 = cartan_from_label('A', 1);
    EXPECT_EQ(b_matrix(a1, standard(a1)), IntMatrix::from_rows({{0}}));
    // skew-symmetrizable with the Cartan symmetrizer
    for (const auto& m : finite_types_up_to(6))
        for (const auto& c : all_coxeter_elements(m)) {
            auto b = b_matrix(m, c);
            const auto& d = m.symmetrizer();
            for (std::size_t i = 0; i < m.rank(); ++i)
                for (std::size_t j = 0; j < m.rank(); ++j) EXPECT_EQ(d[i] * b(i, j), -d[j] * b(j, i));
        }
}

TEST(Coxeter, HVectorTypeAStandard) {
    for (int n = 1; n <= 8; ++n) {
        auto m = cartan_from_label('A', n);
        CoxeterData cd(m, standard(m));
        for (int k = 1; k <= n; ++k) EXPECT_EQ(cd.h(static_cast<std::size_t>(k - 1)), n + 1 - k);
    }
    auto a2 = cartan_from_label('A', 2);
    CoxeterData cd(a2, standard(a2));
    EXPECT_EQ(cd.star_vector(), (std::vector<std::size_t>{1, 0}));
}

TEST(Coxeter, CoxeterNumbersAndStar) {
    for (const auto& m : finite_types_up_to(8)) {
        const std::int64_t h = coxeter_number_table(m.label());
        const auto roots = static_cast<std::int64_t>(positive_roots(m).size());
        EXPECT_EQ(2 * roots, h * static_cast<std::int64_t>(m.rank())) << m.label();
        CoxeterData cd(m, CoxeterElement::bipartite(m));
        ASSERT_EQ(cd.coxeter_numbers().size(), 1u);
        EXPECT_EQ(cd.coxeter_numbers()[0], h) << m.label();
        EXPECT_EQ(cd.star_vector(), star_table(m.label()[0], m.rank())) << m.label();
        EXPECT_EQ(cd.size(), m.rank() * static_cast<std::size_t>(h + 2) / 2) << m.label();
    }
    CoxeterData g2(cartan_from_label('G', 2), standard(cartan_from_label('G', 2)));
    EXPECT_EQ(g2.coxeter_numbers()[0], 6);
}

TEST(Coxeter, ReducibleTypes) {
    auto m = parse_type_label("A2xB2");
    CoxeterData cd(m, CoxeterElement::bipartite(m));
    EXPECT_EQ(cd.coxeter_numbers(), (std::vector<std::int64_t>{3, 4}));
    EXPECT_EQ(cd.size(), 5u + 6u);
    for (std::size_t i = 0; i < 4; ++i) EXPECT_EQ(m.component_of(cd.star(i)), m.component_of(i));
    EXPECT_EQ(clusters(cd).size(), 5u * 6u);
}

TEST(Coxeter, HIdentitiesAllOrientations) {
    for (const auto& m : finite_types_up_to(6))
        for (const auto& c : all_coxeter_elements(m)) {
            CoxeterData cd(m, c);
            for (std::size_t i = 0; i < m.rank(); ++i) {
                EXPECT_EQ(cd.h(i) + cd.h(cd.star(i)), cd.coxeter_number_of(i));
                for (std::size_t j = 0; j < m.rank(); ++j) {
                    if (!cd.prec(i, j)) continue;
                    auto is = cd.star(i), js = cd.star(j);
                    ASSERT_TRUE(cd.prec(is, js) || cd.prec(js, is));
                    EXPECT_EQ(cd.h(i) - cd.h(j), cd.prec(js, is) ? 1 : 0);
                }
            }
        }
}

TEST(Coxeter, BipartiteHValues) {
    for (const auto& m : finite_types_up_to(8)) {
        CoxeterData cd(m, CoxeterElement::bipartite(m));
        auto eps = bipartition(m);
        auto h = cd.coxeter_numbers()[0];
        for (std::size_t i = 0; i < m.rank(); ++i) EXPECT_EQ(cd.h(i), eps[i] > 0 ? (h + 1) / 2 : h / 2) << m.label();
    }
}

TEST(Coxeter, BetaRoots) {
    auto a2 = cartan_from_label('A', 2);
    CoxeterData cd(a2, standard(a2));
    EXPECT_EQ(cd.betas()[0], (Root{1, 0}));
    EXPECT_EQ(cd.betas()[1], (Root{1, 1}));
    EXPECT_EQ(cd.betas()[1] + a2(0, 1) * cd.betas()[0], (Root{0, 1}));
    // beta_i are exactly the positive roots made negative by c^{-1}
    for (const auto& m : finite_types_up_to(5))
        for (const auto& c : all_coxeter_elements(m)) {
            CoxeterData d(m, c);
            std::set<Root> want;
            for (const auto& r : positive_roots(m))
                if (!apply_coxeter_inverse(m, c, r).nonnegative()) want.insert(r);
            EXPECT_EQ(std::set<Root>(d.betas().begin(), d.betas().end()), want);
        }
}

TEST(Coxeter, PiSetA2) {
    auto a2 = cartan_from_label('A', 2);
    CoxeterData cd(a2, standard(a2));
    std::vector<Weight> want{{1, 0}, {-1, 1}, {0, -1}, {0, 1}, {-1, 0}};
    ASSERT_EQ(cd.size(), 5u);
    for (std::size_t k = 0; k < 5; ++k) EXPECT_EQ(cd.weight(k), want[k]);
}

TEST(Coxeter, TauCycleA2) {
    auto a2 = cartan_from_label('A', 2);
    CoxeterData cd(a2, standard(a2));
    std::vector<PiLabel> cycle{{0, 0}, {0, 1}, {0, 2}, {1, 0}, {1, 1}};
    for (std::size_t k = 0; k < 5; ++k) EXPECT_EQ(cd.label(cd.tau(cd.index(cycle[k]))), cycle[(k + 1) % 5]);
    for (std::size_t k = 0; k < cd.size(); ++k) EXPECT_EQ(cd.tau(cd.tau_inv(k)), k);
}

TEST(Coxeter, CompatibilityA2) {
    auto a2 = cartan_from_label('A', 2);
    CoxeterData cd(a2, standard(a2));
    EXPECT_EQ(cd.compat(cd.index(0, 0), cd.index(1, 1)), 1);
    EXPECT_EQ(cd.compat(cd.index(0, 1), cd.index(0, 0)), 1);
    EXPECT_EQ(cd.compat(cd.index(0, 0), cd.index(1, 0)), 0);
    for (std::size_t k = 0; k < cd.size(); ++k) EXPECT_EQ(cd.compat(k, k), 0);
}

TEST(Coxeter, CompatibilityDirectionsAgree) {
    for (const auto& m : finite_types_up_to(5))
        for (const auto& c : all_coxeter_elements(m)) {
            CoxeterData cd(m, c);
            for (std::size_t g = 0; g < cd.size(); ++g)
                for (std::size_t d = 0; d < cd.size(); ++d) {
                    EXPECT_EQ(cd.compat_backward(g, d), cd.compat(g, d));
                    EXPECT_EQ(cd.compat(g, d) == 0, cd.compat(d, g) == 0);
                }
        }
}

TEST(Coxeter, ClustersAgainstBruteForceAndCounts) {
    for (const auto& m : finite_types_up_to(3))
        for (const auto& c : all_coxeter_elements(m)) {
            CoxeterData cd(m, c);
            EXPECT_EQ(clusters(cd), brute_clusters(cd)) << m.label();
        }
    for (const auto& m : finite_types_up_to(6)) {
        CoxeterData cd(m, CoxeterElement::bipartite(m));
        EXPECT_EQ(clusters(cd).size(), cluster_count_table(m.label()[0], m.rank())) << m.label();
    }
    auto a3 = cartan_from_label('A', 3);
    CoxeterData cd(a3, standard(a3));
    auto cls = clusters(cd);
    EXPECT_EQ(cls.size(), 14u);
    std::vector<std::size_t> initial{cd.index(0, 0), cd.index(1, 0), cd.index(2, 0)};
    std::sort(initial.begin(), initial.end());
    EXPECT_TRUE(std::binary_search(cls.begin(), cls.end(), initial));
}

TEST(Coxeter, MoveGraph) {
    auto a2 = cartan_from_label('A', 2);
    EXPECT_EQ(move_graph(a2).nodes.size(), 2u);
    EXPECT_TRUE(move_graph(a2).connected);
    for (const auto& m : finite_types_up_to(8)) {
        auto g = move_graph(m);
        EXPECT_EQ(g.nodes.size(), std::size_t{1} << (m.rank() - 1)) << m.label();
        EXPECT_TRUE(g.connected) << m.label();
    }
    auto a3 = cartan_from_label('A', 3);
    EXPECT_EQ(cyclical_move(a3, standard(a3)), word(a3, {2, 3, 1}));
    EXPECT_THROW(cyclical_move(a3, standard(a3), 1), CoxeterError);
}

TEST(Coxeter, PsiMove) {
    auto a3 = cartan_from_label('A', 3);
    auto c = standard(a3);
    CoxeterData cd(a3, c), ct(a3, cyclical_move(a3, c, 0));
    EXPECT_EQ(psi_move(cd, ct, 0, ct.index(0, 0)), cd.index(0, 1));
    EXPECT_EQ(psi_move(cd, ct, 0, ct.index(1, 0)), cd.index(1, 0));
    EXPECT_EQ(psi_move(cd, ct, 0, ct.index(2, 0)), cd.index(2, 0));
    std::set<std::size_t> img;
    for (std::size_t k = 0; k < ct.size(); ++k) {
        img.insert(psi_move(cd, ct, 0, k));
        EXPECT_EQ(psi_move(cd, ct, 0, ct.tau(k)), cd.tau(psi_move(cd, ct, 0, k)));
    }
    EXPECT_EQ(img.size(), cd.size());
    EXPECT_THROW(psi_move(ct, cd, 0, 0), CoxeterError);
}

TEST(Coxeter, PsiBipartite) {
    auto a2 = cartan_from_label('A', 2);
    CoxeterData cd(a2, CoxeterElement::bipartite(a2));
    EXPECT_EQ(psi_bipartite(cd, cd.index(0, 0)), (Root{-1, 0}));
    EXPECT_EQ(psi_bipartite(cd, cd.index(0, 1)), (Root{1, 0}));
    EXPECT_EQ(root_compat(a2, Root{-1, 0}, Root{1, 0}), 1);
    EXPECT_EQ(root_compat(a2, Root{-1, 0}, Root{0, 1}), 0);
    auto a3 = cartan_from_label('A', 3);
    CoxeterData std3(a3, word(a3, {1, 2, 3}));
    EXPECT_THROW(psi_bipartite(std3, 0), CoxeterError);
    for (const auto& m : finite_types_up_to(5)) {
        CoxeterData t(m, CoxeterElement::bipartite(m));
        std::set<Root> almost_positive;
        for (std::size_t k = 0; k < t.size(); ++k) almost_positive.insert(psi_bipartite(t, k));
        std::set<Root> want;
        for (const auto& r : positive_roots(m)) want.insert(r);
        for (std::size_t i = 0; i < m.rank(); ++i) want.insert(-Root::unit(m.rank(), i));
        EXPECT_EQ(almost_positive, want) << m.label();
        for (std::size_t g = 0; g < t.size(); ++g)
            for (std::size_t d = 0; d < t.size(); ++d)
                EXPECT_EQ(t.compat(g, d), root_compat(m, psi_bipartite(t, g), psi_bipartite(t, d))) << m.label();
    }
}

TEST(Coxeter, Duality) {
    for (const char* l : {"B3", "C3", "F4", "G2"}) {
        auto m = parse_type_label(l);
        auto mt = m.transpose();
        for (const auto& c : all_coxeter_elements(m)) {
            CoxeterData a(m, c), t(mt, CoxeterElement(mt, c.order()));
            ASSERT_EQ(a.h_vector(), t.h_vector());
            for (std::size_t g = 0; g < a.size(); ++g)
                for (std::size_t d = 0; d < a.size(); ++d) EXPECT_EQ(a.compat(g, d), t.compat(d, g)) << l;
        }
    }
    // the choice of A versus A^T is visible: G2 compatibility is not symmetric
    auto g2 = cartan_from_label('G', 2);
    CoxeterData cd(g2, CoxeterElement::bipartite(g2));
    bool asym = false;
    for (std::size_t g = 0; g < cd.size(); ++g)
        for (std::size_t d = 0; d < cd.size(); ++d) asym = asym || cd.compat(g, d) != cd.compat(d, g);
    EXPECT_TRUE(asym);
}

TEST(Coxeter, PrimitiveRelationsA2) {
    auto a2 = cartan_from_label('A', 2);
    CoxeterData cd(a2, standard(a2));
    auto rels = primitive_relations(cd);
    // one per label with m >= 1 plus one -omega_k/omega_k per k
    EXPECT_EQ(rels.size(), 5u);
    ExchangeRelation want;
    want.a = cd.index(0, 0);
    want.b = cd.index(0, 1);
    RelationTerm mono, cons;
    mono.vars = {{cd.index(1, 0), 1}};
    mono.coef = {0, 0};
    cons.coef = {1, 0};
    want.terms = {mono, cons};
    want.normalize();
    EXPECT_TRUE(std::find(rels.begin(), rels.end(), want) != rels.end());
    for (const auto& r : rels) EXPECT_TRUE(r.primitive());
}

TEST(Coxeter, PrimitiveConstantTermIsDenominator) {
    for (const auto& m : finite_types_up_to(4))
        for (const auto& c : all_coxeter_elements(m)) {
            CoxeterData cd(m, c);
            for (const auto& r : primitive_relations(cd)) {
                if (cd.label(r.a).i != cd.label(r.b).i || cd.label(r.a).m + 1 != cd.label(r.b).m) continue;
                auto k = r.b;
                bool found = false;
                for (const auto& t : r.terms)
                    if (t.vars.empty()) found = found || t.coef == cd.denom(k).c;
                EXPECT_TRUE(found);
            }
        }
}
