#include "cxc/explore.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace cxc;

namespace {

CoxeterElement standard(const CartanMatrix& m) {
    std::vector<std::size_t> o(m.rank());
    std::iota(o.begin(), o.end(), 0);
    return CoxeterElement(m, o);
}

std::size_t binom(std::size_t n, std::size_t k) {
    std::size_t r = 1;
    for (std::size_t j = 1; j <= k; ++j) r = r * (n - k + j) / j;
    return r;
}

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

// Variables x1 x2 y1 y2 of the A2 principal seed.
LaurentPoly v(std::size_t i, long e = 1) { return LaurentPoly::variable(4, i, e); }
LaurentPoly one() { return LaurentPoly::constant(4, 1); }

} // namespace

TEST(Seed, MatrixMutation) {
    auto b = IntMatrix::from_rows({{0, 1, 0}, {-1, 0, 1}, {0, -1, 0}});
    auto mu = mutate_matrix(b, 1);
    EXPECT_EQ(mu, IntMatrix::from_rows({{0, -1, 1}, {1, 0, -1}, {-1, 1, 0}}));
    EXPECT_EQ(mutate_matrix(mu, 1), b);
    // skew-symmetrizable B stays skew-symmetrizable: B2 with d = (2,1)
    auto b2 = IntMatrix::from_rows({{0, 1}, {-2, 0}});
    auto m2 = mutate_matrix(b2, 0);
    EXPECT_EQ(m2, IntMatrix::from_rows({{0, -1}, {2, 0}}));
}

TEST(Seed, CoefficientMutation) {
    auto b = IntMatrix::from_rows({{0, 1}, {-1, 0}});
    std::vector<TropMonomial> y{TropMonomial::generator(2, 0), TropMonomial::generator(2, 1)};
    auto y1 = mutate_coefficients(y, b, 0);
    EXPECT_EQ(y1[0].e, (std::vector<std::int64_t>{-1, 0}));
    // y2 y1^{[b12]+} (y1 (+) 1)^{-b12} = y1 y2
    EXPECT_EQ(y1[1].e, (std::vector<std::int64_t>{1, 1}));
}

TEST(Seed, A2PrincipalPentagon) {
    auto a2 = cartan_from_label('A', 2);
    CoxeterData cd(a2, standard(a2));
    auto s0 = principal_seed(cd);
    EXPECT_EQ(s0.b, IntMatrix::from_rows({{0, 1}, {-1, 0}}));
    auto s1 = mutate(s0, 0);
    EXPECT_EQ(s1.cluster[0], (v(1) + v(2)) * v(0, -1));
    auto s2 = mutate(s1, 1);
    EXPECT_EQ(s2.cluster[1], (v(1) + v(2) + v(0) * v(2) * v(3)) * v(0, -1) * v(1, -1));
    auto s3 = mutate(s2, 0);
    EXPECT_EQ(s3.cluster[0], (one() + v(0) * v(3)) * v(1, -1));
    auto s4 = mutate(s3, 1);
    EXPECT_EQ(s4.cluster[1], v(0));
    auto s5 = mutate(s4, 0);
    // period 5 up to swapping the two positions
    EXPECT_EQ(s5.cluster[0], v(1));
    EXPECT_EQ(s5.cluster[1], v(0));
    EXPECT_EQ(s5.coeffs[0], s0.coeffs[1]);
    EXPECT_EQ(s5.coeffs[1], s0.coeffs[0]);

    auto g = explore(s0);
    EXPECT_EQ(g.seeds.size(), 5u);
    EXPECT_EQ(g.edges.size(), 5u);
    std::vector<LaurentPoly> want{v(0), v(1), s1.cluster[0], s2.cluster[1], s3.cluster[0]};
    std::sort(want.begin(), want.end());
    EXPECT_EQ(g.variables, want);
}

TEST(Seed, MutationIsInvolutive) {
    std::mt19937_64 rng(3);
    for (const char* l : {"A3", "B3", "G2", "D4"}) {
        auto m = parse_type_label(l);
        CoxeterData cd(m, CoxeterElement::bipartite(m));
        Seed s = principal_seed(cd);
        for (int step = 0; step < 8; ++step) {
            std::size_t k = rng() % m.rank();
            Seed t = mutate(s, k);
            EXPECT_EQ(mutate(t, k), s) << l;
            for (std::size_t i = 0; i < m.rank(); ++i) {
                EXPECT_EQ(t.b(i, k), -s.b(i, k));
                EXPECT_EQ(t.b(k, i), -s.b(k, i));
            }
            s = std::move(t);
        }
    }
    auto a2 = cartan_from_label('A', 2);
    EXPECT_THROW(mutate(principal_seed(CoxeterData(a2, standard(a2))), 2), SeedError);
}

TEST(Seed, ExtractRecord) {
    auto a2 = cartan_from_label('A', 2);
    CoxeterData cd(a2, standard(a2));
    auto s0 = principal_seed(cd);
    auto z = (v(1) + v(2) + v(0) * v(2) * v(3)) * v(0, -1) * v(1, -1);
    auto r = extract_record(s0, z, &cd);
    EXPECT_EQ(r.g, (Weight{-1, 0}));
    EXPECT_EQ(r.denom, (Root{1, 1}));
    ASSERT_TRUE(r.label);
    EXPECT_EQ(*r.label, (PiLabel{1, 1}));
    auto t = [](std::size_t i) { return LaurentPoly::variable(2, i); };
    EXPECT_EQ(r.fpoly, LaurentPoly::constant(2, 1) + t(0) + t(0) * t(1));
    EXPECT_THROW(extract_record(s0, v(0) + v(1), &cd), ExtractionError);
    EXPECT_THROW(extract_record(s0, LaurentPoly(4), &cd), ExtractionError);
}

TEST(Seed, ExplorationCountsAndClosedFormulas) {
    std::vector<CartanMatrix> types = finite_types_up_to(5);
    types.push_back(cartan_from_label('E', 6));
    for (const auto& m : types) {
        for (const auto& c : m.rank() <= 4 ? all_coxeter_elements(m) : std::vector<CoxeterElement>{CoxeterElement::bipartite(m)}) {
            CoxeterData cd(m, c);
            auto s0 = principal_seed(cd);
            auto g = explore(s0);
            const std::size_t h = static_cast<std::size_t>(cd.coxeter_numbers()[0]);
            EXPECT_EQ(g.variables.size(), m.rank() * (h + 2) / 2) << m.label();
            EXPECT_EQ(g.seeds.size(), cluster_count_table(m.label()[0], m.rank())) << m.label();
            EXPECT_EQ(g.edges.size(), g.seeds.size() * m.rank() / 2) << m.label();
            auto label_of = label_variables(cd, s0, g);
            EXPECT_EQ(std::set<std::size_t>(label_of.begin(), label_of.end()).size(), cd.size());
            for (std::size_t k = 0; k < g.variables.size(); ++k) {
                auto r = extract_record(s0, g.variables[k], &cd);
                EXPECT_EQ(r.fpoly.coefficient(Monomial{}), 1);
                if (cd.fundamental(label_of[k])) continue;
                const auto& gamma = cd.weight(label_of[k]);
                auto d = weight_to_root_coords(m, apply_coxeter_inverse(m, c, gamma) - gamma);
                ASSERT_TRUE(d.integral());
                EXPECT_EQ(r.denom, d.to_root()) << m.label();
                EXPECT_TRUE(r.denom.nonnegative());
            }
            EXPECT_EQ(cluster_family(g, label_of), clusters(cd)) << m.label();
        }
    }
}

TEST(Seed, HarvestedPrimitiveRelations) {
    for (const auto& m : finite_types_up_to(4))
        for (const auto& c : all_coxeter_elements(m)) {
            CoxeterData cd(m, c);
            auto s0 = principal_seed(cd);
            auto g = explore(s0);
            std::vector<ExchangeRelation> prim;
            for (const auto& r : relabel_relations(g, label_variables(cd, s0, g)))
                if (r.primitive()) prim.push_back(r);
            EXPECT_EQ(prim, primitive_relations(cd)) << m.label();
        }
}

TEST(Seed, CapExceeded) {
    auto a3 = cartan_from_label('A', 3);
    auto s0 = principal_seed(CoxeterData(a3, standard(a3)));
    EXPECT_THROW(explore(s0, 13), CapExceeded);
    EXPECT_EQ(explore(s0, 14).seeds.size(), 14u);
}

TEST(Seed, ExplorationIsDeterministic) {
    auto d5 = cartan_from_label('D', 5);
    CoxeterData cd(d5, CoxeterElement::bipartite(d5));
    auto a = explore(principal_seed(cd)), b = explore(principal_seed(cd));
    EXPECT_EQ(a.variables, b.variables);
    EXPECT_EQ(a.edges, b.edges);
    EXPECT_EQ(a.relations, b.relations);
}

TEST(Seed, EvaluationIdentificationMatchesExact) {
    for (const char* l : {"A4", "B4", "D5", "E6", "F4"}) {
        auto m = parse_type_label(l);
        CoxeterData cd(m, CoxeterElement::bipartite(m));
        auto s0 = principal_seed(cd);
        auto exact = explore(s0, ExploreOptions{kDefaultSeedCap, false});
        auto fast = explore(s0, ExploreOptions{kDefaultSeedCap, true});
        EXPECT_EQ(exact.variables, fast.variables) << l;
        EXPECT_EQ(exact.edges, fast.edges) << l;
        EXPECT_EQ(exact.relations, fast.relations) << l;
        ASSERT_EQ(exact.seeds.size(), fast.seeds.size());
        for (std::size_t s = 0; s < exact.seeds.size(); ++s) {
            EXPECT_EQ(exact.seeds[s].cluster, fast.seeds[s].cluster);
            EXPECT_EQ(exact.seeds[s].b, fast.seeds[s].b);
        }
        EXPECT_LE(fast.divisions, exact.divisions);
    }
}

TEST(Seed, MoveIsomorphism) {
    for (const auto& m : finite_types_up_to(5))
        for (const auto& c : all_coxeter_elements(m)) {
            CoxeterData cd(m, c);
            for (std::size_t i = 0; i < m.rank(); ++i)
                if (is_source(m, c, i)) {
                    EXPECT_TRUE(verify_move_isomorphism(cd, i).ok()) << m.label();
                }
        }
}

TEST(Seed, SeedCapFromEnvironment) {
    setenv("CXC_SEED_CAP", "42", 1);
    EXPECT_EQ(default_seed_cap(), 42u);
    setenv("CXC_SEED_CAP", "junk", 1);
    EXPECT_EQ(default_seed_cap(), kDefaultSeedCap);
    unsetenv("CXC_SEED_CAP");
    EXPECT_EQ(default_seed_cap(), kDefaultSeedCap);
}
