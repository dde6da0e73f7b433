#include "cxc/explore.hpp"

#include <gtest/gtest.h>

using namespace cxc;

namespace {

std::vector<std::size_t> universal_labels(const CoxeterData& cd, const ExchangeGraph& g) {
    auto phi = universal_to_principal(cd);
    auto s0 = principal_seed(cd);
    std::vector<std::size_t> out;
    for (const auto& z : g.variables) {
        auto rec = extract_record(s0, specialize_poly(z, cd.rank(), phi), &cd);
        out.push_back(cd.index(*rec.label));
    }
    return out;
}

std::vector<CartanMatrix> small_types() {
    auto t = finite_types_up_to(3);
    t.push_back(parse_type_label("A1xA1"));
    t.push_back(parse_type_label("A2xA1"));
    return t;
}

} // namespace

TEST(Universal, SeedShape) {
    auto a2 = cartan_from_label('A', 2);
    CoxeterData cd(a2, CoxeterElement::bipartite(a2));
    auto s = universal_seed(cd);
    EXPECT_EQ(s.num_generators(), cd.size());
    EXPECT_EQ(s.rank(), 2u);
    EXPECT_EQ(s.b, cd.b());
    for (const auto& y : s.coeffs) EXPECT_EQ(y.size(), cd.size());
}

TEST(Universal, SpecializesToPrincipal) {
    for (const auto& m : small_types())
        for (const auto& c : all_coxeter_elements(m)) {
            CoxeterData cd(m, c);
            auto phi = universal_to_principal(cd);
            auto su = universal_seed(cd);
            auto sp = specialize(su, phi);
            EXPECT_EQ(sp, principal_seed(cd)) << m.label();
            // specialization commutes with mutation
            for (std::size_t k = 0; k < m.rank(); ++k) EXPECT_EQ(specialize(mutate(su, k), phi), mutate(sp, k)) << m.label();
        }
}

TEST(Universal, ExplorationSpecializesVariableByVariable) {
    for (const auto& m : small_types()) {
        CoxeterData cd(m, CoxeterElement::bipartite(m));
        auto gu = explore(universal_seed(cd));
        auto gp = explore(principal_seed(cd));
        EXPECT_EQ(gu.variables.size(), gp.variables.size()) << m.label();
        EXPECT_EQ(gu.seeds.size(), gp.seeds.size()) << m.label();
        auto phi = universal_to_principal(cd);
        std::set<LaurentPoly> images;
        for (const auto& z : gu.variables) images.insert(specialize_poly(z, m.rank(), phi));
        EXPECT_EQ(std::vector<LaurentPoly>(images.begin(), images.end()), gp.variables) << m.label();
    }
}

TEST(Universal, PrimitiveRelationsCarryCompatibilityExponents) {
    for (const auto& m : small_types())
        for (const auto& c : all_coxeter_elements(m)) {
            CoxeterData cd(m, c);
            auto g = explore(universal_seed(cd));
            std::vector<ExchangeRelation> prim;
            for (const auto& r : relabel_relations(g, universal_labels(cd, g)))
                if (r.primitive()) prim.push_back(r);
            EXPECT_EQ(prim, universal_primitive_relations(cd)) << m.label();
        }
}

TEST(Universal, HomomorphismValidation) {
    auto a2 = cartan_from_label('A', 2);
    CoxeterData cd(a2, CoxeterElement::bipartite(a2));
    auto su = universal_seed(cd);
    SemifieldHom wrong_size = identity_hom({"q1", "q2"});
    EXPECT_THROW(specialize(su, wrong_size), SeedError);
    SemifieldHom neg = universal_to_principal(cd);
    neg.images[0] = TropMonomial::generator(2, 0).inverse();
    EXPECT_THROW(specialize(su, neg), SeedError);
    SemifieldHom shared = universal_to_principal(cd);
    shared.images[1] = shared.images[0];
    EXPECT_THROW(shared.validate(), SeedError);
    auto id = identity_hom(su.generators);
    EXPECT_EQ(specialize(su, id), su);
}
