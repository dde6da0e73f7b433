#include "cxc/verify.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>

using namespace cxc;

namespace {

struct Outcome {
    bool ok = false;
    std::string detail;
};

std::vector<CoxeterElement> orientations_of(const CartanMatrix& m) { return all_coxeter_elements(m); }

// Reports restricted to the named checks.
Outcome select(const Report& rep, const std::vector<std::string>& names, std::size_t min_checks = 1) {
    std::size_t seen = 0, bad = 0;
    std::string first;
    for (const auto& r : rep.results()) {
        bool wanted = std::find(names.begin(), names.end(), r.suite) != names.end();
        bool crashed = !r.ok && r.expected == "no error";
        if (!wanted && !crashed) continue;
        ++seen;
        if (!r.ok) {
            ++bad;
            if (first.empty()) first = r.suite + " " + r.instance + " expected " + r.expected + " actual " + r.actual;
        }
    }
    Outcome o;
    o.ok = bad == 0 && seen >= min_checks;
    o.detail = std::to_string(seen - bad) + "/" + std::to_string(seen) + " checks";
    if (!first.empty()) o.detail += "; first failure: " + first;
    return o;
}

Outcome all_of(std::vector<Outcome> parts) {
    Outcome o{true, ""};
    for (const auto& p : parts) {
        o.ok = o.ok && p.ok;
        if (!o.detail.empty()) o.detail += ", ";
        o.detail += p.detail;
    }
    return o;
}

std::vector<CartanMatrix> up_to_five_plus_e6() {
    auto t = finite_types_up_to(5);
    t.push_back(cartan_from_label('E', 6));
    return t;
}

// Principal-coefficient suites for every orientation of every type of rank <= 5 and E6.
const Report& algebra_sweep() {
    static std::optional<Report> cached;
    if (!cached) {
        cached.emplace();
        suites::AlgebraOptions opt;
        for (const auto& m : up_to_five_plus_e6())
            for (const auto& c : orientations_of(m)) {
                const std::string inst = instance_name(m, c);
                cached->guard("algebra", inst, [&] { suites::algebra(*cached, CoxeterData(m, c), opt); });
            }
    }
    return *cached;
}

Report filter_rank(const Report& rep, std::size_t max_rank) {
    Report out;
    for (const auto& r : rep.results()) {
        auto digits = r.instance.substr(1, r.instance.find_first_not_of("0123456789", 1) - 1);
        if (!digits.empty() && static_cast<std::size_t>(std::stoul(digits)) <= max_rank)
            out.add(r.suite, r.instance, r.ok, r.expected, r.actual);
    }
    return out;
}

Outcome criterion1() {
    Report rep;
    for (const auto& m : finite_types_up_to(8))
        for (const auto& c : orientations_of(m)) {
            const std::string inst = instance_name(m, c);
            rep.guard("coxeter", inst, [&] {
                CoxeterData cd(m, c);
                suites::coxeter(rep, cd, false);
            });
        }
    return select(rep, {"coxeter.chain", "coxeter.h_difference", "coxeter.h_sum"});
}

Outcome criterion2() {
    Report rep;
    for (const auto& m : finite_types_up_to(8)) rep.guard("coxeter.orientations", m.label(), [&] { suites::orientations(rep, m); });
    return select(rep, {"coxeter.bipartite_h", "coxeter.move_graph"}, 2 * finite_types_up_to(8).size());
}

Outcome criterion3() {
    return select(algebra_sweep(), {"algebra.laurent", "algebra.variable_count", "algebra.g_vectors", "algebra.denominators",
                                    "algebra.f_constant_term"});
}

Outcome criterion4() { return select(filter_rank(algebra_sweep(), 5), {"algebra.primitive_relations"}); }

Outcome criterion5() {
    Report rep;
    for (std::size_t n = 1; n <= 5; ++n)
        rep.guard("typea", "A" + std::to_string(n), [&] { suites::typea(rep, n); });
    auto cd = typea::standard_data(3);
    auto g = explore(principal_seed(cd));
    rep.expect_eq("typea.a3_variables", "A3", std::size_t{9}, g.variables.size());
    rep.expect_eq("typea.a3_clusters", "A3", std::size_t{14}, g.seeds.size());
    return select(rep, {"typea.relations", "typea.variables_are_minors", "typea.cluster_count", "typea.recurrence",
                        "typea.a3_variables", "typea.a3_clusters"});
}

Outcome criterion6() {
    Report rep;
    for (std::size_t n = 1; n <= 5; ++n) {
        auto cd = typea::standard_data(n);
        auto s0 = principal_seed(cd);
        auto g = explore(s0);
        std::size_t bad = 0;
        for (const auto& z : g.variables) {
            auto r = extract_record(s0, z, &cd);
            bool ok = r.fpoly == typea::f_poly_via_matrix(n, *r.label) && r.fpoly == typea::f_poly_closed_form(n, *r.label);
            bad += !ok;
        }
        rep.add("typea.f_three_ways", "A" + std::to_string(n), bad == 0 && g.variables.size() == cd.size(), "0 mismatches",
                std::to_string(bad) + " mismatches");
    }
    return select(rep, {"typea.f_three_ways"}, 5);
}

Outcome criterion7() {
    Report rep;
    for (const auto& m : finite_types_up_to(5))
        for (const auto& c : orientations_of(m)) {
            const std::string inst = instance_name(m, c);
            rep.guard("coxeter", inst, [&] { suites::coxeter(rep, CoxeterData(m, c)); });
        }
    for (const char* l : {"B3", "C3", "F4", "G2"}) {
        auto m = parse_type_label(l);
        for (const auto& c : orientations_of(m)) rep.guard("coxeter.duality", instance_name(m, c), [&] { suites::duality(rep, m, c); });
    }
    return all_of({select(rep, {"coxeter.compat_zero_symmetric", "coxeter.compat_nonnegative", "coxeter.bipartite_oracle",
                                "coxeter.duality", "coxeter.compat_linear_identity"}),
                   select(filter_rank(algebra_sweep(), 5), {"algebra.clusters"})});
}

Outcome criterion8() {
    Report rep;
    suites::AlgebraOptions opt;
    opt.universal = true;
    for (const auto& m : finite_types_up_to(3))
        for (const auto& c : orientations_of(m)) {
            const std::string inst = instance_name(m, c);
            rep.guard("algebra", inst, [&] { suites::algebra(rep, CoxeterData(m, c), opt); });
        }
    for (std::size_t n = 1; n <= 4; ++n) {
        auto p = typea::verify_polygon_rule(n);
        rep.add("typea.polygon_rule", "A" + std::to_string(n), p.ok(), "0 mismatches",
                std::to_string(p.mismatches) + " of " + std::to_string(p.relations));
    }
    auto ex = typea::universal_coeff_typea(3, 2, 4, 5, 6);
    bool verbatim = ex.plus == std::vector<typea::Diagonal>{{1, 5}, {2, 5}} && ex.minus == std::vector<typea::Diagonal>{{3, 6}, {4, 6}};
    rep.add("typea.hexagon_instance", "A3", verbatim, "p+ = p<1,5>p<2,5>, p- = p<3,6>p<4,6>", verbatim ? "matches" : "differs");
    return select(rep, {"universal.primitive_relations", "universal.specialization", "typea.polygon_rule", "typea.hexagon_instance"});
}

Outcome criterion9() {
    Report rep;
    for (const auto& m : finite_types_up_to(5))
        for (const auto& c : orientations_of(m)) {
            CoxeterData cd(m, c);
            for (std::size_t i = 0; i < m.rank(); ++i) {
                if (!is_source(m, c, i)) continue;
                auto r = verify_move_isomorphism(cd, i);
                rep.add("algebra.move_isomorphism", instance_name(m, c) + " move " + std::to_string(i + 1), r.ok(), "B, y and x transform",
                        std::string(r.matrix ? "" : "B ") + (r.coefficients ? "" : "y ") + (r.variable ? "" : "x ") + "checked");
            }
        }
    return select(rep, {"algebra.move_isomorphism"});
}

Outcome criterion10() {
    Report rep;
    for (auto [l, evaluation] : {std::pair{"E7", false}, std::pair{"E8", true}}) {
        auto m = parse_type_label(l);
        CoxeterData cd(m, CoxeterElement::bipartite(m));
        const auto h = static_cast<std::size_t>(cd.coxeter_numbers()[0]);
        rep.guard("extended", l, [&] {
            auto g = explore(principal_seed(cd), ExploreOptions{default_seed_cap(), evaluation});
            rep.expect_eq("extended.variable_count", std::string(l) + (evaluation ? " evaluation" : " exact"), m.rank() * (h + 2) / 2,
                          g.variables.size());
        });
    }
    return select(rep, {"extended.variable_count"}, 2);
}

struct Criterion {
    int id;
    const char* name;
    double limit_s;
    std::function<Outcome()> run;
};

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"acceptance criteria"};
    std::vector<int> only;
    app.add_option("--only", only, "run only these criteria");
    CLI11_PARSE(app, argc, argv);

    const std::vector<Criterion> all{
        {1, "coxeter combinatorics sweep, rank <= 8, all orientations", 30, criterion1},
        {2, "bipartite h values and connected move graph", 5, criterion2},
        {3, "mutation engine against Pi(c), denominators, F constant terms", 300, criterion3},
        {4, "harvested primitive relations equal the two closed families", 120, criterion4},
        {5, "type A tridiagonal minors and exchange relations", 60, criterion5},
        {6, "type A F-polynomials: matrix minor, engine, closed form", 30, criterion6},
        {7, "compatibility degree and cluster family", 120, criterion7},
        {8, "universal coefficients and the polygon rule", 120, criterion8},
        {9, "move isomorphism of principal seeds", 60, criterion9},
        {10, "extended: E7/E8 bipartite variable counts", 1800, criterion10},
    };

    int failed = 0;
    for (const auto& c : all) {
        if (!only.empty() && std::find(only.begin(), only.end(), c.id) == only.end()) continue;
        auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        bool in_time = secs <= c.limit_s;
        bool ok = o.ok && in_time;
        failed += !ok;
        std::cout << (ok ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.name << " [" << o.detail << "; "
                  << std::fixed << std::setprecision(1) << secs << " s of " << c.limit_s << " s" << (in_time ? "" : ", over time limit")
                  << "]\n"
                  << std::flush;
    }
    return failed ? 1 : 0;
}
