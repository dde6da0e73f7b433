#pragma once

#include "verify.hpp"

#include <json.hpp>

namespace cxc {

using Json = nlohmann::ordered_json;

inline Json json_vector(const std::vector<std::int64_t>& v) { return Json(v); }

inline Json json_one_based(const std::vector<std::size_t>& v) {
    Json a = Json::array();
    for (auto x : v) a.push_back(x + 1);
    return a;
}

inline Json json_matrix(const IntMatrix& m) {
    Json rows = Json::array();
    for (const auto& r : m.to_rows()) rows.push_back(r);
    return rows;
}

inline Json json_label(const PiLabel& l) { return Json{{"i", l.i + 1}, {"m", l.m}}; }

inline std::string type_name(const CartanMatrix& m) { return m.label().empty() ? "matrix" : m.label(); }

inline Json json_header(const CoxeterData& cd) {
    const auto& m = cd.cartan();
    Json j;
    j["type"] = type_name(m);
    j["rank"] = cd.rank();
    j["coxeter"] = json_one_based(cd.element().order());
    return j;
}

inline std::vector<std::string> t_names(std::size_t n) { return variable_names("t", n); }

// Standard Coxeter element of an indecomposable type A matrix: F-polynomials have a closed form.
inline bool standard_type_a(const CoxeterData& cd) {
    const auto& m = cd.cartan();
    const std::size_t n = m.rank();
    if (!(m == cartan_from_label('A', static_cast<int>(n)))) return false;
    for (std::size_t k = 0; k < n; ++k)
        if (cd.element().order()[k] != k) return false;
    return true;
}

// F-polynomial per Pi(c) index, from the closed form or from an exploration.
inline std::vector<LaurentPoly> f_polynomials(const CoxeterData& cd, const Seed& s0, const ExchangeGraph& g, std::string& route) {
    const std::size_t n = cd.rank();
    std::vector<LaurentPoly> f(cd.size(), LaurentPoly(n));
    if (standard_type_a(cd)) {
        route = "closed_form";
        for (std::size_t k = 0; k < cd.size(); ++k) f[k] = typea::f_poly_closed_form(n, cd.label(k));
        return f;
    }
    route = "engine";
    for (const auto& z : g.variables) {
        auto r = extract_record(s0, z, &cd);
        f[cd.index(*r.label)] = r.fpoly;
    }
    return f;
}

inline Json info_document(const CoxeterData& cd, const ExploreOptions& opt) {
    const std::size_t n = cd.rank();
    Json j = json_header(cd);
    j["coxeter_number"] = cd.coxeter_numbers();
    j["h"] = cd.h_vector();
    j["star"] = json_one_based(cd.star_vector());
    j["B"] = json_matrix(cd.b());
    auto s0 = principal_seed(cd);
    auto g = explore(s0, opt);
    std::string route;
    auto f = f_polynomials(cd, s0, g, route);
    j["f_polynomial_route"] = route;
    Json vars = Json::array();
    for (std::size_t k = 0; k < cd.size(); ++k) {
        Json v;
        v["label"] = json_label(cd.label(k));
        v["g"] = cd.weight(k).c;
        v["denom"] = cd.denom(k).c;
        v["f_polynomial"] = f[k].to_string(t_names(n));
        vars.push_back(std::move(v));
    }
    j["variables"] = std::move(vars);
    Json cls = Json::array();
    for (const auto& c : clusters(cd)) cls.push_back(json_one_based(c));
    j["clusters"] = std::move(cls);
    Json eg;
    eg["seeds"] = g.seeds.size();
    eg["edges"] = g.edges.size();
    eg["variables"] = g.variables.size();
    eg["identification"] = opt.identify_by_evaluation ? "evaluation" : "exact";
    j["exchange_graph"] = std::move(eg);
    return j;
}

inline Json explore_document(const CoxeterData& cd, const ExploreOptions& opt) {
    const std::size_t n = cd.rank();
    auto s0 = principal_seed(cd);
    auto g = explore(s0, opt);
    Json j = json_header(cd);
    j["seeds"] = g.seeds.size();
    j["edges"] = g.edges.size();
    j["variables"] = g.variables.size();
    j["divisions"] = g.divisions;
    j["identification"] = opt.identify_by_evaluation ? "evaluation" : "exact";
    auto names = s0.variable_names();
    Json recs = Json::array();
    std::vector<std::pair<std::size_t, Json>> keyed;
    for (const auto& z : g.variables) {
        auto r = extract_record(s0, z, &cd);
        Json v;
        v["label"] = json_label(*r.label);
        v["g"] = r.g.c;
        v["denom"] = r.denom.c;
        v["f_polynomial"] = r.fpoly.to_string(t_names(n));
        v["expansion"] = z.to_string(names);
        keyed.emplace_back(cd.index(*r.label), std::move(v));
    }
    std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& [k, v] : keyed) recs.push_back(std::move(v));
    j["records"] = std::move(recs);
    return j;
}

inline Json report_document(const Report& rep) {
    Json checks = Json::array();
    for (const auto& r : rep.results())
        checks.push_back(Json{{"suite", r.suite}, {"instance", r.instance}, {"ok", r.ok}, {"expected", r.expected}, {"actual", r.actual}});
    Json j;
    j["passed"] = rep.results().size() - rep.failures();
    j["failed"] = rep.failures();
    j["checks"] = std::move(checks);
    return j;
}

inline Json json_diagonals(const std::vector<typea::Diagonal>& ds) {
    Json a = Json::array();
    for (const auto& d : ds) a.push_back(Json::array({d.a, d.b}));
    return a;
}

inline Json polygon_table(std::size_t n) {
    Json rows = Json::array();
    const long v = static_cast<long>(n) + 3;
    for (long i = 1; i <= v; ++i)
        for (long j = i + 1; j <= v; ++j)
            for (long k = j + 1; k <= v; ++k)
                for (long l = k + 1; l <= v; ++l) {
                    auto c = typea::universal_coeff_typea(n, i, j, k, l);
                    rows.push_back(Json{{"exchange", Json::array({Json::array({i, k}), Json::array({j, l})})},
                                        {"plus", json_diagonals(c.plus)},
                                        {"minus", json_diagonals(c.minus)}});
                }
    return rows;
}

} // namespace cxc
