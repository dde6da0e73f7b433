#pragma once

#include "json.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace cxc::cli {

enum Exit : int { kOk = 0, kFailure = 1, kUsage = 2, kCap = 3 };

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct RunConfig {
    std::string command;
    std::string type_spec;
    std::string coxeter;
    std::size_t cap = 0;
    std::size_t n = 0;
    std::string output;
    std::string format = "json";
    std::string identify = "auto";
    bool universal = false;
};

inline bool looks_like_label(const std::string& s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char ch) { return std::isalnum(ch); }) &&
           std::isupper(static_cast<unsigned char>(s[0]));
}

inline CartanMatrix load_type(const std::string& spec) {
    if (spec.empty()) throw UsageError("--type is required");
    if (looks_like_label(spec)) return parse_type_label(spec);
    std::ifstream in(spec);
    if (!in) throw UsageError("cannot read matrix file '" + spec + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return validate(parse_matrix_text(ss.str()));
}

inline std::vector<CoxeterElement> load_coxeter(const CartanMatrix& m, const std::string& spec) {
    if (spec.empty() || spec == "standard") {
        std::vector<std::size_t> order(m.rank());
        std::iota(order.begin(), order.end(), 0);
        return {CoxeterElement(m, order)};
    }
    if (spec == "bipartite") return {CoxeterElement::bipartite(m)};
    if (spec == "all") return all_coxeter_elements(m);
    std::vector<std::size_t> order;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        long v = 0;
        try {
            v = std::stol(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != item.size() || item.empty() || v < 1 || v > static_cast<long>(m.rank()))
            throw UsageError("bad --coxeter entry '" + item + "'");
        order.push_back(static_cast<std::size_t>(v - 1));
    }
    try {
        return {CoxeterElement(m, order)};
    } catch (const CoxeterError& e) {
        throw UsageError(e.what());
    }
}

inline ExploreOptions explore_options(const RunConfig& cfg, std::size_t rank) {
    ExploreOptions opt;
    opt.cap = cfg.cap ? cfg.cap : default_seed_cap();
    if (cfg.identify == "exact") opt.identify_by_evaluation = false;
    else if (cfg.identify == "evaluation") opt.identify_by_evaluation = true;
    else opt.identify_by_evaluation = rank >= 7;
    return opt;
}

inline std::string text_report(const Report& rep) {
    std::ostringstream os;
    for (const auto& r : rep.results()) {
        os << (r.ok ? "PASS " : "FAIL ") << r.suite << ' ' << r.instance;
        if (!r.ok) os << " expected: " << r.expected << " actual: " << r.actual;
        os << '\n';
    }
    os << rep.results().size() - rep.failures() << " passed, " << rep.failures() << " failed\n";
    return os.str();
}

inline std::string text_info(const Json& j) {
    std::ostringstream os;
    os << "type " << j["type"].get<std::string>() << " rank " << j["rank"] << " coxeter " << j["coxeter"].dump() << '\n';
    os << "coxeter number " << j["coxeter_number"].dump() << '\n';
    os << "h " << j["h"].dump() << " star " << j["star"].dump() << '\n';
    os << "B " << j["B"].dump() << '\n';
    for (const auto& v : j["variables"])
        os << "(" << v["label"]["i"] << "," << v["label"]["m"] << ") g=" << v["g"].dump() << " denom=" << v["denom"].dump()
           << " F=" << v["f_polynomial"].get<std::string>() << '\n';
    os << j["variables"].size() << " variables, " << j["clusters"].size() << " clusters, " << j["exchange_graph"]["edges"]
       << " exchange graph edges\n";
    return os.str();
}

inline std::string text_explore(const Json& j) {
    std::ostringstream os;
    os << "type " << j["type"].get<std::string>() << " coxeter " << j["coxeter"].dump() << '\n';
    os << "seeds " << j["seeds"] << " edges " << j["edges"] << " variables " << j["variables"] << " divisions " << j["divisions"] << '\n';
    for (const auto& v : j["records"])
        os << "(" << v["label"]["i"] << "," << v["label"]["m"] << ") " << v["expansion"].get<std::string>() << '\n';
    return os.str();
}

inline std::string text_typea(const Json& j) {
    std::ostringstream os;
    os << "n " << j["n"] << '\n';
    for (const auto& c : j["checks"])
        os << (c["ok"].get<bool>() ? "PASS " : "FAIL ") << c["suite"].get<std::string>() << ' ' << c["actual"].get<std::string>() << '\n';
    for (const auto& r : j["polygon"])
        os << "<" << r["exchange"][0][0] << "," << r["exchange"][0][1] << "> <" << r["exchange"][1][0] << "," << r["exchange"][1][1]
           << "> plus " << r["plus"].dump() << " minus " << r["minus"].dump() << '\n';
    return os.str();
}

inline int status_of(const Report& rep) { return rep.ok() ? kOk : kFailure; }

// Returns the process exit status.
inline int dispatch(const RunConfig& cfg, std::ostream& out) {
    std::string body;
    int status = kOk;
    const bool json = cfg.format == "json";
    auto emit_docs = [&](const std::vector<Json>& docs, auto text) {
        if (json) body = (docs.size() == 1 ? docs[0] : Json(docs)).dump(2) + "\n";
        else
            for (const auto& d : docs) body += text(d);
    };

    if (cfg.command == "typea") {
        if (cfg.n < 1 || cfg.n > 12) throw UsageError("--n must be between 1 and 12");
        Report rep;
        rep.guard("typea", "A" + std::to_string(cfg.n), [&] { suites::typea(rep, cfg.n, cfg.cap ? cfg.cap : default_seed_cap()); });
        Json j;
        j["n"] = cfg.n;
        auto doc = report_document(rep);
        j["passed"] = doc["passed"];
        j["failed"] = doc["failed"];
        j["checks"] = doc["checks"];
        j["polygon"] = polygon_table(cfg.n);
        body = json ? j.dump(2) + "\n" : text_typea(j);
        status = status_of(rep);
    } else {
        auto m = load_type(cfg.type_spec);
        auto elements = load_coxeter(m, cfg.coxeter);
        auto opt = explore_options(cfg, m.rank());
        if (cfg.command == "info") {
            std::vector<Json> docs;
            for (const auto& c : elements) docs.push_back(info_document(CoxeterData(m, c), opt));
            emit_docs(docs, text_info);
        } else if (cfg.command == "explore") {
            std::vector<Json> docs;
            for (const auto& c : elements) docs.push_back(explore_document(CoxeterData(m, c), opt));
            emit_docs(docs, text_explore);
        } else if (cfg.command == "verify") {
            VerifyOptions vo;
            vo.algebra.cap = opt.cap;
            vo.algebra.evaluation = opt.identify_by_evaluation;
            vo.algebra.universal = cfg.universal || m.rank() <= 3;
            auto rep = verify_type(m, elements, vo);
            if (json) {
                Json j;
                j["type"] = type_name(m);
                j["coxeter_elements"] = elements.size();
                auto doc = report_document(rep);
                for (auto& [k, v] : doc.items()) j[k] = v;
                body = j.dump(2) + "\n";
            } else {
                body = type_name(m) + ": " + std::to_string(elements.size()) + " Coxeter element" + (elements.size() == 1 ? "" : "s") + "\n" +
                       text_report(rep);
            }
            status = status_of(rep);
        } else {
            throw UsageError("unknown command '" + cfg.command + "'");
        }
    }

    if (cfg.output.empty()) {
        out << body;
    } else {
        std::ofstream f(cfg.output);
        if (!f) throw UsageError("cannot write '" + cfg.output + "'");
        f << body;
    }
    return status;
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Cluster algebras of finite type via Coxeter elements"};
    app.require_subcommand(1);
    RunConfig cfg;
    auto common = [&](CLI::App* sub, bool typed) {
        if (typed) {
            sub->add_option("--type", cfg.type_spec, "type label (A3, E8, A2xA1) or matrix file")->required();
            sub->add_option("--coxeter", cfg.coxeter, "comma separated order, 'bipartite', 'all' or 'standard'");
        }
        sub->add_option("--cap", cfg.cap, "seed cap (default CXC_SEED_CAP or 100000)");
        sub->add_option("--output", cfg.output, "output file");
        sub->add_option("--format", cfg.format, "json or text")->check(CLI::IsMember({"json", "text"}));
        sub->add_option("--identify", cfg.identify, "exact, evaluation or auto")->check(CLI::IsMember({"exact", "evaluation", "auto"}));
    };
    auto* info = app.add_subcommand("info", "Coxeter data, Pi(c), denominators and F-polynomials");
    common(info, true);
    auto* verify = app.add_subcommand("verify", "run every invariant suite");
    common(verify, true);
    verify->add_flag("--universal", cfg.universal, "include universal-coefficient suites for any rank");
    auto* expl = app.add_subcommand("explore", "exchange graph of the principal-coefficient seed");
    common(expl, true);
    auto* ta = app.add_subcommand("typea", "tridiagonal model and polygon coefficients");
    common(ta, false);
    ta->add_option("--n", cfg.n, "rank")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    for (auto* sub : {info, verify, expl, ta})
        if (sub->parsed()) cfg.command = sub->get_name();
    if (cfg.command == "verify" && verify->count("--format") == 0) cfg.format = "text";

    try {
        return dispatch(cfg, out);
    } catch (const CapExceeded& e) {
        err << "cap exceeded: " << e.what() << '\n';
        return kCap;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return kUsage;
    } catch (const CartanError& e) {
        err << "usage error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        err << "failure: " << e.what() << '\n';
        return kFailure;
    }
}

} // namespace cxc::cli
