#ifndef LOGJET_CLI_HPP
#define LOGJET_CLI_HPP

#include "logjet/chern.hpp"
#include "logjet/fields.hpp"
#include "logjet/jet.hpp"
#include "logjet/lambda.hpp"
#include "logjet/parse.hpp"

#include "CLI11.hpp"
#include <nlohmann/json.hpp>

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace logjet::cli {

using nlohmann::json;

// Input-shape problems map to exit code 2, mathematical inapplicability and
// internal failures to exit code 3.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// JSON serialization. Rationals travel as "num/den" strings so nothing is
// ever rounded; variables travel as their literal names.
// ---------------------------------------------------------------------------

inline json scalar_to_json(const Scalar& s) { return to_string(s); }
inline Scalar scalar_from_json(const json& j) { return parse_scalar(j.get<std::string>()); }

inline VarId var_from_string(const std::string& text) {
    Polynomial p = parse_polynomial(text);
    if (p.term_count() != 1 || p.leading_monomial().factors().size() != 1 ||
        p.leading_monomial().factors()[0].second != 1 || p.leading_coefficient() != 1)
        throw std::invalid_argument("not a variable: " + text);
    return p.leading_monomial().factors()[0].first;
}

inline json to_json(const LogPairData& d) {
    return json{{"degrees", d.degrees},
                {"d_total", d.d_total},
                {"c1bar_sq", d.c1bar_sq},
                {"c2bar", d.c2bar},
                {"positivity_lhs", d.positivity_lhs()}};
}
inline LogPairData log_pair_from_json(const json& j) {
    LogPairData d;
    d.degrees = j.at("degrees").get<std::vector<int>>();
    d.d_total = j.at("d_total").get<long long>();
    d.c1bar_sq = j.at("c1bar_sq").get<long long>();
    d.c2bar = j.at("c2bar").get<long long>();
    return d;
}
inline bool operator==(const LogPairData& a, const LogPairData& b) {
    return a.degrees == b.degrees && a.d_total == b.d_total && a.c1bar_sq == b.c1bar_sq &&
           a.c2bar == b.c2bar;
}

inline json to_json(const CriterionReport& r) {
    return json{{"degrees", r.degrees},
                {"m", r.m},
                {"bound", r.bound},
                {"c1bar_sq", r.c1bar_sq},
                {"c2bar", r.c2bar},
                {"positivity_lhs", r.positivity_lhs},
                {"threshold_value", scalar_to_json(r.threshold_value)},
                {"verdict", r.verdict}};
}
inline CriterionReport criterion_from_json(const json& j) {
    CriterionReport r;
    r.degrees = j.at("degrees").get<std::vector<int>>();
    r.m = j.at("m").get<int>();
    r.bound = j.at("bound").get<long long>();
    r.c1bar_sq = j.at("c1bar_sq").get<long long>();
    r.c2bar = j.at("c2bar").get<long long>();
    r.positivity_lhs = j.at("positivity_lhs").get<long long>();
    r.threshold_value = scalar_from_json(j.at("threshold_value"));
    r.verdict = j.at("verdict").get<bool>();
    return r;
}

inline json to_json(const ScanRow& r) {
    json out{{"degrees", r.degrees},
             {"applicable", r.applicable},
             {"c1bar_sq", r.c1bar_sq},
             {"c2bar", r.c2bar},
             {"positivity_lhs", r.positivity_lhs},
             {"verdict", r.verdict}};
    if (r.applicable) out["threshold_value"] = scalar_to_json(r.threshold_value);
    return out;
}
inline ScanRow scan_row_from_json(const json& j) {
    ScanRow r;
    r.degrees = j.at("degrees").get<std::vector<int>>();
    r.applicable = j.at("applicable").get<bool>();
    r.c1bar_sq = j.at("c1bar_sq").get<long long>();
    r.c2bar = j.at("c2bar").get<long long>();
    r.positivity_lhs = j.at("positivity_lhs").get<long long>();
    if (r.applicable) r.threshold_value = scalar_from_json(j.at("threshold_value"));
    r.verdict = j.at("verdict").get<bool>();
    return r;
}

inline json to_json(const ScanResult& s) {
    json rows = json::array();
    for (const ScanRow& r : s.rows) rows.push_back(to_json(r));
    json frontier = json::array();
    for (const FrontierEntry& f : s.frontier) {
        json e{{"d1", f.d1}};
        if (f.min_d2) e["min_d2"] = *f.min_d2;
        frontier.push_back(e);
    }
    json out{{"components", s.components}, {"m", s.m},        {"bound", s.bound},
             {"d_max", s.d_max},           {"rows", rows},    {"frontier", frontier},
             {"monotonicity_violations", s.monotonicity_violations}};
    if (s.min_passing_degree) out["min_passing_degree"] = *s.min_passing_degree;
    return out;
}
inline ScanResult scan_from_json(const json& j) {
    ScanResult s;
    s.components = j.at("components").get<int>();
    s.m = j.at("m").get<int>();
    s.bound = j.at("bound").get<long long>();
    s.d_max = j.at("d_max").get<int>();
    for (const json& r : j.at("rows")) s.rows.push_back(scan_row_from_json(r));
    for (const json& f : j.at("frontier")) {
        FrontierEntry e;
        e.d1 = f.at("d1").get<int>();
        if (f.contains("min_d2")) e.min_d2 = f.at("min_d2").get<int>();
        s.frontier.push_back(e);
    }
    s.monotonicity_violations = j.at("monotonicity_violations").get<std::vector<std::string>>();
    if (j.contains("min_passing_degree")) s.min_passing_degree = j.at("min_passing_degree").get<int>();
    return s;
}
inline bool operator==(const FrontierEntry& a, const FrontierEntry& b) {
    return a.d1 == b.d1 && a.min_d2 == b.min_d2;
}
inline bool operator==(const ScanResult& a, const ScanResult& b) {
    return a.components == b.components && a.m == b.m && a.bound == b.bound && a.d_max == b.d_max &&
           a.rows == b.rows && a.min_passing_degree == b.min_passing_degree && a.frontier == b.frontier &&
           a.monotonicity_violations == b.monotonicity_violations;
}

inline json to_json(const TangencyReport& r) {
    return json{{"equations",
                 {to_string(r.equations[0]), to_string(r.equations[1]), to_string(r.equations[2])}},
                {"tangent", r.tangent},
                {"samples", r.samples},
                {"seed", r.seed},
                {"witness", r.witness}};
}
inline TangencyVerdict verdict_from_string(const std::string& s) {
    if (s == "IDENTICAL") return TangencyVerdict::Identical;
    if (s == "TANGENT") return TangencyVerdict::Tangent;
    if (s == "NOT_TANGENT") return TangencyVerdict::NotTangent;
    throw std::invalid_argument("unknown tangency verdict: " + s);
}
inline TangencyReport tangency_from_json(const json& j) {
    TangencyReport r;
    for (int i = 0; i < 3; ++i) r.equations[i] = verdict_from_string(j.at("equations").at(i));
    r.tangent = j.at("tangent").get<bool>();
    r.samples = j.at("samples").get<int>();
    r.seed = j.at("seed").get<std::uint64_t>();
    r.witness = j.at("witness").get<std::string>();
    return r;
}
inline bool operator==(const TangencyReport& a, const TangencyReport& b) {
    return a.equations == b.equations && a.tangent == b.tangent && a.samples == b.samples &&
           a.seed == b.seed && a.witness == b.witness;
}

inline json to_json(const PoleOrderReport& r) {
    json entries = json::array();
    for (const PoleOrderEntry& e : r.entries)
        entries.push_back(json{{"var", e.var.str()}, {"order", e.order}});
    return json{{"entries", entries}, {"order", r.order}};
}
inline PoleOrderReport pole_order_from_json(const json& j) {
    PoleOrderReport r;
    for (const json& e : j.at("entries"))
        r.entries.push_back({var_from_string(e.at("var").get<std::string>()), e.at("order").get<int>()});
    r.order = j.at("order").get<int>();
    return r;
}
inline bool operator==(const PoleOrderEntry& a, const PoleOrderEntry& b) {
    return a.var == b.var && a.order == b.order;
}
inline bool operator==(const PoleOrderReport& a, const PoleOrderReport& b) {
    return a.entries == b.entries && a.order == b.order;
}

inline json to_json(const NoCommonSolutionResult& r) {
    json cof = json::array();
    for (const Polynomial& p : r.certificate.cofactors) cof.push_back(p.str());
    return json{{"m", r.m},
                {"ok", r.ok},
                {"gcd", r.certificate.gcd.str()},
                {"cofactors", cof},
                {"kernel_dim", r.kernel_dim}};
}

// ---------------------------------------------------------------------------
// Argument helpers
// ---------------------------------------------------------------------------

inline std::vector<int> parse_int_list(const std::string& text, std::size_t min_n, std::size_t max_n,
                                       const std::string& what) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            int v = std::stoi(item, &used);
            if (used != item.size()) throw std::invalid_argument(item);
            out.push_back(v);
        } catch (const std::exception&) {
            throw UsageError("cannot parse " + what + " entry '" + item + "'");
        }
    }
    if (out.size() < min_n || out.size() > max_n)
        throw UsageError(what + ": expected between " + std::to_string(min_n) + " and " +
                         std::to_string(max_n) + " comma-separated integers");
    return out;
}

inline std::vector<Scalar> parse_scalar_list(const std::string& text, std::size_t n, const std::string& what) {
    std::vector<Scalar> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            out.push_back(parse_scalar(item));
        } catch (const std::exception&) {
            throw UsageError("cannot parse " + what + " entry '" + item + "'");
        }
    }
    if (out.size() != n)
        throw UsageError(what + ": expected " + std::to_string(n) + " comma-separated rationals");
    return out;
}

inline void check_degrees(const std::vector<int>& degrees) {
    for (int d : degrees)
        if (d < 1 || d > 200) throw UsageError("degrees must be in 1..200");
    if (degrees.size() == 2 && degrees[0] > degrees[1])
        throw UsageError("two-component degrees must satisfy d1 <= d2");
}

// ---------------------------------------------------------------------------
// Command driver
// ---------------------------------------------------------------------------

struct Response {
    json doc;                          // {command, inputs, result, verdict}
    std::vector<std::string> table;    // human-readable lines
    int exit_code = 0;
};

namespace detail {

inline void set_verdict(Response& r, bool verdict) {
    r.doc["verdict"] = verdict;
    r.exit_code = verdict ? 0 : 1;
}

inline std::string frontier_text(const FrontierEntry& f) {
    std::ostringstream line;
    line << "d1 = " << f.d1 << ": ";
    if (!f.min_d2) {
        line << "no passing d2 in range";
    } else if (*f.min_d2 == f.d1) {
        line << "all d2 >= d1 pass";
    } else {
        line << "passes for d2 >= " << *f.min_d2;
    }
    return line.str();
}

inline VectorField build_family_field(const std::string& family, int degree,
                                      const std::string& a_entries, const std::string& v_entries,
                                      const std::string& free_entries, const std::string& alpha_text,
                                      int kind, bool swap, std::uint64_t seed) {
    if (family == "slanted") {
        std::vector<Scalar> v = v_entries.empty()
                                    ? std::vector<Scalar>{Rng(seed).small_scalar(), Rng(seed + 1).small_scalar(),
                                                          Rng(seed + 2).small_nonzero_scalar()}
                                    : parse_scalar_list(v_entries, 3, "--v");
        return slanted_field(v[0], v[1], v[2], degree);
    }
    if (family == "matrixA") {
        Matrix<Scalar> a(3, 3, Scalar(0));
        if (a_entries.empty()) {
            Rng rng(seed);
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 2; ++j) a(i, j) = rng.small_scalar();
        } else {
            std::vector<Scalar> entries = parse_scalar_list(a_entries, 9, "--A");
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j) a(i, j) = entries[static_cast<std::size_t>(3 * i + j)];
            for (int i = 0; i < 3; ++i)
                if (a(i, 2) != 0) throw UsageError("--A: third column must be zero");
        }
        return matrixA_field(a, degree).field;
    }
    if (family == "third") {
        std::vector<Scalar> f = free_entries.empty() ? std::vector<Scalar>{Scalar(1), Scalar(1), Scalar(1)}
                                                     : parse_scalar_list(free_entries, 3, "--free");
        std::map<MultiIndex, Scalar> free_map;
        auto idx = third_package_free_indices();
        for (std::size_t i = 0; i < idx.size(); ++i) free_map[idx[i]] = f[i];
        return third_package(free_map);
    }
    if (family == "first") {
        if (alpha_text.empty()) throw UsageError("--alpha is required for a single first-package field");
        std::vector<int> a = parse_int_list(alpha_text, 2, 2, "--alpha");
        FirstPackageKind k = kind == 21 ? FirstPackageKind::V21 : FirstPackageKind::V30;
        try {
            return first_package(MultiIndex(a[0], a[1]), k, swap);
        } catch (const std::domain_error& e) {
            throw UsageError(e.what());
        }
    }
    throw UsageError("unknown family '" + family + "'");
}

}  // namespace detail

inline Response dispatch(const std::string& command, CLI::App* sub) {
    Response res;
    res.doc["command"] = command;
    res.doc["verdict"] = nullptr;
    json& inputs = res.doc["inputs"];
    inputs = json::object();
    auto opt_str = [&](const std::string& name) {
        return sub->count(name) ? sub->get_option(name)->as<std::string>() : std::string();
    };

    if (command == "chern" || command == "positivity") {
        std::vector<int> degrees = parse_int_list(opt_str("--degrees"), 1, 2, "--degrees");
        check_degrees(degrees);
        inputs["degrees"] = degrees;
        LogPairData data = log_chern(degrees);
        res.doc["result"] = to_json(data);
        std::ostringstream line;
        line << "degrees = (";
        for (std::size_t i = 0; i < degrees.size(); ++i) line << (i ? "," : "") << degrees[i];
        line << ")  c1bar^2 = " << data.c1bar_sq << "  c2bar = " << data.c2bar
             << "  13*c1bar^2 - 9*c2bar = " << data.positivity_lhs();
        res.table.push_back(line.str());
        if (command == "positivity") {
            bool verdict = data.positivity_lhs() > 0;
            res.table.push_back(std::string("positivity (13*c1bar^2 - 9*c2bar > 0): ") +
                                (verdict ? "true" : "false"));
            detail::set_verdict(res, verdict);
        } else if (data.c1bar_sq == 0) {
            res.doc["result"]["note"] = "c1bar^2 = 0: threshold criteria inapplicable";
            res.table.push_back("note: c1bar^2 = 0, threshold criteria inapplicable");
        }
        return res;
    }

    if (command == "threshold") {
        std::vector<int> degrees = parse_int_list(opt_str("--degrees"), 1, 2, "--degrees");
        check_degrees(degrees);
        int m = sub->get_option("--m")->as<int>();
        long long bound = sub->count("--bound") ? sub->get_option("--bound")->as<long long>() : 7;
        inputs = json{{"degrees", degrees}, {"m", m}, {"bound", bound}};
        CriterionReport report = theorem_threshold(degrees, m, bound);
        res.doc["result"] = to_json(report);
        std::ostringstream line;
        line << "threshold_value = " << to_string(report.threshold_value) << "  bound = " << bound
             << "  verdict = " << (report.verdict ? "true" : "false");
        res.table.push_back(line.str());
        detail::set_verdict(res, report.verdict);
        return res;
    }

    if (command == "scan") {
        int components = sub->get_option("--components")->as<int>();
        int m = sub->get_option("--m")->as<int>();
        long long bound = sub->count("--bound") ? sub->get_option("--bound")->as<long long>() : 7;
        int d_max = sub->get_option("--max")->as<int>();
        inputs = json{{"components", components}, {"m", m}, {"bound", bound}, {"max", d_max}};
        ScanResult scan = scan_degrees(components, m, bound, d_max);
        res.doc["result"] = to_json(scan);
        if (components == 1) {
            for (const ScanRow& row : scan.rows) {
                std::ostringstream line;
                line << "d = " << row.degrees[0] << "  ";
                if (!row.applicable) {
                    line << "inapplicable (c1bar^2 = 0)";
                } else {
                    line << "threshold = " << to_string(row.threshold_value) << "  "
                         << (row.verdict ? "pass" : "fail");
                }
                res.table.push_back(line.str());
            }
            res.table.push_back(scan.min_passing_degree
                                    ? "minimal passing degree: " + std::to_string(*scan.min_passing_degree)
                                    : "no degree passes in range");
        } else {
            for (const FrontierEntry& f : scan.frontier) res.table.push_back(detail::frontier_text(f));
        }
        for (const std::string& v : scan.monotonicity_violations)
            res.table.push_back("monotonicity violation: " + v);
        return res;
    }

    if (command == "chi-leading") {
        ChiLeadingResult chi = chi_leading_coefficient();
        res.doc["result"] = json{{"coefficient", chi.coefficient.str()},
                                 {"expected", chi_expected_leading_coefficient().str()},
                                 {"matches", chi.matches_expected}};
        res.table.push_back("m^4 coefficient of chi = " + chi.coefficient.str());
        res.table.push_back(std::string("equals (13*c1bar_sq - 9*c2bar)/648: ") +
                            (chi.matches_expected ? "true" : "false"));
        detail::set_verdict(res, chi.matches_expected);
        return res;
    }

    if (command == "jet-equations") {
        int degree = sub->get_option("--degree")->as<int>();
        if (degree < 1 || degree > 30) throw UsageError("--degree must be in 1..30");
        inputs["degree"] = degree;
        JetVarietyPresentation pres = universal_jet_equations(degree);
        res.doc["result"] =
            json{{"E1", pres.e1.str()}, {"E2", pres.e2.str()}, {"E3", pres.e3.str()}};
        res.table.push_back("E1 = " + pres.e1.str());
        res.table.push_back("E2 = " + pres.e2.str());
        res.table.push_back("E3 = " + pres.e3.str());
        return res;
    }

    if (command == "transform") {
        int order = sub->get_option("--order")->as<int>();
        bool inverse = sub->count("--inverse") > 0;
        std::vector<int> divisor = parse_int_list(
            sub->count("--divisor") ? opt_str("--divisor") : std::string("3"), 1, 4, "--divisor");
        if (order < 1 || order > kMaxJetOrder) throw UsageError("--order must be in 1..4");
        std::set<int> divisor_set(divisor.begin(), divisor.end());
        for (int j : divisor_set)
            if (j < 1 || j > 4) throw UsageError("--divisor entries must be coordinate indices 1..4");
        inputs = json{{"order", order}, {"inverse", inverse}, {"divisor", divisor}};
        LogChartTransform t = log_transform(order, divisor_set);
        json result = json::object();
        if (!inverse) {
            for (const auto& [v, p] : t.forward) {
                if (v.order() > order) continue;
                result[v.str()] = p.str();
                res.table.push_back(v.str() + " = " + p.str());
            }
        } else {
            for (const auto& [v, f] : t.inverse) {
                if (v.order() > order) continue;
                result[v.str()] = f.str();
                res.table.push_back(v.str() + " = " + f.str());
            }
        }
        res.doc["result"] = result;
        return res;
    }

    if (command == "tangency" || command == "pole-order") {
        std::string family = opt_str("--family");
        int degree = sub->count("--degree") ? sub->get_option("--degree")->as<int>() : 6;
        if (degree < 1 || degree > 30) throw UsageError("--degree must be in 1..30");
        std::uint64_t seed = sub->count("--seed") ? sub->get_option("--seed")->as<std::uint64_t>() : 1;
        int kind = sub->count("--kind") ? sub->get_option("--kind")->as<int>() : 30;
        if (kind != 30 && kind != 21) throw UsageError("--kind must be 30 or 21");
        bool swap = sub->count("--swap") > 0;
        inputs = json{{"family", family}, {"degree", degree}, {"seed", seed}};

        bool sweep = family == "first" && sub->count("--alpha") == 0;
        std::vector<std::pair<std::string, VectorField>> fields;
        if (sweep) {
            for (const FirstPackageId& id : first_package_family(degree)) {
                std::string name = std::string("V") + (id.kind == FirstPackageKind::V30 ? "30" : "21") +
                                   (id.swap_z12 ? "'" : "") + "_" + id.alpha.str();
                fields.emplace_back(name, first_package(id.alpha, id.kind, id.swap_z12));
            }
            if (fields.empty()) throw UsageError("no admissible first-package fields at this degree");
        } else {
            fields.emplace_back(family,
                                detail::build_family_field(family, degree, opt_str("--A"), opt_str("--v"),
                                                           opt_str("--free"), opt_str("--alpha"), kind,
                                                           swap, seed));
        }

        if (command == "tangency") {
            int samples = sub->count("--samples") ? sub->get_option("--samples")->as<int>() : 100;
            if (samples < 1 || samples > 10000) throw UsageError("--samples must be in 1..10000");
            inputs["samples"] = samples;
            JetVarietyPresentation pres = universal_jet_equations(degree);
            json rows = json::array();
            bool all = true;
            for (const auto& [name, field] : fields) {
                TangencyReport report = check_tangency(field, pres, samples, seed);
                all = all && report.tangent;
                json row = to_json(report);
                row["field"] = name;
                rows.push_back(row);
                res.table.push_back(name + ": E1 " + to_string(report.equations[0]) + ", E2 " +
                                    to_string(report.equations[1]) + ", E3 " +
                                    to_string(report.equations[2]) +
                                    (report.witness.empty() ? "" : "  [" + report.witness + "]"));
            }
            res.doc["result"] = json{{"fields", rows}, {"all_tangent", all}};
            res.table.push_back(std::string("all tangent: ") + (all ? "true" : "false"));
            detail::set_verdict(res, all);
        } else {
            long long bound = sub->count("--bound") ? sub->get_option("--bound")->as<long long>() : -1;
            json rows = json::array();
            int worst = 0;
            for (const auto& [name, field] : fields) {
                PoleOrderReport report = pole_order(field);
                worst = std::max(worst, report.order);
                json row = to_json(report);
                row["field"] = name;
                rows.push_back(row);
                res.table.push_back(name + ": pole order " + std::to_string(report.order));
            }
            res.doc["result"] = json{{"fields", rows}, {"max_order", worst}};
            if (bound >= 0) {
                bool verdict = worst <= bound;
                res.table.push_back("max order " + std::to_string(worst) + " <= bound " +
                                    std::to_string(bound) + ": " + (verdict ? "true" : "false"));
                detail::set_verdict(res, verdict);
            }
        }
        return res;
    }

    if (command == "lambda") {
        int m = sub->get_option("--m")->as<int>();
        if (m < 3 || m > 5) throw UsageError("--m must be 3, 4 or 5");
        inputs["m"] = m;
        LambdaSystem sys = lambda_system(m);
        NoCommonSolutionResult ncs = no_common_solution(sys);
        json result = to_json(ncs);
        json polys = json::array();
        for (const Polynomial& p : sys.polys) polys.push_back(p.str());
        result["system"] = polys;
        res.doc["result"] = result;
        for (const Polynomial& p : sys.polys) res.table.push_back("equation: " + p.str() + " = 0");
        if (sys.kernel_obligation)
            res.table.push_back("rotation kernel on degree-3 forms: dimension " +
                                std::to_string(ncs.kernel_dim));
        else
            res.table.push_back("gcd = " + ncs.certificate.gcd.str());
        res.table.push_back(std::string("no common solutions: ") + (ncs.ok ? "true" : "false"));
        detail::set_verdict(res, ncs.ok);
        return res;
    }

    if (command == "parse") {
        std::string text = opt_str("--text");
        Polynomial p = parse_polynomial(text);  // ParseError maps to exit 2
        inputs["text"] = text;
        res.doc["result"] = json{{"canonical", p.str()}, {"terms", p.term_count()}};
        res.table.push_back(p.str());
        return res;
    }

    throw std::logic_error("unhandled command " + command);
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact-arithmetic toolkit for logarithmic jet spaces of plane-curve complements"};
    app.require_subcommand(1);
    bool json_mode = false;
    std::string out_file;
    app.add_flag("--json", json_mode, "emit machine-readable JSON on stdout");
    app.add_option("--out", out_file, "also write the JSON document to this file");

    auto add = [&](const std::string& name, const std::string& desc) { return app.add_subcommand(name, desc); };
    CLI::App* chern = add("chern", "logarithmic Chern numbers of (P2, C)");
    chern->add_option("--degrees", "component degrees, e.g. 14 or 3,5")->required();
    CLI::App* positivity = add("positivity", "sign of 13*c1bar^2 - 9*c2bar");
    positivity->add_option("--degrees", "component degrees")->required();
    CLI::App* threshold = add("threshold", "degeneracy threshold m*(13c1^2-9c2)(d-3)/(12c1^2) > bound");
    threshold->add_option("--degrees", "component degrees")->required();
    threshold->add_option("--m", "weighted degree of the jet differential")->required();
    threshold->add_option("--bound", "right-hand bound (default 7)");
    CLI::App* scan = add("scan", "scan degree tuples against the threshold criterion");
    scan->add_option("--components", "1 or 2")->required();
    scan->add_option("--m", "weighted degree")->required();
    scan->add_option("--bound", "right-hand bound (default 7)");
    scan->add_option("--max", "largest degree to scan")->required();
    CLI::App* chi = add("chi-leading", "m^4 coefficient of chi of the order-2 jet filtration");
    (void)chi;
    CLI::App* jeteq = add("jet-equations", "defining equations of the vertical log 2-jet space");
    jeteq->add_option("--degree", "curve degree d")->required();
    CLI::App* transform = add("transform", "log <-> standard jet coordinate transform");
    transform->add_option("--order", "jet order k <= 4")->required();
    transform->add_flag("--inverse", "print the inverse map (log jets in terms of standard ones)");
    transform->add_option("--divisor", "divisor coordinate indices (default 3)");
    CLI::App* tangency = add("tangency", "verify tangency of a vector-field family");
    CLI::App* pole = add("pole-order", "pole-order report of a vector-field family");
    for (CLI::App* s : {tangency, pole}) {
        s->add_option("--family", "first|slanted|matrixA|third")->required();
        s->add_option("--degree", "curve degree d");
        s->add_option("--seed", "sampling seed");
        s->add_option("--A", "nine rationals, row-major 3x3 matrix with zero third column");
        s->add_option("--v", "three rationals v1,v2,v3 for the slanted family");
        s->add_option("--free", "three rationals for the free third-package coefficients");
        s->add_option("--alpha", "coefficient index a1,a2 selecting a single first-package field");
        s->add_option("--kind", "30 or 21 (first package)");
        s->add_flag("--swap", "permute the roles of z1 and z2 (first package)");
    }
    tangency->add_option("--samples", "number of exact on-variety sample points");
    pole->add_option("--bound", "assert max pole order <= bound");
    CLI::App* lambda = add("lambda", "lambda-polynomial systems and their coprimality");
    lambda->add_option("--m", "weighted degree, 3..5")->required();
    CLI::App* parse_cmd = add("parse", "parse a polynomial literal and print its canonical form");
    parse_cmd->add_option("--text", "polynomial literal")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        CLI::App* sub = app.get_subcommands().front();
        Response res = dispatch(sub->get_name(), sub);
        if (json_mode) {
            out << res.doc.dump(2) << "\n";
        } else {
            for (const std::string& line : res.table) out << line << "\n";
        }
        if (!out_file.empty()) {
            std::ofstream f(out_file);
            if (!f) throw std::runtime_error("cannot write " + out_file);
            f << res.doc.dump(2) << "\n";
        }
        return res.exit_code;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    }
}

}  // namespace logjet::cli

#endif
