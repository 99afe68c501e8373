#include "arbordyn/json_io.hpp"

#include <fstream>

namespace arbordyn {

using json = nlohmann::ordered_json;

json to_json(const Factorization& f, const FieldDesc& fd) {
    json j;
    j["unit"] = fd.format(f.unit);
    json fs = json::array();
    for (const auto& [g, mult] : f.factors) fs.push_back({{"poly", format(g)}, {"mult", mult}});
    j["factors"] = fs;
    j["complete"] = f.complete;
    return j;
}

json to_json(const InsepReport& r) {
    json j;
    j["e"] = r.e;
    switch (r.branch) {
        case InsepCase::NonSquareC1: j["branch"] = "NonSquareC1"; break;
        case InsepCase::SquareC1NonConstExpr: j["branch"] = "SquareC1NonConstExpr"; break;
        case InsepCase::SquareC1ConstExpr: j["branch"] = "SquareC1ConstExpr"; break;
    }
    j["singular"] = r.singular.yes;
    j["eta"] = r.singular.eta;
    j["tested_expr"] = r.tested_expr;
    j["root_chain"] = r.root_chain;
    return j;
}

json to_json(const BoundConstants& b) {
    return json{{"e", b.e}, {"A", b.A}, {"B", b.B}, {"n0", b.n0}, {"singular", b.singular}};
}

json to_json(const EffectiveBound& e) {
    json j;
    j["constants"] = to_json(e.constants);
    j["N"] = e.N;
    json rows = json::array();
    for (const auto& r : e.ledger)
        rows.push_back({{"n", r.n}, {"lhs", r.lhs}, {"rhs", r.rhs}, {"excluded", r.excluded}});
    j["ledger"] = rows;
    return j;
}

json to_json(const ZsigmondyReport& r) {
    json j;
    j["scanned_up_to"] = r.scanned_up_to;
    j["members"] = r.members;
    j["vanishing"] = r.vanishing;
    json rows = json::array();
    for (const auto& p : r.per_n) {
        json row{{"n", p.n}, {"member", p.member}, {"detailed", p.detailed}};
        json prim = json::array();
        for (const auto& [g, m] : p.primitive) prim.push_back({{"poly", g}, {"mult", m}});
        row["primitive"] = prim;
        rows.push_back(row);
    }
    j["per_n"] = rows;
    return j;
}

json to_json(const ExceptionalPrimes& e) {
    json j;
    j["T"] = e.T;
    j["S"] = e.S;
    json rs = json::array();
    for (const auto& [p, why] : e.reasons) rs.push_back({{"p", p}, {"reason", why}});
    j["reasons"] = rs;
    return j;
}

json to_json(const GlobalBound& g) {
    json j;
    j["N_phi"] = g.N_phi;
    j["generic"] = to_json(g.generic);
    j["primes"] = to_json(g.primes);
    json pp = json::array();
    for (const auto& [q, n] : g.per_prime) pp.push_back({{"q", q}, {"N", n}});
    j["per_prime"] = pp;
    return j;
}

json to_json(const StollReport& s) {
    json j;
    j["depth"] = s.depth;
    j["mode"] = s.mode == StollMode::Geometric ? "geometric" : "arithmetic";
    j["base"] = s.base;
    json rows = json::array();
    for (const auto& r : s.parity_matrix) {
        std::string bits;
        for (uint8_t b : r) bits += b ? '1' : '0';
        rows.push_back(bits);
    }
    j["parity_matrix"] = rows;
    j["rank"] = s.rank;
    j["surjective_up_to"] = s.surjective_up_to;
    return j;
}

json to_json(const MasonStothersReport& m) {
    json j;
    j["preconditions_ok"] = m.preconditions_ok;
    j["precondition_failure"] = m.precondition_failure;
    j["e"] = m.e;
    j["lhs"] = m.lhs;
    j["places"] = m.places;
    j["rhs"] = m.rhs;
    j["holds"] = m.holds;
    return j;
}

json to_json(const JonesReport& r) {
    json j;
    j["depth"] = r.depth;
    json subsets = json::array();
    for (const auto& s : r.subsets) {
        json js;
        js["I"] = s.I;
        js["deg_d"] = s.deg_d;
        json df = json::array();
        for (const auto& [p, m] : s.disc_factors) df.push_back({{"p", p}, {"mult", m}});
        js["disc_factors"] = df;
        js["unfactored"] = s.unfactored;
        js["candidate_primes"] = s.candidate_primes;
        json vs = json::array();
        for (const auto& v : s.verdicts) vs.push_back({{"p", v.p}, {"verdict", v.verdict}});
        js["verdicts"] = vs;
        js["cofactor_certificate"] = s.cofactor_certificate;
        subsets.push_back(js);
    }
    j["subsets"] = subsets;
    j["bad_primes_found"] = r.bad_primes_found;
    json sd = json::array();
    for (const auto& [p, rank] : r.scan_deficiencies) sd.push_back({{"p", p}, {"rank", rank}});
    j["scan_deficiencies"] = sd;
    j["scan_cap"] = r.scan_cap;
    j["complete"] = r.complete;
    return j;
}

json to_json(const DiscRecursionReport& d) {
    json j;
    j["n"] = d.n;
    j["ratio"] = d.ratio;
    j["is_pm_power_of_two"] = d.is_pm_power_of_two;
    if (d.exponent)
        j["exponent"] = *d.exponent;
    else
        j["exponent"] = nullptr;
    j["negative"] = d.negative;
    return j;
}

json wrap_report(const std::string& command, json payload) {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["command"] = command;
    j["report"] = std::move(payload);
    return j;
}

namespace {

bool type_matches(const nlohmann::json& v, const std::string& type) {
    if (type == "object") return v.is_object();
    if (type == "array") return v.is_array();
    if (type == "string") return v.is_string();
    if (type == "number") return v.is_number();
    if (type == "boolean") return v.is_boolean();
    if (type == "number_or_null") return v.is_number() || v.is_null();
    return false;
}

}  // namespace

SchemaCheck schema_validate(const nlohmann::json& report, const std::string& schema_path) {
    std::ifstream in(schema_path);
    if (!in) return {false, "schema file not readable: " + schema_path};
    nlohmann::json schema;
    try {
        schema = nlohmann::json::parse(in);
    } catch (const std::exception& e) {
        return {false, std::string("schema parse failure: ") + e.what()};
    }
    if (!report.is_object()) return {false, "report is not a JSON object"};
    if (!report.contains("schema_version") || !report["schema_version"].is_string())
        return {false, "missing schema_version"};
    std::string version = schema.value("version", "");
    if (report["schema_version"].get<std::string>() != version)
        return {false, "version mismatch: report has " +
                           report["schema_version"].get<std::string>() + ", schema is " + version};
    if (!report.contains("command") || !report["command"].is_string())
        return {false, "missing command"};
    std::string cmd = report["command"].get<std::string>();
    if (!schema.contains("commands") || !schema["commands"].contains(cmd))
        return {false, "unknown command: " + cmd};
    if (!report.contains("report") || !report["report"].is_object())
        return {false, "missing report payload"};
    const auto& required = schema["commands"][cmd]["required"];
    for (auto it = required.begin(); it != required.end(); ++it) {
        const std::string& field = it.key();
        std::string type = it.value().get<std::string>();
        if (!report["report"].contains(field))
            return {false, "missing required field: " + field};
        if (!type_matches(report["report"][field], type))
            return {false, "field has wrong type: " + field + " (want " + type + ")"};
    }
    return {true, ""};
}

}  // namespace arbordyn
