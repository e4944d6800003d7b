#pragma once

#include <json.hpp>

#include <sstream>

#include "betajack/hurwitz.hpp"
#include "betajack/verify_suites.hpp"

namespace betajack {

using Json = nlohmann::ordered_json;

inline Json weight_to_json(const WeightGF& G) {
    Json j;
    j["L"] = G.L;
    j["M"] = G.M;
    Json u = Json::array();
    for (const auto& s : G.u) u.push_back(s.str());
    j["u"] = u;
    return j;
}

inline Json table_to_json(const HurwitzTable& table) {
    Json j;
    j["G"] = weight_to_json(table.G);
    j["b"] = table.b.is_rational() ? rat_str(table.b.as_rational()) : "symbolic";
    j["N"] = table.N;
    j["R"] = table.R;
    j["source"] = table.source;
    Json entries = Json::array();
    for (const auto& [key, value] : table.entries) {
        Json e;
        e["lambda"] = key.first.str();
        e["r"] = key.second;
        e["value"] = value.str();
        entries.push_back(std::move(e));
    }
    j["entries"] = std::move(entries);
    return j;
}

inline std::string csv_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        out += c;
    }
    out += "\"";
    return out;
}

inline std::string table_to_csv(const HurwitzTable& table) {
    std::ostringstream os;
    os << "lambda,r,value\n";
    for (const auto& [key, value] : table.entries)
        os << csv_quote(key.first.str()) << "," << key.second << "," << csv_quote(value.str())
           << "\n";
    return os.str();
}

inline Json report_to_json(const ExpansionReport& report) {
    Json j;
    j["theorem"] = report.theorem;
    j["lambda"] = report.lambda.str();
    j["beta"] = report.beta_text;
    Json orders = Json::array();
    for (const auto& row : report.orders) {
        Json o;
        o["r"] = row.r;
        o["lhs"] = row.lhs.str();
        o["rhs"] = row.rhs.str();
        o["equal"] = row.equal;
        orders.push_back(std::move(o));
    }
    j["orders"] = std::move(orders);
    j["pass"] = report.pass;
    return j;
}

inline Json suite_to_json(const SuiteResult& suite) {
    Json j;
    j["suite"] = suite.name;
    j["pass"] = suite.pass();
    Json cases = Json::array();
    for (const auto& c : suite.cases) {
        Json e;
        e["name"] = c.name;
        e["pass"] = c.pass;
        if (!c.detail.empty()) e["detail"] = c.detail;
        if (c.expansion) e["report"] = report_to_json(*c.expansion);
        cases.push_back(std::move(e));
    }
    j["cases"] = std::move(cases);
    return j;
}

}  // namespace betajack
