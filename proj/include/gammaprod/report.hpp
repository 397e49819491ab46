#pragma once

#include "gammaprod/identities.hpp"

#include <nlohmann/json.hpp>

#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace gammaprod {

enum class ReportFormat { json, csv, text };

inline ReportFormat parse_format(const std::string& name) {
    if (name == "json") return ReportFormat::json;
    if (name == "csv") return ReportFormat::csv;
    if (name == "text") return ReportFormat::text;
    throw std::invalid_argument("unknown format '" + name + "' (expected json, csv or text)");
}

inline constexpr const char* kCsvHeader = "identity_id,parameter,prec_bits,lhs,rhs,abs_err,rel_err,pass,elapsed_ms";

inline nlohmann::ordered_json to_json(const VerificationRecord& r) {
    nlohmann::ordered_json j;
    j["identity_id"] = std::string(to_string(r.identity_id));
    j["parameter"] = r.parameter;
    j["prec_bits"] = r.prec_bits;
    j["lhs"] = r.lhs;
    j["rhs"] = r.rhs;
    j["abs_err"] = r.abs_err;
    j["rel_err"] = r.rel_err;
    j["pass"] = r.pass;
    j["elapsed_ms"] = r.elapsed_ms;
    return j;
}

inline VerificationRecord record_from_json(const nlohmann::json& j) {
    VerificationRecord r;
    const auto id = parse_identity(j.at("identity_id").get<std::string>());
    if (!id) throw std::invalid_argument("unknown identity_id in report");
    r.identity_id = *id;
    r.parameter = j.at("parameter").get<std::int64_t>();
    r.prec_bits = j.at("prec_bits").get<int>();
    r.lhs = j.at("lhs").get<std::string>();
    r.rhs = j.at("rhs").get<std::string>();
    r.abs_err = j.at("abs_err").get<std::string>();
    r.rel_err = j.at("rel_err").get<std::string>();
    r.pass = j.at("pass").get<bool>();
    r.elapsed_ms = j.at("elapsed_ms").get<std::int64_t>();
    return r;
}

/// Newline-delimited JSON reader for reports written by `write_records`.
inline std::vector<VerificationRecord> read_json_records(std::istream& in) {
    std::vector<VerificationRecord> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        out.push_back(record_from_json(nlohmann::json::parse(line)));
    }
    return out;
}

inline std::string csv_row(const VerificationRecord& r) {
    std::ostringstream os;
    os << to_string(r.identity_id) << ',' << r.parameter << ',' << r.prec_bits << ',' << r.lhs << ',' << r.rhs
       << ',' << r.abs_err << ',' << r.rel_err << ',' << (r.pass ? "true" : "false") << ',' << r.elapsed_ms;
    return os.str();
}

inline std::string text_row(const VerificationRecord& r) {
    char head[256];
    std::snprintf(head, sizeof head, "%-4s %-18s %6lld  abs_err=%s  rel_err=%s  (%lld ms)", r.pass ? "PASS" : "FAIL",
                  std::string(to_string(r.identity_id)).c_str(), static_cast<long long>(r.parameter),
                  r.abs_err.c_str(), r.rel_err.c_str(), static_cast<long long>(r.elapsed_ms));
    return std::string(head) + "\n     lhs=" + r.lhs + "\n     rhs=" + r.rhs;
}

inline void write_records(std::ostream& os, const std::vector<VerificationRecord>& records, ReportFormat format) {
    switch (format) {
    case ReportFormat::json:
        for (const auto& r : records) os << to_json(r).dump() << '\n';
        break;
    case ReportFormat::csv:
        os << kCsvHeader << '\n';
        for (const auto& r : records) os << csv_row(r) << '\n';
        break;
    case ReportFormat::text:
        for (const auto& r : records) os << text_row(r) << '\n';
        break;
    }
}

} // namespace gammaprod
