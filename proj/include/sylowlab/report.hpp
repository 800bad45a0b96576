#pragma once

// Outcome of one identity/inequality check. Witness values are exact
// naturals rendered as decimal strings; no floating point anywhere.

#include <string>
#include <vector>

#include <json.hpp>

namespace sylowlab {

enum class CheckStatus {
    Pass,
    Fail,
    ReportOnlyHolds,     // conjectural statement, held on this input
    ReportOnlyViolated,  // conjectural statement violated: a headline finding
    Skipped,
};

struct CheckReport {
    std::string check_id;
    std::string group_name;
    unsigned prime = 0;
    CheckStatus status = CheckStatus::Skipped;
    std::string skip_reason;  // set only when status == Skipped
    std::string lhs;          // exact decimal witness
    std::string rhs;
    std::string detail;
};

inline std::string status_string(const CheckReport& r) {
    switch (r.status) {
        case CheckStatus::Pass: return "PASS";
        case CheckStatus::Fail: return "FAIL";
        case CheckStatus::ReportOnlyHolds: return "REPORT_ONLY_HOLDS";
        case CheckStatus::ReportOnlyViolated: return "REPORT_ONLY_VIOLATED";
        case CheckStatus::Skipped: return "SKIPPED(" + r.skip_reason + ")";
    }
    return "UNKNOWN";
}

inline nlohmann::ordered_json reports_to_json(const std::vector<CheckReport>& reports) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& r : reports) {
        nlohmann::ordered_json j;
        j["check_id"] = r.check_id;
        j["group"] = r.group_name;
        j["prime"] = r.prime;
        j["status"] = status_string(r);
        j["lhs"] = r.lhs;
        j["rhs"] = r.rhs;
        j["detail"] = r.detail;
        arr.push_back(std::move(j));
    }
    return arr;
}

inline std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += '"';
    return out;
}

inline std::string reports_to_csv(const std::vector<CheckReport>& reports) {
    std::string out = "check_id,group,p,status\n";
    for (const auto& r : reports) {
        out += csv_escape(r.check_id) + "," + csv_escape(r.group_name) + "," +
               std::to_string(r.prime) + "," + csv_escape(status_string(r)) + "\n";
    }
    return out;
}

}  // namespace sylowlab
