#pragma once

// Text output for spectra and check reports: line-delimited records by
// default, a comma-separated table mode for diffing. Exact integers in base
// 10 throughout.

#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace ffspec {

enum class OutputFormat { Records, Csv };

enum class CheckStatus { Pass, Fail, NotCovered, Observation };

inline const char* status_name(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "fail";
        case CheckStatus::NotCovered: return "not-covered";
        default: return "observation";
    }
}

struct CheckRecord {
    std::string name;
    std::string detail;
    std::string expected;
    std::string observed;
    CheckStatus status = CheckStatus::Pass;
};

inline CheckRecord make_check(std::string name, std::string detail, std::string expected, std::string observed,
                              bool ok) {
    return {std::move(name), std::move(detail), std::move(expected), std::move(observed),
            ok ? CheckStatus::Pass : CheckStatus::Fail};
}

inline bool all_pass(const std::vector<CheckRecord>& recs) {
    for (const auto& r : recs)
        if (r.status == CheckStatus::Fail) return false;
    return true;
}

inline std::string csv_quote(const std::string& s) {
    bool needs = s.find_first_of(",\"\n") != std::string::npos;
    if (!needs) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

inline void write_checks(std::ostream& os, const std::vector<CheckRecord>& recs, OutputFormat fmt) {
    if (fmt == OutputFormat::Csv) {
        os << "name,detail,expected,observed,status\n";
        for (const auto& r : recs)
            os << csv_quote(r.name) << ',' << csv_quote(r.detail) << ',' << csv_quote(r.expected) << ','
               << csv_quote(r.observed) << ',' << status_name(r.status) << '\n';
        return;
    }
    for (const auto& r : recs)
        os << "check name=" << r.name << " status=" << status_name(r.status) << " expected=" << r.expected
           << " observed=" << r.observed << " detail=\"" << r.detail << "\"\n";
}

template <class K, class V>
std::string format_pairs(const std::map<K, V>& m) {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (const auto& [k, v] : m) {
        if (!first) os << ", ";
        first = false;
        os << k << ':' << v;
    }
    os << '}';
    return os.str();
}

template <class K, class V>
void write_pairs(std::ostream& os, const std::map<K, V>& m, const std::string& label, OutputFormat fmt) {
    if (fmt == OutputFormat::Csv) {
        os << "i," << label << '\n';
        for (const auto& [k, v] : m) os << k << ',' << v << '\n';
        return;
    }
    for (const auto& [k, v] : m) os << label << ' ' << k << ' ' << v << '\n';
}

}  // namespace ffspec
