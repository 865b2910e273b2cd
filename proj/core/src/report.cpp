#include "e8cat/report.hpp"

#include <algorithm>
#include <sstream>

namespace e8cat {

void VerificationReport::sort_by_id() {
    std::stable_sort(checks.begin(), checks.end(),
                     [](const CheckRecord& a, const CheckRecord& b) { return a.id < b.id; });
}

namespace {

std::string json_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            default: out += c;
        }
    }
    return out;
}

}  // namespace

std::string export_report(const VerificationReport& report, ReportFormat format) {
    std::ostringstream os;
    if (format == ReportFormat::json) {
        os << "{\"suite\":\"" << json_escape(report.suite) << "\",\"checks\":[";
        for (size_t i = 0; i < report.checks.size(); ++i) {
            const auto& c = report.checks[i];
            if (i) os << ",";
            os << "{\"id\":\"" << json_escape(c.id) << "\",\"expected\":\""
               << json_escape(c.expected) << "\",\"actual\":\"" << json_escape(c.actual)
               << "\",\"status\":\"" << (c.pass ? "pass" : "fail") << "\"}";
        }
        os << "],\"status\":\"" << (report.passed() ? "pass" : "fail") << "\"}";
        return os.str();
    }
    os << "# " << (report.suite.empty() ? std::string("report") : report.suite) << "\n\n";
    os << "| check | expected | actual | status |\n|---|---|---|---|\n";
    for (const auto& c : report.checks)
        os << "| " << c.id << " | " << c.expected << " | " << c.actual << " | "
           << (c.pass ? "pass" : "fail") << " |\n";
    os << "\noverall: " << (report.passed() ? "pass" : "fail") << "\n";
    return os.str();
}

}  // namespace e8cat
