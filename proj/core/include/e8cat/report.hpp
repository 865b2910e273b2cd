#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace e8cat {

struct CheckRecord {
    std::string id;
    std::string expected;
    std::string actual;
    bool pass = false;
    double elapsed_ms = 0;  // excluded from exported reports (determinism)
};

struct VerificationReport {
    std::string suite;
    std::vector<CheckRecord> checks;

    bool passed() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
    size_t failures() const {
        size_t n = 0;
        for (const auto& c : checks)
            if (!c.pass) ++n;
        return n;
    }
    /// Records sorted by id so emission order is scheduling-independent.
    void sort_by_id();
};

enum class ReportFormat { json, markdown };

std::string export_report(const VerificationReport& report, ReportFormat format);

}  // namespace e8cat
