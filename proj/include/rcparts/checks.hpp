#pragma once

// Named validation suites run by `rcparts check <suite>`.

#include <string>
#include <vector>

namespace rcparts {

struct CheckResult {
    std::string label;
    std::string measured;
    bool passed;
};

struct CheckReport {
    std::string suite;
    std::vector<CheckResult> results;

    bool passed() const;
    void add(std::string label, std::string measured, bool ok);
};

/// oracle, sumrule, eulermac, wright, table1.
const std::vector<std::string>& check_suite_names();

/// Throws std::invalid_argument for an unknown suite name.
CheckReport run_check_suite(const std::string& name);

} // namespace rcparts
