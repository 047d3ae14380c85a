#pragma once

#include <algorithm>
#include <string>
#include <vector>

namespace hjf {

struct CheckResult {
    std::string name;
    bool passed = true;
    std::string witness;  ///< empty on success
};

/// Named pass/fail checks; passes iff every check passes.
struct Report {
    std::vector<CheckResult> checks;

    bool passed() const {
        return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
    }

    const CheckResult* find(const std::string& name) const {
        for (const auto& c : checks)
            if (c.name == name) return &c;
        return nullptr;
    }

    void append(const Report& other, const std::string& prefix = "") {
        for (auto c : other.checks) {
            if (!prefix.empty()) c.name = prefix + c.name;
            checks.push_back(std::move(c));
        }
    }
};

} // namespace hjf
