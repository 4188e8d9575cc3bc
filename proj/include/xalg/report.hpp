#pragma once

#include <deque>
#include <string>
#include <vector>

#include "xalg/linalg.hpp"

namespace xalg {

/// One reproducible counterexample: the named check, evaluated at the named
/// basis tuple with the given degree pattern, yields the stored defect.
struct Witness {
    std::string check;
    std::string relation;
    std::string degrees;
    std::vector<int> basis;
    Vec defect;
};

struct CheckResult {
    std::string name;
    bool pass = true;
    std::vector<Witness> witnesses;
};

struct Report {
    // deque: open() hands out references that must survive later open() calls
    std::deque<CheckResult> checks;

    bool valid() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
    const CheckResult* find(const std::string& name) const {
        for (const auto& c : checks)
            if (c.name == name) return &c;
        return nullptr;
    }
    CheckResult& open(const std::string& name) {
        checks.push_back(CheckResult{name, true, {}});
        return checks.back();
    }
    void merge(const std::string& prefix, const Report& sub) {
        for (const auto& c : sub.checks) {
            CheckResult copy = c;
            copy.name = prefix + c.name;
            checks.push_back(std::move(copy));
        }
    }
};

/// Thrown when an operation requires a valid structure and validation
/// failed; carries the offending report.
struct InvalidStructure : std::runtime_error {
    Report report;
    InvalidStructure(const std::string& msg, Report r)
        : std::runtime_error(msg), report(std::move(r)) {}
};

struct InternalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace xalg
