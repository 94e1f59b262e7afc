#pragma once

#include <functional>
#include <string>
#include <vector>

namespace mkp {

struct CheckResult {
    std::string name;
    std::string status;  // "pass", "fail", "skipped"
    std::string observed;
    std::string expected;
    std::string anchor;  // provenance tag (or "plumbing")
    double seconds = 0;
};

struct VerificationReport {
    std::vector<CheckResult> checks;
    bool all_passed() const;
    int exit_code() const { return all_passed() ? 0 : 1; }
    std::string to_text() const;
    std::string to_json() const;
};

struct CheckBudget {
    double max_seconds = 3600.0;  // 0 skips everything
    int threads = 1;
    unsigned long long seed = 20260808;  // randomized invariant suite
};

/// Runs every computer-checkable claim (catalog counts, the unique min-1
/// K6 drawing, edge-deletion classes, decider agreement, gadget and
/// reduction arithmetic, the completeness round trip, randomized invariant
/// suites). Checks that do not fit the budget are reported skipped.
VerificationReport run_paper_checks(const CheckBudget& budget = {});

}  // namespace mkp
