#pragma once

#include <string>
#include <vector>

namespace riocalc {

struct CheckResult {
    std::string id;
    int criterion;
    bool pass;
    std::string detail;  // first witness on failure, empty on success
};

struct VerifyReport {
    std::vector<CheckResult> checks;  // sorted by id
    bool all_pass = false;
};

/// Runs the full verification suite (golden matrices, involution checks,
/// dual-route identities, OEIS cross-checks) against the given fixture
/// directory.  Deterministic: two runs produce identical reports.
VerifyReport run_verification_suite(const std::string& fixture_dir);

std::string render_report(const VerifyReport& report, bool json);

}  // namespace riocalc
