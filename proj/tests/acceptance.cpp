// Acceptance suite.  Runs every check in the
// verification library, prints each one, then one line per criterion,
// and exits nonzero if anything failed.

#include <cstdio>
#include <map>

#include "riocalc/verify.hpp"

#ifndef RIOCALC_FIXTURE_DIR
#define RIOCALC_FIXTURE_DIR "fixtures/oeis"
#endif

namespace {
const char* criterion_names[] = {
    "",
    "golden matrices reproduce every display",
    "involution suite holds at 16x16",
    "g-power identity preserves involutions",
    "numeric Hankel transforms",
    "polynomial Hankel transforms",
    "continued-fraction round trips and Heilermann",
    "moment-array route equals closed-form route",
    "production matrices: series route equals matrix route",
    "OEIS fixture cross-checks",
    "seed-pinned property suites",
};
}

int main() {
    riocalc::VerifyReport rep = riocalc::run_verification_suite(RIOCALC_FIXTURE_DIR);

    std::map<int, std::pair<int, int>> per_criterion;  // criterion -> {pass, total}
    for (const auto& r : rep.checks) {
        auto& [pass, total] = per_criterion[r.criterion];
        ++total;
        if (r.pass) ++pass;
        std::printf("%s %s%s%s\n", r.pass ? "PASS" : "FAIL", r.id.c_str(),
                    r.detail.empty() ? "" : ": ", r.detail.c_str());
    }
    std::printf("----\n");
    for (const auto& [crit, counts] : per_criterion) {
        bool ok = counts.first == counts.second;
        std::printf("criterion %2d: %s (%d/%d) %s\n", crit, ok ? "PASS" : "FAIL", counts.first,
                    counts.second, criterion_names[crit]);
    }
    return rep.all_pass ? 0 : 1;
}
