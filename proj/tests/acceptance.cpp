// Acceptance gate: runs the full verification suite and prints one line per
// criterion.  Exit status 0 only if every criterion passes.

#include "darboux/verify.hpp"

#include <cstdio>

int main() {
    darboux::VerifyReport rep = darboux::verify_all(false);
    for (const auto& c : rep.criteria) {
        std::printf("[%s] criterion %2d: %s (%.1fs)\n", c.pass ? "PASS" : "FAIL",
                    c.index, c.title.c_str(), c.seconds);
        for (const auto& chk : c.checks) {
            if (chk.pass) continue;
            std::printf("       failed: %s — %s (computed %.12e, reference %.12e, "
                        "tol %.1e)\n",
                        chk.id.c_str(), chk.claim.c_str(), chk.computed, chk.reference,
                        chk.tolerance);
        }
    }
    std::printf("%s\n", rep.all_pass ? "ACCEPTANCE: ALL CRITERIA PASS"
                                     : "ACCEPTANCE: FAILURES PRESENT");
    return rep.all_pass ? 0 : 1;
}
