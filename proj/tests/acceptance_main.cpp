// Acceptance gate: runs every criterion of the battery with the default seed
// and prints one verdict line per criterion.  Exit status is nonzero when any
// criterion fails, so the gate can run under ctest directly.

#include <cstdio>

#include "defectlab/selftest.hpp"

int main() {
    int failures = 0;
    for (int i = 1; i <= defectlab::criterion_count; ++i) {
        const auto r = defectlab::run_criterion(i, 0);
        std::printf("[%s] criterion %2d %-22s %s\n", r.pass ? "PASS" : "FAIL", r.index,
                    r.name.c_str(), r.detail.c_str());
        std::fflush(stdout);
        if (!r.pass) ++failures;
    }
    std::printf("%d/%d criteria passed\n", defectlab::criterion_count - failures,
                defectlab::criterion_count);
    return failures == 0 ? 0 : 1;
}
