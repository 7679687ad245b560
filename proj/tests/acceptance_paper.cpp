// Acceptance suite: every check at its stated tolerance, one line per check.
// Exits nonzero if any check fails.

#include <cstdio>
#include <iostream>

#include "modcount/verify.hpp"

int main() {
    modcount::verify::VerifyOptions opt;
    opt.fast = false;
    opt.progress = nullptr;

    auto results = modcount::verify::run_paper_suite(opt);

    int failed = 0;
    for (const auto& r : results) {
        std::printf("%s  %-28s [%7.2fs]  %s\n", r.pass ? "PASS" : "FAIL", r.name.c_str(),
                    r.seconds, r.detail.c_str());
        if (!r.pass) ++failed;
    }
    std::printf("%d/%zu checks passed\n", int(results.size()) - failed, results.size());
    return failed == 0 ? 0 : 1;
}
