#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "modcount/common.hpp"

namespace modcount::verify {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

struct VerifyOptions {
    bool fast = false;     // caps the big sweeps at 10^6 instead of 10^7
    int threads = 0;       // 0 = OpenMP default
    u64 block_size = kDefaultBlockSize;
    std::ostream* progress = nullptr;  // one line per check as it finishes
};

// The full verification suite; returns one result per check.
std::vector<CheckResult> run_paper_suite(const VerifyOptions& opt);

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace modcount::verify
