#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace anderson::selftest {

struct Options {
    bool reduced = false;      // smaller instances, same checks; used by the CLI selftest
    int criterion = 0;         // 0 = all, otherwise 1..8
    std::string inject_fault;  // "eigh-residual" corrupts the eigensolver residual bound
    int threads = 0;
    std::ostream* out = nullptr;  // when set, one [PASS]/[FAIL] line per criterion
};

struct CheckResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

std::vector<CheckResult> run(const Options& opts);

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace anderson::selftest
