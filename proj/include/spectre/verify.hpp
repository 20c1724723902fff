#pragma once

// The verification suite: one pass/fail line per criterion.

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace spectre {

struct CriterionResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct VerifyReport {
    std::vector<CriterionResult> results;
    bool all_pass() const;
    void print(std::ostream& os) const;
};

// suites: "fast" (sub-minute checks), "proof" (the exhaustive enumerations),
// "full" (everything)
VerifyReport run_verify(const std::string& suite);

}  // namespace spectre
