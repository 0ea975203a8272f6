#pragma once

#include "hg1111/pointcount.hpp"

namespace hg {

// The threefold families displayed for cases 28, 30 and 41, hard-coded as
// reference data for model-equivalence checks.
FamilyPair reference_model_28();
FamilyPair reference_model_30();
FamilyPair reference_model_41();

struct Check {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct VerifyOptions {
    std::string only;      // empty = all suites
    unsigned seed = 1;
    long long budget = 100000000;
};

// property suites behind `hg verify`: gauss-sum identities, sum/point-count
// identities, model equivalences, hessian squares, twist relations
std::vector<Check> run_verification(const VerifyOptions& opt);

}  // namespace hg
