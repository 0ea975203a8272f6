#pragma once

#include "hg1111/classify.hpp"
#include "hg1111/hgm.hpp"

namespace hg {

struct EulerFactorData {
    long long p = 0;
    int sigma_p = 0;
    long long a_p = 0;
    bool good = false;
    std::string skip_reason;
};

// Calibration of a_p = s * (trace - c0 * sigma(p) * p), frozen from case 1
// against the level-8 form at p in {3,5,7,11,13}.
struct Calibration {
    int s = 1;
    int c0 = 1;
};
extern const Calibration kCalibration;

bool good_prime_at_conifold(const CaseRecord& c, long long p);

EulerFactorData euler_factor_conifold(const CaseRecord& c, long long p);
EulerFactorData euler_factor_conifold(const CaseRecord& c, const FpContext& ctx);

std::vector<EulerFactorData> ap_series(const CaseRecord& c, long long pmax);

// Re-derive (s, c0) from reference coefficients; used by the regression test.
std::optional<Calibration> fit_calibration(const CaseRecord& c,
                                           const std::map<long long, long long>& ref_ap,
                                           const std::vector<long long>& primes);

}  // namespace hg
