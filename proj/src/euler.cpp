#include "hg1111/euler.hpp"

#include <cmath>

namespace hg {

// a_p = s (trace - c0 sigma(p) p): fixed by case 1 against the level-8 form
// at p in {3,5,7,11,13}; the same pair fits every engine-verified case.
const Calibration kCalibration = {-1, -1};

bool good_prime_at_conifold(const CaseRecord& c, long long p) {
    if (!is_good_prime(c.gamma_red, p)) return false;
    if ((c.D % p) == 0 || (c.E % p) == 0) return false;
    return true;
}

EulerFactorData euler_factor_conifold(const CaseRecord& c, const FpContext& ctx) {
    EulerFactorData d;
    d.p = ctx.p;
    if (!good_prime_at_conifold(c, ctx.p)) {
        d.skip_reason = "bad prime";
        return d;
    }
    d.sigma_p = sigma(c.D, ctx.p);
    long long tr = hgm_trace(c.gamma_red, Rat(1), ctx);
    d.a_p = kCalibration.s * (tr - kCalibration.c0 * d.sigma_p * ctx.p);
    d.good = true;
    double bound = 2.0 * std::pow((double)ctx.p, 1.5);
    if (std::abs((double)d.a_p) > bound + 0.5)
        throw std::runtime_error("euler_factor_conifold: Weil bound violated at p=" +
                                 std::to_string(ctx.p) + " for case " + std::to_string(c.index));
    return d;
}

EulerFactorData euler_factor_conifold(const CaseRecord& c, long long p) {
    if (!good_prime_at_conifold(c, p)) {
        EulerFactorData d;
        d.p = p;
        d.skip_reason = "bad prime";
        return d;
    }
    return euler_factor_conifold(c, fp_context(p));
}

std::vector<EulerFactorData> ap_series(const CaseRecord& c, long long pmax) {
    std::vector<EulerFactorData> out;
    for (long long p : primes_up_to(pmax)) {
        if (p == 2) {
            EulerFactorData d;
            d.p = 2;
            d.skip_reason = "bad prime";
            out.push_back(d);
            continue;
        }
        out.push_back(euler_factor_conifold(c, p));
    }
    return out;
}

std::optional<Calibration> fit_calibration(const CaseRecord& c,
                                           const std::map<long long, long long>& ref_ap,
                                           const std::vector<long long>& primes) {
    std::optional<Calibration> found;
    for (int s : {1, -1}) {
        for (int c0 : {0, 1, -1}) {
            bool ok = true;
            for (long long p : primes) {
                if (!good_prime_at_conifold(c, p)) continue;
                auto it = ref_ap.find(p);
                if (it == ref_ap.end()) continue;
                long long tr = hgm_trace(c.gamma_red, Rat(1), fp_context(p));
                long long ap = s * (tr - c0 * sigma(c.D, p) * p);
                if (ap != it->second) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                if (found) return std::nullopt;  // ambiguous
                found = Calibration{s, c0};
            }
        }
    }
    return found;
}

}  // namespace hg
