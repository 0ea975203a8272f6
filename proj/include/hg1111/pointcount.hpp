#pragma once

#include "hg1111/toric.hpp"

namespace hg {

// Exact number of F_q points on the fiber of f over t (enumeration of the
// open torus model).  Throws when the enumeration exceeds `budget` points.
long long count_points(const FamilyPair& f, const Rat& t, long long q,
                       long long budget = 100000000);

// Fiber counts over every t in F_q^x, indexed by t = 1..q-1.
std::vector<long long> fiber_counts_all(const FamilyPair& f, long long q,
                                        long long budget = 100000000);

struct SumIdentityReport {
    long long A = 0, B = 0;
    int k = 0;
    std::vector<long long> residuals;
    bool ok = false;
};

// Fit count(t) = A + B p^k + hgm_sum(t) over the samples; residuals must all
// vanish.  Valid for vectors whose cancellation profile is a single Phi_1
// (c_1 = 1, nothing higher), which covers the oracle vectors.
SumIdentityReport verify_sum_identity(const GammaVector& g, long long p,
                                      const std::vector<Rat>& samples);

}  // namespace hg
