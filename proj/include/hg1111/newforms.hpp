#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace hg::mf {

// dimension of S_4(Gamma0(N)) by the standard genus/cusp count formula
int dim_s4(long long N);

struct EigenForm {
    std::string label;  // LMFDB-style: level.4.a.<letter>
    long long level = 0;
    std::vector<long long> an;  // coefficients a_1..; an[0] unused
};

struct NewspaceResult {
    long long level = 0;
    int dim_full = 0;      // dim S_4(Gamma0(N)) (formula)
    int dim_spanned = 0;   // dimension actually spanned by the generator pool
    bool complete = false; // spanned the whole space and split cleanly
    std::vector<EigenForm> rational_newforms;  // sorted by LMFDB orbit order
    std::string note;
};

// Rational weight-4 newforms at level N with coefficients a_n to n <= nmax,
// computed from eta-quotient generators and Hecke closure over a large prime
// field.  `complete` is false when the pool fails to span (the caller then
// falls back to another data source).
NewspaceResult newspace_rational_forms(long long N, long long nmax);

}  // namespace hg::mf
