#pragma once

#include "hg1111/fp.hpp"
#include "hg1111/gamma.hpp"

namespace hg {

// Multiplicities c_d of the cyclotomic cancellation between the two sides of
// Q: c_d = min(#{i : g_i < 0, d | |g_i|}, #{i : g_i > 0, d | g_i}).
std::map<unsigned, int> cancellation_profile(const GammaVector& g);

// minimum of phi(x) = sum_i <gamma_i x> over (0,1); the uniform Tate power
// of the normalized sum
int phi_min(const GammaVector& g, bool include_breakpoints);
int hgm_mu(const GammaVector& g);

int weight_defect(const GammaVector& g);  // 0 under the phi-min normalization

// p is good for g: odd, coprime to every entry (hence to M0 and to the
// parameter denominators).
bool is_good_prime(const GammaVector& g, long long p);

// The finite hypergeometric sum for gamma at t over F_p, as a rational
// integer: (1/(p-1)) [ (-1)^l + q^{-mu} sum_{m != 0} w^{-m}(M0 t) prod_i g(m gamma_i) ]
// with mu = min phi.  For vectors whose phi-minimum is 1 the fiber count of
// the canonical model satisfies #Z_t(F_p) = ((p-1)^{l-2} - (-1)^l)/p + H(t).
long long hgm_sum(const GammaVector& g, const Rat& t, const FpContext& ctx);

// q^{delta} * hgm_sum: the weight-normalized Frobenius trace used for a_p.
long long hgm_trace(const GammaVector& g, const Rat& t, const FpContext& ctx);

}  // namespace hg
