#pragma once

#include "hg1111/hgparams.hpp"
#include "hg1111/util.hpp"

namespace hg {

// A gamma vector: weakly increasing nonzero integers with zero sum that are
// not exhausted by (-n, n) pairs.
struct GammaVector {
    std::vector<int> entries;  // sorted ascending

    GammaVector() = default;
    explicit GammaVector(std::vector<int> e, bool check = true);

    size_t length() const { return entries.size(); }
    int dim() const { return (int)entries.size() - 2; }
    int gcd() const;
    int odd_count() const;    // l_o
    int odd_sum() const;      // L_o
    int even_sum() const;     // L_e
    int neg_minus_pos() const;  // r = #{g<0} - #{g>0}
    Rat m0() const;           // prod gamma_j ^ gamma_j

    bool operator==(const GammaVector& o) const = default;
    bool operator<(const GammaVector& o) const { return entries < o.entries; }

    std::string display() const;  // "-2^4 1^8"
};

// Raw vector -> gamma vector by removing all (-n, n) pairs.  Throws if the
// input does not sum to zero, has a zero entry, or cancels completely.
GammaVector reduce(std::vector<int> raw);

// Replace each odd entry g by the pair (2g, -g).  Output is sorted but not
// reduced.
std::vector<int> total_twist_gamma(const GammaVector& g);

GammaVector gamma_from_params(const HGParams& p);
HGParams params_from_gamma(const GammaVector& g);

// Exponents c_v of Q = prod (x^v - 1)^{c_v}: c_v = #{i: g_i = -v} - #{i: g_i = +v}.
std::map<unsigned, int> power_exponents(const GammaVector& g);

struct SplitResult {
    std::vector<GammaVector> parts;  // sorted for canonical identity
    std::vector<int> gcds;           // per-part gcd D_i
    bool all_unit_gcd() const;
};

// All partitions of the entries into >= 2 parts, each a valid gamma vector.
std::vector<SplitResult> splittings(const GammaVector& g, size_t max_parts = 0);

// If v equals the total twist of a (shorter) gamma vector g', return g'.
std::optional<GammaVector> untwist(const GammaVector& v);

}  // namespace hg
