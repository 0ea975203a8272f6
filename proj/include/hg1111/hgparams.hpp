#pragma once

#include <optional>

#include "hg1111/util.hpp"

namespace hg {

// Hypergeometric parameters: multisets alpha, beta of rationals in [0,1),
// stored sorted and in lowest terms.
struct HGParams {
    std::vector<Rat> alpha;
    std::vector<Rat> beta;

    HGParams() = default;
    HGParams(std::vector<Rat> a, std::vector<Rat> b);

    size_t rank() const { return alpha.size(); }
    bool operator==(const HGParams& o) const = default;

    // equality of unordered pairs {alpha, beta}: the classifier's equivalence
    bool equivalent(const HGParams& o) const;
    HGParams swapped() const { return HGParams(beta, alpha); }
};

// Cyclotomic indices of q_inf (from alpha) and q_0 (from beta), with
// multiplicity.  Exists only when the parameters are defined over Q.
struct CycloProfile {
    std::vector<unsigned> numerator_orders;    // q_inf
    std::vector<unsigned> denominator_orders;  // q_0
};

bool is_defined_over_Q(const HGParams& p);
bool is_irreducible(const HGParams& p);
HGParams total_twist_params(const HGParams& p);
bool is_mum(const HGParams& p);

// Fails (nullopt) when a side is not a union of full Galois orbits.
std::optional<CycloProfile> cyclo_profile(const HGParams& p);

// Inverse: parameters from cyclotomic index multisets.
HGParams params_from_profile(const std::vector<unsigned>& num_orders,
                             const std::vector<unsigned>& den_orders);

std::vector<std::string> params_to_strings(const std::vector<Rat>& v);
std::vector<Rat> params_from_strings(const std::vector<std::string>& v);

}  // namespace hg
