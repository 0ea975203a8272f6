#pragma once

#include <optional>

#include "hg1111/fp.hpp"
#include "hg1111/gamma.hpp"
#include "hg1111/lattice.hpp"

namespace hg {

// One Laurent term: coeff * u^{u_exp} * prod vars[i]^{exps[i]}.
struct Term {
    Rat coeff = 1;
    int u_exp = 0;
    std::vector<int> exps;
};

struct Equation {
    std::vector<Term> terms;
};

// A one-parameter family cut out of a torus.  In single-chart form the
// equations live on T^{vars} x C^x_u and the fibration is
// t = map_scale * u^{map_pow}; a product form multiplies the factors'
// fibrations (each factor has its own u).
struct FamilyPair {
    std::vector<std::string> vars;
    std::vector<Equation> eqs;
    Rat map_scale = 1;
    int map_pow = 1;
    std::vector<FamilyPair> factors;
    // set on a wrapper around factors[0]: fibers double or vanish with
    // chi(cover_scale * t)
    std::optional<Rat> cover_scale;
    Rat family_m0 = 1;  // M0 of the realized gamma vector
    std::string provenance;

    bool is_product() const { return !factors.empty() && !cover_scale; }
    bool is_cover() const { return cover_scale.has_value(); }
    int fiber_dim() const;
    size_t torus_dim() const;  // total torus variables (excluding the u's)
    std::string render() const;
};

struct MKappaI {
    std::vector<std::vector<int>> M;  // d x l, rows orthogonal to gamma
    std::vector<int> kappa;           // kappa . gamma = 1
};

// M-matrix and kappa-vector; throws when gcd(entries) != 1.
MKappaI build_m_kappa(const GammaVector& g);

FamilyPair canonical_model(const GammaVector& g);
FamilyPair gcd_pair(const GammaVector& g);  // gcd D > 1; map u^D / M0(g)

// Union of parts with pairwise coprime gcds (Bezout redistribution); parts
// with gcd 1 give the plain product construction.
FamilyPair general_split_pair(const std::vector<GammaVector>& parts);
FamilyPair product_pair(const std::vector<GammaVector>& parts);

// Variant with an extra (-n, n) pair adjoined to the union.
FamilyPair general_split_pair_with_pair(const std::vector<GammaVector>& parts, int n);

FamilyPair twist_double_cover(const FamilyPair& f);
FamilyPair quadric_bundle_twist(const GammaVector& g);

// Planner: a family with three-dimensional fibers for g.
FamilyPair reduce_to_threefold(const GammaVector& g);

struct HessianResult {
    Rat ratio;        // det(H) / (-prod gamma_i), reconstructed
    Rat sqrt_ratio;   // rational square root
    Real residual;    // |numeric - reconstructed|
};
HessianResult hessian_check(const GammaVector& g);

// Exact oracle for the same ratio (independent closed form).
Rat hessian_ratio_exact(const GammaVector& g);

}  // namespace hg
