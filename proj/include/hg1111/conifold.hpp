#pragma once

#include "hg1111/gamma.hpp"
#include "hg1111/util.hpp"

namespace hg {

// Discriminant D of the quadratic field attached to the conifold fiber:
// Q(sqrt(-(-1)^{d/2} prod gamma_i)), d = l - 2.
Int disc_field(const GammaVector& g);

// Twist discriminant E: Q(sqrt((-1)^{l_o/2} M0)) evaluated at t = 1.
Int twist_disc(const GammaVector& g);

// Quadratic character sigma(p) = Kronecker (D|p).
int sigma(const Int& D, long long p);

}  // namespace hg
