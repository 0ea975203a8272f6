#include "hg1111/conifold.hpp"

namespace hg {

Int disc_field(const GammaVector& g) {
    if (g.length() % 2) throw std::domain_error("disc_field: odd length");
    int d = g.dim();
    Rat prod = 1;
    for (int x : g.entries) prod *= x;
    Rat radicand = -prod;
    if ((d / 2) % 2) radicand = -radicand;  // -(-1)^{d/2} prod
    return fundamental_discriminant(radicand);
}

Int twist_disc(const GammaVector& g) {
    int lo = g.odd_count();
    Rat radicand = g.m0();
    if ((lo / 2) % 2) radicand = -radicand;
    return fundamental_discriminant(radicand);
}

int sigma(const Int& D, long long p) { return kronecker(D, Int(p)); }

}  // namespace hg
