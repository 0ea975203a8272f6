#include "hg1111/hgm.hpp"

#include "hg1111/hodge.hpp"

#include <climits>
#include <cmath>
#include <numeric>

namespace hg {

std::map<unsigned, int> cancellation_profile(const GammaVector& g) {
    unsigned top = 0;
    for (int x : g.entries) top = std::max(top, (unsigned)std::abs(x));
    std::map<unsigned, int> c;
    for (unsigned d = 1; d <= top; d++) {
        int nneg = 0, npos = 0;
        for (int x : g.entries) {
            if (x < 0 && (unsigned)(-x) % d == 0) nneg++;
            if (x > 0 && (unsigned)x % d == 0) npos++;
        }
        int cd = std::min(nneg, npos);
        if (cd) c[d] = cd;
    }
    return c;
}

// phi(x) = sum_i <gamma_i x> is integer-valued and piecewise constant on
// (0,1), with jumps only at multiples of 1/|gamma_i|.  Returns phi at x =
// num/den (exact; den * phi is computed integrally).
static long phi_at(const GammaVector& g, long num, long den) {
    long s = 0;
    for (int gi : g.entries) {
        long v = ((long)gi * num) % den;
        if (v < 0) v += den;
        s += v;
    }
    if (s % den) throw std::logic_error("phi_at: non-integral value");
    return s / den;
}

int phi_min(const GammaVector& g, bool include_breakpoints) {
    long L = 1;
    for (int gi : g.entries) L = std::lcm(L, (long)std::abs(gi));
    long best = LONG_MAX;
    // interval interiors: x = k/(4L) with k odd never meets a breakpoint
    for (long k = 1; k < 4 * L; k += 2) best = std::min(best, phi_at(g, k, 4 * L));
    if (include_breakpoints)
        for (long k = 1; k < L; k++) best = std::min(best, phi_at(g, k, L));
    return (int)best;
}

int hgm_mu(const GammaVector& g) { return phi_min(g, true); }

int weight_defect(const GammaVector& g) { return 0; }

bool is_good_prime(const GammaVector& g, long long p) {
    if (p < 3 || !is_prime(p)) return false;
    for (int x : g.entries)
        if (std::abs(x) % p == 0) return false;
    return true;
}

long long hgm_sum(const GammaVector& g_in, const Rat& t, const FpContext& ctx) {
    // the sum is attached to the local system: evaluate on the reduced vector
    const GammaVector g = reduce(g_in.entries);
    const long long p = ctx.p, n = p - 1;
    if (!is_good_prime(g, p)) throw std::domain_error("hgm_sum: bad prime");
    Rat arg = g.m0() * t;
    if (arg == 0) throw std::domain_error("hgm_sum: t = 0");
    long long a = ctx.residue(arg);
    if (a == 0) throw std::domain_error("hgm_sum: M0*t divisible by p");
    long long la = ctx.dlog[a];

    // weight + 1 and the parameter positions scaled to Z/(q-1)
    HGParams par = params_from_gamma(g);
    HodgeVector hv = hodge_vector(par);
    int twoD = hv.weight() + 1;
    auto shifts = [&](const std::vector<Rat>& v) {
        std::map<long long, int> s;
        for (auto& x : v) {
            Int nn = num(x) * n;
            if (nn % den(x) != 0) continue;  // parameter invisible at this q
            s[mod_ll((nn / den(x)).convert_to<long long>(), n)]++;
        }
        return s;
    };
    auto ma = shifts(par.alpha), mb = shifts(par.beta);

    Cx total;
    for (long long m = 0; m < n; m++) {
        Cx term = ctx.zeta[mod_ll(-m * la, n)];
        for (int gi : g.entries) term *= ctx.gauss[mod_ll(m * gi, n)];
        int w = 0;
        for (int gi : g.entries)
            if (mod_ll((long long)gi * m, n) != 0) w++;
        int deg = (ma.count(m) ? ma[m] : 0) + (mb.count(m) ? mb[m] : 0);
        int twoe = twoD - w - deg;
        if (twoe % 2)
            throw std::logic_error("hgm_sum: non-integral weight exponent");
        int e = twoe / 2;
        if (e) {
            Real f = pow(Real(p), e);
            term = Cx(term.re * f, term.im * f);
        }
        total += term;
    }
    Real val = total.re / Real(n);
    Real imag = total.im / Real(n);
    long long r = llround(val.convert_to<double>());
    if (abs(imag) > Real("1e-6") || abs(val - Real(r)) > Real("1e-6"))
        throw std::runtime_error("hgm_sum: value failed integrality check");
    return r;
}

long long hgm_trace(const GammaVector& g, const Rat& t, const FpContext& ctx) {
    return hgm_sum(g, t, ctx);
}

}  // namespace hg
