#include "hg1111/fp.hpp"

#include <boost/math/constants/constants.hpp>

#include <map>
#include <memory>
#include <mutex>

namespace hg {

long long primitive_root(long long p) {
    long long phi = p - 1;
    std::vector<long long> pf;
    long long m = phi;
    for (long long d = 2; d * d <= m; d++)
        if (m % d == 0) {
            pf.push_back(d);
            while (m % d == 0) m /= d;
        }
    if (m > 1) pf.push_back(m);
    for (long long g = 2; g < p; g++) {
        bool ok = true;
        for (long long f : pf)
            if (pow_mod(g, phi / f, p) == 1) {
                ok = false;
                break;
            }
        if (ok) return g;
    }
    throw std::logic_error("no primitive root");
}

FpContext::FpContext(long long prime) : p(prime) {
    if (p < 3 || !is_prime(p)) throw std::invalid_argument("FpContext: need an odd prime");
    gen = primitive_root(p);
    dlog.assign(p, -1);
    gpow.assign(p - 1, 0);
    long long x = 1;
    for (long long k = 0; k < p - 1; k++) {
        gpow[k] = x;
        dlog[x] = k;
        x = (long long)((__int128)x * gen % p);
    }
    const Real pi = boost::math::constants::pi<Real>();
    zeta.resize(p - 1);
    for (long long k = 0; k < p - 1; k++) {
        Real a = 2 * pi * Real(k) / Real(p - 1);
        zeta[k] = Cx(cos(a), sin(a));
    }
    std::vector<Cx> psi(p);  // psi(x) = e^{2 pi i x / p}
    for (long long v = 0; v < p; v++) {
        Real a = 2 * pi * Real(v) / Real(p);
        psi[v] = Cx(cos(a), sin(a));
    }
    gauss.assign(p - 1, Cx());
    for (long long mm = 0; mm < p - 1; mm++) {
        Cx s;
        for (long long k = 0; k < p - 1; k++) {
            // x = gen^k, omega(x)^m = zeta^{m k}
            s += zeta[(mm * k) % (p - 1)] * psi[gpow[k]];
        }
        gauss[mm] = s;
    }
}

long long FpContext::residue(const Rat& r) const {
    Int n = num(r) % p, d = den(r) % p;
    if (d == 0) throw std::domain_error("residue: denominator divisible by p");
    long long nn = mod_ll(n.convert_to<long long>(), p);
    long long dd = mod_ll(d.convert_to<long long>(), p);
    return (long long)((__int128)nn * inv_mod(dd, p) % p);
}

const Cx& FpContext::omega(long long m, long long x) const {
    long long k = dlog[mod_ll(x, p)];
    return zeta[mod_ll(m * k, p - 1)];
}

}  // namespace hg

namespace hg {

const FpContext& fp_context(long long p) {
    static std::mutex mu;
    static std::map<long long, std::unique_ptr<FpContext>> pool;
    std::lock_guard<std::mutex> lk(mu);
    auto it = pool.find(p);
    if (it == pool.end()) it = pool.emplace(p, std::make_unique<FpContext>(p)).first;
    return *it->second;
}

}  // namespace hg
