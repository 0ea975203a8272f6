#include "hg1111/pointcount.hpp"

#include <algorithm>
#include <numeric>

#include "hg1111/hgm.hpp"

namespace hg {

namespace {

long long rat_residue(const Rat& r, long long q) {
    long long n = mod_ll((num(r) % q).convert_to<long long>(), q);
    long long d = mod_ll((den(r) % q).convert_to<long long>(), q);
    if (d == 0) throw std::domain_error("count: denominator divisible by q");
    return (long long)((__int128)n * inv_mod(d, q) % q);
}

// count torus solutions of all equations for a fixed u value
long long enumerate_chart(const FamilyPair& f, long long uval, long long q, long long budget) {
    size_t nv = f.vars.size();
    long long n = q - 1;
    double size = 1;
    for (size_t i = 0; i < nv; i++) size *= (double)n;
    if (size > (double)budget) throw std::runtime_error("count: enumeration budget exceeded");

    // generator powers
    long long g = primitive_root(q);
    std::vector<long long> gpow(n);
    long long x = 1;
    for (long long k = 0; k < n; k++) {
        gpow[k] = x;
        x = (long long)((__int128)x * g % q);
    }
    struct T {
        long long val;                 // current term value mod q
        std::vector<long long> step;   // multiplier per variable step
        size_t eq;
    };
    std::vector<T> terms;
    for (size_t e = 0; e < f.eqs.size(); e++) {
        for (auto& t : f.eqs[e].terms) {
            long long c = rat_residue(t.coeff, q);
            long long up = pow_mod(uval, mod_ll(t.u_exp, n), q);
            long long v = (long long)((__int128)c * up % q);
            if (v == 0) continue;  // coefficient divisible by q: contributes nothing
            T tt;
            tt.val = v;
            tt.eq = e;
            tt.step.resize(nv);
            for (size_t j = 0; j < nv; j++) tt.step[j] = gpow[mod_ll(t.exps[j], n)];
            terms.push_back(std::move(tt));
        }
    }
    size_t ne = f.eqs.size();
    std::vector<long long> k(nv, 0);
    long long count = 0;
    std::vector<long long> sums(ne);
    while (true) {
        std::fill(sums.begin(), sums.end(), 0);
        for (auto& t : terms) sums[t.eq] += t.val;
        bool all = true;
        for (size_t e = 0; e < ne; e++)
            if (sums[e] % q) {
                all = false;
                break;
            }
        if (all) count++;
        // odometer advance
        size_t j = 0;
        while (j < nv) {
            k[j]++;
            for (auto& t : terms) t.val = (long long)((__int128)t.val * t.step[j] % q);
            if (k[j] < n) break;
            k[j] = 0;
            j++;
        }
        if (j == nv) break;
        if (nv == 0) break;
    }
    return count;
}

}  // namespace

std::vector<long long> fiber_counts_all(const FamilyPair& f, long long q, long long budget) {
    long long n = q - 1;
    std::vector<long long> N(n + 1, 0);  // index by t in 1..q-1
    if (f.is_cover()) {
        auto base = fiber_counts_all(f.factors[0], q, budget);
        for (long long t = 1; t <= n; t++) {
            long long arg = (long long)((__int128)rat_residue(*f.cover_scale, q) * t % q);
            int chi = (int)pow_mod(arg, (q - 1) / 2, q);
            if (chi == q - 1) chi = -1;
            N[t] = (1 + chi) * base[t];
        }
        return N;
    }
    if (f.is_product()) {
        std::vector<long long> acc;
        bool first = true;
        for (auto& fac : f.factors) {
            auto nf = fiber_counts_all(fac, q, budget);
            if (first) {
                acc = nf;
                first = false;
                continue;
            }
            std::vector<long long> nxt(n + 1, 0);
            for (long long a = 1; a <= n; a++) {
                if (!acc[a]) continue;
                for (long long b = 1; b <= n; b++) {
                    long long t = (long long)((__int128)a * b % q);
                    nxt[t] += acc[a] * nf[b];
                }
            }
            acc = std::move(nxt);
        }
        return acc;
    }
    long long scale = rat_residue(f.map_scale, q);
    for (long long u = 1; u <= n; u++) {
        long long t = (long long)((__int128)scale * pow_mod(u, mod_ll(f.map_pow, q - 1), q) % q);
        if (t == 0) continue;
        N[t] += enumerate_chart(f, u, q, budget);
    }
    return N;
}

long long count_points(const FamilyPair& f, const Rat& t, long long q, long long budget) {
    long long tv = rat_residue(t, q);
    if (tv == 0) throw std::domain_error("count_points: t = 0 over F_q");
    if (f.is_cover() || f.is_product()) {
        auto all = fiber_counts_all(f, q, budget);
        return all[tv];
    }
    long long scale = rat_residue(f.map_scale, q);
    long long count = 0;
    for (long long u = 1; u <= q - 1; u++) {
        if ((long long)((__int128)scale * pow_mod(u, mod_ll(f.map_pow, q - 1), q) % q) != tv)
            continue;
        count += enumerate_chart(f, u, q, budget);
    }
    return count;
}

SumIdentityReport verify_sum_identity(const GammaVector& g, long long p,
                                      const std::vector<Rat>& samples) {
    auto cp = cancellation_profile(g);
    if (!(cp.size() == 1 && cp.begin()->first == 1 && cp.begin()->second == 1))
        throw std::domain_error(
            "verify_sum_identity: needs cancellation profile {Phi_1} (uniform-weight vector)");
    FpContext ctx(p);
    FamilyPair model = canonical_model(g);
    SumIdentityReport rep;
    rep.k = (int)g.length() - 3;
    bool first = true;
    long long C = 0;
    for (auto& t : samples) {
        long long cnt = count_points(model, t, p);
        long long h = hgm_sum(g, t, ctx);
        if (first) {
            C = cnt - h;
            first = false;
        }
        rep.residuals.push_back(cnt - h - C);
    }
    long long pk = 1;
    for (int i = 0; i < rep.k; i++) pk *= p;
    rep.B = C / pk;
    rep.A = C - rep.B * pk;
    rep.ok = std::all_of(rep.residuals.begin(), rep.residuals.end(),
                         [](long long r) { return r == 0; });
    // closed form for the constant: ((p-1)^{l-2} - (-1)^l)/p
    Int closed = (ipow(Int(p - 1), g.length() - 2) - ((g.length() % 2) ? Int(-1) : Int(1))) / p;
    if (Int(C) != closed) rep.ok = false;
    return rep;
}

}  // namespace hg
