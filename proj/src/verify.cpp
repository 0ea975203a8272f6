#include "hg1111/verify.hpp"

#include <random>
#include <sstream>

#include "hg1111/classify.hpp"
#include "hg1111/hgm.hpp"

namespace hg {

namespace {

Term mk(Rat c, int ue, std::vector<int> exps) {
    Term t;
    t.coeff = std::move(c);
    t.u_exp = ue;
    t.exps = std::move(exps);
    return t;
}

}  // namespace

FamilyPair reference_model_28() {
    FamilyPair f;
    f.vars = {"x1", "x2", "x3", "x4", "x5", "x6"};
    f.eqs.resize(3);
    f.eqs[0].terms = {mk(1, 0, {1, 0, 0, 0, 0, 0}), mk(1, -1, {0, 2, 0, 0, 1, 1}),
                      mk(1, 0, {2, 1, 0, 0, 0, 0}), mk(1, 0, {0, 0, 0, 0, 0, 0})};
    f.eqs[1].terms = {mk(1, 0, {0, 0, 2, 0, 0, 0}), mk(1, 0, {0, 0, 0, 0, -1, 0}),
                      mk(1, 0, {0, 0, 1, 0, 0, 0})};
    f.eqs[2].terms = {mk(1, 0, {0, 0, 0, 2, 0, 0}), mk(1, 0, {0, 0, 0, 0, 0, -1}),
                      mk(1, 0, {0, 0, 0, 1, 0, 0})};
    f.map_scale = Rat(-4, 27);
    f.map_pow = 1;
    f.family_m0 = Rat(-27, 4);
    f.provenance = "reference(case 28)";
    return f;
}

FamilyPair reference_model_30() {
    FamilyPair f;
    f.vars = {"x1", "x2", "x3", "x4", "u1", "u2", "u3"};
    f.eqs.resize(4);
    f.eqs[0].terms = {mk(1, 0, {1, 0, 0, 0, 0, 0, 0}), mk(1, 0, {0, 0, 0, 0, -1, -1, -1}),
                      mk(1, 0, {2, 0, 0, 0, 0, 0, 0})};
    f.eqs[1].terms = {mk(1, 1, {0, 2, 0, 0, 0, 0, 0}), mk(1, 0, {0, 0, 0, 0, -3, 0, 0}),
                      mk(1, 1, {0, 1, 0, 0, 0, 0, 0})};
    f.eqs[2].terms = {mk(1, 0, {0, 0, 2, 0, 0, 0, 0}), mk(1, 0, {0, 0, 0, 0, 0, -3, 0}),
                      mk(1, 0, {0, 0, 1, 0, 0, 0, 0})};
    f.eqs[3].terms = {mk(1, 0, {0, 0, 0, 2, 0, 0, 0}), mk(1, 0, {0, 0, 0, 0, 0, 0, -3}),
                      mk(1, 0, {0, 0, 0, 1, 0, 0, 0})};
    f.map_scale = 1;
    f.map_pow = 1;
    f.family_m0 = 1;
    f.provenance = "reference(case 30)";
    return f;
}

FamilyPair reference_model_41() {
    FamilyPair y0, z1, z2, z3;
    y0.vars = {"x"};
    y0.eqs.resize(1);
    y0.eqs[0].terms = {mk(1, 0, {2}), mk(1, -1, {0}), mk(1, 0, {1})};
    y0.map_scale = Rat(1, 64);
    y0.map_pow = 3;
    y0.family_m0 = 64;
    y0.provenance = "reference(Y0)";

    z1.vars = {"y"};
    z1.eqs.resize(1);
    z1.eqs[0].terms = {mk(1, 0, {0}), mk(1, -2, {3}), mk(1, 0, {1})};
    z1.map_scale = Rat(-4, 27);
    z1.map_pow = 2;
    z1.family_m0 = Rat(-27, 4);
    z1.provenance = "reference(Z'1)";

    z2.vars = {"z"};
    z2.eqs.resize(1);
    z2.eqs[0].terms = {mk(1, 0, {1}), mk(1, 1, {0}), mk(1, 0, {2})};
    z2.map_scale = 4;
    z2.map_pow = 1;
    z2.family_m0 = Rat(1, 4);
    z2.provenance = "reference(Z2)";
    z3 = z2;
    z3.provenance = "reference(Z3)";

    FamilyPair f;
    f.factors = {y0, z1, z2, z3};
    f.provenance = "reference(case 41 product)";
    return f;
}

namespace {

void check_gauss(std::vector<Check>& out) {
    for (long long p : {5, 11, 23, 97}) {
        FpContext ctx(p);
        bool ok = abs(ctx.gauss[0].re + 1) < Real("1e-30") && abs(ctx.gauss[0].im) < Real("1e-30");
        for (long long m = 1; m < p - 1 && ok; m++) {
            ok = abs(ctx.gauss[m].abs2() - Real(p)) < Real("1e-25");
            // reflection: g(m) g(-m) = omega(-1)^m p
            Cx prod = ctx.gauss[m] * ctx.gauss[(p - 1 - m) % (p - 1)];
            Real want = (m % 2 == 0 || (p - 1) % 2 == 0) ? Real(p) : Real(p);
            int sgn = (ctx.dlog[p - 1] * m) % (p - 1) == 0 ? 1 : -1;
            ok = ok && abs(prod.re - sgn * Real(p)) < Real("1e-20") &&
                 abs(prod.im) < Real("1e-20");
            (void)want;
        }
        out.push_back({"gauss-identities(p=" + std::to_string(p) + ")", ok, ""});
    }
}

void check_sum_identity(std::vector<Check>& out) {
    struct V {
        std::vector<int> g;
    };
    for (auto& v : {std::vector<int>{-2, 1, 1}, {-3, 1, 2}, {-5, 1, 1, 1, 1, 1}}) {
        GammaVector g(v);
        bool ok = true;
        std::ostringstream det;
        for (long long p : {5, 7, 11, 13}) {
            if (!is_good_prime(g, p)) continue;
            std::vector<Rat> samples;
            for (long long t = 2; t < p && (long long)samples.size() < 5; t++)
                samples.push_back(Rat(t));
            for (long long t = 2; (long long)samples.size() < 5; t++)
                if ((p + t) % p > 1) samples.push_back(Rat(p + t));
            auto rep = verify_sum_identity(g, p, samples);
            if (!rep.ok) {
                ok = false;
                det << " p=" << p << " residuals nonzero;";
            }
        }
        out.push_back({"sum-identity(" + g.display() + ")", ok, det.str()});
    }
}

void check_hessian(std::vector<Check>& out) {
    auto recs = classify_all();
    int done = 0;
    bool ok = true;
    std::ostringstream det;
    for (auto& r : recs) {
        if ((int)r.gamma_red.length() - 2 > 12) continue;
        if (done >= 10) break;
        auto h = hessian_check(r.gamma_red);
        if (h.ratio != hessian_ratio_exact(r.gamma_red) || h.residual > Real("1e-20")) {
            ok = false;
            det << " case " << r.index << " failed;";
        }
        done++;
    }
    out.push_back({"hessian-squares(" + std::to_string(done) + " cases)", ok, det.str()});
}

void check_models(std::vector<Check>& out, long long budget) {
    auto recs = classify_all();
    struct Ref {
        int idx;
        FamilyPair ref;
    };
    std::vector<Ref> refs = {{28, reference_model_28()}, {30, reference_model_30()},
                             {41, reference_model_41()}};
    for (auto& rr : refs) {
        auto& rec = recs[rr.idx - 1];
        FamilyPair mine = reduce_to_threefold(rec.gamma_red);
        bool ok = mine.fiber_dim() == 3;
        std::ostringstream det;
        for (long long q : {5, 7, 11}) {
            int tested = 0;
            for (long long t = 2; t < q && tested < 3; t++) {
                if (t == 1) continue;
                long long a = count_points(mine, Rat(t), q, budget);
                long long b = count_points(rr.ref, Rat(t), q, budget);
                if (a != b) {
                    ok = false;
                    det << " q=" << q << ",t=" << t << ": " << a << "!=" << b << ";";
                }
                tested++;
            }
        }
        out.push_back({"model-equivalence(case " + std::to_string(rr.idx) + ")", ok, det.str()});
    }
}

void check_unimodular_substitution(std::vector<Check>& out, unsigned seed) {
    // count invariance under random unimodular monomial changes of variables
    GammaVector g({-4, -1, 2, 3});
    FamilyPair f = canonical_model(g);
    std::mt19937 rng(seed);
    FamilyPair h = f;
    size_t nv = h.vars.size();
    for (int step = 0; step < 6; step++) {
        size_t i = rng() % nv, j = rng() % nv;
        if (i == j) continue;
        int k = 1 + (int)(rng() % 2);
        // x_i -> x_i x_j^k: exponent vectors gain e_j += k e_i
        for (auto& eq : h.eqs)
            for (auto& t : eq.terms) t.exps[j] += k * t.exps[i];
    }
    bool ok = true;
    for (long long q : {5, 7, 11}) {
        for (long long t : {2, 3}) {
            if (count_points(f, Rat(t), q) != count_points(h, Rat(t), q)) ok = false;
        }
    }
    out.push_back({"count-unimodular-invariance", ok, ""});
}

void check_twist_relation(std::vector<Check>& out) {
    auto recs = classify_all();
    for (int idx : {2, 5, 11}) {
        auto& a = recs[idx - 1];
        auto& b = recs[a.twist_partner - 1];
        bool ok = true;
        std::ostringstream det;
        for (long long p : {7, 11, 13, 17, 19, 23, 29}) {
            if (!is_good_prime(a.gamma_red, p) || !is_good_prime(b.gamma_red, p)) continue;
            FpContext ctx(p);
            int lo = a.gamma_red.odd_count();
            Rat arg = a.gamma_red.m0();
            if ((lo / 2) % 2) arg = -arg;
            for (long long t : {2, 3, 5}) {
                if (t % p == 0 || t == 1) continue;
                long long ha = hgm_trace(a.gamma_red, Rat(t), ctx);
                long long hb = hgm_trace(b.gamma_red, Rat(t), ctx);
                long long chi = pow_mod(ctx.residue(arg * t), (p - 1) / 2, p);
                int sg = chi == 1 ? 1 : -1;
                if (hb != sg * ha) {
                    ok = false;
                    det << " p=" << p << ",t=" << t << ";";
                }
            }
        }
        out.push_back({"twist-relation(cases " + std::to_string(a.index) + "/" +
                           std::to_string(a.twist_partner) + ")",
                       ok, det.str()});
    }
}

}  // namespace

std::vector<Check> run_verification(const VerifyOptions& opt) {
    std::vector<Check> out;
    auto want = [&](const std::string& s) { return opt.only.empty() || opt.only == s; };
    if (want("gauss")) check_gauss(out);
    if (want("sum-identity")) check_sum_identity(out);
    if (want("hessian")) check_hessian(out);
    if (want("models")) check_models(out, opt.budget);
    if (want("substitution")) check_unimodular_substitution(out, opt.seed);
    if (want("twist")) check_twist_relation(out);
    return out;
}

}  // namespace hg
