#include "hg1111/toric.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace hg {

int FamilyPair::fiber_dim() const {
    if (is_cover()) return factors[0].fiber_dim();
    if (is_product()) {
        int s = 0;
        for (auto& f : factors) s += f.fiber_dim();
        return s + (int)factors.size() - 1;
    }
    return (int)vars.size() - (int)eqs.size();
}

size_t FamilyPair::torus_dim() const {
    if (is_cover()) return factors[0].torus_dim();
    if (is_product()) {
        size_t s = 0;
        for (auto& f : factors) s += f.torus_dim();
        return s;
    }
    return vars.size();
}

static std::string term_str(const Term& t, const std::vector<std::string>& vars) {
    std::ostringstream os;
    bool lead = true;
    if (t.coeff != 1) {
        os << rat_str(t.coeff);
        lead = false;
    }
    auto piece = [&](const std::string& v, int e) {
        if (!e) return;
        if (!lead) os << "*";
        os << v;
        if (e != 1) os << "^" << e;
        lead = false;
    };
    piece("u", t.u_exp);
    for (size_t i = 0; i < vars.size(); i++) piece(vars[i], t.exps[i]);
    if (lead) os << "1";
    return os.str();
}

std::string FamilyPair::render() const {
    std::ostringstream os;
    if (is_cover()) {
        os << "double cover (chi(" << rat_str(*cover_scale) << "*t)) of:\n" << factors[0].render();
        return os.str();
    }
    if (is_product()) {
        os << "product of " << factors.size() << " factors, map = product of factor maps\n";
        for (size_t i = 0; i < factors.size(); i++) {
            os << "-- factor " << i << ":\n" << factors[i].render();
        }
        return os.str();
    }
    for (auto& e : eqs) {
        os << "  ";
        for (size_t i = 0; i < e.terms.size(); i++) {
            if (i) os << " + ";
            os << term_str(e.terms[i], vars);
        }
        os << " = 0\n";
    }
    os << "  map: t = " << rat_str(map_scale) << " * u";
    if (map_pow != 1) os << "^" << map_pow;
    os << "   [" << provenance << "]\n";
    return os.str();
}

MKappaI build_m_kappa(const GammaVector& g) {
    if (g.gcd() != 1) throw std::domain_error("build_m_kappa: entries have a common factor");
    auto mk = build_m_kappa_lattice(g.entries);
    MKappaI out;
    out.kappa.resize(g.length());
    for (size_t i = 0; i < g.length(); i++) out.kappa[i] = mk.kappa[i].convert_to<int>();
    out.M.resize(mk.m_rows.size());
    for (size_t r = 0; r < mk.m_rows.size(); r++) {
        out.M[r].resize(g.length());
        for (size_t i = 0; i < g.length(); i++) out.M[r][i] = mk.m_rows[r][i].convert_to<int>();
    }
    return out;
}

static std::vector<std::string> xvars(const std::string& stem, size_t n, size_t from = 1) {
    std::vector<std::string> v;
    for (size_t i = 0; i < n; i++) v.push_back(stem + std::to_string(from + i));
    return v;
}

FamilyPair canonical_model(const GammaVector& g) {
    auto mk = build_m_kappa(g);
    size_t l = g.length(), d = l - 2;
    FamilyPair f;
    f.vars = xvars("x", d);
    Equation eq;
    for (size_t j = 0; j < l; j++) {
        Term t;
        t.u_exp = mk.kappa[j];
        t.exps.resize(d);
        for (size_t r = 0; r < d; r++) t.exps[r] = mk.M[r][j];
        eq.terms.push_back(t);
    }
    f.eqs.push_back(eq);
    f.map_scale = Rat(1) / g.m0();
    f.map_pow = 1;
    f.family_m0 = g.m0();
    f.provenance = "canonical(" + g.display() + ")";
    return f;
}

FamilyPair gcd_pair(const GammaVector& g) {
    int D = g.gcd();
    if (D <= 1) throw std::domain_error("gcd_pair: gcd must exceed 1");
    std::vector<int> red;
    for (int x : g.entries) red.push_back(x / D);
    FamilyPair f = canonical_model(GammaVector(red));
    f.map_pow = D;
    f.map_scale = Rat(1) / g.m0();
    f.family_m0 = g.m0();
    f.provenance = "gcd-cover(D=" + std::to_string(D) + ", " + g.display() + ")";
    return f;
}

// Bezout coefficients with sum a_i D_i = 1; (1, 0, ...) when D_0 = 1.
static std::vector<long long> bezout(const std::vector<int>& D) {
    size_t s = D.size();
    std::vector<long long> a(s, 0);
    if (D[0] == 1) {
        a[0] = 1;
        return a;
    }
    long long g = D[0];
    a[0] = 1;
    for (size_t i = 1; i < s; i++) {
        long long old_r = g, r = D[i], old_s = 1, ss = 0, old_t = 0, tt = 1;
        while (r) {
            long long q = old_r / r;
            std::tie(old_r, r) = std::make_pair(r, old_r - q * r);
            std::tie(old_s, ss) = std::make_pair(ss, old_s - q * ss);
            std::tie(old_t, tt) = std::make_pair(tt, old_t - q * tt);
        }
        // old_r = old_s * g + old_t * D[i]
        for (size_t j = 0; j < i; j++) a[j] *= old_s;
        a[i] = old_t;
        g = old_r;
        if (g == 1) break;
    }
    if (g < 0) {
        for (auto& x : a) x = -x;
        g = -g;
    }
    if (g != 1) throw std::domain_error("bezout: gcds not coprime");
    return a;
}

static FamilyPair split_impl(const std::vector<GammaVector>& parts, int pair_n) {
    size_t s = parts.size();
    std::vector<int> D;
    std::vector<GammaVector> red;
    for (auto& p : parts) {
        int d = p.gcd();
        D.push_back(d);
        std::vector<int> r;
        for (int x : p.entries) r.push_back(x / d);
        red.emplace_back(r);
    }
    std::vector<int> Dfull = D;
    if (pair_n) Dfull.push_back(pair_n);
    for (size_t i = 0; i < Dfull.size(); i++)
        for (size_t j = i + 1; j < Dfull.size(); j++)
            if (std::gcd(Dfull[i], Dfull[j]) != 1)
                throw std::domain_error("split: part gcds not pairwise coprime");
    auto a = bezout(Dfull);  // sum a_i D_i (+ b n) = 1
    long long b = pair_n ? a.back() : 0;

    std::vector<MKappaI> mks;
    for (auto& r : red) mks.push_back(build_m_kappa(r));

    FamilyPair f;
    std::vector<size_t> xoff(s);
    for (size_t i = 0; i < s; i++) {
        xoff[i] = f.vars.size();
        size_t d_i = parts[i].length() - 2;
        for (auto& v : xvars("x", d_i, 1)) f.vars.push_back("p" + std::to_string(i) + v);
    }
    std::vector<size_t> uvar(s, SIZE_MAX);
    for (size_t i = 1; i < s; i++) {
        uvar[i] = f.vars.size();
        f.vars.push_back("u" + std::to_string(i));
    }
    size_t usvar = SIZE_MAX;
    if (pair_n) {
        usvar = f.vars.size();
        f.vars.push_back("us");
    }
    size_t nv = f.vars.size();

    for (size_t i = 0; i < s; i++) {
        Equation eq;
        size_t l_i = parts[i].length(), d_i = l_i - 2;
        for (size_t j = 0; j < l_i; j++) {
            Term t;
            t.exps.assign(nv, 0);
            int kap = mks[i].kappa[j];
            for (size_t r = 0; r < d_i; r++) t.exps[xoff[i] + r] = mks[i].M[r][j];
            t.u_exp = (int)(a[i] * kap);
            if (i == 0) {
                for (size_t mIdx = 1; mIdx < s; mIdx++) t.exps[uvar[mIdx]] -= D[mIdx] * kap;
                if (pair_n) t.exps[usvar] += pair_n * kap;
            } else {
                t.exps[uvar[i]] += D[0] * kap;
            }
            eq.terms.push_back(t);
        }
        f.eqs.push_back(eq);
    }
    if (pair_n) {
        Equation eq;
        Term t1;
        t1.exps.assign(nv, 0);
        t1.exps[usvar] = D[0];
        Term t2;
        t2.exps.assign(nv, 0);
        t2.u_exp = (int)b;
        eq.terms = {t1, t2};
        f.eqs.push_back(eq);
    }

    Rat m0 = 1;
    for (auto& p : parts) m0 *= p.m0();
    if (pair_n) m0 *= rpow(Rat(-pair_n), -pair_n) * rpow(Rat(pair_n), pair_n);
    f.map_scale = Rat(1) / m0;
    f.map_pow = 1;
    f.family_m0 = m0;
    std::ostringstream prov;
    prov << "split(s=" << s << (pair_n ? ",pair n=" + std::to_string(pair_n) : std::string())
         << "; D=";
    for (size_t i = 0; i < s; i++) prov << (i ? "," : "") << D[i];
    prov << ")";
    f.provenance = prov.str();
    return f;
}

FamilyPair general_split_pair(const std::vector<GammaVector>& parts) {
    if (parts.size() == 1) {
        return parts[0].gcd() == 1 ? canonical_model(parts[0]) : gcd_pair(parts[0]);
    }
    return split_impl(parts, 0);
}

FamilyPair product_pair(const std::vector<GammaVector>& parts) {
    for (auto& p : parts)
        if (p.gcd() != 1)
            throw std::domain_error("product_pair: parts must have coprime entries (use gcd_pair)");
    return general_split_pair(parts);
}

FamilyPair general_split_pair_with_pair(const std::vector<GammaVector>& parts, int n) {
    if (n <= 0) throw std::domain_error("general_split_pair_with_pair: n must be positive");
    return split_impl(parts, n);
}

FamilyPair twist_double_cover(const FamilyPair& f) {
    if (!f.is_product() && !f.is_cover()) {
        FamilyPair g = f;
        for (auto& eq : g.eqs)
            for (auto& t : eq.terms) t.u_exp *= 2;
        g.map_pow *= 2;
        g.provenance = "twist-double-cover of " + f.provenance;
        return g;
    }
    FamilyPair g;
    g.factors = {f};
    g.cover_scale = f.family_m0;
    g.family_m0 = f.family_m0;
    g.provenance = "twist-double-cover of " + f.provenance;
    return g;
}

FamilyPair quadric_bundle_twist(const GammaVector& g) {
    auto mk = build_m_kappa(g);
    size_t l = g.length(), d = l - 2;
    FamilyPair f;
    f.vars = xvars("x", d);
    std::vector<size_t> yvar(l, SIZE_MAX);
    int yc = 0;
    for (size_t j = 0; j < l; j++)
        if (g.entries[j] & 1) {
            yvar[j] = f.vars.size();
            f.vars.push_back("y" + std::to_string(++yc));
        }
    size_t nv = f.vars.size();
    Equation eq;
    for (size_t j = 0; j < l; j++) {
        Term base;
        base.exps.assign(nv, 0);
        base.u_exp = mk.kappa[j];
        for (size_t r = 0; r < d; r++) base.exps[r] = mk.M[r][j];
        if (yvar[j] == SIZE_MAX) {
            eq.terms.push_back(base);
        } else {
            Term t1 = base;
            t1.coeff = 2;
            t1.exps[yvar[j]] = 1;
            Term t2 = base;
            t2.coeff = -1;
            t2.exps[yvar[j]] = 2;
            eq.terms.push_back(t1);
            eq.terms.push_back(t2);
        }
    }
    f.eqs.push_back(eq);
    f.map_scale = Rat(1) / g.m0();
    f.map_pow = 1;
    f.family_m0 = rpow(Rat(4), g.odd_sum()) * g.m0();
    f.provenance = "quadric-bundle-twist(" + g.display() + ")";
    return f;
}

// ---- threefold planner ----

namespace {

struct PartPlan {
    GammaVector part;
    bool twisted = false;      // realized as a double cover of `core`
    GammaVector core;          // part if direct; untwisted vector if twisted
    int exponent = 1;          // D_i, or 2 for twist covers
    int fdim = 0;
};

struct Plan {
    int cls;  // 0 pure, 1 coprime gcds, 2 with twist parts
    std::vector<PartPlan> parts;
    // prefer: pure > gcd > twisted, then finer factorizations, then entry order
    bool operator<(const Plan& o) const {
        if (cls != o.cls) return cls < o.cls;
        if (parts.size() != o.parts.size()) return parts.size() > o.parts.size();
        auto key = [](const Plan& p) {
            std::vector<std::vector<int>> k;
            for (auto& pp : p.parts) {
                k.push_back(pp.part.entries);
                k.push_back({pp.twisted ? 1 : 0});
            }
            return k;
        };
        return key(*this) < key(o);
    }
};

bool pairwise_coprime(const std::vector<int>& v) {
    for (size_t i = 0; i < v.size(); i++)
        for (size_t j = i + 1; j < v.size(); j++)
            if (std::gcd(v[i], v[j]) != 1) return false;
    return true;
}

std::optional<Plan> best_split_plan(const GammaVector& g) {
    std::vector<Plan> plans;
    for (auto& sr : splittings(g)) {
        size_t s = sr.parts.size();
        // per-part realization options
        std::vector<std::vector<PartPlan>> opts(s);
        for (size_t i = 0; i < s; i++) {
            auto& p = sr.parts[i];
            PartPlan direct{p, false, p, sr.gcds[i], (int)p.length() - 3};
            opts[i].push_back(direct);
            if (auto core = untwist(p); core && core->gcd() == 1 && core->length() < p.length())
                opts[i].push_back({p, true, *core, 2, (int)core->length() - 3});
        }
        std::vector<size_t> pick(s, 0);
        while (true) {
            int fib = (int)s - 1;
            std::vector<int> exps;
            bool twisted = false, unit = true;
            for (size_t i = 0; i < s; i++) {
                auto& pp = opts[i][pick[i]];
                fib += pp.fdim;
                exps.push_back(pp.exponent);
                twisted |= pp.twisted;
                unit &= pp.exponent == 1;
            }
            if (fib == 3 && pairwise_coprime(exps)) {
                Plan pl;
                pl.cls = twisted ? 2 : (unit ? 0 : 1);
                for (size_t i = 0; i < s; i++) pl.parts.push_back(opts[i][pick[i]]);
                plans.push_back(pl);
            }
            size_t j = 0;
            while (j < s && ++pick[j] == opts[j].size()) pick[j++] = 0;
            if (j == s) break;
        }
    }
    if (plans.empty()) return std::nullopt;
    return *std::min_element(plans.begin(), plans.end());
}

FamilyPair realize_plan(const Plan& pl) {
    bool any_twist = std::any_of(pl.parts.begin(), pl.parts.end(),
                                 [](const PartPlan& p) { return p.twisted; });
    if (!any_twist) {
        std::vector<GammaVector> parts;
        for (auto& pp : pl.parts) parts.push_back(pp.part);
        return general_split_pair(parts);
    }
    FamilyPair f;
    for (auto& pp : pl.parts) {
        if (pp.twisted) {
            FamilyPair base = canonical_model(pp.core);
            FamilyPair cov = twist_double_cover(base);
            cov.family_m0 = rpow(Rat(4), pp.core.odd_sum()) * pp.core.m0();
            f.factors.push_back(cov);
        } else if (pp.exponent == 1) {
            f.factors.push_back(canonical_model(pp.part));
        } else {
            f.factors.push_back(gcd_pair(pp.part));
        }
    }
    Rat m0 = 1;
    for (auto& pp : pl.parts) m0 *= pp.part.m0();
    f.family_m0 = m0;
    f.provenance = "product-of-factors(s=" + std::to_string(pl.parts.size()) + ")";
    return f;
}

FamilyPair reduce_inner(const GammaVector& g, bool allow_partner) {
    if (g.length() == 6) return g.gcd() == 1 ? canonical_model(g) : gcd_pair(g);
    if (auto pl = best_split_plan(g)) return realize_plan(*pl);
    if (allow_partner) {
        GammaVector partner = reduce(total_twist_gamma(g));
        if (!(partner == g)) {
            FamilyPair base = reduce_inner(partner, false);
            FamilyPair cov = twist_double_cover(base);
            cov.provenance = "twist-of-partner: " + cov.provenance;
            return cov;
        }
    }
    // last resort: adjoin a (-n, n) pair and split (fiber l - 1 - 2s)
    auto srs = splittings(g);
    for (int n = 1; n <= 6; n++) {
        for (auto& sr : srs) {
            int fib = (int)g.length() - 1 - 2 * (int)sr.parts.size();
            if (fib != 3) continue;
            std::vector<int> exps = sr.gcds;
            exps.push_back(n);
            if (!pairwise_coprime(exps)) continue;
            return general_split_pair_with_pair(sr.parts, n);
        }
    }
    throw std::runtime_error("reduce_to_threefold: no plan found for " + g.display());
}

}  // namespace

FamilyPair reduce_to_threefold(const GammaVector& g) {
    FamilyPair f = reduce_inner(g, true);
    if (f.fiber_dim() != 3)
        throw std::logic_error("reduce_to_threefold: planner returned fiber dim " +
                               std::to_string(f.fiber_dim()));
    return f;
}

// ---- Hessian at the ordinary double point ----

Rat hessian_ratio_exact(const GammaVector& g) {
    // chart z_l = gamma_l, constraint z^gamma = M0 solved for z_{l-1}:
    // det H = -gamma_l^2 / prod gamma_i, so det(H)/(-prod) = (gamma_l/prod)^2
    Rat prod = 1;
    for (int x : g.entries) prod *= x;
    Rat gl = g.entries.back();
    return (gl / prod) * (gl / prod);
}

static Real lu_det(std::vector<std::vector<Real>> a) {
    size_t n = a.size();
    Real det = 1;
    for (size_t k = 0; k < n; k++) {
        size_t piv = k;
        for (size_t i = k + 1; i < n; i++)
            if (abs(a[i][k]) > abs(a[piv][k])) piv = i;
        if (a[piv][k] == 0) return Real(0);
        if (piv != k) {
            std::swap(a[piv], a[k]);
            det = -det;
        }
        det *= a[k][k];
        for (size_t i = k + 1; i < n; i++) {
            Real f = a[i][k] / a[k][k];
            for (size_t j = k; j < n; j++) a[i][j] -= f * a[k][j];
        }
    }
    return det;
}

static std::optional<Rat> reconstruct_rational(const Real& x, const Real& tol) {
    // continued fractions
    auto ifloor = [](const Real& v) {
        double d = v.convert_to<double>();
        if (std::abs(d) > 9e15) throw std::runtime_error("reconstruct_rational: term too large");
        return Int((long long)std::floor(d));
    };
    Real v = x;
    Int p0 = 1, q0 = 0;
    Int a = ifloor(v);
    Int p1 = a, q1 = 1;
    v -= Real(a.str());
    for (int it = 0; it < 64; it++) {
        Rat cand(p1, q1);
        Real approx = Real(num(cand).str()) / Real(den(cand).str());
        if (abs(approx - x) < tol) return cand;
        if (v == 0) break;
        v = 1 / v;
        a = ifloor(v);
        v -= Real(a.str());
        Int p2 = a * p1 + p0, q2 = a * q1 + q0;
        p0 = p1;
        q0 = q1;
        p1 = p2;
        q1 = q2;
        if (q1 > Int("1000000000000000000")) break;
    }
    return std::nullopt;
}

HessianResult hessian_check(const GammaVector& g) {
    size_t l = g.length();
    if ((int)l - 2 > 12) throw std::domain_error("hessian_check: dimension too large");
    // numeric second fundamental form of F = sum z_i on {z^gamma = M0},
    // chart z_l fixed, z_{l-1} implicit; evaluated at z = gamma
    std::vector<Real> z(l);
    for (size_t i = 0; i < l; i++) z[i] = Real(g.entries[i]);
    Real zg = 1;  // z^gamma at the point = M0
    for (size_t i = 0; i < l; i++) zg *= pow(z[i], g.entries[i]);
    auto g1 = [&](size_t i) { return Real(g.entries[i]) * zg / z[i]; };
    auto g2 = [&](size_t i, size_t j) {
        if (i != j) return Real(g.entries[i]) * Real(g.entries[j]) * zg / (z[i] * z[j]);
        return Real(g.entries[i]) * Real(g.entries[i] - 1) * zg / (z[i] * z[i]);
    };
    size_t n = l - 2, e = l - 2;  // eliminated index e = l-1 (0-based)
    std::vector<std::vector<Real>> H(n, std::vector<Real>(n));
    std::vector<Real> zp(n);  // dz_e / dw_i = -g_i / g_e
    for (size_t i = 0; i < n; i++) zp[i] = -g1(i) / g1(e);
    for (size_t i = 0; i < n; i++)
        for (size_t j = 0; j < n; j++) {
            Real num = g2(i, j) + g2(i, e) * zp[j] + g2(e, j) * zp[i] + g2(e, e) * zp[i] * zp[j];
            H[i][j] = -num / g1(e);
        }
    Real det = lu_det(H);
    Rat prod = 1;
    for (int x : g.entries) prod *= x;
    Real prodr = Real(num(prod).str());
    Real ratio_num = det / (-prodr);
    auto rec = reconstruct_rational(ratio_num, Real("1e-30"));
    if (!rec) throw std::runtime_error("hessian_check: rational reconstruction failed");
    HessianResult res;
    res.ratio = *rec;
    Real approx = Real(num(res.ratio).str()) / Real(den(res.ratio).str());
    res.residual = abs(approx - ratio_num);
    if (res.ratio == 0) throw std::runtime_error("hessian_check: vanishing ratio");
    Int sn = boost::multiprecision::sqrt(num(res.ratio));
    Int sd = boost::multiprecision::sqrt(den(res.ratio));
    if (num(res.ratio) < 0 || sn * sn != num(res.ratio) || sd * sd != den(res.ratio))
        throw std::runtime_error("hessian_check: ratio is not a rational square");
    res.sqrt_ratio = Rat(sn, sd);
    return res;
}

}  // namespace hg
