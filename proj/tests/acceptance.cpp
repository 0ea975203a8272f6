// Acceptance suite: runs each top-level criterion and prints one line per
// criterion.  Exit status 0 iff everything passes.

#include <chrono>
#include <filesystem>
#include <iostream>
#include <numeric>
#include <sstream>

#include "hg1111/lmfdb.hpp"
#include "hg1111/tables.hpp"
#include "hg1111/verify.hpp"

using namespace hg;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;

void report(const std::string& name, bool pass, const std::string& detail = "") {
    std::cout << (pass ? "[PASS] " : "[FAIL] ") << name;
    if (!detail.empty()) std::cout << "  (" << detail << ")";
    std::cout << std::endl;
    if (!pass) g_failures++;
}

std::string fixture(const std::string& name) {
    return std::string(HG1111_FIXTURES_DIR) + "/" + name;
}

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

// ---- criterion 1: classification ----
void criterion_classification(const std::vector<CaseRecord>& recs,
                              const std::vector<TableRow>& rows, double elapsed) {
    int mums = 0;
    for (auto& r : recs) mums += r.mum;
    std::vector<std::string> diffs = diff_against_tables(recs, rows);
    std::ostringstream det;
    det << recs.size() << " cases, " << mums << " MUM, " << diffs.size()
        << " column mismatches, " << elapsed << " s";
    for (auto& d : diffs) det << "; " << d;
    report("classification: 47 cases, 14 MUM, columns match tables, < 60 s",
           recs.size() == 47 && mums == 14 && diffs.empty() && elapsed < 60.0, det.str());
}

// ---- criterion 2: twist structure ----
void criterion_twist_structure(const std::vector<CaseRecord>& recs) {
    bool ok = true;
    std::ostringstream det;
    for (int i : {1, 30, 37})
        if (recs[i - 1].twist_partner != i) ok = false;
    for (int i = 2; i <= 14; i++)
        if (recs[i - 1].twist_partner != i + 13) ok = false;
    for (int i = 28; i <= 38; i++) {
        if (i == 30 || i == 37) continue;
        int p = recs[i - 1].twist_partner;
        if (p < 39 || p > 47) ok = false;
    }
    int pairs = 0;
    for (auto& r : recs) {
        if (recs[r.twist_partner - 1].twist_partner != r.index) ok = false;
        if (r.twist_partner >= r.index) pairs++;
    }
    if (pairs != 25) ok = false;
    det << pairs << " pairs";
    report("twist structure: 1/30/37 self-twist, 2-14 <-> 15-27, 25 pairs", ok, det.str());
}

// ---- criterion 3: discriminants ----
void criterion_discriminants(const std::vector<CaseRecord>& recs,
                             const std::vector<TableRow>& rows) {
    bool ok = true;
    std::ostringstream det;
    for (size_t i = 0; i < recs.size(); i++) {
        if (recs[i].D != rows[i].D || recs[i].E != rows[i].E) {
            ok = false;
            det << " case " << recs[i].index;
        }
        // sign rule: sign of the radicand is (-1)^{r(r-1)/2}
        Rat prod = 1;
        for (int x : recs[i].gamma_red.entries) prod *= x;
        Rat radicand = -prod;
        if ((recs[i].gamma_red.dim() / 2) % 2) radicand = -radicand;
        long long rr = recs[i].gamma_red.neg_minus_pos();
        int want = ((rr * (rr - 1) / 2) % 2 == 0) ? 1 : -1;
        if ((radicand > 0 ? 1 : -1) != want) {
            ok = false;
            det << " sign-rule case " << recs[i].index;
        }
    }
    report("discriminants: D and E columns exact for all 47, sign rule holds", ok, det.str());
}

// ---- criterion 4: gamma calculus worked examples ----
void criterion_gamma_calculus() {
    bool ok = true;
    std::ostringstream det;
    if (reduce({-6, -3, -2, 1, 2, 2, 6}).entries != std::vector<int>{-3, 1, 2}) {
        ok = false;
        det << " reduce;";
    }
    if (total_twist_gamma(GammaVector({-6, -1, 2, 2, 3})) !=
        std::vector<int>{-6, -3, -2, 1, 2, 2, 6}) {
        ok = false;
        det << " twist;";
    }
    if (GammaVector({-4, -1, -1, -1, -1, -1, 2, 2, 2, 3}).m0() != Rat(-27, 4)) {
        ok = false;
        det << " M0(28);";
    }
    std::vector<std::vector<int>> samples = {
        {-3, 1, 2},          {-2, 1, 1},       {-5, 1, 1, 1, 1, 1}, {-4, -1, 2, 3},
        {-6, -1, 2, 2, 3},   {-4, 2, 2},       {-6, 3, 3},          {-2, -2, 1, 1, 1, 1},
        {-4, -3, 1, 1, 1, 1, 1, 2}, {-10, 1, 1, 1, 2, 5}};
    for (auto& v : samples) {
        GammaVector g(v);
        GammaVector t(total_twist_gamma(g), false);
        if (t.m0() != rpow(Rat(4), g.odd_sum()) * g.m0()) {
            ok = false;
            det << " twisted-M0 " << g.display() << ";";
        }
    }
    report("gamma calculus: worked examples and twisted-M0 rule (10 samples), exact", ok,
           det.str());
}

// ---- criterion 5: threefold reduction ----
void criterion_threefolds(const std::vector<CaseRecord>& recs) {
    bool ok = true;
    std::ostringstream det;
    std::vector<FamilyPair> plans(48);
    for (auto& r : recs) {
        try {
            plans[r.index] = reduce_to_threefold(r.gamma_red);
            if (plans[r.index].fiber_dim() != 3) {
                ok = false;
                det << " case " << r.index << " dim " << plans[r.index].fiber_dim() << ";";
            }
        } catch (const std::exception& e) {
            ok = false;
            det << " case " << r.index << ": " << e.what() << ";";
        }
    }
    // shapes for 28 / 30 / 41
    auto& p28 = plans[28];
    if (!(p28.eqs.size() == 3 && p28.vars.size() == 6 && p28.map_scale == Rat(-4, 27))) {
        ok = false;
        det << " case28 shape;";
    }
    auto& p30 = plans[30];
    if (!(p30.eqs.size() == 4 && p30.vars.size() == 7 && p30.map_scale == 1 &&
          p30.map_pow == 1)) {
        ok = false;
        det << " case30 shape;";
    }
    auto& p41 = plans[41];
    {
        std::multiset<std::pair<int, Rat>> maps, want = {
            {3, Rat(1, 64)}, {2, Rat(-4, 27)}, {1, Rat(4)}, {1, Rat(4)}};
        bool shape41 = p41.is_product() && p41.factors.size() == 4;
        if (shape41)
            for (auto& f : p41.factors) maps.insert({f.map_pow, f.map_scale});
        if (!shape41 || maps != want) {
            ok = false;
            det << " case41 shape;";
        }
    }
    // point-count agreement with the paper's displayed models
    struct Ref {
        int idx;
        FamilyPair ref;
    };
    for (auto& rr : {Ref{28, reference_model_28()}, Ref{30, reference_model_30()},
                     Ref{41, reference_model_41()}}) {
        for (long long q : {5, 7, 11}) {
            int tested = 0;
            for (long long t = 2; t < q && tested < 3; t++, tested++) {
                long long mine = count_points(plans[rr.idx], Rat(t), q);
                long long ref = count_points(rr.ref, Rat(t), q);
                if (mine != ref) {
                    ok = false;
                    det << " case" << rr.idx << " q=" << q << " t=" << t << ": " << mine
                        << "!=" << ref << ";";
                }
            }
        }
    }
    report("threefold reduction: fiber dim 3 for all 47; cases 28/30/41 match displays", ok,
           det.str());
}

// ---- criterion 6: hessian squares ----
void criterion_hessian(const std::vector<CaseRecord>& recs) {
    bool ok = true;
    int done = 0;
    std::ostringstream det;
    for (auto& r : recs) {
        if ((int)r.gamma_red.length() - 2 > 12 || done >= 12) continue;
        try {
            auto h = hessian_check(r.gamma_red);
            if (h.residual > Real("1e-20") || h.sqrt_ratio * h.sqrt_ratio != h.ratio ||
                h.ratio == 0) {
                ok = false;
                det << " case " << r.index << ";";
            }
            done++;
        } catch (const std::exception& e) {
            ok = false;
            det << " case " << r.index << ": " << e.what() << ";";
        }
    }
    det << done << " cases checked";
    report("hessian: det(H)/(-prod gamma) a nonzero rational square, residual < 1e-20",
           ok && done >= 10, det.str());
}

// ---- criterion 7: sum/point-count oracle ----
void criterion_sum_identity() {
    auto t0 = Clock::now();
    bool ok = true;
    std::ostringstream det;
    for (auto v : {std::vector<int>{-2, 1, 1}, {-3, 1, 2}, {-5, 1, 1, 1, 1, 1}}) {
        GammaVector g(v);
        for (long long p : {5, 7, 11, 13}) {
            if (!is_good_prime(g, p)) {
                det << " skip " << g.display() << " p=" << p << " (bad prime);";
                continue;
            }
            std::vector<Rat> samples;
            for (long long t = 2; t < p && samples.size() < 5; t++) samples.push_back(Rat(t));
            for (long long t = 2; samples.size() < 5; t++)
                if ((p + t) % p > 1) samples.push_back(Rat(p + t));
            auto rep = verify_sum_identity(g, p, samples);
            if (!rep.ok) {
                ok = false;
                det << " " << g.display() << " p=" << p << " residual != 0;";
            }
        }
    }
    double el = seconds_since(t0);
    det << el << " s";
    report("sum/point-count oracle: residual exactly 0 for 3 vectors at p in {5,7,11,13}, < 2 min",
           ok && el < 120.0, det.str());
}

// ---- criterion 8: conifold a_p against fixtures + Weil bound ----
void criterion_conifold_ap(const std::vector<CaseRecord>& recs,
                           const std::vector<TableRow>& rows) {
    bool ok = true;
    std::ostringstream det;
    LmfdbConfig cfg;
    cfg.cache_dir = fixture("newforms");
    LmfdbClient client(cfg);
    for (int idx : {1, 5, 8, 11}) {
        auto& r = recs[idx - 1];
        auto& label = rows[idx - 1].form_label;
        long long level = std::stoll(label.substr(0, label.find('.')));
        const NewformRecord* f = nullptr;
        auto forms = client.fetch_newforms(level);
        for (auto& g : forms)
            if (g.label == label) f = &g;
        if (!f) {
            ok = false;
            det << " no fixture " << label << ";";
            continue;
        }
        for (long long p : primes_up_to(50)) {
            if (!good_prime_at_conifold(r, p)) continue;
            auto d = euler_factor_conifold(r, p);
            auto it = f->ap.find(p);
            if (it == f->ap.end() || it->second != d.a_p) {
                ok = false;
                det << " case " << idx << " p=" << p << ": " << d.a_p << " != fixture;";
            }
        }
    }
    // Weil bound for all 47 at good p <= 50 (checked inside euler_factor_conifold)
    for (auto& r : recs) {
        for (long long p : primes_up_to(50)) {
            if (!good_prime_at_conifold(r, p)) continue;
            try {
                euler_factor_conifold(r, p);
            } catch (const std::exception& e) {
                ok = false;
                det << " case " << r.index << " p=" << p << ": " << e.what() << ";";
            }
        }
    }
    report("conifold a_p: cases 1/5/8/11 match fixtures at good p <= 50; Weil bound all 47",
           ok, det.str());
}

// ---- criterion 9: twist relation ----
void criterion_twist_relation(const std::vector<CaseRecord>& recs) {
    bool ok = true;
    std::ostringstream det;
    for (int idx : {2, 5, 11}) {
        auto& a = recs[idx - 1];
        auto& b = recs[a.twist_partner - 1];
        int lo = a.gamma_red.odd_count();
        Rat arg = a.gamma_red.m0();
        if ((lo / 2) % 2) arg = -arg;
        for (long long p : primes_up_to(30)) {
            if (p == 2) continue;
            if (!is_good_prime(a.gamma_red, p) || !is_good_prime(b.gamma_red, p)) continue;
            FpContext ctx(p);
            for (long long t : {2, 3, 5}) {
                if (t % p == 0 || (t - 1) % p == 0) continue;
                long long ha = hgm_trace(a.gamma_red, Rat(t), ctx);
                long long hb = hgm_trace(b.gamma_red, Rat(t), ctx);
                long long chi = pow_mod(ctx.residue(arg * Rat(t)), (p - 1) / 2, p);
                int sg = chi == 1 ? 1 : -1;
                if (hb != sg * ha) {
                    ok = false;
                    det << " pair " << idx << "/" << a.twist_partner << " p=" << p
                        << " t=" << t << ";";
                }
            }
        }
    }
    report("twist relation: three pairs satisfy the epsilon_t relation at p <= 30, exact", ok,
           det.str());
}

// ---- criterion 10: newform identification ----
void criterion_newform_identification(const std::vector<CaseRecord>& recs,
                                      const std::vector<TableRow>& rows) {
    bool ok = true;
    std::ostringstream det;
    LmfdbConfig cfg;
    cfg.cache_dir = fixture("newforms");
    LmfdbClient client(cfg);
    for (auto& r : recs) {
        auto& want = rows[r.index - 1].form_label;
        auto aps = ap_series(r, 50);
        auto m = client.match_form(aps, prime_support(r.gamma_red));
        if (want.empty()) {
            if (m.form || m.ambiguous) {
                ok = false;
                det << " case " << r.index << " unexpectedly matched;";
            }
            continue;
        }
        if (m.ambiguous) {
            ok = false;
            det << " case " << r.index << " ambiguous;";
        } else if (!m.form) {
            ok = false;
            det << " case " << r.index << " no match (want " << want << ");";
        } else if (m.form->label != want) {
            ok = false;
            det << " case " << r.index << ": " << m.form->label << " != " << want << ";";
        }
    }
    report("newform identification: exact labels for 45 cases, none for 38/47", ok, det.str());
}

}  // namespace

int main() {
    std::cout << "acceptance suite\n";
    auto t0 = Clock::now();
    auto recs = classify_all();
    double classify_time = seconds_since(t0);
    auto rows = load_tables(fixture("tables.json"));

    criterion_classification(recs, rows, classify_time);
    criterion_twist_structure(recs);
    criterion_discriminants(recs, rows);
    criterion_gamma_calculus();
    criterion_threefolds(recs);
    criterion_hessian(recs);
    criterion_sum_identity();
    criterion_conifold_ap(recs, rows);
    criterion_twist_relation(recs);
    criterion_newform_identification(recs, rows);

    std::cout << (g_failures ? "FAILURES: " + std::to_string(g_failures) : "all criteria passed")
              << std::endl;
    return g_failures ? 1 : 0;
}
