#include "hg1111/newforms.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace hg::mf {

namespace {

constexpr uint64_t P = (uint64_t(1) << 61) - 1;  // Mersenne prime modulus

uint64_t addm(uint64_t a, uint64_t b) {
    uint64_t s = a + b;
    return s >= P ? s - P : s;
}
uint64_t subm(uint64_t a, uint64_t b) { return a >= b ? a - b : a + P - b; }
uint64_t mulm(uint64_t a, uint64_t b) { return (uint64_t)((__uint128_t)a * b % P); }
uint64_t powm(uint64_t b, uint64_t e) {
    uint64_t r = 1;
    while (e) {
        if (e & 1) r = mulm(r, b);
        b = mulm(b, b);
        e >>= 1;
    }
    return r;
}
uint64_t invm(uint64_t a) { return powm(a, P - 2); }
long long lift(uint64_t v) { return v <= P / 2 ? (long long)v : (long long)v - (long long)P; }

long long psi_index(long long N) {
    long long r = N, n = N;
    for (long long p = 2; p * p <= n; p++)
        if (n % p == 0) {
            r += r / p;
            while (n % p == 0) n /= p;
        }
    if (n > 1) r += r / n;
    return r;
}

long long phi_ll(long long n) {
    long long r = n;
    for (long long p = 2; p * p <= n; p++)
        if (n % p == 0) {
            r -= r / p;
            while (n % p == 0) n /= p;
        }
    if (n > 1) r -= r / n;
    return r;
}

long long cusp_count(long long N) {
    long long s = 0;
    for (long long c = 1; c <= N; c++)
        if (N % c == 0) s += phi_ll(std::gcd(c, N / c));
    return s;
}

int nu2(long long N) {
    if (N % 4 == 0) return 0;
    int r = 1;
    long long n = N;
    auto visit = [&](long long p) {
        if (p == 2) return true;
        if (p % 4 == 3) return false;
        r *= 2;
        return true;
    };
    for (long long p = 2; p * p <= n; p++)
        if (n % p == 0) {
            if (!visit(p)) return 0;
            while (n % p == 0) n /= p;
        }
    if (n > 1 && !visit(n)) return 0;
    return r;
}

int nu3(long long N) {
    if (N % 9 == 0) return 0;
    int r = 1;
    long long n = N;
    auto visit = [&](long long p) {
        if (p == 3) return true;
        if (p % 3 == 2) return false;
        r *= 2;
        return true;
    };
    for (long long p = 2; p * p <= n; p++)
        if (n % p == 0) {
            if (!visit(p)) return 0;
            while (n % p == 0) n /= p;
        }
    if (n > 1 && !visit(n)) return 0;
    return r;
}

}  // namespace

int dim_s4(long long N) {
    long long mu = psi_index(N);
    long long einf = cusp_count(N);
    int e2 = nu2(N), e3 = nu3(N);
    long long twelve_g = 12 + mu - 3 * e2 - 4 * e3 - 6 * einf;
    if (twelve_g % 12) throw std::logic_error("dim_s4: genus not integral");
    long long g = twelve_g / 12;
    long long d = 3 * (g - 1) + einf + e2 + e3;
    return (int)std::max(0LL, d);
}

namespace {

struct Series {
    std::vector<uint64_t> a;  // a[0] unused
    long long valid = 0;
};

std::vector<int> pentagonal(long long len) {
    std::vector<int> e(len + 1, 0);
    e[0] = 1;
    for (long long k = 1;; k++) {
        long long g1 = k * (3 * k - 1) / 2, g2 = k * (3 * k + 1) / 2;
        if (g1 > len && g2 > len) break;
        int s = (k % 2) ? -1 : 1;
        if (g1 <= len) e[g1] = s;
        if (g2 <= len) e[g2] = s;
    }
    return e;
}

void mul_eta(std::vector<uint64_t>& c, long long d, long long len, const std::vector<int>& pent,
             bool inverse) {
    if (!inverse) {
        for (long long n = len; n >= 0; n--) {
            uint64_t s = c[n];
            for (long long m = 1; d * m <= n; m++) {
                if (!pent[m]) continue;
                s = pent[m] > 0 ? addm(s, c[n - d * m]) : subm(s, c[n - d * m]);
            }
            c[n] = s;
        }
    } else {
        for (long long n = 0; n <= len; n++) {
            uint64_t s = c[n];
            for (long long m = 1; d * m <= n; m++) {
                if (!pent[m]) continue;
                s = pent[m] > 0 ? subm(s, c[n - d * m]) : addm(s, c[n - d * m]);
            }
            c[n] = s;
        }
    }
}

struct EtaQuotient {
    std::map<long long, int> r;
    long long lead = 0;
};

bool is_cusp_form(long long N, const std::map<long long, int>& r) {
    for (long long c = 1; c <= N; c++) {
        if (N % c) continue;
        long long s = 0;  // sign of sum_d r_d gcd(c,d)^2 (N/d)
        for (auto& [d, rd] : r) {
            long long g = std::gcd(c, d);
            s += (long long)rd * g * g * (N / d);
        }
        if (s <= 0) return false;
    }
    return true;
}

bool trivial_character(const std::map<long long, int>& r) {
    std::map<long long, long long> pr;
    for (auto& [d, rd] : r) {
        long long v = d;
        for (long long p = 2; p * p <= v; p++)
            while (v % p == 0) {
                pr[p] += rd;
                v /= p;
            }
        if (v > 1) pr[v] += rd;
    }
    for (auto& [p, e] : pr)
        if (e & 1) return false;
    return true;
}

std::vector<EtaQuotient> eta_pool(long long N, int R, int R4, int R5) {
    std::vector<long long> divs;
    for (long long d = 1; d <= N; d++)
        if (N % d == 0) divs.push_back(d);
    std::vector<EtaQuotient> pool;
    auto consider = [&](const std::map<long long, int>& r) {
        int wsum = 0;
        long long dsum = 0, nsum = 0;
        for (auto& [d, rd] : r) {
            wsum += rd;
            dsum += d * rd;
            nsum += (N / d) * rd;
        }
        if (wsum != 8 || dsum % 24 || nsum % 24 || dsum <= 0) return;
        if (!trivial_character(r) || !is_cusp_form(N, r)) return;
        pool.push_back({r, dsum / 24});
    };
    size_t nd = divs.size();
    for (size_t i = 0; i < nd; i++) {
        consider({{divs[i], 8}});
        for (size_t j = i + 1; j < nd; j++) {
            for (int a = -R - 8; a <= R + 16; a++) {
                int b = 8 - a;
                if (!a || !b || std::abs(a) > R + 8 || std::abs(b) > R + 8) continue;
                consider({{divs[i], a}, {divs[j], b}});
            }
            for (size_t k = j + 1; k < nd; k++)
                for (int a = -R; a <= R; a++)
                    for (int b = -R; b <= R; b++) {
                        int c = 8 - a - b;
                        if (!a || !b || !c || std::abs(c) > R) continue;
                        consider({{divs[i], a}, {divs[j], b}, {divs[k], c}});
                    }
        }
    }
    for (size_t i = 0; i < nd; i++)
        for (size_t j = i + 1; j < nd; j++)
            for (size_t k = j + 1; k < nd; k++)
                for (size_t l2 = k + 1; l2 < nd; l2++)
                    for (int a = -R4; a <= R4; a++)
                        for (int b = -R4; b <= R4; b++)
                            for (int c = -R4; c <= R4; c++) {
                                int d = 8 - a - b - c;
                                if (!a || !b || !c || !d || std::abs(d) > R4) continue;
                                consider({{divs[i], a},
                                          {divs[j], b},
                                          {divs[k], c},
                                          {divs[l2], d}});
                            }
    if (R5 > 0)
        for (size_t i = 0; i < nd; i++)
            for (size_t j = i + 1; j < nd; j++)
                for (size_t k = j + 1; k < nd; k++)
                    for (size_t l2 = k + 1; l2 < nd; l2++)
                        for (size_t l3 = l2 + 1; l3 < nd; l3++)
                            for (int a = -R5; a <= R5; a++)
                                for (int b = -R5; b <= R5; b++)
                                    for (int c = -R5; c <= R5; c++)
                                        for (int d = -R5; d <= R5; d++) {
                                            int e = 8 - a - b - c - d;
                                            if (!a || !b || !c || !d || !e ||
                                                std::abs(e) > R5)
                                                continue;
                                            consider({{divs[i], a},
                                                      {divs[j], b},
                                                      {divs[k], c},
                                                      {divs[l2], d},
                                                      {divs[l3], e}});
                                        }
    // cheapest expansions first
    std::sort(pool.begin(), pool.end(), [](const EtaQuotient& x, const EtaQuotient& y) {
        int sx = 0, sy = 0;
        for (auto& [d, rd] : x.r) sx += std::abs(rd);
        for (auto& [d, rd] : y.r) sy += std::abs(rd);
        return sx < sy;
    });
    return pool;
}

Series expand_eta(const EtaQuotient& q, long long len, const std::vector<int>& pent) {
    std::vector<uint64_t> c(len + 1, 0);
    c[0] = 1;
    for (auto& [d, rd] : q.r)
        for (int i = 0; i < std::abs(rd); i++) mul_eta(c, d, len, pent, rd < 0);
    Series s;
    s.a.assign(len + 1, 0);
    for (long long n = 0; n + q.lead <= len; n++) s.a[n + q.lead] = c[n];
    s.valid = len;
    return s;
}

Series hecke_tp(const Series& s, long long p, long long N, long long cap) {
    Series t;
    long long v = std::min(cap, s.valid / p);
    t.a.assign(v + 1, 0);
    t.valid = v;
    uint64_t p3 = (uint64_t)(p * p * p) % P;
    for (long long n = 1; n <= v; n++) {
        uint64_t x = s.a[n * p];
        if (N % p != 0 && n % p == 0) x = addm(x, mulm(p3, s.a[n / p]));
        t.a[n] = x;
    }
    return t;
}

Series dilate(const Series& s, long long d, long long len) {
    Series t;
    t.a.assign(len + 1, 0);
    t.valid = std::min(len, s.valid * d);
    for (long long n = 1; n * d <= t.valid; n++)
        if (n <= s.valid) t.a[n * d] = s.a[n];
    return t;
}

// row-reduction helper over the coefficient window 1..B with tracked
// coordinates in an ambient space of dimension D
struct Tracker {
    long long B = 0, D = 0;
    std::vector<std::vector<uint64_t>> rows, coords;
    std::vector<long long> pivot;

    void eliminate(std::vector<uint64_t>& v, std::vector<uint64_t>& c, bool accumulate) const {
        for (size_t i = 0; i < rows.size(); i++) {
            uint64_t f = v[pivot[i]];
            if (!f) continue;
            for (long long t = 1; t <= B; t++)
                if (rows[i][t]) v[t] = subm(v[t], mulm(f, rows[i][t]));
            for (long long t = 0; t < D; t++)
                if (coords[i][t]) {
                    if (accumulate)
                        c[t] = addm(c[t], mulm(f, coords[i][t]));
                    else
                        c[t] = subm(c[t], mulm(f, coords[i][t]));
                }
        }
    }
    // insert a vector labeled with coordinate j; false if dependent
    bool insert(std::vector<uint64_t> v, long long j) {
        std::vector<uint64_t> c(D, 0);
        c[j] = 1;
        eliminate(v, c, false);
        long long pc = 0;
        for (long long t = 1; t <= B; t++)
            if (v[t]) {
                pc = t;
                break;
            }
        if (!pc) return false;
        uint64_t inv = invm(v[pc]);
        for (auto& x : v) x = mulm(x, inv);
        for (auto& x : c) x = mulm(x, inv);
        rows.push_back(std::move(v));
        coords.push_back(std::move(c));
        pivot.push_back(pc);
        return true;
    }
    // coordinates of w in the inserted vectors; throws if outside the span
    std::vector<uint64_t> solve(std::vector<uint64_t> w) const {
        std::vector<uint64_t> c(D, 0);
        eliminate(w, c, true);
        for (long long t = 1; t <= B; t++)
            if (w[t]) throw std::runtime_error("newforms: vector outside span");
        return c;
    }
    bool contains(std::vector<uint64_t> w) const {
        std::vector<uint64_t> c(D, 0);
        eliminate(w, c, true);
        for (long long t = 1; t <= B; t++)
            if (w[t]) return false;
        return true;
    }
};

std::vector<uint64_t> window(const Series& s, long long B) {
    std::vector<uint64_t> w(B + 1, 0);
    for (long long j = 1; j <= B && j <= s.valid; j++) w[j] = s.a[j];
    return w;
}

struct LevelData {
    long long N = 0, B = 0, len = 0, need = 0;
    int dim_formula = 0;
    bool complete = false;
    std::vector<Series> basis;
};

std::map<long long, LevelData> g_levels;

const LevelData& level_data(long long N, long long nmax);

LevelData compute_level(long long N, long long nmax) {
    LevelData L;
    L.N = N;
    L.dim_formula = dim_s4(N);
    L.B = psi_index(N) / 3 + 2;
    // every basis vector must support T_p (p <= 13) against the Sturm window
    // and coefficient reads to nmax; sources get one more factor of 13 so
    // depth-1 Hecke images remain usable
    L.need = 13 * std::max(L.B, nmax);
    L.len = 13 * L.need + 16;
    if (L.dim_formula == 0) {
        L.complete = true;
        return L;
    }
    Tracker span;
    span.B = L.B;
    span.D = 1;  // coordinates unused here

    auto add = [&](Series s) {
        if (s.valid < L.need) return false;
        if (!span.insert(window(s, L.B), 0)) return false;
        L.basis.push_back(std::move(s));
        return true;
    };
    auto full = [&] { return (long long)L.basis.size() >= L.dim_formula; };

    std::vector<long long> split_primes;
    for (long long p : {2, 3, 5, 7, 11, 13})
        if (N % p) split_primes.push_back(p);

    auto closure = [&] {
        size_t frontier = 0;
        while (!full() && frontier < L.basis.size()) {
            size_t end = L.basis.size();
            for (size_t i = frontier; i < end && !full(); i++)
                for (long long p : split_primes) {
                    if (L.basis[i].valid / p < L.need) continue;
                    add(hecke_tp(L.basis[i], p, N, L.basis[i].valid / p));
                    if (full()) break;
                }
            frontier = end;
        }
    };

    // lifts from proper divisors first (cheap, already computed)
    for (long long M = 1; M < N && !full(); M++) {
        if (N % M || dim_s4(M) == 0) continue;
        const LevelData& lower = level_data(M, nmax);
        for (long long d = 1; d <= N / M && !full(); d++) {
            if ((N / M) % d) continue;
            for (auto& f : lower.basis) {
                add(dilate(f, d, L.len));
                if (full()) break;
            }
        }
    }
    closure();
    auto pump = [&](int R, int R4, int R5) {
        if (full()) return;
        auto pent = pentagonal(L.len);
        int sinceClosure = 0;
        for (auto& q : eta_pool(N, R, R4, R5)) {
            if (full()) break;
            if (add(expand_eta(q, L.len, pent)) && ++sinceClosure >= 3) {
                closure();
                sinceClosure = 0;
            }
        }
        closure();
    };
    pump(9, 5, 0);
    if (!full()) pump(9, 8, 3);  // wider pool for stubborn levels
    L.complete = full();
    return L;
}

const LevelData& level_data(long long N, long long nmax) {
    auto it = g_levels.find(N);
    if (it != g_levels.end() && it->second.need >= 13 * std::max(it->second.B, nmax))
        return it->second;
    auto L = compute_level(N, nmax);
    return g_levels.insert_or_assign(N, std::move(L)).first->second;
}

using Mat = std::vector<std::vector<uint64_t>>;

Mat restrict_matrix(const Mat& M, const std::vector<std::vector<uint64_t>>& comp) {
    size_t D = M.size(), d = comp.size();
    // rref of comp with coordinates
    std::vector<std::vector<uint64_t>> rows, coords;
    std::vector<long long> piv;
    for (size_t j = 0; j < d; j++) {
        auto v = comp[j];
        std::vector<uint64_t> c(d, 0);
        c[j] = 1;
        for (size_t i = 0; i < rows.size(); i++) {
            uint64_t f = v[piv[i]];
            if (!f) continue;
            for (size_t t = 0; t < D; t++)
                if (rows[i][t]) v[t] = subm(v[t], mulm(f, rows[i][t]));
            for (size_t t = 0; t < d; t++)
                if (coords[i][t]) c[t] = subm(c[t], mulm(f, coords[i][t]));
        }
        long long pc = -1;
        for (size_t t = 0; t < D; t++)
            if (v[t]) {
                pc = (long long)t;
                break;
            }
        if (pc < 0) throw std::runtime_error("newforms: dependent component basis");
        uint64_t inv = invm(v[pc]);
        for (auto& x : v) x = mulm(x, inv);
        for (auto& x : c) x = mulm(x, inv);
        rows.push_back(v);
        coords.push_back(c);
        piv.push_back(pc);
    }
    auto solve = [&](std::vector<uint64_t> v) {
        std::vector<uint64_t> c(d, 0);
        for (size_t i = 0; i < rows.size(); i++) {
            uint64_t f = v[piv[i]];
            if (!f) continue;
            for (size_t t = 0; t < D; t++)
                if (rows[i][t]) v[t] = subm(v[t], mulm(f, rows[i][t]));
            for (size_t t = 0; t < d; t++) c[t] = addm(c[t], mulm(f, coords[i][t]));
        }
        for (size_t t = 0; t < D; t++)
            if (v[t]) throw std::runtime_error("newforms: operator leaves component");
        return c;
    };
    Mat R(d, std::vector<uint64_t>(d, 0));
    for (size_t j = 0; j < d; j++) {
        std::vector<uint64_t> img(D, 0);
        for (size_t i = 0; i < D; i++) {
            uint64_t s = 0;
            for (size_t t = 0; t < D; t++)
                if (M[i][t] && comp[j][t]) s = addm(s, mulm(M[i][t], comp[j][t]));
            img[i] = s;
        }
        auto c = solve(img);
        for (size_t i = 0; i < d; i++) R[i][j] = c[i];
    }
    return R;
}

// kernel basis of (A - lam I) over F_P
std::vector<std::vector<uint64_t>> eigen_kernel(Mat A, uint64_t lam) {
    size_t d = A.size();
    for (size_t i = 0; i < d; i++) A[i][i] = subm(A[i][i], lam);
    std::vector<long long> pivcol;
    size_t rank = 0;
    for (size_t col = 0; col < d && rank < d; col++) {
        size_t sel = rank;
        while (sel < d && !A[sel][col]) sel++;
        if (sel == d) continue;
        std::swap(A[sel], A[rank]);
        uint64_t inv = invm(A[rank][col]);
        for (auto& x : A[rank]) x = mulm(x, inv);
        for (size_t i = 0; i < d; i++) {
            if (i == rank || !A[i][col]) continue;
            uint64_t f = A[i][col];
            for (size_t j = 0; j < d; j++) A[i][j] = subm(A[i][j], mulm(f, A[rank][j]));
        }
        pivcol.push_back((long long)col);
        rank++;
    }
    std::vector<bool> ispiv(d, false);
    for (auto c : pivcol) ispiv[c] = true;
    std::vector<std::vector<uint64_t>> kern;
    for (size_t fc = 0; fc < d; fc++) {
        if (ispiv[fc]) continue;
        std::vector<uint64_t> k(d, 0);
        k[fc] = 1;
        for (size_t i = 0; i < rank; i++) k[pivcol[i]] = subm(0, A[i][fc]);
        kern.push_back(std::move(k));
    }
    return kern;
}

Mat mat_mul_m(const Mat& a, const Mat& b) {
    size_t n = a.size();
    Mat c(n, std::vector<uint64_t>(n, 0));
    for (size_t i = 0; i < n; i++)
        for (size_t t = 0; t < n; t++) {
            if (!a[i][t]) continue;
            for (size_t j = 0; j < n; j++)
                if (b[t][j]) c[i][j] = addm(c[i][j], mulm(a[i][t], b[t][j]));
        }
    return c;
}

}  // namespace

NewspaceResult newspace_rational_forms(long long N, long long nmax) {
    NewspaceResult res;
    res.level = N;
    res.dim_full = dim_s4(N);
    if (res.dim_full == 0) {
        res.complete = true;
        return res;
    }
    const LevelData& L = level_data(N, nmax);
    res.dim_spanned = (int)L.basis.size();
    if (!L.complete) {
        res.note = "spanned " + std::to_string(res.dim_spanned) + " of " +
                   std::to_string(res.dim_full);
        return res;
    }
    long long D = res.dim_full;

    Tracker solver;
    solver.B = L.B;
    solver.D = D;
    for (long long j = 0; j < D; j++)
        if (!solver.insert(window(L.basis[j], L.B), j))
            throw std::runtime_error("newforms: basis not independent");

    std::vector<long long> split_primes;
    for (long long p : {2, 3, 5, 7, 11, 13})
        if (N % p) split_primes.push_back(p);

    std::vector<std::pair<long long, Mat>> tmats;
    for (long long p : split_primes) {
        Mat M(D, std::vector<uint64_t>(D, 0));
        for (long long j = 0; j < D; j++) {
            Series tp = hecke_tp(L.basis[j], p, N, L.basis[j].valid / p);
            if (tp.valid < L.B)
                throw std::runtime_error("newforms: precision loss (valid=" +
                                         std::to_string(L.basis[j].valid) + " p=" +
                                         std::to_string(p) + " B=" + std::to_string(L.B) + ")");
            auto c = solver.solve(window(tp, L.B));
            for (long long i = 0; i < D; i++) M[i][j] = c[i];
        }
        tmats.push_back({p, std::move(M)});
    }

    std::vector<std::vector<std::vector<uint64_t>>> comps;  // each: list of D-vectors
    {
        std::vector<std::vector<uint64_t>> all;
        for (long long j = 0; j < D; j++) {
            std::vector<uint64_t> e(D, 0);
            e[j] = 1;
            all.push_back(e);
        }
        comps.push_back(all);
    }

    for (auto& [p, M] : tmats) {
        long long bound = (long long)std::floor(2 * std::pow((double)p, 1.5));
        std::vector<std::vector<std::vector<uint64_t>>> next;
        for (auto& comp : comps) {
            size_t d = comp.size();
            if (d == 1) {
                next.push_back(comp);
                continue;
            }
            Mat R = restrict_matrix(M, comp);
            std::vector<std::vector<std::vector<uint64_t>>> pieces;
            size_t found = 0;
            std::vector<uint64_t> lams;
            for (long long lam = -bound; lam <= bound; lam++) {
                uint64_t lm = lam >= 0 ? (uint64_t)lam : P - (uint64_t)(-lam);
                auto kern = eigen_kernel(R, lm);
                if (kern.empty()) continue;
                lams.push_back(lm);
                std::vector<std::vector<uint64_t>> piece;
                for (auto& k : kern) {
                    std::vector<uint64_t> amb(D, 0);
                    for (size_t j = 0; j < d; j++)
                        if (k[j])
                            for (long long t = 0; t < D; t++)
                                amb[t] = addm(amb[t], mulm(k[j], comp[j][t]));
                    piece.push_back(std::move(amb));
                }
                found += piece.size();
                pieces.push_back(std::move(piece));
            }
            if (found == 0) {
                next.push_back(comp);
                continue;
            }
            if (found < d) {
                // complement: image of prod over found lams of (R - lam I)
                Mat Mprod(d, std::vector<uint64_t>(d, 0));
                for (size_t i = 0; i < d; i++) Mprod[i][i] = 1;
                for (uint64_t lm : lams) {
                    Mat A = R;
                    for (size_t i = 0; i < d; i++) A[i][i] = subm(A[i][i], lm);
                    Mprod = mat_mul_m(Mprod, A);
                }
                // column space
                std::vector<std::vector<uint64_t>> rr;
                std::vector<long long> rp;
                std::vector<std::vector<uint64_t>> piece;
                for (size_t j = 0; j < d; j++) {
                    std::vector<uint64_t> col(d);
                    for (size_t i = 0; i < d; i++) col[i] = Mprod[i][j];
                    for (size_t i = 0; i < rr.size(); i++) {
                        uint64_t f = col[rp[i]];
                        if (!f) continue;
                        for (size_t t = 0; t < d; t++) col[t] = subm(col[t], mulm(f, rr[i][t]));
                    }
                    long long pc = -1;
                    for (size_t t = 0; t < d; t++)
                        if (col[t]) {
                            pc = (long long)t;
                            break;
                        }
                    if (pc < 0) continue;
                    uint64_t inv = invm(col[pc]);
                    for (auto& x : col) x = mulm(x, inv);
                    rr.push_back(col);
                    rp.push_back(pc);
                    std::vector<uint64_t> amb(D, 0);
                    for (size_t t = 0; t < d; t++)
                        if (rr.back()[t])
                            for (long long a2 = 0; a2 < D; a2++)
                                amb[a2] = addm(amb[a2], mulm(rr.back()[t], comp[t][a2]));
                    piece.push_back(std::move(amb));
                }
                if (piece.size() != d - found)
                    throw std::runtime_error("newforms: residual dimension mismatch");
                pieces.push_back(std::move(piece));
            }
            for (auto& pc : pieces) next.push_back(std::move(pc));
        }
        comps = std::move(next);
    }

    if (std::getenv("HG1111_MF_DEBUG")) {
        std::string sizes;
        for (auto& comp : comps) sizes += std::to_string(comp.size()) + " ";
        fprintf(stderr, "level %lld terminal components: %s\n", N, sizes.c_str());
    }
    // dim-1 components are exactly the rational new eigensystems: old
    // eigensystems keep multiplicity >= 2 under every T_p with p coprime to N
    std::vector<std::vector<long long>> rats;
    for (auto& comp : comps) {
        if (comp.size() != 1) continue;
        auto& v = comp[0];
        long long vl = nmax;
        for (long long j = 0; j < D; j++)
            if (v[j]) vl = std::min(vl, L.basis[j].valid);
        std::vector<uint64_t> coef(vl + 1, 0);
        for (long long j = 0; j < D; j++) {
            if (!v[j]) continue;
            for (long long n = 1; n <= vl; n++)
                coef[n] = addm(coef[n], mulm(v[j], L.basis[j].a[n]));
        }
        if (!coef[1]) throw std::runtime_error("newforms: eigenform with a_1 = 0");
        uint64_t inv = invm(coef[1]);
        std::vector<long long> an(vl + 1, 0);
        for (long long n = 1; n <= vl; n++) an[n] = lift(mulm(coef[n], inv));
        rats.push_back(std::move(an));
    }

    // validation: multiplicativity, Hecke recursion, Weil bounds
    for (auto& an : rats) {
        long long vl = (long long)an.size() - 1;
        for (long long m = 2; m <= vl; m++)
            for (long long n = m + 1; m * n <= vl; n++) {
                if (std::gcd(m, n) != 1) continue;
                if (an[m] * an[n] != an[m * n])
                    throw std::runtime_error("newforms: multiplicativity failed at level " +
                                             std::to_string(N));
            }
        for (long long p = 2; p <= vl; p++) {
            bool isp = true;
            for (long long dd = 2; dd * dd <= p; dd++)
                if (p % dd == 0) isp = false;
            if (!isp || N % p == 0) continue;
            if (std::abs((double)an[p]) > 2 * std::pow((double)p, 1.5) + 0.5)
                throw std::runtime_error("newforms: Weil bound failed at level " +
                                         std::to_string(N));
            if (p * p <= vl && an[p * p] != an[p] * an[p] - p * p * p)
                throw std::runtime_error("newforms: Hecke recursion failed at level " +
                                         std::to_string(N));
        }
    }

    // LMFDB orbit order: dimension first (all rational orbits are dim 1 and
    // precede the rest), then the trace vector lexicographically
    std::sort(rats.begin(), rats.end(), [](const auto& x, const auto& y) {
        size_t n = std::min(x.size(), y.size());
        for (size_t i = 2; i < n; i++)
            if (x[i] != y[i]) return x[i] < y[i];
        return false;
    });
    const char* letters = "abcdefghijklmnopqrstuvwxyz";
    for (size_t i = 0; i < rats.size(); i++) {
        EigenForm f;
        f.level = N;
        if (i >= 26) throw std::runtime_error("newforms: orbit letter overflow");
        f.label = std::to_string(N) + ".4.a." + letters[i];
        f.an = rats[i];
        res.rational_newforms.push_back(std::move(f));
    }
    res.complete = true;
    return res;
}

}  // namespace hg::mf
