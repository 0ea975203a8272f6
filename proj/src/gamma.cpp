#include "hg1111/gamma.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace hg {

static bool pairs_exhaust(const std::vector<int>& e) {
    std::map<int, long> cnt;
    for (int x : e) cnt[x]++;
    for (auto& [v, c] : cnt) {
        if (v < 0 && c != cnt[-v]) return false;
        if (v > 0 && c != cnt[-v]) return false;
    }
    return true;
}

GammaVector::GammaVector(std::vector<int> e, bool check) : entries(std::move(e)) {
    std::sort(entries.begin(), entries.end());
    if (!check) return;
    long sum = 0;
    for (int x : entries) {
        if (x == 0) throw std::invalid_argument("gamma vector: zero entry");
        sum += x;
    }
    if (sum != 0) throw std::invalid_argument("gamma vector: nonzero sum");
    if (entries.empty() || pairs_exhaust(entries))
        throw std::invalid_argument("gamma vector: entries cancel in pairs");
}

int GammaVector::gcd() const {
    int g = 0;
    for (int x : entries) g = std::gcd(g, std::abs(x));
    return g;
}

int GammaVector::odd_count() const {
    return (int)std::count_if(entries.begin(), entries.end(), [](int x) { return x & 1; });
}

int GammaVector::odd_sum() const {
    int s = 0;
    for (int x : entries)
        if (x & 1) s += x;
    return s;
}

int GammaVector::even_sum() const {
    int s = 0;
    for (int x : entries)
        if (!(x & 1)) s += x;
    return s;
}

int GammaVector::neg_minus_pos() const {
    int r = 0;
    for (int x : entries) r += x < 0 ? 1 : -1;
    return r;
}

Rat GammaVector::m0() const {
    Rat m = 1;
    for (int x : entries) m *= rpow(Rat(x), x);
    return m;
}

std::string GammaVector::display() const {
    std::ostringstream os;
    for (size_t i = 0; i < entries.size();) {
        size_t j = i;
        while (j < entries.size() && entries[j] == entries[i]) j++;
        if (i) os << " ";
        os << entries[i];
        if (j - i > 1) os << "^" << (j - i);
        i = j;
    }
    return os.str();
}

GammaVector reduce(std::vector<int> raw) {
    long sum = 0;
    for (int x : raw) {
        if (x == 0) throw std::invalid_argument("reduce: zero entry");
        sum += x;
    }
    if (sum != 0) throw std::invalid_argument("reduce: nonzero sum");
    std::map<int, long> cnt;
    for (int x : raw) cnt[x]++;
    std::vector<int> out;
    for (auto& [v, c] : cnt) {
        if (v >= 0) continue;
        long keep = c - std::min(c, cnt.count(-v) ? cnt[-v] : 0);
        for (long i = 0; i < keep; i++) out.push_back(v);
    }
    for (auto& [v, c] : cnt) {
        if (v <= 0) continue;
        long keep = c - std::min(c, cnt.count(-v) ? cnt[-v] : 0);
        for (long i = 0; i < keep; i++) out.push_back(v);
    }
    if (out.empty()) throw std::invalid_argument("reduce: not a gamma vector (full cancellation)");
    return GammaVector(out);
}

std::vector<int> total_twist_gamma(const GammaVector& g) {
    std::vector<int> out;
    for (int x : g.entries) {
        if (x & 1) {
            out.push_back(2 * x);
            out.push_back(-x);
        } else {
            out.push_back(x);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::map<unsigned, int> power_exponents(const GammaVector& g) {
    std::map<unsigned, int> c;
    for (int x : g.entries) c[(unsigned)std::abs(x)] += x < 0 ? 1 : -1;
    std::erase_if(c, [](auto& kv) { return kv.second == 0; });
    return c;
}

GammaVector gamma_from_params(const HGParams& p) {
    auto prof = cyclo_profile(p);
    if (!prof) throw std::domain_error("gamma_from_params: parameters not defined over Q");
    if (!is_irreducible(p)) throw std::domain_error("gamma_from_params: reducible parameters");
    // Phi-exponents e_d of Q = q_inf/q_0
    std::map<unsigned, int> e;
    for (unsigned n : prof->numerator_orders) e[n]++;
    for (unsigned n : prof->denominator_orders) e[n]--;
    // Solve e_d = sum_{d | v} c_v for c, from the top down.  Termination and
    // support bound: c_v = 0 above the largest index present.
    unsigned top = 0;
    for (auto& [d, ed] : e)
        if (ed) top = std::max(top, d);
    std::map<unsigned, int> c;
    for (unsigned v = top; v >= 1; v--) {
        int ev = e.count(v) ? e[v] : 0;
        int s = 0;
        for (unsigned w = 2 * v; w <= top; w += v) s += c.count(w) ? c[w] : 0;
        int cv = ev - s;
        if (cv) c[v] = cv;
    }
    std::vector<int> raw;
    for (auto& [v, cv] : c) {
        // c_v > 0 means (x^v-1) in the numerator, i.e. entries -v
        for (int i = 0; i < std::abs(cv); i++) raw.push_back(cv > 0 ? -(int)v : (int)v);
    }
    return reduce(raw);
}

HGParams params_from_gamma(const GammaVector& g) {
    auto c = power_exponents(g);
    unsigned top = 0;
    for (auto& [v, cv] : c) top = std::max(top, v);
    std::map<unsigned, int> e;  // Phi_d exponents
    for (auto& [v, cv] : c)
        for (unsigned d = 1; d <= v; d++)
            if (v % d == 0) e[d] += cv;
    std::vector<unsigned> num_orders, den_orders;
    for (auto& [d, ed] : e) {
        for (int i = 0; i < ed; i++) num_orders.push_back(d);
        for (int i = 0; i < -ed; i++) den_orders.push_back(d);
    }
    return params_from_profile(num_orders, den_orders);
}

bool SplitResult::all_unit_gcd() const {
    return std::all_of(gcds.begin(), gcds.end(), [](int d) { return d == 1; });
}

static bool is_valid_gamma_multiset(const std::vector<int>& v) {
    long s = 0;
    for (int x : v) s += x;
    return s == 0 && !v.empty() && !pairs_exhaust(v);
}

// Enumerate partitions of the entry positions into gamma-vector parts.
// Anchoring on the lowest remaining position yields each partition once (up to
// identical-part permutations, removed by canonical dedup at the end).
static void split_rec(const std::vector<int>& entries, unsigned long remaining,
                      std::vector<std::vector<int>>& parts, size_t max_parts,
                      std::set<std::vector<std::vector<int>>>& out) {
    if (!remaining) {
        if (parts.size() >= 2) {
            auto sorted = parts;
            std::sort(sorted.begin(), sorted.end());
            out.insert(sorted);
        }
        return;
    }
    if (max_parts && parts.size() >= max_parts) return;
    int anchor = -1;
    for (int i = 0; i < (int)entries.size(); i++)
        if (remaining >> i & 1) {
            anchor = i;
            break;
        }
    std::vector<int> rest;
    for (int i = anchor + 1; i < (int)entries.size(); i++)
        if (remaining >> i & 1) rest.push_back(i);
    unsigned long nsub = 1ul << rest.size();
    for (unsigned long sub = 0; sub < nsub; sub++) {
        std::vector<int> part = {entries[anchor]};
        unsigned long mask = 1ul << anchor;
        for (size_t j = 0; j < rest.size(); j++)
            if (sub >> j & 1) {
                part.push_back(entries[rest[j]]);
                mask |= 1ul << rest[j];
            }
        std::sort(part.begin(), part.end());
        if (!is_valid_gamma_multiset(part)) continue;
        parts.push_back(part);
        split_rec(entries, remaining & ~mask, parts, max_parts, out);
        parts.pop_back();
    }
}

std::vector<SplitResult> splittings(const GammaVector& g, size_t max_parts) {
    std::set<std::vector<std::vector<int>>> found;
    std::vector<std::vector<int>> parts;
    unsigned long all = (1ul << g.length()) - 1;
    split_rec(g.entries, all, parts, max_parts, found);
    std::vector<SplitResult> out;
    for (auto& pv : found) {
        SplitResult r;
        for (auto& p : pv) {
            r.parts.emplace_back(p);
            r.gcds.push_back(r.parts.back().gcd());
        }
        out.push_back(std::move(r));
    }
    return out;
}

std::optional<GammaVector> untwist(const GammaVector& v) {
    // twist(g') keeps even entries of g' and maps each odd o to {2o, -o};
    // so every odd entry x of v must be a "-o" witness (o = -x odd), paired
    // with 2o = -2x.  Entries of v that are twice an odd number may be either
    // pair-partners or even entries of g'; match greedily over the odd ones.
    std::map<int, long> cnt;
    for (int x : v.entries) cnt[x]++;
    std::vector<int> odds;
    for (auto& [x, c] : cnt)
        if (x & 1)
            for (long i = 0; i < c; i++) odds.push_back(x);
    std::vector<int> gp;  // g'
    for (int x : odds) {
        int o = -x;            // odd entry of g'
        int partner = 2 * o;   // must be present
        if (cnt[x] <= 0) continue;  // consumed already (shouldn't happen for odds)
        if (cnt[partner] <= 0) return std::nullopt;
        cnt[x]--;
        cnt[partner]--;
        gp.push_back(o);
    }
    for (auto& [x, c] : cnt) {
        if (c < 0) return std::nullopt;
        if (c == 0) continue;
        if (x & 1) return std::nullopt;
        for (long i = 0; i < c; i++) gp.push_back(x);  // even entries kept
    }
    if (gp.empty()) return std::nullopt;
    long sum = 0;
    for (int x : gp) sum += x;
    if (sum != 0 || pairs_exhaust(gp)) return std::nullopt;
    GammaVector cand(gp);
    auto tt = total_twist_gamma(cand);
    std::vector<int> ve = v.entries;
    if (tt != ve) return std::nullopt;
    return cand;
}

}  // namespace hg
