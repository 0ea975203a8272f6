#include "hg1111/hgparams.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace hg {

static Rat frac_mod1(const Rat& r) {
    Int n = num(r), d = den(r);
    Int m = n % d;
    if (m < 0) m += d;
    return Rat(m, d);
}

HGParams::HGParams(std::vector<Rat> a, std::vector<Rat> b) : alpha(std::move(a)), beta(std::move(b)) {
    for (auto& x : alpha) x = frac_mod1(x);
    for (auto& x : beta) x = frac_mod1(x);
    std::sort(alpha.begin(), alpha.end());
    std::sort(beta.begin(), beta.end());
    if (alpha.size() != beta.size()) throw std::invalid_argument("HGParams: |alpha| != |beta|");
}

bool HGParams::equivalent(const HGParams& o) const {
    return (alpha == o.alpha && beta == o.beta) || (alpha == o.beta && beta == o.alpha);
}

// A multiset of fractions is a union of full Galois orbits iff for each
// denominator n the entries with that denominator consist of whole copies of
// {k/n : gcd(k,n)=1}.
static bool orbit_closed(const std::vector<Rat>& v) {
    std::map<Int, std::map<Int, long>> by_den;  // den -> num -> count
    for (auto& r : v) by_den[den(r)][num(r)]++;
    for (auto& [n, nums] : by_den) {
        unsigned long nn = nums.begin()->first.convert_to<unsigned long>();
        (void)nn;
        unsigned long dn = n.convert_to<unsigned long>();
        unsigned long phi = euler_phi(dn);
        long total = 0;
        for (auto& [k, c] : nums) total += c;
        if (total % (long)phi) return false;
        long copies = total / (long)phi;
        // each primitive residue must appear exactly `copies` times
        for (unsigned long k = dn == 1 ? 0 : 1; k < std::max(dn, 1ul); k++) {
            if (dn != 1 && std::gcd(k, dn) != 1) continue;
            auto it = nums.find(Int(k));
            long c = it == nums.end() ? 0 : it->second;
            if (c != copies) return false;
        }
    }
    return true;
}

bool is_defined_over_Q(const HGParams& p) { return orbit_closed(p.alpha) && orbit_closed(p.beta); }

bool is_irreducible(const HGParams& p) {
    // alpha_i - beta_j never integral; entries are already reduced mod 1
    for (auto& a : p.alpha)
        for (auto& b : p.beta)
            if (a == b) return false;
    return true;
}

HGParams total_twist_params(const HGParams& p) {
    std::vector<Rat> a = p.alpha, b = p.beta;
    for (auto& x : a) x += Rat(1, 2);
    for (auto& x : b) x += Rat(1, 2);
    return HGParams(a, b);
}

static bool all_zero(const std::vector<Rat>& v) {
    return std::all_of(v.begin(), v.end(), [](const Rat& r) { return r == 0; });
}

bool is_mum(const HGParams& p) { return all_zero(p.beta) || all_zero(p.alpha); }

static std::optional<std::vector<unsigned>> orders_of(const std::vector<Rat>& v) {
    if (!orbit_closed(v)) return std::nullopt;
    std::map<unsigned long, long> count_by_den;
    for (auto& r : v) count_by_den[den(r).convert_to<unsigned long>()]++;
    std::vector<unsigned> orders;
    for (auto& [n, c] : count_by_den) {
        long copies = c / (long)euler_phi(n);
        for (long i = 0; i < copies; i++) orders.push_back((unsigned)n);
    }
    std::sort(orders.begin(), orders.end());
    return orders;
}

std::optional<CycloProfile> cyclo_profile(const HGParams& p) {
    auto no = orders_of(p.alpha);
    auto dn = orders_of(p.beta);
    if (!no || !dn) return std::nullopt;
    return CycloProfile{*no, *dn};
}

HGParams params_from_profile(const std::vector<unsigned>& num_orders,
                             const std::vector<unsigned>& den_orders) {
    auto expand = [](const std::vector<unsigned>& orders) {
        std::vector<Rat> v;
        for (unsigned n : orders) {
            if (n == 1) {
                v.emplace_back(0);
                continue;
            }
            for (unsigned k = 1; k < n; k++)
                if (std::gcd(k, n) == 1) v.emplace_back(Rat(k, n));
        }
        return v;
    };
    return HGParams(expand(num_orders), expand(den_orders));
}

std::vector<std::string> params_to_strings(const std::vector<Rat>& v) {
    std::vector<std::string> out;
    for (auto& r : v) out.push_back(rat_str(r));
    return out;
}

std::vector<Rat> params_from_strings(const std::vector<std::string>& v) {
    std::vector<Rat> out;
    for (auto& s : v) out.push_back(parse_rat(s));
    return out;
}

}  // namespace hg
