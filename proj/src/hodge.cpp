#include "hg1111/hodge.hpp"

#include <algorithm>
#include <map>

namespace hg {

HodgeVector hodge_vector(const HGParams& p) {
    if (!is_defined_over_Q(p)) throw std::domain_error("hodge_vector: not defined over Q");
    if (!is_irreducible(p)) throw std::domain_error("hodge_vector: reducible");
    struct Ev {
        Rat x;
        bool is_alpha;
    };
    std::vector<Ev> ev;
    for (auto& a : p.alpha) ev.push_back({a, true});
    for (auto& b : p.beta) ev.push_back({b, false});
    std::stable_sort(ev.begin(), ev.end(), [](const Ev& l, const Ev& r) { return l.x < r.x; });
    std::map<int, int> count;
    int level = 0;
    for (auto& e : ev) {
        if (e.is_alpha) {
            count[level]++;
            level++;
        } else {
            level--;
        }
    }
    int lo = count.begin()->first, hi = count.rbegin()->first;
    HodgeVector hv;
    hv.h.assign(hi - lo + 1, 0);
    for (auto& [lvl, c] : count) hv.h[lvl - lo] = c;
    return hv;
}

}  // namespace hg
