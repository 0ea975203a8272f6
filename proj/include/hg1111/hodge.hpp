#pragma once

#include "hg1111/hgparams.hpp"

namespace hg {

struct HodgeVector {
    std::vector<int> h;  // h^{p, w-p} over the occupied levels
    int weight() const {
        int nz = 0;
        for (int x : h) nz += x != 0;
        return nz - 1;
    }
    bool operator==(const HodgeVector& o) const = default;
};

// Interlacing count: sort alpha and beta on [0,1); walking upward, the level
// rises at each alpha and drops at each beta; h^p = number of alphas seen at
// level p (normalized so the lowest occupied level is 0).
HodgeVector hodge_vector(const HGParams& p);

}  // namespace hg
