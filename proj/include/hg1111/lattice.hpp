#pragma once

#include "hg1111/util.hpp"

namespace hg {

using IMat = std::vector<std::vector<Int>>;
using IVec = std::vector<Int>;

IMat identity_mat(size_t n);
IMat mat_mul(const IMat& a, const IMat& b);
Int mat_det(IMat a);                 // fraction-free Gaussian elimination
IMat mat_inverse_unimodular(const IMat& a);  // requires det = +-1

// Unimodular V (n x n) with v * V = (g, 0, ..., 0), g = gcd(v) > 0.
IMat column_reduce(const IVec& v);

// Row-style Hermite normal form of the lattice spanned by the rows.
IMat hnf(IMat rows);

// M-matrix and kappa-vector for a primitive integer vector gamma:
//   rows of M together with e = (1,..,1) form a basis of ker(gamma),
//   kappa . gamma = 1, and [kappa; e; M] is unimodular.
struct MKappa {
    IMat m_rows;  // (l-2) x l
    IVec kappa;   // length l
};
MKappa build_m_kappa_lattice(const std::vector<int>& gamma);

// true iff the rows of a and b span the same lattice
bool same_lattice(IMat a, IMat b);

}  // namespace hg
