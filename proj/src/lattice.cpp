#include "hg1111/lattice.hpp"

#include <algorithm>

namespace hg {

IMat identity_mat(size_t n) {
    IMat m(n, IVec(n, 0));
    for (size_t i = 0; i < n; i++) m[i][i] = 1;
    return m;
}

IMat mat_mul(const IMat& a, const IMat& b) {
    size_t n = a.size(), k = b.size(), m = b[0].size();
    IMat c(n, IVec(m, 0));
    for (size_t i = 0; i < n; i++)
        for (size_t j = 0; j < k; j++) {
            if (a[i][j] == 0) continue;
            for (size_t t = 0; t < m; t++) c[i][t] += a[i][j] * b[j][t];
        }
    return c;
}

Int mat_det(IMat a) {
    size_t n = a.size();
    // Bareiss
    Int sign = 1, prev = 1;
    for (size_t k = 0; k + 1 < n; k++) {
        if (a[k][k] == 0) {
            size_t p = k + 1;
            while (p < n && a[p][k] == 0) p++;
            if (p == n) return 0;
            std::swap(a[k], a[p]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; i++)
            for (size_t j = k + 1; j < n; j++) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

IMat mat_inverse_unimodular(const IMat& a) {
    size_t n = a.size();
    std::vector<std::vector<Rat>> w(n, std::vector<Rat>(2 * n, 0));
    for (size_t i = 0; i < n; i++) {
        for (size_t j = 0; j < n; j++) w[i][j] = Rat(a[i][j]);
        w[i][n + i] = 1;
    }
    for (size_t c = 0; c < n; c++) {
        size_t p = c;
        while (p < n && w[p][c] == 0) p++;
        if (p == n) throw std::domain_error("mat_inverse_unimodular: singular");
        std::swap(w[c], w[p]);
        Rat piv = w[c][c];
        for (auto& x : w[c]) x /= piv;
        for (size_t i = 0; i < n; i++) {
            if (i == c || w[i][c] == 0) continue;
            Rat f = w[i][c];
            for (size_t j = 0; j < 2 * n; j++) w[i][j] -= f * w[c][j];
        }
    }
    IMat inv(n, IVec(n));
    for (size_t i = 0; i < n; i++)
        for (size_t j = 0; j < n; j++) {
            if (den(w[i][n + j]) != 1) throw std::domain_error("inverse not integral");
            inv[i][j] = num(w[i][n + j]);
        }
    return inv;
}

IMat column_reduce(const IVec& v) {
    size_t n = v.size();
    IMat V = identity_mat(n);
    IVec w = v;
    // eliminate w[j] against w[0] by extended gcd column operations
    for (size_t j = 1; j < n; j++) {
        if (w[j] == 0) continue;
        if (w[0] == 0) {
            std::swap(w[0], w[j]);
            for (size_t r = 0; r < n; r++) std::swap(V[r][0], V[r][j]);
            continue;
        }
        // g = a*w0 + b*wj
        Int a = 1, b = 0, g = w[0], x = 0, y = 1, h = w[j];
        while (h != 0) {
            Int qd = g / h;
            g -= qd * h;
            std::swap(g, h);
            a -= qd * x;
            std::swap(a, x);
            b -= qd * y;
            std::swap(b, y);
        }
        // now g = a*w0 + b*wj; and (w0/g)*... build 2x2 unimodular transform
        Int u0 = w[0] / g, uj = w[j] / g;
        for (size_t r = 0; r < n; r++) {
            Int c0 = V[r][0], cj = V[r][j];
            V[r][0] = c0 * a + cj * b;
            V[r][j] = -c0 * uj + cj * u0;
        }
        w[0] = g;
        w[j] = 0;
    }
    if (w[0] < 0) {
        for (size_t r = 0; r < n; r++) V[r][0] = -V[r][0];
        w[0] = -w[0];
    }
    return V;
}

IMat hnf(IMat rows) {
    if (rows.empty()) return rows;
    size_t nr = rows.size(), nc = rows[0].size();
    size_t r = 0;
    for (size_t c = 0; c < nc && r < nr; c++) {
        // find pivot row with nonzero in column c
        size_t p = r;
        while (p < nr && rows[p][c] == 0) p++;
        if (p == nr) continue;
        std::swap(rows[r], rows[p]);
        // reduce all lower rows against row r by euclid in column c
        for (size_t i = r + 1; i < nr; i++) {
            while (rows[i][c] != 0) {
                Int qd = rows[r][c] / rows[i][c];
                for (size_t j = 0; j < nc; j++) rows[r][j] -= qd * rows[i][j];
                std::swap(rows[r], rows[i]);
            }
        }
        if (rows[r][c] < 0)
            for (size_t j = 0; j < nc; j++) rows[r][j] = -rows[r][j];
        // reduce rows above
        for (size_t i = 0; i < r; i++) {
            Int qd = rows[i][c] / rows[r][c];
            if (rows[i][c] % rows[r][c] < 0) qd -= 1;
            if (qd != 0)
                for (size_t j = 0; j < nc; j++) rows[i][j] -= qd * rows[r][j];
        }
        r++;
    }
    rows.resize(r);
    return rows;
}

MKappa build_m_kappa_lattice(const std::vector<int>& gamma) {
    size_t l = gamma.size();
    IVec g(l);
    for (size_t i = 0; i < l; i++) g[i] = gamma[i];
    Int gg = 0;
    for (auto& x : g) gg = boost::multiprecision::gcd(gg, x);
    if (gg != 1) throw std::domain_error("build_m_kappa: gcd of entries is not 1");

    // gamma * V = (1, 0, ..., 0); column 0 is kappa, columns 1.. span ker(gamma)
    IMat V = column_reduce(g);
    IVec kappa(l);
    for (size_t i = 0; i < l; i++) kappa[i] = V[i][0];

    // coefficients of e in the kernel columns: c = V^{-1} e, c[0] = gamma.e = 0
    IMat Vinv = mat_inverse_unimodular(V);
    IVec c(l, 0);
    for (size_t i = 0; i < l; i++)
        for (size_t j = 0; j < l; j++) c[i] += Vinv[i][j];
    if (c[0] != 0) throw std::logic_error("build_m_kappa: e not in kernel");
    IVec ck(c.begin() + 1, c.end());  // primitive since e is

    // unimodular U, first row ck: rows of U give new kernel basis, first = e
    IMat W = column_reduce(ck);  // ck * W = (1,0,..,0)
    IMat U = mat_inverse_unimodular(W);

    // kernel columns as rows
    IMat kerrows(l - 1, IVec(l));
    for (size_t j = 1; j < l; j++)
        for (size_t i = 0; i < l; i++) kerrows[j - 1][i] = V[i][j];
    IMat newbasis = mat_mul(U, kerrows);
    // row 0 must be e
    for (size_t i = 0; i < l; i++)
        if (newbasis[0][i] != 1) throw std::logic_error("build_m_kappa: completion failed");

    MKappa mk;
    mk.kappa = kappa;
    mk.m_rows.assign(newbasis.begin() + 1, newbasis.end());

    // invariant: [kappa; e; M] is unimodular
    IMat full;
    full.push_back(kappa);
    full.push_back(IVec(l, 1));
    for (auto& r : mk.m_rows) full.push_back(r);
    Int d = mat_det(full);
    if (d != 1 && d != -1) throw std::logic_error("build_m_kappa: change of basis not unimodular");
    return mk;
}

bool same_lattice(IMat a, IMat b) { return hnf(std::move(a)) == hnf(std::move(b)); }

}  // namespace hg
