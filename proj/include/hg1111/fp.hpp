#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "hg1111/util.hpp"

namespace hg {

using Real = boost::multiprecision::cpp_bin_float_50;

struct Cx {
    Real re{0}, im{0};
    Cx() = default;
    Cx(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
    Cx operator+(const Cx& o) const { return {re + o.re, im + o.im}; }
    Cx operator-(const Cx& o) const { return {re - o.re, im - o.im}; }
    Cx operator*(const Cx& o) const { return {re * o.re - im * o.im, re * o.im + im * o.re}; }
    Cx& operator+=(const Cx& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    Cx& operator*=(const Cx& o) {
        *this = *this * o;
        return *this;
    }
    Real abs2() const { return re * re + im * im; }
};

// Tables for one odd prime p: discrete logs for a fixed generator and the
// Gauss sums g(m) = sum_x omega(x)^m psi(x) at working precision.
struct FpContext {
    long long p;
    long long gen;
    std::vector<long long> dlog;  // dlog[x] for x in 1..p-1; dlog[0] unused
    std::vector<long long> gpow;  // gen^k mod p, k in 0..p-2
    std::vector<Cx> zeta;         // zeta_{p-1}^k, k in 0..p-2
    std::vector<Cx> gauss;        // g(m), m in 0..p-2

    explicit FpContext(long long prime);

    long long residue(const Rat& r) const;          // r mod p; throws on bad denominator
    const Cx& omega(long long m, long long x) const;  // omega(x)^m via dlog
};

long long primitive_root(long long p);

// process-wide shared tables, built once per prime
const FpContext& fp_context(long long p);

}  // namespace hg
