#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace hg {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int den(const Rat& r) { return boost::multiprecision::denominator(r); }

Int ipow(Int base, unsigned long e);
Rat rpow(const Rat& base, long e);

// x mod m in [0, m)
long long mod_ll(long long x, long long m);
long long pow_mod(long long b, long long e, long long m);
long long inv_mod(long long a, long long m);

bool is_prime(long long n);
std::vector<long long> primes_up_to(long long n);

// factorization of |n| as prime -> exponent, n != 0
std::map<Int, unsigned> factor(Int n);

// squarefree kernel of a nonzero rational: the unique squarefree integer m
// with r = m * (square of a rational)
Int squarefree_kernel(const Rat& r);

// fundamental discriminant of Q(sqrt(r)); 1 for the trivial extension
Int fundamental_discriminant(const Rat& r);

// Kronecker symbol (a|n), full generality
int kronecker(Int a, Int n);

// parse "p/q" or "p"
Rat parse_rat(const std::string& s);
std::string rat_str(const Rat& r);

unsigned long euler_phi(unsigned long n);

struct Ctx;  // forward

}  // namespace hg
