#include "hg1111/util.hpp"

#include <algorithm>

namespace hg {

Int ipow(Int base, unsigned long e) {
    Int r = 1;
    while (e) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

Rat rpow(const Rat& base, long e) {
    if (e < 0) {
        if (base == 0) throw std::domain_error("rpow: 0^negative");
        return Rat(1) / rpow(base, -e);
    }
    Rat r = 1, b = base;
    unsigned long k = (unsigned long)e;
    while (k) {
        if (k & 1) r *= b;
        b *= b;
        k >>= 1;
    }
    return r;
}

long long mod_ll(long long x, long long m) {
    long long r = x % m;
    return r < 0 ? r + m : r;
}

long long pow_mod(long long b, long long e, long long m) {
    b = mod_ll(b, m);
    long long r = 1;
    while (e) {
        if (e & 1) r = (long long)((__int128)r * b % m);
        b = (long long)((__int128)b * b % m);
        e >>= 1;
    }
    return r;
}

long long inv_mod(long long a, long long m) {
    long long g = m, x = 0, x1 = 1, a1 = mod_ll(a, m);
    while (a1) {
        long long qd = g / a1;
        g -= qd * a1;
        std::swap(g, a1);
        x -= qd * x1;
        std::swap(x, x1);
    }
    if (g != 1) throw std::domain_error("inv_mod: not invertible");
    return mod_ll(x, m);
}

bool is_prime(long long n) {
    if (n < 2) return false;
    for (long long d : {2LL, 3LL, 5LL, 7LL, 11LL, 13LL, 17LL, 19LL, 23LL}) {
        if (n % d == 0) return n == d;
    }
    // deterministic Miller-Rabin for 64-bit
    long long d = n - 1;
    int s = 0;
    while (d % 2 == 0) d /= 2, s++;
    for (long long a : {2LL, 3LL, 5LL, 7LL, 11LL, 13LL, 17LL, 19LL, 23LL, 29LL, 31LL, 37LL}) {
        if (a % n == 0) continue;
        long long x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool comp = true;
        for (int i = 1; i < s; i++) {
            x = (long long)((__int128)x * x % n);
            if (x == n - 1) {
                comp = false;
                break;
            }
        }
        if (comp) return false;
    }
    return true;
}

std::vector<long long> primes_up_to(long long n) {
    std::vector<bool> sieve(n + 1, true);
    std::vector<long long> ps;
    for (long long i = 2; i <= n; i++) {
        if (!sieve[i]) continue;
        ps.push_back(i);
        for (long long j = i * i; j <= n; j += i) sieve[j] = false;
    }
    return ps;
}

std::map<Int, unsigned> factor(Int n) {
    if (n < 0) n = -n;
    if (n == 0) throw std::domain_error("factor(0)");
    std::map<Int, unsigned> f;
    for (Int p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        while (n % p == 0) {
            f[p]++;
            n /= p;
        }
    }
    if (n > 1) f[n]++;
    return f;
}

Int squarefree_kernel(const Rat& r) {
    if (r == 0) throw std::domain_error("squarefree_kernel(0)");
    Int m = num(r) * den(r);  // same square class as r
    int sign = m < 0 ? -1 : 1;
    Int k = 1;
    for (auto& [p, e] : factor(m))
        if (e % 2) k *= p;
    return sign * k;
}

Int fundamental_discriminant(const Rat& r) {
    Int m = squarefree_kernel(r);
    if (m == 1) return 1;
    Int mm = m % 4;
    if (mm < 0) mm += 4;
    return mm == 1 ? m : 4 * m;
}

int kronecker(Int a, Int n) {
    if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
    int sign = 1;
    if (n < 0) {
        n = -n;
        if (a < 0) sign = -sign;
    }
    // factor out 2s of n
    int e2 = 0;
    while (n % 2 == 0) {
        n /= 2;
        e2++;
    }
    if (e2) {
        if (a % 2 == 0) return 0;
        Int am8 = a % 8;
        if (am8 < 0) am8 += 8;
        if ((e2 % 2) && (am8 == 3 || am8 == 5)) sign = -sign;
    }
    // now n odd positive; Jacobi symbol (a|n)
    a %= n;
    if (a < 0) a += n;
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            Int nm8 = n % 8;
            if (nm8 == 3 || nm8 == 5) sign = -sign;
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3) sign = -sign;
        a %= n;
    }
    return n == 1 ? sign : 0;
}

Rat parse_rat(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(Int(s));
    return Rat(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
}

std::string rat_str(const Rat& r) {
    std::string s = num(r).str();
    if (den(r) != 1) s += "/" + den(r).str();
    return s;
}

unsigned long euler_phi(unsigned long n) {
    unsigned long r = n;
    for (unsigned long p = 2; p * p <= n; p++) {
        if (n % p == 0) {
            r -= r / p;
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) r -= r / n;
    return r;
}

}  // namespace hg
