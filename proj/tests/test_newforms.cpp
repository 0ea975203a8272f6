#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hg1111/newforms.hpp"

using namespace hg::mf;

TEST_CASE("dimension formula") {
    CHECK(dim_s4(1) == 0);
    CHECK(dim_s4(5) == 1);
    CHECK(dim_s4(6) == 1);
    CHECK(dim_s4(8) == 1);
    CHECK(dim_s4(9) == 1);
    CHECK(dim_s4(12) == 3);
    CHECK(dim_s4(24) == 8);
}

TEST_CASE("level 8 newform matches the eta product") {
    // dim S_4(Gamma0(8)) = 1, so eta(2t)^4 eta(4t)^4 is the newform
    auto ns = newspace_rational_forms(8, 60);
    REQUIRE(ns.complete);
    REQUIRE(ns.rational_newforms.size() == 1);
    auto& f = ns.rational_newforms[0];
    CHECK(f.label == "8.4.a.a");
    // expand eta(2t)^4 eta(4t)^4 = q prod (1-q^{2n})^4 (1-q^{4n})^4 directly
    const int L = 40;
    std::vector<long long> e(L + 1, 0);
    e[0] = 1;
    for (int d : {2, 2, 2, 2, 4, 4, 4, 4}) {
        // multiply by (1 - q^d - q^{2d} ...) pentagonal
        std::vector<long long> pent(L + 1, 0);
        pent[0] = 1;
        for (long long k = 1;; k++) {
            long long g1 = k * (3 * k - 1) / 2 * d, g2 = k * (3 * k + 1) / 2 * d;
            if (g1 > L && g2 > L) break;
            long long s = (k % 2) ? -1 : 1;
            if (g1 <= L) pent[g1] = s;
            if (g2 <= L) pent[g2] = s;
        }
        std::vector<long long> ne(L + 1, 0);
        for (int i = 0; i <= L; i++)
            for (int j = 0; i + j <= L; j++) ne[i + j] += e[i] * pent[j];
        e = ne;
    }
    for (long long p : {3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        CAPTURE(p);
        CHECK(f.an[p] == e[p - 1]);  // shift by the leading q
    }
}

TEST_CASE("level 6 newform matches its eta product") {
    auto ns = newspace_rational_forms(6, 40);
    REQUIRE(ns.complete);
    REQUIRE(ns.rational_newforms.size() == 1);
    auto& f = ns.rational_newforms[0];
    CHECK(f.label == "6.4.a.a");
    // eta(t)^2 eta(2t)^2 eta(3t)^2 eta(6t)^2: leading exponent (1+2+3+6)*2/24 = 1
    const int L = 40;
    std::vector<long long> e(L + 1, 0);
    e[0] = 1;
    for (int d : {1, 1, 2, 2, 3, 3, 6, 6}) {
        std::vector<long long> pent(L + 1, 0);
        pent[0] = 1;
        for (long long k = 1;; k++) {
            long long g1 = k * (3 * k - 1) / 2 * d, g2 = k * (3 * k + 1) / 2 * d;
            if (g1 > L && g2 > L) break;
            long long s = (k % 2) ? -1 : 1;
            if (g1 <= L) pent[g1] = s;
            if (g2 <= L) pent[g2] = s;
        }
        std::vector<long long> ne(L + 1, 0);
        for (int i = 0; i <= L; i++)
            for (int j = 0; i + j <= L; j++) ne[i + j] += e[i] * pent[j];
        e = ne;
    }
    for (long long p : {5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        CAPTURE(p);
        CHECK(f.an[p] == e[p - 1]);
    }
}

TEST_CASE("level 25 splits into two rational newforms related by the 5-twist") {
    auto ns = newspace_rational_forms(25, 60);
    REQUIRE(ns.complete);
    REQUIRE(ns.rational_newforms.size() >= 2);
    // the two forms labeled a/b are quadratic twists by (5|p)
    auto& fa = ns.rational_newforms[0];
    auto& fb = ns.rational_newforms[1];
    for (long long p : {2, 3, 7, 11, 13, 17, 19, 23}) {
        long long chi = ((p % 5 == 1 || p % 5 == 4) ? 1 : -1);
        CAPTURE(p);
        CHECK(fa.an[p] == chi * fb.an[p]);
    }
}
