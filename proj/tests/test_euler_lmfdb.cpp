#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <filesystem>

#include "hg1111/lmfdb.hpp"
#include "hg1111/tables.hpp"

using namespace hg;

static std::string fixture(const std::string& name) {
    return std::string(HG1111_FIXTURES_DIR) + "/" + name;
}

static LmfdbConfig cfg() {
    LmfdbConfig c;
    c.cache_dir = fixture("newforms");
    return c;
}

TEST_CASE("good primes") {
    auto recs = classify_all();
    auto& c2 = recs[2 - 1];  // gamma (-3,-2^2,1^7)
    CHECK_FALSE(good_prime_at_conifold(c2, 2));
    CHECK_FALSE(good_prime_at_conifold(c2, 3));
    CHECK(good_prime_at_conifold(c2, 5));
    CHECK(good_prime_at_conifold(c2, 7));
}

TEST_CASE("calibration is the frozen one") {
    if (!std::filesystem::exists(fixture("newforms/level_8.json"))) {
        MESSAGE("fixtures not generated yet");
        return;
    }
    auto recs = classify_all();
    LmfdbClient client(cfg());
    auto forms = client.fetch_newforms(8);
    REQUIRE(!forms.empty());
    const NewformRecord* f8 = nullptr;
    for (auto& f : forms)
        if (f.label == "8.4.a.a") f8 = &f;
    REQUIRE(f8 != nullptr);
    std::map<long long, long long> ref(f8->ap.begin(), f8->ap.end());
    auto cal = fit_calibration(recs[0], ref, {3, 5, 7, 11, 13});
    REQUIRE(cal.has_value());
    CHECK(cal->s == kCalibration.s);
    CHECK(cal->c0 == kCalibration.c0);
}

TEST_CASE("candidate levels") {
    auto ls = candidate_levels({2}, 2000);
    CHECK(std::find(ls.begin(), ls.end(), 8) != ls.end());
    CHECK(std::find(ls.begin(), ls.end(), 1024) != ls.end());
    CHECK(std::find(ls.begin(), ls.end(), 3) == ls.end());
    auto l30 = candidate_levels({2, 3, 5}, 2000);
    CHECK(std::find(l30.begin(), l30.end(), 5400) == l30.end());  // beyond the bound
}

TEST_CASE("match_form identifies the MUM flagships and caches") {
    if (!std::filesystem::exists(fixture("newforms/level_8.json"))) {
        MESSAGE("fixtures not generated yet");
        return;
    }
    auto recs = classify_all();
    LmfdbClient client(cfg());
    for (int idx : {1, 5, 8, 11}) {
        auto& r = recs[idx - 1];
        auto rows = load_tables(fixture("tables.json"));
        auto aps = ap_series(r, 50);
        auto m = client.match_form(aps, prime_support(r.gamma_red));
        CAPTURE(idx);
        REQUIRE(m.form.has_value());
        CHECK_FALSE(m.ambiguous);
        CHECK(m.form->label == rows[idx - 1].form_label);
    }
    CHECK(client.network_requests() == 0);
}
