#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hg1111/tables.hpp"

using namespace hg;

static std::string fixture(const std::string& name) {
    return std::string(HG1111_FIXTURES_DIR) + "/" + name;
}

TEST_CASE("candidate enumeration") {
    auto cands = enumerate_candidates();
    CHECK(cands.size() > 100);
    CHECK(cands.size() < 600);
    bool has_case1 = false;
    for (auto& p : cands)
        if (p.equivalent(HGParams(params_from_strings({"1/2", "1/2", "1/2", "1/2"}),
                                  params_from_strings({"0", "0", "0", "0"}))))
            has_case1 = true;
    CHECK(has_case1);
    for (auto& p : cands) {
        CHECK(is_defined_over_Q(p));
        CHECK(is_irreducible(p));
    }
}

TEST_CASE("classification matches the reference tables") {
    auto recs = classify_all();
    REQUIRE(recs.size() == 47);
    int mums = 0;
    for (auto& r : recs) mums += r.mum;
    CHECK(mums == 14);

    auto rows = load_tables(fixture("tables.json"));
    auto diffs = diff_against_tables(recs, rows);
    for (auto& d : diffs) MESSAGE(d);
    CHECK(diffs.empty());
}

TEST_CASE("twist pairing structure") {
    auto recs = classify_all();
    for (int i : {1, 30, 37}) CHECK(recs[i - 1].twist_partner == i);
    for (int i = 2; i <= 14; i++) CHECK(recs[i - 1].twist_partner == i + 13);
    int pairs = 0;
    for (auto& r : recs) {
        CHECK(recs[r.twist_partner - 1].twist_partner == r.index);
        if (r.twist_partner >= r.index) pairs++;
    }
    CHECK(pairs == 25);
    CHECK(recs[15 - 1].twist_partner == 2);
}

TEST_CASE("record invariants") {
    auto recs = classify_all();
    for (auto& r : recs) {
        CHECK(hodge_vector(r.params).h == std::vector<int>{1, 1, 1, 1});
        CHECK(gamma_from_params(r.params) == r.gamma_red);
        CHECK(r.gamma_red.length() % 2 == 0);
        CHECK(r.gamma_red.gcd() == 1);
        auto q = params_from_gamma(r.gamma_red);
        CHECK(q.equivalent(r.params));
        // D/E are insensitive to the alpha<->beta orientation
        auto gswap = gamma_from_params(r.params.swapped());
        CHECK(disc_field(gswap) == r.D);
        CHECK(twist_disc(gswap) == r.E);
        // radicand sign rule: sign = (-1)^{r(r-1)/2}
        Rat prod = 1;
        for (int x : r.gamma_red.entries) prod *= x;
        Rat radicand = -prod;
        if ((r.gamma_red.dim() / 2) % 2) radicand = -radicand;
        long long rr = r.gamma_red.neg_minus_pos();
        int want = ((rr * (rr - 1) / 2) % 2 == 0) ? 1 : -1;
        CHECK((radicand > 0 ? 1 : -1) == want);
        // partner's D is D*E up to squares
        auto& mate = recs[r.twist_partner - 1];
        CHECK(mate.D == fundamental_discriminant(Rat(r.D * r.E)));
    }
}

TEST_CASE("table rendering") {
    auto recs = classify_all();
    auto md = emit_tables(recs, TableFormat::Markdown);
    CHECK(md.find("-5 1^5") != std::string::npos);
    size_t rows = 0;
    for (char c : md) rows += c == '\n';
    CHECK(rows == 47 + 2);
    auto js = emit_tables(recs, TableFormat::Json);
    CHECK(js.find("\"gamma_red\"") != std::string::npos);
    auto csv = emit_tables(recs, TableFormat::Csv);
    CHECK(csv.find("index,alpha") == 0);
}
