#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>
#include <random>

#include "fixtures_extra.hpp"
#include "mcsq/fixtures.hpp"
#include "mcsq/oracle.hpp"
#include "mcsq/orchestrator.hpp"
#include "mcsq/verify.hpp"

using namespace mcsq;

TEST_CASE("mcs_membership on fixtures") {
    auto cyc = fixture_cyc4();
    auto ans = mcs_membership(cyc, 0);
    CHECK(ans.member);
    CHECK(ans.certificate->form == FormLabel::I);
    REQUIRE(ans.stage_trace.size() == 1);
    CHECK(ans.stage_trace[0].name == "check_form_I");
    CHECK(ans.stage_trace[0].hit);

    auto nest = fixture_nest();
    for (int r = 0; r < nest.m(); ++r) {
        auto neg = mcs_membership(nest, r);
        CHECK_FALSE(neg.member);
        CHECK_FALSE(neg.certificate.has_value());
        REQUIRE(neg.stage_trace.size() == 11);
        for (const auto& s : neg.stage_trace) CHECK_FALSE(s.hit);
    }

    auto f1 = fixture_fig1(5);
    QueryContext ctx(f1);
    for (int r = 0; r < f1.m(); ++r) {
        auto a = mcs_membership(ctx, r);
        REQUIRE(a.member);
        CHECK(a.certificate->form == FormLabel::V);
        CHECK(a.certificate->rows.size() == 3);
        CHECK(a.stage_trace.back().name == "check_size3");
    }
}

TEST_CASE("stage order is fixed and monotone") {
    const char* expected[] = {"check_form_I",          "check_size3",
                              "check_form_II_size4",   "check_form_III_size4",
                              "check_form_IV_size4",   "check_form_IV_kernel",
                              "check_form_IV_nonkernel", "check_form_V_size4",
                              "check_form_V_size5",    "check_form_V_kernel",
                              "check_form_V_nonkernel"};
    std::mt19937_64 rng(3);
    for (int t = 0; t < 40; ++t) {
        auto m = random_matrix(6, 5, 0.4, 100 + t);
        QueryContext ctx(m);
        for (int r = 0; r < m.m(); ++r) {
            auto a = mcs_membership(ctx, r);
            REQUIRE(a.stage_trace.size() <= 11);
            for (size_t i = 0; i < a.stage_trace.size(); ++i) {
                CHECK(a.stage_trace[i].name == expected[i]);
                // only the last executed stage may hit
                CHECK(a.stage_trace[i].hit == (a.member && i + 1 == a.stage_trace.size()));
            }
        }
    }
}

TEST_CASE("verify_mcs") {
    auto cyc = fixture_cyc4();
    CHECK(verify_mcs(cyc, std::vector<RowId>{0, 1, 2, 3}));
    CHECK_FALSE(verify_mcs(cyc, std::vector<RowId>{0, 1, 2}));

    auto f2 = fixture_fig2(2);
    CHECK(verify_mcs(f2, std::vector<RowId>{0, 1, 2, 3}));   // one induced row cycle
    CHECK_FALSE(verify_mcs(f2, std::vector<RowId>{0, 1, 2, 3, 4}));

    CHECK_THROWS_AS(verify_mcs(cyc, std::vector<RowId>{}), std::invalid_argument);
}

TEST_CASE("classify_certificate") {
    auto cyc = fixture_cyc4();
    auto cls = classify_certificate(cyc, {0, 1, 2, 3});
    CHECK(cls.form == FormLabel::I);
    CHECK(cls.kernels.empty());

    auto ii4 = fixture_ii4();
    auto cls2 = classify_certificate(ii4, {0, 1, 2, 3});
    CHECK(cls2.form == FormLabel::II);
    CHECK(cls2.kernels == std::vector<RowId>{0});

    auto v3 = fixture_v3();
    auto cls3 = classify_certificate(v3, {0, 1, 2});
    CHECK(cls3.form == FormLabel::V);
    CHECK(cls3.kernels.size() == 3);  // every row touches the others

    auto iv3 = fixture_iv3();
    CHECK(classify_certificate(iv3, {0, 1, 2}).form == FormLabel::IV);
    CHECK(classify_certificate(fixture_iii4(), {0, 1, 2, 3}).form == FormLabel::III);
    CHECK(classify_certificate(testfx::iv6(), {0, 1, 2, 3, 4, 5}).form == FormLabel::IV);
    CHECK(classify_certificate(testfx::v6(), {0, 1, 2, 3, 4, 5}).form == FormLabel::V);
    CHECK(classify_certificate(testfx::v5(), {0, 1, 2, 3, 4}).form == FormLabel::V);

    // not an MCS at all
    CHECK_THROWS_AS(classify_certificate(cyc, {0, 1, 2}), std::invalid_argument);
}

TEST_CASE("membership agrees with the oracle and labels agree with classify") {
    for (int t = 0; t < 80; ++t) {
        int m = 3 + t % 6, n = 3 + (t / 4) % 4;
        auto M = random_matrix(m, n, 0.45, 9000 + t);
        auto rep = enumerate_mcs(M);
        QueryContext ctx(M);
        for (int r = 0; r < m; ++r) {
            auto a = mcs_membership(ctx, r);
            REQUIRE(a.member == rep.per_row_membership[size_t(r)]);
            if (a.member) {
                CHECK(verify_mcs(M, a.certificate->rows));
                CHECK(classify_certificate(M, a.certificate->rows).form == a.certificate->form);
            }
        }
    }
}

TEST_CASE("parallel sweep equals per-row queries") {
    auto m = fixture_fig2(3);
    auto all = mcs_membership_all(m);
    REQUIRE(int(all.size()) == m.m());
    QueryContext ctx(m);
    for (int r = 0; r < m.m(); ++r) CHECK(to_json(all[size_t(r)]) == to_json(mcs_membership(ctx, r)));
}

TEST_CASE("membership json schema") {
    auto cyc = fixture_cyc4();
    auto j = nlohmann::json::parse(to_json(mcs_membership(cyc, 0)));
    CHECK(j["row"] == 0);
    CHECK(j["member"] == true);
    CHECK(j["mcs"] == nlohmann::json({0, 1, 2, 3}));
    CHECK(j["form"] == "I");
    CHECK(j["role"] == "cycle_member");
    CHECK_FALSE(j.contains("witness_columns"));  // no distinguished column for a cycle
    REQUIRE(j["stages"].size() == 1);
    CHECK(j["stages"][0]["name"] == "check_form_I");
    CHECK(j["stages"][0]["hit"] == true);

    // fixed field order
    auto text = to_json(mcs_membership(cyc, 0));
    CHECK(text.rfind("{\"row\":0,\"member\":true,\"mcs\":[0,1,2,3],\"form\":\"I\",\"role\":\"cycle_member\",\"stages\":", 0) == 0);

    auto neg = nlohmann::json::parse(to_json(mcs_membership(fixture_nest(), 1)));
    CHECK(neg["member"] == false);
    CHECK_FALSE(neg.contains("mcs"));
    CHECK_FALSE(neg.contains("form"));
    CHECK(neg["stages"].size() == 11);

    auto kern = nlohmann::json::parse(to_json(mcs_membership(testfx::iv6(), 0)));
    REQUIRE(kern.contains("witness_columns"));
    CHECK(kern["witness_columns"].size() == 1);
}
