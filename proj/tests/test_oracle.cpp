#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <json.hpp>
#include <sstream>

#include "mcsq/c1p.hpp"
#include "mcsq/errors.hpp"
#include "mcsq/fixtures.hpp"
#include "mcsq/oracle.hpp"
#include "mcsq/verify.hpp"

using namespace mcsq;

TEST_CASE("counted families") {
    CHECK(enumerate_mcs(fixture_fig1(3)).mcs_list.size() == 1);
    CHECK(enumerate_mcs(fixture_fig1(4)).mcs_list.size() == 4);
    CHECK(enumerate_mcs(fixture_fig2(3)).mcs_list.size() == 8);
    CHECK(enumerate_mcs(fixture_nest()).mcs_list.empty());
}

TEST_CASE("report order and consistency") {
    auto rep = enumerate_mcs(fixture_fig2(2));
    REQUIRE(rep.mcs_list.size() == 4);
    // increasing cardinality, lexicographic within: the all-original cycle
    // comes first
    CHECK(rep.mcs_list[0] == std::vector<RowId>{0, 1, 2, 3});
    for (size_t i = 1; i < rep.mcs_list.size(); ++i) CHECK(rep.mcs_list[i - 1] < rep.mcs_list[i]);

    auto m = fixture_fig2(2);
    for (const auto& s : rep.mcs_list) CHECK(verify_mcs(m, s));
    // antichain
    for (size_t i = 0; i < rep.mcs_list.size(); ++i)
        for (size_t j = 0; j < rep.mcs_list.size(); ++j) {
            if (i == j) continue;
            bool subset = std::includes(rep.mcs_list[j].begin(), rep.mcs_list[j].end(),
                                        rep.mcs_list[i].begin(), rep.mcs_list[i].end());
            CHECK_FALSE(subset);
        }
    // membership column
    for (int r = 0; r < m.m(); ++r) {
        bool in_some = false;
        for (const auto& s : rep.mcs_list)
            in_some |= std::find(s.begin(), s.end(), r) != s.end();
        CHECK(rep.per_row_membership[size_t(r)] == in_some);
    }
    CHECK(rep.digest == matrix_digest(m));
    CHECK(rep.digest.size() == 16);
}

TEST_CASE("limit guard") {
    auto big = random_matrix(30, 5, 0.3, 1);
    CHECK_THROWS_AS(enumerate_mcs(big), LimitError);
    try {
        enumerate_mcs(big);
    } catch (const LimitError& e) {
        CHECK(e.bound() == 16);
    }
    // tighter explicit bound, then forced through
    auto small = random_matrix(7, 5, 0.4, 2);
    CHECK_THROWS_AS(enumerate_mcs(small, {5, false}), LimitError);
    CHECK_NOTHROW(enumerate_mcs(small, {5, true}));
}

TEST_CASE("pruning changes nothing") {
    for (uint64_t seed = 0; seed < 25; ++seed) {
        auto m = random_matrix(6 + int(seed % 2), 5, 0.45, 50 + seed);
        CHECK(enumerate_mcs(m) == enumerate_mcs_noprune(m));
    }
    CHECK(enumerate_mcs(fixture_fig2(2)) == enumerate_mcs_noprune(fixture_fig2(2)));
    CHECK(enumerate_mcs(fixture_fig1(4)) == enumerate_mcs_noprune(fixture_fig1(4)));
}

TEST_CASE("parallel enumeration equals the serial reference") {
    for (uint64_t seed = 0; seed < 10; ++seed) {
        auto m = random_matrix(11, 6, 0.4, 90 + seed);
        CHECK(enumerate_mcs(m) == enumerate_mcs_serial(m));
    }
    CHECK(enumerate_mcs(fixture_fig2(4)) == enumerate_mcs_serial(fixture_fig2(4)));
}

TEST_CASE("random_matrix determinism") {
    auto a = random_matrix(5, 5, 0.4, 42);
    auto b = random_matrix(5, 5, 0.4, 42);
    CHECK(a == b);
    CHECK(a != random_matrix(5, 5, 0.4, 43));

    SUBCASE("golden file") {
        std::ifstream in(std::string(MCSQ_SOURCE_DIR) + "/tests/golden/random_5_5_04_42.txt", std::ios::binary);
        REQUIRE(in);
        std::stringstream ss;
        ss << in.rdbuf();
        CHECK(serialize_matrix(a, MatrixFormat::dense) == ss.str());
    }
    SUBCASE("parameter validation") {
        CHECK_THROWS_AS(random_matrix(0, 5, 0.4, 1), std::invalid_argument);
        CHECK_THROWS_AS(random_matrix(5, 0, 0.4, 1), std::invalid_argument);
        CHECK_THROWS_AS(random_matrix(5, 5, 0.0, 1), std::invalid_argument);
        CHECK_THROWS_AS(random_matrix(5, 5, 1.0, 1), std::invalid_argument);
        CHECK_NOTHROW(random_matrix(5, 5, 1.0 - 1e-9, 1));
    }
}

TEST_CASE("search_fixture") {
    auto never = [](const BinaryMatrix&, const OracleReport&) { return false; };
    CHECK_FALSE(search_fixture(never, {4, 5, 0.4, 1, 10}));

    auto has_shared_triple = [](const BinaryMatrix& m, const OracleReport& rep) {
        for (const auto& s : rep.mcs_list)
            if (s.size() == 3 && classify_certificate(m, s).form == FormLabel::V) return true;
        return false;
    };
    auto hit = search_fixture(has_shared_triple, {4, 5, 0.5, 1, 200});
    REQUIRE(hit);
    CHECK(has_shared_triple(*hit, enumerate_mcs(*hit)));

    auto two_disjoint = [](const BinaryMatrix&, const OracleReport& rep) {
        for (size_t i = 0; i < rep.mcs_list.size(); ++i)
            for (size_t j = i + 1; j < rep.mcs_list.size(); ++j) {
                bool disjoint = true;
                for (RowId r : rep.mcs_list[i])
                    disjoint &= std::find(rep.mcs_list[j].begin(), rep.mcs_list[j].end(), r) ==
                                rep.mcs_list[j].end();
                if (disjoint) return true;
            }
        return false;
    };
    auto hit2 = search_fixture(two_disjoint, {8, 6, 0.4, 1, 500});
    REQUIRE(hit2);
    auto rep2 = enumerate_mcs(*hit2);
    CHECK(two_disjoint(*hit2, rep2));
    for (const auto& s : rep2.mcs_list) CHECK(verify_mcs(*hit2, s));
}

TEST_CASE("report json") {
    auto rep = enumerate_mcs(fixture_v3());
    auto j = nlohmann::json::parse(to_json(rep));
    CHECK(j["digest"] == rep.digest);
    CHECK(j["mcs"] == nlohmann::json::array({{0, 1, 2}}));
    CHECK(j["membership"] == nlohmann::json::array({true, true, true}));
    CHECK(to_json(rep).rfind("{\"digest\":", 0) == 0);
}
