#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "mcsq/errors.hpp"
#include "mcsq/fixtures.hpp"
#include "mcsq/matrix.hpp"
#include "mcsq/oracle.hpp"

using namespace mcsq;

TEST_CASE("dense parsing") {
    auto m = parse_matrix("2 3\n110\n011", MatrixFormat::dense);
    CHECK(m.n_cols == 3);
    CHECK(m.rows == make_matrix(3, {{0, 1}, {1, 2}}).rows);

    SUBCASE("single spaces between digits") {
        auto spaced = parse_matrix("2 3\n1 1 0\n0 1 1", MatrixFormat::dense);
        CHECK(spaced == m);
    }
    SUBCASE("comments and blank lines are ignored") {
        auto commented = parse_matrix("# header comment\n\n2 3\n# row comment\n110\n\n011\n", MatrixFormat::dense);
        CHECK(commented == m);
    }
}

TEST_CASE("sparse parsing matches dense") {
    auto dense = parse_matrix("2 3\n110\n011", MatrixFormat::dense);
    auto sparse = parse_matrix("n=3\n0 1\n1 2", MatrixFormat::sparse);
    CHECK(dense == sparse);

    SUBCASE("empty line is an empty row") {
        auto m = parse_matrix("n=2\n0\n\n1\n", MatrixFormat::sparse);
        REQUIRE(m.m() == 3);
        CHECK(m.row(1).none());
    }
}

TEST_CASE("parse errors carry line numbers") {
    CHECK_THROWS_WITH_AS(parse_matrix("2 3\n112", MatrixFormat::dense), doctest::Contains("line 2"), ParseError);
    CHECK_THROWS_AS(parse_matrix("2 3\n11\n011", MatrixFormat::dense), ParseError);
    CHECK_THROWS_AS(parse_matrix("x y\n11\n01", MatrixFormat::dense), ParseError);
    CHECK_THROWS_AS(parse_matrix("2 2\n11", MatrixFormat::dense), ParseError);

    CHECK_THROWS_AS(parse_matrix("m=3\n0 1", MatrixFormat::sparse), ParseError);
    CHECK_THROWS_WITH_AS(parse_matrix("n=3\n0 3", MatrixFormat::sparse), doctest::Contains("line 2"), ParseError);
    CHECK_THROWS_AS(parse_matrix("n=3\n1 0", MatrixFormat::sparse), ParseError);
}

TEST_CASE("parse of serialize is the identity") {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 60; ++t) {
        int m = 1 + int(rng() % 8), n = 1 + int(rng() % 9);
        BinaryMatrix mat;
        mat.n_cols = n;
        for (int i = 0; i < m; ++i) {
            RowSet r(n);
            for (int c = 0; c < n; ++c)
                if (rng() % 3 == 0) r.set(c);
            mat.rows.push_back(std::move(r));
        }
        for (auto fmt : {MatrixFormat::dense, MatrixFormat::sparse})
            CHECK(parse_matrix(serialize_matrix(mat, fmt), fmt) == mat);
    }
}

TEST_CASE("overlap relation") {
    auto s = [](std::initializer_list<int> bits) { return Bitset(4, bits); };
    CHECK(overlap(s({0, 1}), s({1, 2})));
    CHECK_FALSE(overlap(s({0, 1}), s({0, 1, 2})));  // containment
    CHECK_FALSE(overlap(s({0}), s({1})));           // disjoint

    std::mt19937_64 rng(11);
    for (int t = 0; t < 200; ++t) {
        Bitset a(6), b(6);
        for (int c = 0; c < 6; ++c) {
            if (rng() % 2) a.set(c);
            if (rng() % 2) b.set(c);
        }
        CHECK(overlap(a, b) == overlap(b, a));
        CHECK_FALSE(overlap(a, a));
    }
}

TEST_CASE("row set algebra") {
    Bitset r(3, {0, 1, 2}), ri(3, {1}), rj(3, {2});
    CHECK(((Bitset(3, {0, 1}) & Bitset(3, {1, 2})) - Bitset(3, {1})).none());
    CHECK((r - (ri | rj)) == Bitset(3, {0}));
    CHECK((ri & rj & r).none());
}

TEST_CASE("named fixtures") {
    CHECK(fixture_cyc4() == make_matrix(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}));
    CHECK(fixture_v3() == make_matrix(3, {{0, 1}, {0, 2}, {1, 2}}));
    CHECK(fixture_iv3() == make_matrix(4, {{0, 1}, {1, 2}, {1, 3}}));
    CHECK(fixture_ii4() == make_matrix(6, {{0, 1, 2}, {0, 3}, {1, 4}, {2, 5}}));
    CHECK(fixture_nest() == make_matrix(3, {{0}, {0, 1}, {0, 1, 2}}));

    // the pairwise family at m=3 is the shared-column triple itself
    CHECK(fixture_fig1(3) == fixture_v3());
    CHECK(fixture_fig1(4).m() == 4);
    CHECK(fixture_fig1(4).n_cols == 6);

    auto f2 = fixture_fig2(3);
    CHECK(f2.m() == 9);
    CHECK(f2.n_cols == 6);
    CHECK(f2.row(6) == f2.row(0));  // duplicated alternating pairs
    CHECK(f2.row(7) == f2.row(2));
    CHECK(f2.row(8) == f2.row(4));

    CHECK_THROWS_AS(fixture_fig1(2), std::invalid_argument);
    CHECK_THROWS_AS(fixture_fig2(1), std::invalid_argument);
    CHECK_THROWS_AS(fixture_by_spec("unknown"), std::invalid_argument);
    CHECK_THROWS_AS(fixture_by_spec("fig1"), std::invalid_argument);
    CHECK_THROWS_AS(fixture_by_spec("fig2:x"), std::invalid_argument);
    CHECK(fixture_by_spec("fig2:3") == f2);
    CHECK(fixture_by_spec("iii4") == fixture_iii4());
}

TEST_CASE("nest has no conflicts at all") {
    auto rep = enumerate_mcs(fixture_nest());
    CHECK(rep.mcs_list.empty());
    for (bool b : rep.per_row_membership) CHECK_FALSE(b);
}
