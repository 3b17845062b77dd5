#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "izclose2/parse.hpp"

using namespace izclose2;

TEST_CASE("polynomial grammar round trip") {
    for (const char* text : {"x^3*y + 2*x - 5", "0", "-x", "3/2*x^2 - 1/7*y^9", "x*y",
                             "1 + x + y + x*y"}) {
        Poly p = parse_poly(text);
        CHECK(parse_poly(to_string(p)) == p);
    }
}

TEST_CASE("random render/parse round trips") {
    std::mt19937_64 rng(31337);
    std::uniform_int_distribution<int> deg(0, 9);
    std::uniform_int_distribution<long> num(-20, 20);
    std::uniform_int_distribution<long> den(1, 9);
    for (int trial = 0; trial < 300; ++trial) {
        Poly p;
        int k = trial % 7;
        for (int i = 0; i < k; ++i) p.add_term({deg(rng), deg(rng)}, Rat(num(rng), den(rng)));
        std::string s = to_string(p);
        CHECK(parse_poly(s) == p);
        CHECK(to_string(parse_poly(s)) == s);
    }
}

TEST_CASE("ideal grammar round trip") {
    Staircase i = parse_ideal("x^3, x*y, y^3");
    CHECK(i.render_generators() == "x^3, x*y, y^3");
    CHECK(parse_ideal(i.render_generators()) == i);
    // redundant and unsorted generators are normalized
    CHECK(parse_ideal("y^3, x^3, x*y, x^2*y") == i);
    // coefficients are units and do not change the ideal
    CHECK(parse_ideal("2*x^3, x*y, -y^3") == i);
}

TEST_CASE("matrix grammar round trip") {
    std::string text = "[[x^2, x*y, y^2, 0, 0],[0, 0, 0, x, y]]";
    ModuleMat m = parse_matrix(text);
    CHECK(m.render() == text);
    CHECK(parse_matrix(m.render()) == m);
    CHECK(m.ncols() == 5);
}

TEST_CASE("unicode minus is accepted") {
    CHECK(parse_poly("x − y") == parse_poly("x - y"));
    CHECK(parse_poly("−3*x") == parse_poly("-3*x"));
}

TEST_CASE("whitespace tolerance") {
    CHECK(parse_poly("  x^2   +y ") == parse_poly("x^2 + y"));
    CHECK(parse_ideal(" x^2 ,x*y ,  y^2") == Staircase::power_of_m(2));
}

TEST_CASE("parse errors carry offsets") {
    try {
        parse_poly("x^2 + ");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.offset == 6);
    }
    try {
        parse_ideal("x^2, x + y, y^2");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.offset == 5); // multi-term entry is not a monomial generator
        CHECK(e.expected == "a single monomial");
    }
    CHECK_THROWS_AS(parse_matrix("[[x],[y],[x]]"), ParseError);
    CHECK_THROWS_AS(parse_matrix("[[x, y],[x]]"), ParseError);
    CHECK_THROWS_AS(parse_poly("x^"), ParseError);
    CHECK_THROWS_AS(parse_poly("1/0"), ParseError);
    CHECK_THROWS_AS(parse_ideal("x^2, y*z"), ParseError);
    CHECK_THROWS_AS(parse_ideal(""), ParseError);
}

TEST_CASE("ideal grammar still requires m-primary input") {
    CHECK_THROWS_AS(parse_ideal("x*y, x^2"), NotMPrimary);
}
