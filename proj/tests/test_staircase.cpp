#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "izclose2/staircase.hpp"

using namespace izclose2;

// ---------------------------------------------------------------------------
// Independent oracles. These never look at the Staircase internals beyond raw
// generator lists; disagreements fail the suite.

namespace {

// Membership by direct divisibility scan over an arbitrary generator list.
bool oracle_contains(const std::vector<Monomial>& gens, const Monomial& m) {
    for (const auto& g : gens)
        if (g.a <= m.a && g.b <= m.b) return true;
    return false;
}

// Lattice-point count under the staircase, by exhaustive box scan.
long oracle_colength(const std::vector<Monomial>& gens, int box = 64) {
    long count = 0;
    for (int a = 0; a < box; ++a)
        for (int b = 0; b < box; ++b)
            if (!oracle_contains(gens, {a, b})) ++count;
    return count;
}

int oracle_order(const std::vector<Monomial>& gens) {
    int best = 1 << 20;
    for (const auto& g : gens) best = std::min(best, g.a + g.b);
    return best;
}

// Smallest s with every degree-s monomial in the ideal.
int oracle_pcd(const std::vector<Monomial>& gens, int bound = 64) {
    for (int s = 0; s <= bound; ++s) {
        bool all = true;
        for (int a = 0; a <= s; ++a)
            if (!oracle_contains(gens, {a, s - a})) { all = false; break; }
        if (all) return s;
    }
    return -1;
}

// Integral closure membership for monomial ideals: m in closure(I) iff
// m^k in I^k for some k. Small k suffices at these sizes; checked
// incrementally against honest staircase powers.
bool oracle_in_closure(const Staircase& ideal, const Monomial& m, int kmax = 16) {
    Staircase power = ideal;
    for (int k = 1; k <= kmax; ++k) {
        if (power.contains({k * m.a, k * m.b})) return true;
        power = ideal_product(power, ideal);
    }
    return false;
}

std::vector<Monomial> random_gens(std::mt19937_64& rng, int max_exp = 8) {
    std::uniform_int_distribution<int> e(0, max_exp);
    std::uniform_int_distribution<int> extra(0, 4);
    std::vector<Monomial> gens = {{1 + e(rng) % max_exp, 0}, {0, 1 + e(rng) % max_exp}};
    int k = extra(rng);
    for (int i = 0; i < k; ++i) {
        Monomial g{e(rng), e(rng)};
        if (g.a == 0 && g.b == 0) continue; // avoid the unit ideal
        gens.push_back(g);
    }
    return gens;
}

} // namespace

TEST_CASE("minimalize discards redundant generators and sorts") {
    Staircase s = Staircase::minimalize({{3, 0}, {1, 1}, {0, 3}, {2, 2}, {4, 1}});
    CHECK(s.corners() == std::vector<Monomial>{{3, 0}, {1, 1}, {0, 3}});
    CHECK_THROWS_AS(Staircase::minimalize({{1, 1}, {0, 2}}), NotMPrimary);
    CHECK_THROWS_AS(Staircase::minimalize({{2, 0}, {1, 1}}), NotMPrimary);
}

TEST_CASE("membership, order, colength, pcd agree with brute-force oracles") {
    std::mt19937_64 rng(411);
    for (int trial = 0; trial < 200; ++trial) {
        auto gens = random_gens(rng);
        Staircase s = Staircase::minimalize(gens);
        for (int a = 0; a < 12; ++a)
            for (int b = 0; b < 12; ++b)
                CHECK(s.contains({a, b}) == oracle_contains(gens, {a, b}));
        CHECK(s.order() == oracle_order(s.corners()));
        CHECK(s.colength() == oracle_colength(gens));
        CHECK(s.power_containment_degree() == oracle_pcd(gens));
    }
}

TEST_CASE("product, sum, colon against definition-chasing oracles") {
    std::mt19937_64 rng(412);
    for (int trial = 0; trial < 100; ++trial) {
        Staircase i = Staircase::minimalize(random_gens(rng, 6));
        Staircase j = Staircase::minimalize(random_gens(rng, 6));
        Staircase prod = ideal_product(i, j);
        Staircase sum = ideal_sum(i, j);
        Staircase quot = colon(i, j);
        for (int a = 0; a < 14; ++a)
            for (int b = 0; b < 14; ++b) {
                Monomial m{a, b};
                // product: some pair of generators divides m
                bool in_prod = false;
                for (const auto& g : i.corners())
                    for (const auto& h : j.corners())
                        if ((g * h).divides(m)) in_prod = true;
                CHECK(prod.contains(m) == in_prod);
                CHECK(sum.contains(m) == (i.contains(m) || j.contains(m)));
                // colon: m * J inside I
                bool in_colon = true;
                for (const auto& h : j.corners())
                    if (!i.contains(m * h)) in_colon = false;
                CHECK(quot.contains(m) == in_colon);
            }
    }
}

TEST_CASE("newton closure matches the power-membership oracle and is idempotent") {
    std::mt19937_64 rng(413);
    for (int trial = 0; trial < 200; ++trial) {
        auto gens = random_gens(rng, 6);
        Staircase i = Staircase::minimalize(gens);
        Staircase closure = newton_closure(gens);
        CHECK(newton_closure(closure.corners()) == closure); // idempotent
        CHECK(closure.is_integrally_closed());
        for (int a = 0; a < 9; ++a)
            for (int b = 0; b < 9; ++b)
                CHECK(closure.contains({a, b}) == oracle_in_closure(i, {a, b}));
    }
}

TEST_CASE("worked staircase values") {
    Staircase i = Staircase::minimalize({{3, 0}, {1, 1}, {0, 3}});
    CHECK(i.order() == 2);
    CHECK(i.colength() == 5);
    CHECK(i.is_integrally_closed());
    CHECK(i.power_containment_degree() == 3); // m^3 in I: x*y divides every x^a*y^b, a,b >= 1
    CHECK(multiplicity(i) == 6);              // twice the polygon area
    CHECK(i.render_generators() == "x^3, x*y, y^3");

    Staircase m2 = Staircase::power_of_m(2);
    CHECK(m2.colength() == 3);
    CHECK(multiplicity(m2) == 4);
    CHECK(Staircase::power_of_m(3).colength() == 6);
}

TEST_CASE("multiplicity equals the Hilbert-Samuel second difference") {
    // For integrally closed ideals powers are closed, so colengths of powers
    // follow the quadratic exactly and e(I) is the second difference.
    std::mt19937_64 rng(414);
    for (int trial = 0; trial < 20; ++trial) {
        Staircase i = newton_closure(random_gens(rng, 6));
        long l1 = i.colength();
        long l2 = i.pow(2).colength();
        long l3 = i.pow(3).colength();
        CHECK(multiplicity(i) == l3 - 2 * l2 + l1);
    }
    CHECK_THROWS_AS(multiplicity(Staircase::minimalize({{2, 0}, {0, 2}})), NotClosed);
}

TEST_CASE("order is additive on products") {
    std::mt19937_64 rng(415);
    for (int trial = 0; trial < 50; ++trial) {
        Staircase i = Staircase::minimalize(random_gens(rng, 5));
        Staircase j = Staircase::minimalize(random_gens(rng, 5));
        CHECK(ideal_product(i, j).order() == i.order() + j.order());
    }
}

TEST_CASE("zariski factorization remultiplies to the input") {
    std::mt19937_64 rng(416);
    Staircase m = Staircase::maximal_ideal();
    for (int trial = 0; trial < 100; ++trial) {
        Staircase i = newton_closure(random_gens(rng, 10));
        auto factors = zariski_factor(i);
        REQUIRE(!factors.empty());
        Staircase prod = factors[0].expand();
        CHECK(is_simple(newton_closure({{factors[0].d, 0}, {0, factors[0].e}})));
        for (std::size_t k = 1; k < factors.size(); ++k) {
            prod = ideal_product(prod, factors[k].expand());
            CHECK(is_simple(newton_closure({{factors[k].d, 0}, {0, factors[k].e}})));
            // canonical order: strictly ascending slope d/e along the polygon
            CHECK(factors[k - 1].d * factors[k].e < factors[k].d * factors[k - 1].e);
        }
        CHECK(prod == i);
    }
    CHECK_THROWS_AS(zariski_factor(Staircase::minimalize({{2, 0}, {0, 2}})), NotClosed);
}

TEST_CASE("zariski factorization of worked examples") {
    auto f = zariski_factor(Staircase::minimalize({{3, 0}, {1, 1}, {0, 3}}));
    REQUIRE(f.size() == 2);
    CHECK(f[0] == SimpleFactor{1, 2, 1}); // (x, y^2)
    CHECK(f[1] == SimpleFactor{2, 1, 1}); // (x^2, y)

    auto g = zariski_factor(Staircase::power_of_m(3));
    REQUIRE(g.size() == 1);
    CHECK(g[0] == SimpleFactor{1, 1, 3});

    CHECK(is_simple(Staircase::minimalize({{2, 0}, {1, 2}, {0, 3}})));
    CHECK_FALSE(is_simple(Staircase::power_of_m(2)));
}

TEST_CASE("colon recovers factors of family ideals") {
    Staircase i = Staircase::minimalize({{3, 0}, {1, 1}, {0, 3}});
    Staircase m = Staircase::maximal_ideal();
    Staircase j = colon(i, m);
    CHECK(j.render_generators() == "x^2, x*y, y^2");
    CHECK(colon(i, i) == Staircase::minimalize({{1, 0}, {0, 1}, {0, 0}}));
}

TEST_CASE("ascii rendering") {
    Staircase i = Staircase::minimalize({{2, 0}, {0, 2}, {1, 1}});
    CHECK(i.render_ascii() == "###\n.##\n..#\n");
}

TEST_CASE("contains_poly is monomial-wise") {
    Staircase m2 = Staircase::power_of_m(2);
    Poly f = Poly::monomial(2, 0) + Rat(3) * Poly::monomial(1, 1);
    CHECK(m2.contains_poly(f));
    CHECK_FALSE(m2.contains_poly(Poly::var_x() + Poly::monomial(2, 0)));
}
