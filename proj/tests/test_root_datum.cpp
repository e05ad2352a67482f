#include "branchcone/root_datum.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace branchcone;

TEST_CASE("A1 basics")
{
    RootDatum d = RootDatum::from_type("A1");
    CHECK(d.rank() == 1);
    CHECK(d.positive_roots().size() == 1);
    CHECK(d.rho().coords == QVec{1});
    // pair(omega, alpha^vee) = 1 and pair(rho, alpha^vee) = 1
    Coweight coroot = d.simple_coroots()[0];
    CHECK(d.pair(d.fundamental_weight(0), coroot) == 1);
    CHECK(d.pair(d.rho(), coroot) == 1);
    CHECK(d.is_dominant(d.rho()));
    Weight neg{QVec{-1}};
    CHECK_FALSE(d.is_dominant(neg));
}

TEST_CASE("A1xA1 product structure")
{
    RootDatum d = RootDatum::from_type("A1xA1");
    CHECK(d.rank() == 2);
    CHECK(d.positive_roots().size() == 2);
    CHECK(d.cartan()[0][1] == 0);
    CHECK(d.cartan()[1][0] == 0);
    CHECK(d.components().size() == 2);
}

TEST_CASE("C2 positive roots by reflection closure")
{
    RootDatum d = RootDatum::from_type("C2");
    // Independent oracle: the four positive roots of C2 in root-basis
    // coordinates are a1, a2, a1+a2, 2a1+a2.
    std::set<QVec> expected{{Rat(1), Rat(0)}, {Rat(0), Rat(1)}, {Rat(1), Rat(1)}, {Rat(2), Rat(1)}};
    std::set<QVec> got;
    for (const auto& root : d.positive_roots())
        got.insert(d.root_basis_coords(root));
    CHECK(got == expected);
}

TEST_CASE("Cartan round trip: simple roots in the omega basis")
{
    for (const std::string type : {"A3", "B3", "C3", "D4", "A1xA2"}) {
        RootDatum d = RootDatum::from_type(type);
        for (std::size_t i = 0; i < d.rank(); ++i) {
            CHECK(d.simple_roots()[i].coords == d.cartan()[i]);
            for (std::size_t j = 0; j < d.rank(); ++j) {
                // <omega_i, alpha_j^vee> = delta_ij
                Rat p = d.pair(d.fundamental_weight(i), d.simple_coroots()[j]);
                CHECK(p == (i == j ? 1 : 0));
                // alpha_j(x_i) = delta_ij
                Rat q = d.pair(d.simple_roots()[j], d.fundamental_coweight(i));
                CHECK(q == (i == j ? 1 : 0));
            }
            CHECK(d.pair(d.rho(), d.simple_coroots()[i]) == 1);
        }
    }
}

TEST_CASE("positive root counts match the closed forms up to rank 6")
{
    auto count = [](const std::string& type) {
        return RootDatum::from_type(type).positive_roots().size();
    };
    for (std::size_t n = 1; n <= 6; ++n)
        CHECK(count("A" + std::to_string(n)) == n * (n + 1) / 2);
    for (std::size_t n = 2; n <= 6; ++n) {
        CHECK(count("B" + std::to_string(n)) == n * n);
        CHECK(count("C" + std::to_string(n)) == n * n);
    }
    for (std::size_t n = 3; n <= 6; ++n)
        CHECK(count("D" + std::to_string(n)) == n * (n - 1));
}

TEST_CASE("pair is integral on integral weight / one-parameter subgroup pairs")
{
    RootDatum d = RootDatum::from_type("C2");
    for (const auto& coroot : d.positive_coroots()) {
        CHECK(d.is_one_param(coroot));
        for (const auto& root : d.positive_roots()) {
            Rat p = d.pair(root, coroot);
            CHECK(p.get_den() == 1);
        }
    }
}

TEST_CASE("coweight coordinates, dominance, indivisibility")
{
    // Sp(2): delta2 = diag(t,t,t^-1,t^-1) has x-coordinates (0,2) and coroot
    // coordinates (1,2); it is dominant and indivisible.
    RootDatum d = RootDatum::from_type("C2");
    Coweight delta2{QVec{0, 2}};
    CHECK(d.is_dominant_coweight(delta2));
    CHECK(d.coroot_coords(delta2) == QVec{1, 2});
    CHECK(d.is_one_param(delta2));
    CHECK(d.indivisible(delta2).coords == delta2.coords);
    // Doubling it is no longer indivisible.
    Coweight twice{QVec{0, 4}};
    CHECK(d.indivisible(twice).coords == delta2.coords);
}

TEST_CASE("invalid inputs are rejected")
{
    CHECK_THROWS_AS(RootDatum::from_type("E8"), InvalidInput);
    CHECK_THROWS_AS(RootDatum::from_type("A0"), InvalidInput);
    CHECK_THROWS_AS(RootDatum::from_type("Q3"), InvalidInput);
    // Diagonal entry must be 2.
    CHECK_THROWS_AS(RootDatum(std::vector<std::vector<long>>{{1}}), InvalidInput);
    // Zero pattern must be symmetric.
    CHECK_THROWS_AS(RootDatum(std::vector<std::vector<long>>{{2, -1}, {0, 2}}), InvalidInput);
    // Positive off-diagonal entries are not allowed.
    CHECK_THROWS_AS(RootDatum(std::vector<std::vector<long>>{{2, 1}, {1, 2}}), InvalidInput);
}

TEST_CASE("invariant form: short roots have squared length 2")
{
    RootDatum d = RootDatum::from_type("C2");
    // alpha1 = e1 - e2 short, alpha2 = 2 e2 long.
    CHECK(d.form(d.simple_roots()[0], d.simple_roots()[0]) == 2);
    CHECK(d.form(d.simple_roots()[1], d.simple_roots()[1]) == 4);
    CHECK(d.form(d.simple_roots()[0], d.simple_roots()[1]) == -2);
}
