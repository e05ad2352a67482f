#include "branchcone/polynomial.hpp"

#include <doctest.h>

using namespace branchcone;

TEST_CASE("arithmetic and degree bookkeeping")
{
    Polynomial x = Polynomial::linear(QVec{1, 0});
    Polynomial y = Polynomial::linear(QVec{0, 1});
    Polynomial p = x * x + y * Rat(3);
    CHECK(p.degree() == 2);
    CHECK_FALSE(p.is_homogeneous());
    CHECK((x * y).is_homogeneous());
    CHECK((p - p).is_zero());
    CHECK(p.constant_term() == 0);
    CHECK((p + Polynomial::constant(2, Rat(5))).constant_term() == 5);
}

TEST_CASE("substitute_var expands powers")
{
    // f = x^2, x -> x - y: (x - y)^2.
    Polynomial x = Polynomial::linear(QVec{1, 0});
    Polynomial f = x * x;
    Polynomial g = f.substitute_var(0, QVec{1, -1});
    Polynomial y = Polynomial::linear(QVec{0, 1});
    Polynomial expect = (x - y) * (x - y);
    CHECK(g == expect);
}

TEST_CASE("substitute_all maps between variable sets")
{
    // Two variables to one: x -> t, y -> 2t; x*y -> 2 t^2.
    Polynomial x = Polynomial::linear(QVec{1, 0});
    Polynomial y = Polynomial::linear(QVec{0, 1});
    QMat m{{Rat(1), Rat(2)}}; // 1 x 2: column j gives the image of var j
    Polynomial img = (x * y).substitute_all(m, 1);
    Polynomial t = Polynomial::linear(QVec{1});
    CHECK(img == t * t * Rat(2));
}

TEST_CASE("exact division by a linear form")
{
    Polynomial x = Polynomial::linear(QVec{1, 0});
    Polynomial y = Polynomial::linear(QVec{0, 1});
    Polynomial l = x - y * Rat(2);
    Polynomial q = x * x + y * y;
    Polynomial product = l * q;
    CHECK(product.divide_by_linear(QVec{1, -2}) == q);
    CHECK_THROWS_AS((x * x + y).divide_by_linear(QVec{1, -2}), InvalidInput);
    CHECK_THROWS_AS(x.divide_by_linear(QVec{0, 0}), InvalidInput);
}

TEST_CASE("division with a later pivot variable")
{
    // Divisor has zero coefficient on the first variable.
    Polynomial x = Polynomial::linear(QVec{1, 0});
    Polynomial y = Polynomial::linear(QVec{0, 1});
    Polynomial l = y * Rat(3);
    Polynomial q = x * y + Polynomial::constant(2, Rat(7));
    CHECK((l * q).divide_by_linear(QVec{0, 3}) == q);
}
