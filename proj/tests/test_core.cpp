#include "doctest.h"
#include "sp4cert/errors.hpp"
#include "sp4cert/linalg.hpp"
#include "sp4cert/sp4.hpp"

using namespace sp4cert;

TEST_CASE("rationals parse and print in lowest terms") {
    CHECK(parse_rational("-3/6") == Rational(-1, 2));
    CHECK(parse_rational(" 7 ") == Rational(7));
    CHECK(to_string(Rational(4) / -6) == "-2/3");
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rational("x"), ParseError);
    CHECK(parse_rational_list("2,3,-1/2").size() == 3);
}

TEST_CASE("characteristic polynomials") {
    CHECK(char_poly(T(1, 2)) == Poly({4, 0, -5, 0, 1}));
    CHECK(char_poly(X(Root::Alpha)) == Poly::monomial(1, 4));
}

TEST_CASE("rational roots with multiplicity") {
    auto r = rational_roots(Poly({-2, -1, 1}));
    REQUIRE(r.size() == 2);
    CHECK(r[0] == RootMult{-1, 1});
    CHECK(r[1] == RootMult{2, 1});
    // x^3 - x^2 - B x - A with A = 1/27, B = -1/3
    auto cube = rational_roots(Poly({Rational(-1, 27), Rational(1, 3), -1, 1}));
    REQUIRE(cube.size() == 1);
    CHECK(cube[0] == RootMult{Rational(1, 3), 3});
    CHECK_THROWS_AS(rational_roots(Poly()), ZeroPolynomial);
    CHECK_FALSE(splits_over_q(Poly({-2, 0, 1})));
}

TEST_CASE("polynomial gcd and squarefree part") {
    Poly p = Poly({-1, 1}) * Poly({-1, 1}) * Poly({2, 1});
    CHECK(squarefree_part(p) == Poly({-2, 1, 1}));
    CHECK(gcd(p, p.derivative()) == Poly({-1, 1}));
}

TEST_CASE("ranks of root vectors") {
    CHECK(rank(X(Root::Alpha)) == 1);
    CHECK(rank(X(Root::Beta)) == 2);
    CHECK(rank(X(Root::Alpha) + X(Root::Beta)) == 3);
}

TEST_CASE("inverse of W is its transpose") {
    CHECK(inverse(mat_W()) == mat_W().transpose());
    CHECK_THROWS_AS(inverse(X(Root::Alpha)), SingularMatrix);
}

TEST_CASE("vector spaces are canonical") {
    VecSpace a = VecSpace::span(3, {{1, 2, 3}, {2, 4, 6}, {0, 1, 1}});
    VecSpace b = VecSpace::span(3, {{1, 3, 4}, {0, -1, -1}});
    CHECK(a.dim() == 2);
    CHECK(a == b);
    CHECK(a.intersect(VecSpace::span(3, {{0, 0, 1}})).dim() == 0);
    CHECK(kernel(QMat::from_rows({{1, 1, 0}, {0, 0, 1}})).size() == 1);
}
