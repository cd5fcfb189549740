#include "doctest.h"
#include "sp4cert/errors.hpp"
#include "sp4cert/sp4.hpp"

using namespace sp4cert;

namespace {
const Mat4 Xa = X(Root::Alpha), Xb = X(Root::Beta), Xab = X(Root::AlphaBeta), Xa2b = X(Root::Alpha2Beta);
}

TEST_CASE("membership") {
    CHECK(in_sp4(Xb));
    CHECK(in_sp4(T(3, -7)));
    CHECK_FALSE(in_sp4(Mat4::unit(0, 0)));
    CHECK(in_sp4_group(mat_W()));
    CHECK(in_sp4_group(mat_A()));
    CHECK(in_sp4_group(form_J()));
    CHECK(sp4_space().dim() == 10);
    CHECK(standard_subalgebra(StdSub::b).dim() == 6);
    CHECK(standard_subalgebra(StdSub::n).dim() == 4);
}

TEST_CASE("root brackets") {
    CHECK(bracket(Xb, Xa) == Xab);
    CHECK(bracket(Xb, Xab) == Xa2b * Rational(2));
    CHECK(bracket(T(5, 1), Xa) == Xa * Rational(2));
    for (Root r : kPositiveRoots) CHECK(bracket(T(3, 2), X(r)) == X(r) * root_value(r, 3, 2));
}

TEST_CASE("named conjugators act as expected") {
    CHECK(conjugate(mat_W(), T(3, 1)) == T(1, 3));
    CHECK(conjugate(mat_A(), T(1, 1) + Xb) == T(1, -1) + Xab);
    Subspace s = echelon_span({T(2, 1), Xa, Xa2b});
    CHECK(conjugate_subalgebra(mat_W(), s) == echelon_span({T(Rational(1, 2), 1), Xa, Xa2b}));
    const Subspace& t = standard_subalgebra(StdSub::t);
    CHECK(conjugate_subalgebra(mat_A(), t) == t);
}

TEST_CASE("root shear removes the nilpotent part") {
    // c T_{b,1} + d X_alpha with c = 1, b = 2, d = 3
    Rational z = Rational(3) / root_value(Root::Alpha, 2, 1);
    CHECK(conjugate(shear(Root::Alpha, z), T(2, 1) + Xa * Rational(3)) == T(2, 1));
    Subspace n = standard_subalgebra(StdSub::n);
    CHECK(conjugate_subalgebra(shear(Root::Beta, 1), n) == n);
}

TEST_CASE("Weyl orbits") {
    CHECK(weyl_orbit(1, 2).size() == 8);
    CHECK(weyl_orbit(1, 1).size() == 4);
}

TEST_CASE("conjugator recipes") {
    CHECK(parse_conjugator("shear:alpha:1/2").matrix == shear(Root::Alpha, Rational(1, 2)));
    CHECK(parse_conjugator("W*A").matrix == mat_W() * mat_A());
    CHECK(in_sp4_group(parse_conjugator("diag:2,3,1/2,1/3").matrix));
    CHECK_THROWS_AS(parse_conjugator("shear:gamma:1"), ParseError);
}
