#include "doctest.h"
#include "sp4cert/errors.hpp"
#include "sp4cert/jordan.hpp"
#include "sp4cert/sp4.hpp"

using namespace sp4cert;

namespace {
const Mat4 Xa = X(Root::Alpha), Xb = X(Root::Beta), Xa2b = X(Root::Alpha2Beta);
}

TEST_CASE("additive Jordan decomposition") {
    auto d = jordan_decompose(T(1, 0) + Xa);
    CHECK(d.semisimple == T(1, 0));
    CHECK(d.nilpotent == Xa);
    CHECK_FALSE(is_semisimple(T(1, 1) + Xb));
    CHECK_FALSE(is_nilpotent_mat(T(1, 1) + Xb));
    CHECK(is_nilpotent_mat(Xa + Xb));
}

TEST_CASE("Jordan types") {
    CHECK(jordan_type(Xa + Xb) == std::vector<JordanBlock>{{0, 4}});
    CHECK(jordan_type(Xb) == std::vector<JordanBlock>{{0, 2}, {0, 2}});
    CHECK(jordan_type(Xa) == std::vector<JordanBlock>{{0, 2}, {0, 1}, {0, 1}});
    CHECK(jordan_type(T(1, 0) + Xa) == std::vector<JordanBlock>{{-1, 1}, {0, 2}, {1, 1}});
    Mat4 rot;  // eigenvalues +-i on one block
    rot(0, 1) = 1;
    rot(1, 0) = -1;
    CHECK_THROWS_AS(jordan_type(rot), IrrationalSpectrum);
}

TEST_CASE("element classes") {
    OrbitLabel reg = classify_element(T(2, 3));
    CHECK(reg.table == 1);
    CHECK(reg.row == "T_{a,b}");
    auto ab = std::make_pair(*reg.a, *reg.b);
    auto orb = weyl_orbit(2, 3);
    CHECK(std::find(orb.begin(), orb.end(), ab) != orb.end());
    OrbitLabel nil = classify_element(Xa2b);
    CHECK(nil.table == 2);
    CHECK(nil.row == "X_alpha");
    CHECK(classify_element((T(1, 1) + Xb) * Rational(5)).row == "T_{a,a}+X_beta");
    CHECK_THROWS_AS(classify_element(Mat4::unit(0, 1)), NotInSp4);
}

TEST_CASE("semisimple elements of b reduce into t") {
    Mat4 x = T(2, 1) + Xa2b;
    CartanReduction r = conjugate_ss_into_cartan(x);
    CHECK(conjugate(r.g, x) == T(2, 1));
    CHECK(r.a == 2);
    CHECK(r.b == 1);
    CHECK_THROWS_AS(conjugate_ss_into_cartan(T(1, 1) + Xb), NotSemisimple);
}
