#include "doctest.h"
#include "sp4cert/errors.hpp"
#include "sp4cert/identify.hpp"
#include "sp4cert/sp4.hpp"

using namespace sp4cert;

namespace {
const Mat4 Xa = X(Root::Alpha), Xb = X(Root::Beta), Xab = X(Root::AlphaBeta), Xa2b = X(Root::Alpha2Beta);

DeGraafClass identify_span(const std::vector<Mat4>& basis) {
    StructureConstants sc = structure_constants(echelon_span(basis));
    QMat m;
    DeGraafClass c = identify_degraaf(sc, &m);
    CHECK(verify_isomorphism(sc, degraaf_sc(c), m));
    return c;
}
}  // namespace

TEST_CASE("three-dimensional identifications") {
    CHECK(identify_span({T(2, 1), Xa, Xab}) == DeGraafClass{"L3", {Rational(-6, 25)}});
    CHECK(identify_span({T(1, -1), Xa, Xa2b}) == DeGraafClass{"L4", {1}});
    CHECK(identify_span({T(1, 1), Xa, Xa2b}) == DeGraafClass{"L2", {}});
    CHECK(identify_span({Xb, Xab, Xa2b}) == DeGraafClass{"L4", {0}});
    CHECK(identify_span({Xa, Xab, Xa2b}) == DeGraafClass{"L1", {}});
}

TEST_CASE("four-dimensional identifications") {
    CHECK(identify_span({T(2, 1), Xa, Xab, Xa2b}) == DeGraafClass{"M6", {Rational(8, 243), Rational(-26, 81)}});
    CHECK(identify_span({T(1, 1), Xa, Xab, Xa2b}) == DeGraafClass{"M2", {}});
    CHECK(identify_span({Xb, Xa, Xab, Xa2b}) == DeGraafClass{"M7", {0, 0}});
    CHECK(identify_span({T(1, 0), Xb, Xab, Xa2b}) == DeGraafClass{"M12", {}});
    CHECK(identify_span({T(1, 0), T(0, 1), Xa, Xab}) == DeGraafClass{"M8", {}});
}

TEST_CASE("high-dimensional identifications") {
    QMat m;
    StructureConstants sc = structure_constants(echelon_span({T(0, 1), Xb, Xa, Xab, Xa2b}));
    CHECK(identify_sw_high(sc, &m).to_string() == "s_{5,33}");
    CHECK(verify_isomorphism(sc, sw_sc({"s_{5,33}", {}, ""}), m));
    CHECK(identify(structure_constants(standard_subalgebra(StdSub::b))).sw.to_string() == "s_{6,242}");
}

TEST_CASE("three-generator family") {
    CHECK(identify_degraaf(three_generator_algebra(2)) == DeGraafClass{"L2", {}});
    CHECK(identify_degraaf(three_generator_algebra(-2)) == DeGraafClass{"L4", {1}});
    CHECK(identify_degraaf(three_generator_algebra(1)) == DeGraafClass{"L3", {Rational(-2, 9)}});
}

TEST_CASE("de Graaf to SW labels") {
    CHECK(degraaf_to_sw({"L2", {}}) == SWClass{"s_{3,1}", {1}, ""});
    CHECK(degraaf_to_sw({"L4", {1}}) == SWClass{"s_{3,1}", {-1}, ""});
    CHECK(degraaf_to_sw({"M12", {}}) == SWClass{"s_{4,8}", {1}, ""});
    CHECK(degraaf_to_sw({"L3", {Rational(-3, 16)}}) == SWClass{"s_{3,1}", {Rational(1, 3)}, ""});
    CHECK_FALSE(degraaf_to_sw({"L3", {1}}).note.empty());  // 1 + 4 alpha = 5 is not a square
}

TEST_CASE("square-root branch") {
    auto br = sqrt_branch(Rational(-3, 16));
    REQUIRE(br);
    CHECK(br->first / br->second == Rational(1, 3));
    CHECK_FALSE(sqrt_branch(1));
    CHECK(normalize_sw_param(-1, "s_{3,1}") == -1);
    CHECK(normalize_sw_param(3, "s_{3,1}") == Rational(1, 3));
}

TEST_CASE("printed correspondences") {
    auto k2 = paper_family_map({"K2", {}});
    REQUIRE(k2);
    CHECK(check_family_map({"K2", {}}, *k2));
    // e1 = 2 X_{a+2b}, e2 = X_b, e3 = X_{a+b}, e4 = T_{1,-1}/2, e5 = T_{0,-1}
    std::vector<Mat4> e{Xa2b * Rational(2), Xb, Xab, T(Rational(1, 2), Rational(-1, 2)), T(0, -1)};
    CHECK(verify_isomorphism(structure_constants(e), sw_sc({"s_{5,44}", {}, ""}), QMat::identity(5)));
}

TEST_CASE("verification rejects wrong maps") {
    StructureConstants sc = degraaf_sc({"L2", {}});
    CHECK(verify_isomorphism(sc, sc, QMat::identity(3)));
    QMat bad = QMat::identity(3);
    bad(2, 2) = 2;
    CHECK_FALSE(verify_isomorphism(sc, sc, bad));
    CHECK_FALSE(verify_isomorphism(sc, sc, QMat(3, 3)));
}

TEST_CASE("label parsing") {
    CHECK(parse_degraaf("M6(8/243,-26/81)") == DeGraafClass{"M6", {Rational(8, 243), Rational(-26, 81)}});
    CHECK(parse_sw("s_{3,1}(A=1/3)") == SWClass{"s_{3,1}", {Rational(1, 3)}, ""});
    CHECK_THROWS_AS(parse_degraaf("Q7"), ParseError);
}
