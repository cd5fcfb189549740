#include "doctest.h"
#include "sp4cert/errors.hpp"
#include "sp4cert/io.hpp"
#include "sp4cert/sp4.hpp"

using namespace sp4cert;

TEST_CASE("subalgebra JSON round-trip") {
    Subalgebra s{echelon_span({T(Rational(1, 3), 1), X(Root::Alpha)}), "sp4"};
    nlohmann::json j = subalgebra_to_json(s);
    CHECK(j["basis"][0][0][0] == "1");
    Subalgebra back = subalgebra_from_json(parse_json_text(j.dump()));
    CHECK(back.space == s.space);
    CHECK(mat_from_json(mat_to_json(T(2, -5))) == T(2, -5));
}

TEST_CASE("malformed input") {
    try {
        parse_json_text("{\n  \"basis\": [1,,2]\n}");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
        CHECK(e.column > 0);
    }
    CHECK_THROWS_AS(mat_from_json(nlohmann::json::parse(R"([["1","0"]])")), ParseError);
    nlohmann::json outside = {{"basis", {mat_to_json(Mat4::unit(0, 0))}}};
    CHECK_THROWS_AS(subalgebra_from_json(outside), NotInSp4);
    CHECK(element_from_json(nlohmann::json{{"matrix", mat_to_json(T(1, 0))}}) == T(1, 0));
}
