#include "doctest.h"
#include "sp4cert/classify.hpp"
#include "sp4cert/errors.hpp"
#include "sp4cert/sp4.hpp"

using namespace sp4cert;

namespace {
const Mat4 Xa = X(Root::Alpha), Xb = X(Root::Beta), Xab = X(Root::AlphaBeta), Xa2b = X(Root::Alpha2Beta);
}

TEST_CASE("pencil rank strata") {
    PencilStrata two = pencil_rank_strata(Xa, Xa2b);
    CHECK(two.generic_rank == 2);
    CHECK(two.lines.size() == 2);
    CHECK(std::find(two.lines.begin(), two.lines.end(), RankLine{"t=0", 1}) != two.lines.end());
    CHECK(std::find(two.lines.begin(), two.lines.end(), RankLine{"t=inf", 1}) != two.lines.end());
    PencilStrata one = pencil_rank_strata(Xa, Xab);
    CHECK(one.generic_rank == 2);
    CHECK(one.lines == std::vector<RankLine>{{"t=inf", 1}});
    CHECK(pencil_rank_strata(Xab, Xa2b).counts() == std::vector<std::pair<int, int>>{{1, 1}});
    CHECK_THROWS_AS(pencil_rank_strata(Xa, Xa * Rational(3)), DependentInputs);
}

TEST_CASE("signature fields") {
    CHECK(signature(echelon_span({T(1, 1), Xb})).is_abelian);
    CHECK(signature(echelon_span({Xa, Xa2b})).nilpotent_rank_strata == std::vector<std::pair<int, int>>{{1, 2}});
    CHECK(signature(echelon_span({Xa, Xab})).nilpotent_rank_strata == std::vector<std::pair<int, int>>{{1, 1}});
    InvariantSignature t = signature(standard_subalgebra(StdSub::t));
    CHECK(t.semisimple_content == SemisimpleContent::HasCartan);
    CHECK(t.contains_invertible);
    CHECK(signature(standard_subalgebra(StdSub::n)).ad_spectrum == "nilpotent");
    CHECK(maximal_torus(standard_subalgebra(StdSub::b)).dim() == 2);
    CHECK(nilpotent_subspace(standard_subalgebra(StdSub::b)) == standard_subalgebra(StdSub::n));
}

TEST_CASE("separating witnesses") {
    InvariantSignature ta = signature(echelon_span({T(0, 1), Xa})), tb = signature(echelon_span({T(0, 1), Xb}));
    CHECK(ta.ad_spectrum != tb.ad_spectrum);
    CHECK(first_difference(ta, tb).has_value());
    InvariantSignature ab = signature(echelon_span({T(1, 0), Xa})), nab = signature(echelon_span({T(0, 1), Xa}));
    CHECK(ab.is_abelian != nab.is_abelian);
    auto w3 = first_difference(signature(echelon_span({Xa, Xab})), signature(echelon_span({Xa, Xa2b})));
    CHECK(w3 == "nilpotent_rank_strata");
}

TEST_CASE("signatures are conjugation invariant") {
    std::vector<Subspace> subs{echelon_span({T(2, 1), Xa, Xab}), echelon_span({T(1, 1) + Xb, Xab, Xa2b}),
                               echelon_span({T(1, 0), T(0, 1), Xa, Xa2b}), echelon_span({Xa, Xab})};
    Mat4 g = parse_conjugator("W*shear:beta:2*A*shear:alpha:-1/2").matrix;
    for (auto& s : subs) {
        Subspace c = conjugate_subalgebra(g, s);
        CHECK(c != s);
        CHECK(signature(c) == signature(s));
    }
}
