#include "doctest.h"
#include "sp4cert/errors.hpp"
#include "sp4cert/lie_struct.hpp"
#include "sp4cert/sp4.hpp"

using namespace sp4cert;

namespace {
const Mat4 Xa = X(Root::Alpha), Xb = X(Root::Beta), Xab = X(Root::AlphaBeta), Xa2b = X(Root::Alpha2Beta);
}

TEST_CASE("closure") {
    CHECK(is_closed(echelon_span({T(3, 1), Xa + Xb})));
    CHECK_FALSE(is_closed(echelon_span({Xa, Xb})));
    CHECK(generated_subalgebra({Xa, Xb}) == standard_subalgebra(StdSub::n));
    CHECK(generated_subalgebra({Xb, Xab}) == echelon_span({Xb, Xab, Xa2b}));
    CHECK(generated_subalgebra({Xa, Xa2b}).dim() == 2);
}

TEST_CASE("derived and lower central series") {
    const Subspace& b = standard_subalgebra(StdSub::b);
    CHECK(dims_of(derived_series(b)) == std::vector<int>{6, 4, 2, 0});
    Subspace s = echelon_span({T(2, 1), Xa, Xab, Xa2b});
    CHECK(dims_of(derived_series(s)) == std::vector<int>{4, 3, 0});
    CHECK(is_nilpotent(standard_subalgebra(StdSub::n)));
    CHECK(is_solvable(b));
    CHECK_FALSE(is_nilpotent(b));
    CHECK(is_abelian(echelon_span({T(1, 0), Xa})));
    CHECK_FALSE(is_solvable(sp4_space()));
}

TEST_CASE("structure constants") {
    StructureConstants sc = structure_constants(std::vector<Mat4>{T(3, 1), Xa + Xb});
    CHECK(sc.bracket(sc.unit(0), sc.unit(1)) == QVec{0, 2});
    StructureConstants n = structure_constants(std::vector<Mat4>{Xb, Xa, Xab, Xa2b});
    CHECK(n.bracket(n.unit(0), n.unit(1)) == QVec{0, 0, 1, 0});
    CHECK(n.bracket(n.unit(0), n.unit(2)) == QVec{0, 0, 0, 2});
    StructureConstants b = structure_constants(standard_subalgebra(StdSub::b));
    CHECK(b.is_antisymmetric());
    CHECK(b.satisfies_jacobi());
    CHECK(sc_derived_dims(b) == std::vector<int>{6, 4, 2, 0});
    CHECK(sc_nilradical(b).dim() == 4);
    CHECK(sc_cartan_subalgebra(b).dim() == 2);
    CHECK_THROWS_AS(structure_constants(echelon_span({Xa, Xb})), NotClosed);
}

TEST_CASE("bracket is antisymmetric and satisfies Jacobi on b") {
    auto basis = standard_subalgebra(StdSub::b).basis();
    for (auto& x : basis)
        for (auto& y : basis) {
            CHECK(bracket(x, y) == -bracket(y, x));
            for (auto& z : basis)
                CHECK((bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) + bracket(z, bracket(x, y))).is_zero());
        }
}
