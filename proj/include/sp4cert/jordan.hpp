#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sp4cert/linalg.hpp"

namespace sp4cert {

struct JordanDecomposition {
    Mat4 semisimple;
    Mat4 nilpotent;
};

// Chevalley decomposition by Newton iteration on the squarefree part of the
// characteristic polynomial; exact and free of eigenvalue extraction.
JordanDecomposition jordan_decompose(const Mat4& x);
std::pair<QMat, QMat> jordan_decompose(const QMat& x);

bool is_semisimple(const Mat4& x);
bool is_nilpotent_mat(const Mat4& x);
bool is_nilpotent_mat(const QMat& x);

struct JordanBlock {
    Rational eigenvalue;
    int size;
    bool operator==(const JordanBlock& o) const { return eigenvalue == o.eigenvalue && size == o.size; }
};

// Block sizes per rational eigenvalue, sorted by (eigenvalue, size descending).
// Throws IrrationalSpectrum when the characteristic polynomial does not split.
std::vector<JordanBlock> jordan_type(const QMat& x);
std::vector<JordanBlock> jordan_type(const Mat4& x);
std::string to_string(const std::vector<JordanBlock>& blocks);

// One row of the semisimple (table 1) or nonsemisimple (table 2) class list.
// Rows: table 1 "T_{a,b}", "T_{a,0}", "T_{a,a}", "T_{0,0}"; table 2
// "T_{a,0}+X_alpha", "T_{a,a}+X_beta", "X_alpha", "X_beta", "X_alpha+X_beta".
struct OrbitLabel {
    int table = 1;
    std::string row;
    std::optional<Rational> a, b;
    std::string to_string() const;
    bool operator==(const OrbitLabel& o) const { return table == o.table && row == o.row && a == o.a && b == o.b; }
};

// Canonical Weyl-orbit representative of a regular pair (a, b).
std::pair<Rational, Rational> weyl_canonical(const Rational& a, const Rational& b);

// Sp(4)-class of an element; throws NotInSp4, IrrationalSpectrum.
OrbitLabel classify_element(const Mat4& x);

struct CartanReduction {
    Mat4 g;  // in the Borel subgroup, g x g^-1 = T_{a,b}
    Rational a, b;
};

// Conjugates a semisimple element of b into t by root shears in height
// order. Throws NotInBorel, NotSemisimple.
CartanReduction conjugate_ss_into_cartan(const Mat4& x);

}  // namespace sp4cert
