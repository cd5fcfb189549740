#pragma once

#include <string>
#include <vector>

#include "sp4cert/linalg.hpp"

namespace sp4cert {

// A bracket-closed subspace of sp(4).
struct Subalgebra {
    Subspace space;
    std::string ambient = "sp4";
    int dim() const { return space.dim(); }
};

// c[i][j] holds the coordinates of [b_i, b_j] in the basis b_0..b_{d-1}.
struct StructureConstants {
    int dim = 0;
    std::vector<std::vector<QVec>> c;

    static StructureConstants zero(int dim);
    // Sets [b_i, b_j] = v and [b_j, b_i] = -v (0-based indices).
    void set(int i, int j, const QVec& v);
    // 1-based convenience for presentations: [x_i, x_j] = sum coef * x_k.
    void rel(int i, int j, std::initializer_list<std::pair<int, Rational>> terms);

    QVec unit(int i) const;
    QVec bracket(const QVec& u, const QVec& v) const;
    QMat ad(const QVec& u) const;  // column k holds [u, b_k]
    bool is_antisymmetric() const;
    bool satisfies_jacobi() const;
    bool is_abelian() const;
    // New basis given by the columns of p (old coordinates); throws SingularMatrix.
    StructureConstants change_basis(const QMat& p) const;
    bool operator==(const StructureConstants& o) const { return dim == o.dim && c == o.c; }
};

bool is_closed(const Subspace& s);
Subspace generated_subalgebra(const std::vector<Mat4>& seed);
Subspace bracket_space(const Subspace& u, const Subspace& v);
std::vector<Subspace> derived_series(const Subspace& s);        // ends with the stable term
std::vector<Subspace> lower_central_series(const Subspace& s);  // ends with the stable term
std::vector<int> dims_of(const std::vector<Subspace>& series);
bool is_solvable(const Subspace& s);
bool is_nilpotent(const Subspace& s);
bool is_abelian(const Subspace& s);

// Constants in the echelon basis of s; throws NotClosed.
StructureConstants structure_constants(const Subspace& s);
// Constants in an explicit basis (must be independent and closed).
StructureConstants structure_constants(const std::vector<Mat4>& basis);

// Abstract-algebra helpers on coordinate spaces Q^dim.
VecSpace sc_full(const StructureConstants& sc);
VecSpace sc_bracket_space(const StructureConstants& sc, const VecSpace& u, const VecSpace& v);
std::vector<int> sc_derived_dims(const StructureConstants& sc);
std::vector<int> sc_lower_central_dims(const StructureConstants& sc);
bool sc_is_abelian(const StructureConstants& sc, const VecSpace& u);
// {x in within : [x, of] = 0}
VecSpace sc_centralizer(const StructureConstants& sc, const VecSpace& of, const VecSpace& within);
// The largest nilpotent ideal, i.e. the set of ad-nilpotent elements (solvable input).
VecSpace sc_nilradical(const StructureConstants& sc);
// Fitting null component of ad y for a regular y.
VecSpace sc_cartan_subalgebra(const StructureConstants& sc);

// Matrix of op on an invariant subspace u, in the basis of u.
QMat restrict_map(const QMat& op, const VecSpace& u);
// Matrix of op on u/z (z inside u, both invariant), in the basis of a fixed
// complement of z in u; the complement vectors are returned in reps.
QMat induced_map(const QMat& op, const VecSpace& u, const VecSpace& z, std::vector<QVec>* reps = nullptr);
// A vector completing sub inside sup: basis vectors of sup not in sub.
std::vector<QVec> complement_basis(const VecSpace& sup, const VecSpace& sub);

}  // namespace sp4cert
