#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sp4cert/lie_struct.hpp"

namespace sp4cert {

// de Graaf families: J, K1, K2, L1, L2, L3, L4, M2, M6, M7, M8, M12, M13, M14.
struct DeGraafClass {
    std::string family;
    std::vector<Rational> params;
    std::string to_string() const;  // "L3(-3/16)", "M6(8/243,-26/81)", "M12"
    bool operator==(const DeGraafClass& o) const { return family == o.family && params == o.params; }
};

// Snobl-Winternitz names, e.g. "s_{3,1}", "n_{4,1}", direct sums "n_{1,1}+s_{2,1}",
// "2n_{1,1}". `note` carries a symbolic parameter when it is not rational.
struct SWClass {
    std::string name;
    std::vector<Rational> params;
    std::string note;
    std::string to_string() const;  // "s_{3,1}(A=1/3)"
    bool operator==(const SWClass& o) const { return name == o.name && params == o.params && note == o.note; }
};

DeGraafClass parse_degraaf(const std::string& s);
SWClass parse_sw(const std::string& s);

StructureConstants degraaf_sc(const DeGraafClass& c);
StructureConstants sw_sc(const SWClass& c);  // throws OutOfCatalog for symbolic params

// [T,A] = 2A, [T,B] = rB, [A,B] = 0 in the basis (T, A, B).
StructureConstants three_generator_algebra(const Rational& r);

// Isomorphism check: column i of m holds the source coordinates of the
// element sent to target basis vector i. True iff m is invertible and
// [m e_i, m e_j] = m [e_i, e_j] for all i, j.
bool verify_isomorphism(const StructureConstants& source, const StructureConstants& target, const QMat& m);
// Same over Q(i): the map is re + i*im.
bool verify_isomorphism_gaussian(const StructureConstants& source, const StructureConstants& target, const QMat& re,
                                 const QMat& im);

// Identifies a solvable algebra of dimension <= 4 among the families that occur
// in sp(4). On success `basis` (if given) receives a verified isomorphism onto
// degraaf_sc(result). Throws UnsupportedDimension, UnrecognizedFamily.
DeGraafClass identify_degraaf(const StructureConstants& sc, QMat* basis = nullptr);
// Dimensions 5 and 6: s_{5,33}, s_{5,35}, s_{5,36}, s_{5,37}, s_{5,41}, s_{5,44}, s_{6,242}.
SWClass identify_sw_high(const StructureConstants& sc, QMat* basis = nullptr);

struct Identification {
    std::optional<DeGraafClass> degraaf;
    SWClass sw;
};
Identification identify(const StructureConstants& sc);

// For s_{3,1} and s_{4,8} maps A to the representative with 0 < |A| <= 1.
Rational normalize_sw_param(const Rational& a, const std::string& family);

// The two roots l+, l- of x^2 - x - alpha ordered so that l+/l- satisfies
// 0 < |l+/l-| <= 1 (the square-root branch of the normalisation). Empty when
// 1 + 4 alpha is not a rational square.
std::optional<std::pair<Rational, Rational>> sqrt_branch(const Rational& alpha);

SWClass degraaf_to_sw(const DeGraafClass& c);

// An explicit correspondence from a de Graaf algebra to its SW class.
// Columns of re (+ i*im) are the target basis vectors in x-coordinates.
struct FamilyMap {
    SWClass target;
    QMat re;
    std::optional<QMat> im;
    std::string origin;  // "paper", "corrected", "constructed"
    std::string note;
};
// The correspondence as printed in the literature, if one exists for c.
std::optional<FamilyMap> paper_family_map(const DeGraafClass& c);
// A verified correspondence: the printed one when it checks, otherwise a
// corrected or constructed one. Empty when c has no rational map.
std::optional<FamilyMap> verified_family_map(const DeGraafClass& c);
bool check_family_map(const DeGraafClass& c, const FamilyMap& m);

}  // namespace sp4cert
