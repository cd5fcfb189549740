#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sp4cert/lie_struct.hpp"

namespace sp4cert {

// Rank of t*n1 + n2 along the pencil. `lines` lists only the lines where the
// rank drops below generic_rank: tags "t=<q>", "t=inf", or "root <i> of <p>"
// for irrational t.
struct RankLine {
    std::string tag;
    int rank;
    bool operator==(const RankLine& o) const { return tag == o.tag && rank == o.rank; }
};
struct PencilStrata {
    int generic_rank = 0;
    std::vector<RankLine> lines;
    // (rank, number of lines) for the exceptional lines, ascending by rank.
    std::vector<std::pair<int, int>> counts() const;
};

// Throws DependentInputs.
PencilStrata pencil_rank_strata(const Mat4& n1, const Mat4& n2);

enum class SemisimpleContent { HasCartan, HasRegularSS, HasNonregularSSOnly, MixedOnly, AllNilpotent };
std::string to_string(SemisimpleContent c);

// Conjugacy invariants of a solvable subalgebra of sp(4). Equal signatures are
// necessary for conjugacy, never sufficient.
struct InvariantSignature {
    int dim = 0;
    std::vector<int> derived_dims;
    std::vector<int> lcs_dims;
    bool is_abelian = false;
    int nilpotent_dim = 0;            // elements that are nilpotent matrices
    int nilpotent_generic_rank = 0;   // largest rank on that ideal
    int derived_generic_rank = 0;     // largest rank on [g, g]
    // Exceptional rank lines of the nilpotent ideal when it is 2-dimensional.
    std::vector<std::pair<int, int>> nilpotent_rank_strata;
    bool contains_invertible = false;
    SemisimpleContent semisimple_content = SemisimpleContent::AllNilpotent;
    // Eigenvalue data of the non-nilpotent directions on Q^4 and on g, up to
    // scaling and the Weyl group; see ad_spectrum().
    std::string ad_spectrum;

    // (field name, rendered value) in a fixed order.
    std::vector<std::pair<std::string, std::string>> fields() const;
    bool operator==(const InvariantSignature& o) const { return fields() == o.fields(); }
};

// Name of the first field where a and b differ.
std::optional<std::string> first_difference(const InvariantSignature& a, const InvariantSignature& b);

// {x in s : x nilpotent}; an ideal when s is solvable.
Subspace nilpotent_subspace(const Subspace& s);

// Semisimple elements of a Cartan subalgebra of s (a maximal torus).
Subspace maximal_torus(const Subspace& s);

// Canonical eigenvalue data: with k = dim s - dim(nilpotent ideal),
//   k = 0: "nilpotent";
//   k = 1: eigenvalues of a non-nilpotent y on Q^4 and of ad y on s,
//          normalised by max |eigenvalue| on Q^4 and minimised over the sign;
//   k = 2: weights of ad on s in the basis of the Q^4 weights, minimised over
//          the signed permutations.
std::string ad_spectrum(const Subspace& s);

InvariantSignature signature(const Subspace& s);

}  // namespace sp4cert
