#pragma once

#include <string>
#include <utility>
#include <vector>

#include "sp4cert/linalg.hpp"

namespace sp4cert {

enum class Root { Alpha, Beta, AlphaBeta, Alpha2Beta };

constexpr Root kPositiveRoots[] = {Root::Alpha, Root::Beta, Root::AlphaBeta, Root::Alpha2Beta};

std::string root_name(Root r);  // "alpha", "beta", "alpha_plus_beta", "alpha_plus_2beta"
Root parse_root(const std::string& s);  // also accepts "a", "b", "ab", "a2b"

Mat4 form_J();
Mat4 mat_W();
Mat4 mat_A();
Mat4 mat_AJ();
Mat4 mat_WA();
Mat4 T(const Rational& a, const Rational& b);  // diag(a, b, -a, -b)
Mat4 X(Root r);
// Value of the root on T_{a,b}, i.e. [T_{a,b}, X_r] = root_value(r, a, b) X_r.
Rational root_value(Root r, const Rational& a, const Rational& b);

bool in_sp4(const Mat4& m);
bool in_sp4_group(const Mat4& g);
// Upper pattern of the fixed Borel subalgebra (zero entries below it).
bool in_borel_pattern(const Mat4& m);
bool in_borel(const Mat4& m);

Mat4 bracket(const Mat4& x, const Mat4& y);
Mat4 conjugate(const Mat4& g, const Mat4& x);  // g x g^-1
Subspace conjugate_subalgebra(const Mat4& g, const Subspace& s);

Mat4 shear(Root r, const Rational& z);  // I + z X_r
Mat4 sp_diag(const Rational& r, const Rational& s);  // diag(r, s, 1/r, 1/s)
Mat4 block24(const Rational& a, const Rational& b, const Rational& c, const Rational& d);

// Abstract Weyl group action on the pair (a, b) of T_{a,b}.
std::pair<Rational, Rational> weyl_s_alpha(const std::pair<Rational, Rational>& t);  // (a, -b)
std::pair<Rational, Rational> weyl_s_beta(const std::pair<Rational, Rational>& t);   // (b, a)
std::vector<std::pair<Rational, Rational>> weyl_orbit(const Rational& a, const Rational& b);

// Basis of sp(4) (dimension 10) in echelon form.
const Subspace& sp4_space();

enum class StdSub { t, b, n, p, n_p };
std::string std_sub_name(StdSub s);
StdSub parse_std_sub(const std::string& s);
const Subspace& standard_subalgebra(StdSub s);

// A named element of Sp(4). Recipes: "W", "A", "J", "AJ", "WA", "weyl_s_alpha",
// "weyl_s_beta", "shear:<root>:<z>", "diag:d1,d2,d3,d4", "block:a,b,c,d", and
// products joined with '*'. Throws ParseError on malformed text.
struct NamedConjugator {
    std::string name;
    Mat4 matrix;
};
NamedConjugator parse_conjugator(const std::string& recipe);

// Built-in parameter samples; SP4_PARAM_SAMPLES overrides when set.
std::vector<Rational> default_param_samples();
std::vector<Rational> param_samples_from_env();

}  // namespace sp4cert
