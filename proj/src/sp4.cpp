#include "sp4cert/sp4.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>

#include "sp4cert/errors.hpp"

namespace sp4cert {

std::string root_name(Root r) {
    switch (r) {
        case Root::Alpha: return "alpha";
        case Root::Beta: return "beta";
        case Root::AlphaBeta: return "alpha_plus_beta";
        case Root::Alpha2Beta: return "alpha_plus_2beta";
    }
    return "";
}

Root parse_root(const std::string& s) {
    static const std::map<std::string, Root> names = {
        {"alpha", Root::Alpha},          {"a", Root::Alpha},
        {"beta", Root::Beta},            {"b", Root::Beta},
        {"alpha_plus_beta", Root::AlphaBeta},   {"ab", Root::AlphaBeta},
        {"alpha_plus_2beta", Root::Alpha2Beta}, {"a2b", Root::Alpha2Beta},
    };
    auto it = names.find(s);
    if (it == names.end()) throw ParseError("unknown root '" + s + "'");
    return it->second;
}

Mat4 form_J() { return Mat4::unit(0, 2) + Mat4::unit(1, 3) - Mat4::unit(2, 0) - Mat4::unit(3, 1); }

Mat4 mat_W() { return Mat4::unit(0, 1) - Mat4::unit(1, 0) + Mat4::unit(2, 3) - Mat4::unit(3, 2); }

Mat4 mat_A() { return Mat4::unit(0, 0) - Mat4::unit(1, 3) + Mat4::unit(2, 2) + Mat4::unit(3, 1); }

Mat4 mat_AJ() { return mat_A() * form_J(); }

Mat4 mat_WA() { return mat_W() * mat_A(); }

Mat4 T(const Rational& a, const Rational& b) { return Mat4::diag(a, b, -a, -b); }

Mat4 X(Root r) {
    switch (r) {
        case Root::Alpha: return Mat4::unit(1, 3);
        case Root::Beta: return Mat4::unit(0, 1) - Mat4::unit(3, 2);
        case Root::AlphaBeta: return Mat4::unit(0, 3) + Mat4::unit(1, 2);
        case Root::Alpha2Beta: return Mat4::unit(0, 2);
    }
    return Mat4();
}

Rational root_value(Root r, const Rational& a, const Rational& b) {
    switch (r) {
        case Root::Alpha: return 2 * b;
        case Root::Beta: return a - b;
        case Root::AlphaBeta: return a + b;
        case Root::Alpha2Beta: return 2 * a;
    }
    return 0;
}

bool in_sp4(const Mat4& m) {
    Mat4 j = form_J();
    return j * m.transpose() * j == m;
}

bool in_sp4_group(const Mat4& g) {
    Mat4 j = form_J();
    return g * j * g.transpose() == j;
}

bool in_borel_pattern(const Mat4& m) {
    static const bool allowed[4][4] = {
        {true, true, true, true},
        {false, true, true, true},
        {false, false, true, false},
        {false, false, true, true},
    };
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (!allowed[i][j] && m(i, j) != 0) return false;
    return true;
}

bool in_borel(const Mat4& m) { return in_borel_pattern(m) && in_sp4(m); }

Mat4 bracket(const Mat4& x, const Mat4& y) { return x * y - y * x; }

Mat4 conjugate(const Mat4& g, const Mat4& x) { return g * x * inverse(g); }

Subspace conjugate_subalgebra(const Mat4& g, const Subspace& s) {
    Mat4 gi = inverse(g);
    std::vector<Mat4> out;
    for (auto& b : s.basis()) out.push_back(g * b * gi);
    return echelon_span(out);
}

Mat4 shear(Root r, const Rational& z) { return Mat4::identity() + X(r) * z; }

Mat4 sp_diag(const Rational& r, const Rational& s) {
    if (r == 0 || s == 0) throw SingularMatrix("zero entry in diagonal conjugator");
    return Mat4::diag(r, s, 1 / r, 1 / s);
}

Mat4 block24(const Rational& a, const Rational& b, const Rational& c, const Rational& d) {
    Mat4 m = Mat4::identity();
    m(1, 1) = a;
    m(1, 3) = b;
    m(3, 1) = c;
    m(3, 3) = d;
    return m;
}

std::pair<Rational, Rational> weyl_s_alpha(const std::pair<Rational, Rational>& t) { return {t.first, -t.second}; }

std::pair<Rational, Rational> weyl_s_beta(const std::pair<Rational, Rational>& t) { return {t.second, t.first}; }

std::vector<std::pair<Rational, Rational>> weyl_orbit(const Rational& a, const Rational& b) {
    std::vector<std::pair<Rational, Rational>> orbit{{a, b}};
    for (size_t i = 0; i < orbit.size(); ++i) {
        for (auto next : {weyl_s_alpha(orbit[i]), weyl_s_beta(orbit[i])})
            if (std::find(orbit.begin(), orbit.end(), next) == orbit.end()) orbit.push_back(next);
    }
    return orbit;
}

const Subspace& sp4_space() {
    static const Subspace s = [] {
        // Kernel of m -> J m^t J - m over the 16 entries.
        QMat op(16, 16);
        for (int k = 0; k < 16; ++k) {
            Mat4 e = Mat4::unit(k / 4, k % 4);
            Mat4 img = form_J() * e.transpose() * form_J() - e;
            for (int i = 0; i < 16; ++i) op(i, k) = img.flat()[i];
        }
        return Subspace(VecSpace::span(16, kernel(op)));
    }();
    return s;
}

std::string std_sub_name(StdSub s) {
    switch (s) {
        case StdSub::t: return "t";
        case StdSub::b: return "b";
        case StdSub::n: return "n";
        case StdSub::p: return "p";
        case StdSub::n_p: return "n_p";
    }
    return "";
}

StdSub parse_std_sub(const std::string& s) {
    for (StdSub x : {StdSub::t, StdSub::b, StdSub::n, StdSub::p, StdSub::n_p})
        if (std_sub_name(x) == s) return x;
    throw ParseError("unknown standard subalgebra '" + s + "'");
}

namespace {

// sp(4) intersected with the matrices supported on a 0/1 pattern.
Subspace pattern_intersection(const bool pattern[4][4]) {
    std::vector<Mat4> units;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (pattern[i][j]) units.push_back(Mat4::unit(i, j));
    return echelon_span(units).intersect(sp4_space());
}

}  // namespace

const Subspace& standard_subalgebra(StdSub s) {
    static const std::map<StdSub, Subspace> subs = [] {
        static const bool b_pat[4][4] = {{1, 1, 1, 1}, {0, 1, 1, 1}, {0, 0, 1, 0}, {0, 0, 1, 1}};
        static const bool n_pat[4][4] = {{0, 1, 1, 1}, {0, 0, 1, 1}, {0, 0, 0, 0}, {0, 0, 1, 0}};
        static const bool p_pat[4][4] = {{1, 1, 1, 1}, {1, 1, 1, 1}, {0, 0, 1, 1}, {0, 0, 1, 1}};
        static const bool np_pat[4][4] = {{0, 0, 1, 1}, {0, 0, 1, 1}, {0, 0, 0, 0}, {0, 0, 0, 0}};
        std::map<StdSub, Subspace> m;
        m[StdSub::t] = echelon_span({T(1, 0), T(0, 1)});
        m[StdSub::b] = pattern_intersection(b_pat);
        m[StdSub::n] = pattern_intersection(n_pat);
        m[StdSub::p] = pattern_intersection(p_pat);
        m[StdSub::n_p] = pattern_intersection(np_pat);
        return m;
    }();
    return subs.at(s);
}

namespace {

std::string trim_copy(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\n\r");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\n\r");
    return s.substr(b, e - b + 1);
}

Mat4 single_conjugator(const std::string& tok) {
    if (tok == "W" || tok == "weyl_s_beta") return mat_W();
    if (tok == "A" || tok == "weyl_s_alpha") return mat_A();
    if (tok == "J") return form_J();
    if (tok == "AJ") return mat_AJ();
    if (tok == "WA") return mat_WA();
    if (tok == "I" || tok == "id") return Mat4::identity();
    auto colon = tok.find(':');
    if (colon == std::string::npos) throw ParseError("unknown conjugator '" + tok + "'");
    std::string kind = tok.substr(0, colon), rest = tok.substr(colon + 1);
    if (kind == "shear") {
        auto c2 = rest.find(':');
        if (c2 == std::string::npos) throw ParseError("shear needs root and value: '" + tok + "'");
        return shear(parse_root(trim_copy(rest.substr(0, c2))), parse_rational(rest.substr(c2 + 1)));
    }
    auto vals = parse_rational_list(rest);
    if (vals.size() != 4) throw ParseError("'" + kind + "' needs four entries: '" + tok + "'");
    if (kind == "diag") return Mat4::diag(vals[0], vals[1], vals[2], vals[3]);
    if (kind == "block") return block24(vals[0], vals[1], vals[2], vals[3]);
    throw ParseError("unknown conjugator kind '" + kind + "'");
}

}  // namespace

NamedConjugator parse_conjugator(const std::string& recipe) {
    std::string text = trim_copy(recipe);
    if (text.empty()) throw ParseError("empty conjugator recipe");
    Mat4 g = Mat4::identity();
    size_t start = 0;
    while (true) {
        size_t star = text.find('*', start);
        std::string tok = trim_copy(text.substr(start, star == std::string::npos ? std::string::npos : star - start));
        if (tok.empty()) throw ParseError("empty factor in conjugator '" + text + "'");
        g = g * single_conjugator(tok);
        if (star == std::string::npos) break;
        start = star + 1;
    }
    return {text, g};
}

std::vector<Rational> default_param_samples() {
    return {Rational(2), Rational(3), Rational(5), Rational(-2), Rational(-3), Rational(1, 2), Rational(2, 3), Rational(7, 3)};
}

std::vector<Rational> param_samples_from_env() {
    const char* env = std::getenv("SP4_PARAM_SAMPLES");
    if (!env || !*env) return default_param_samples();
    return parse_rational_list(env);
}

}  // namespace sp4cert
