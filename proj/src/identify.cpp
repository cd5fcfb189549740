#include "sp4cert/identify.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "sp4cert/errors.hpp"
#include "sp4cert/jordan.hpp"

namespace sp4cert {

// ---------------------------------------------------------------- labels

namespace {

std::string join_params(const std::vector<Rational>& ps) {
    std::string s;
    for (size_t i = 0; i < ps.size(); ++i) {
        if (i) s += ",";
        s += to_string(ps[i]);
    }
    return s;
}

std::string trim(const std::string& s) {
    size_t b = s.find_first_not_of(" \t");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

}  // namespace

std::string DeGraafClass::to_string() const {
    if (params.empty()) return family;
    return family + "(" + join_params(params) + ")";
}

std::string SWClass::to_string() const {
    if (!note.empty()) return name + "(" + note + ")";
    if (params.empty()) return name;
    static const char* names[] = {"A", "B", "C"};
    std::string s = name + "(";
    for (size_t i = 0; i < params.size(); ++i) {
        if (i) s += ",";
        s += std::string(names[i]) + "=" + sp4cert::to_string(params[i]);
    }
    return s + ")";
}

DeGraafClass parse_degraaf(const std::string& text) {
    std::string s = trim(text);
    DeGraafClass c;
    auto open = s.find('(');
    if (open == std::string::npos) {
        c.family = s;
    } else {
        if (s.back() != ')') throw ParseError("unbalanced de Graaf label '" + s + "'");
        c.family = s.substr(0, open);
        c.params = parse_rational_list(s.substr(open + 1, s.size() - open - 2));
    }
    static const char* known[] = {"J", "K1", "K2", "L1", "L2", "L3", "L4", "M2", "M6", "M7", "M8", "M12", "M13", "M14"};
    if (std::find(std::begin(known), std::end(known), c.family) == std::end(known))
        throw ParseError("unknown de Graaf family '" + c.family + "'");
    return c;
}

SWClass parse_sw(const std::string& text) {
    std::string s = trim(text);
    SWClass c;
    // The parameter list starts at the first '(' outside braces.
    int depth = 0;
    size_t open = std::string::npos;
    for (size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '{') ++depth;
        if (s[i] == '}') --depth;
        if (s[i] == '(' && depth == 0) {
            open = i;
            break;
        }
    }
    if (open == std::string::npos) {
        c.name = s;
        return c;
    }
    if (s.back() != ')') throw ParseError("unbalanced SW label '" + s + "'");
    c.name = s.substr(0, open);
    std::string inner = s.substr(open + 1, s.size() - open - 2);
    try {
        size_t start = 0;
        while (start <= inner.size()) {
            size_t comma = inner.find(',', start);
            std::string item = inner.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
            auto eq = item.find('=');
            c.params.push_back(parse_rational(eq == std::string::npos ? item : item.substr(eq + 1)));
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
    } catch (const ParseError&) {
        c.params.clear();
        c.note = inner;
    }
    return c;
}

// ---------------------------------------------------------------- families

StructureConstants degraaf_sc(const DeGraafClass& c) {
    const auto& f = c.family;
    auto p = [&](size_t i) {
        if (i >= c.params.size()) throw DimensionMismatch("missing parameter for " + f);
        return c.params[i];
    };
    StructureConstants s;
    if (f == "J") return StructureConstants::zero(1);
    if (f == "K1") return StructureConstants::zero(2);
    if (f == "K2") {
        s = StructureConstants::zero(2);
        s.rel(1, 2, {{2, 1}});
        return s;
    }
    if (f == "L1") return StructureConstants::zero(3);
    if (f == "L2") {
        s = StructureConstants::zero(3);
        s.rel(3, 1, {{1, 1}});
        s.rel(3, 2, {{2, 1}});
        return s;
    }
    if (f == "L3") {
        s = StructureConstants::zero(3);
        s.rel(3, 1, {{2, 1}});
        s.rel(3, 2, {{1, p(0)}, {2, 1}});
        return s;
    }
    if (f == "L4") {
        s = StructureConstants::zero(3);
        s.rel(3, 1, {{2, 1}});
        s.rel(3, 2, {{1, p(0)}});
        return s;
    }
    s = StructureConstants::zero(4);
    if (f == "M2") {
        s.rel(4, 1, {{1, 1}});
        s.rel(4, 2, {{2, 1}});
        s.rel(4, 3, {{3, 1}});
    } else if (f == "M6" || f == "M7") {
        s.rel(4, 1, {{2, 1}});
        s.rel(4, 2, {{3, 1}});
        if (f == "M6") s.rel(4, 3, {{1, p(0)}, {2, p(1)}, {3, 1}});
        else s.rel(4, 3, {{1, p(0)}, {2, p(1)}});
    } else if (f == "M8") {
        s.rel(1, 2, {{2, 1}});
        s.rel(3, 4, {{4, 1}});
    } else if (f == "M12") {
        s.rel(4, 1, {{1, 1}});
        s.rel(4, 2, {{2, 2}});
        s.rel(4, 3, {{3, 1}});
        s.rel(3, 1, {{2, 1}});
    } else if (f == "M13") {
        s.rel(4, 1, {{1, 1}, {3, p(0)}});
        s.rel(4, 2, {{2, 1}});
        s.rel(4, 3, {{1, 1}});
        s.rel(3, 1, {{2, 1}});
    } else if (f == "M14") {
        s.rel(4, 1, {{3, p(0)}});
        s.rel(4, 3, {{1, 1}});
        s.rel(3, 1, {{2, 1}});
    } else {
        throw OutOfCatalog("unknown de Graaf family '" + f + "'");
    }
    return s;
}

namespace {

// Single indecomposable SW algebra (no direct sums).
StructureConstants sw_single(const std::string& name, const std::vector<Rational>& ps) {
    auto p = [&](size_t i) {
        if (i >= ps.size()) throw DimensionMismatch("missing parameter for " + name);
        return ps[i];
    };
    auto n41 = [](StructureConstants& s) {
        s.rel(2, 4, {{1, 1}});
        s.rel(3, 4, {{2, 1}});
    };
    StructureConstants s;
    if (name == "n_{1,1}") return StructureConstants::zero(1);
    if (name == "s_{2,1}") {
        s = StructureConstants::zero(2);
        s.rel(2, 1, {{1, 1}});
        return s;
    }
    if (name == "n_{3,1}") {
        s = StructureConstants::zero(3);
        s.rel(2, 3, {{1, 1}});
        return s;
    }
    if (name == "s_{3,1}") {
        s = StructureConstants::zero(3);
        s.rel(3, 1, {{1, 1}});
        s.rel(3, 2, {{2, p(0)}});
        return s;
    }
    if (name == "s_{3,2}") {
        s = StructureConstants::zero(3);
        s.rel(3, 1, {{1, 1}});
        s.rel(3, 2, {{1, 1}, {2, 1}});
        return s;
    }
    if (name.rfind("n_{4", 0) == 0 || name.rfind("s_{4", 0) == 0) {
        s = StructureConstants::zero(4);
        if (name == "n_{4,1}") {
            n41(s);
        } else if (name == "s_{4,2}") {
            s.rel(4, 1, {{1, 1}});
            s.rel(4, 2, {{1, 1}, {2, 1}});
            s.rel(4, 3, {{2, 1}, {3, 1}});
        } else if (name == "s_{4,3}") {
            s.rel(4, 1, {{1, 1}});
            s.rel(4, 2, {{2, p(0)}});
            s.rel(4, 3, {{3, p(1)}});
        } else if (name == "s_{4,4}") {
            s.rel(4, 1, {{1, 1}});
            s.rel(4, 2, {{1, 1}, {2, 1}});
            s.rel(4, 3, {{3, p(0)}});
        } else if (name == "s_{4,6}") {
            s.rel(2, 3, {{1, 1}});
            s.rel(4, 2, {{2, 1}});
            s.rel(4, 3, {{3, -1}});
        } else if (name == "s_{4,8}") {
            s.rel(2, 3, {{1, 1}});
            s.rel(4, 1, {{1, 1 + p(0)}});
            s.rel(4, 2, {{2, 1}});
            s.rel(4, 3, {{3, p(0)}});
        } else if (name == "s_{4,10}") {
            s.rel(2, 3, {{1, 1}});
            s.rel(4, 1, {{1, 2}});
            s.rel(4, 2, {{2, 1}});
            s.rel(4, 3, {{2, 1}, {3, 1}});
        } else if (name == "s_{4,11}") {
            s.rel(2, 3, {{1, 1}});
            s.rel(4, 1, {{1, 1}});
            s.rel(4, 2, {{2, 1}});
        } else if (name == "s_{4,12}") {
            s.rel(3, 1, {{1, 1}});
            s.rel(3, 2, {{2, 1}});
            s.rel(4, 1, {{2, -1}});
            s.rel(4, 2, {{1, 1}});
        } else {
            throw OutOfCatalog("unknown SW algebra '" + name + "'");
        }
        return s;
    }
    if (name.rfind("s_{5", 0) == 0) {
        s = StructureConstants::zero(5);
        if (name == "s_{5,33}") {
            n41(s);
            s.rel(5, 2, {{2, -1}});
            s.rel(5, 3, {{3, -2}});
            s.rel(5, 4, {{4, 1}});
        } else if (name == "s_{5,35}") {
            n41(s);
            s.rel(5, 1, {{1, p(0) + 2}});
            s.rel(5, 2, {{2, p(0) + 1}});
            s.rel(5, 3, {{3, p(0)}});
            s.rel(5, 4, {{4, 1}});
        } else if (name == "s_{5,36}") {
            n41(s);
            s.rel(5, 1, {{1, 2}});
            s.rel(5, 2, {{2, 1}});
            s.rel(5, 4, {{4, 1}});
        } else if (name == "s_{5,37}") {
            n41(s);
            s.rel(5, 1, {{1, 1}});
            s.rel(5, 2, {{2, 1}});
            s.rel(5, 3, {{3, 1}});
        } else if (name == "s_{5,41}") {
            s.rel(4, 1, {{1, 1}});
            s.rel(4, 3, {{3, p(0)}});
            s.rel(5, 2, {{2, 1}});
            s.rel(5, 3, {{3, p(1)}});
        } else if (name == "s_{5,44}") {
            s.rel(2, 3, {{1, 1}});
            s.rel(4, 1, {{1, 1}});
            s.rel(4, 2, {{2, 1}});
            s.rel(5, 2, {{2, 1}});
            s.rel(5, 3, {{3, -1}});
        } else {
            throw OutOfCatalog("unknown SW algebra '" + name + "'");
        }
        return s;
    }
    if (name == "s_{6,242}") {
        s = StructureConstants::zero(6);
        n41(s);
        s.rel(5, 1, {{1, 2}});
        s.rel(5, 2, {{2, 1}});
        s.rel(5, 4, {{4, 1}});
        s.rel(6, 1, {{1, 1}});
        s.rel(6, 2, {{2, 1}});
        s.rel(6, 3, {{3, 1}});
        return s;
    }
    throw OutOfCatalog("unknown SW algebra '" + name + "'");
}

StructureConstants direct_sum(const StructureConstants& a, const StructureConstants& b) {
    StructureConstants s = StructureConstants::zero(a.dim + b.dim);
    for (int i = 0; i < a.dim; ++i)
        for (int j = 0; j < a.dim; ++j)
            for (int k = 0; k < a.dim; ++k) s.c[i][j][k] = a.c[i][j][k];
    for (int i = 0; i < b.dim; ++i)
        for (int j = 0; j < b.dim; ++j)
            for (int k = 0; k < b.dim; ++k) s.c[a.dim + i][a.dim + j][a.dim + k] = b.c[i][j][k];
    return s;
}

}  // namespace

StructureConstants sw_sc(const SWClass& c) {
    if (!c.note.empty()) throw OutOfCatalog("SW parameter is not rational: " + c.to_string());
    const std::string& n = c.name;
    if (n.size() > 7 && n[1] == 'n' && n.substr(1) == "n_{1,1}" && (n[0] == '2' || n[0] == '3'))
        return StructureConstants::zero(n[0] - '0');
    auto plus = n.find('+');
    if (plus != std::string::npos) {
        StructureConstants left = sw_single(n.substr(0, plus), {});
        return direct_sum(left, sw_single(n.substr(plus + 1), c.params));
    }
    return sw_single(n, c.params);
}

StructureConstants three_generator_algebra(const Rational& r) {
    StructureConstants s = StructureConstants::zero(3);
    s.rel(1, 2, {{2, 2}});
    s.rel(1, 3, {{3, r}});
    return s;
}

// ---------------------------------------------------------------- verification

bool verify_isomorphism(const StructureConstants& source, const StructureConstants& target, const QMat& m) {
    int n = source.dim;
    if (target.dim != n || m.rows() != n || m.cols() != n) throw DimensionMismatch("isomorphism dimensions disagree");
    if (rank(m) != n) return false;
    std::vector<QVec> cols;
    for (int i = 0; i < n; ++i) cols.push_back(m.col(i));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (source.bracket(cols[i], cols[j]) != m * target.c[i][j]) return false;
    return true;
}

bool verify_isomorphism_gaussian(const StructureConstants& source, const StructureConstants& target, const QMat& re,
                                 const QMat& im) {
    int n = source.dim;
    if (target.dim != n || re.rows() != n || re.cols() != n || im.rows() != n || im.cols() != n)
        throw DimensionMismatch("isomorphism dimensions disagree");
    QMat block(2 * n, 2 * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            block(i, j) = re(i, j);
            block(i, n + j) = -im(i, j);
            block(n + i, j) = im(i, j);
            block(n + i, n + j) = re(i, j);
        }
    if (rank(block) != 2 * n) return false;
    auto sub = [](QVec a, const QVec& b) {
        for (size_t k = 0; k < a.size(); ++k) a[k] -= b[k];
        return a;
    };
    auto add = [](QVec a, const QVec& b) {
        for (size_t k = 0; k < a.size(); ++k) a[k] += b[k];
        return a;
    };
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            QVec ri = re.col(i), rj = re.col(j), ii = im.col(i), ij = im.col(j);
            QVec real = sub(source.bracket(ri, rj), source.bracket(ii, ij));
            QVec imag = add(source.bracket(ri, ij), source.bracket(ii, rj));
            if (real != re * target.c[i][j] || imag != im * target.c[i][j]) return false;
        }
    return true;
}

// ---------------------------------------------------------------- helpers

namespace {

QVec scaled(QVec v, const Rational& s) {
    for (auto& x : v) x *= s;
    return v;
}

QVec plus(QVec a, const QVec& b) {
    for (size_t k = 0; k < a.size(); ++k) a[k] += b[k];
    return a;
}

QVec combo(const std::vector<Rational>& cs, const std::vector<QVec>& vs) {
    QVec out(vs.at(0).size(), Rational(0));
    for (size_t i = 0; i < cs.size(); ++i)
        if (cs[i] != 0) out = plus(out, scaled(vs[i], cs[i]));
    return out;
}

[[noreturn]] void unrecognized(const std::string& why) { throw UnrecognizedFamily(why); }

QMat checked_basis(const StructureConstants& sc, const StructureConstants& target, const std::vector<QVec>& basis,
                   const std::string& what) {
    QMat m = QMat::from_cols(basis);
    if (!verify_isomorphism(sc, target, m)) unrecognized("basis construction failed for " + what);
    return m;
}

// Residual of the target relations for a parametrised basis; solved under the
// assumption that it is affine in the parameters, then verified exactly.
std::optional<std::vector<QVec>> affine_fit(const StructureConstants& sc, const StructureConstants& target,
                                            const std::function<std::vector<QVec>(const QVec&)>& build, int nvars) {
    auto residual = [&](const QVec& t) {
        auto b = build(t);
        QVec r;
        for (int i = 0; i < target.dim; ++i)
            for (int j = i + 1; j < target.dim; ++j) {
                QVec lhs = sc.bracket(b[i], b[j]);
                QVec rhs = combo(target.c[i][j], b);
                for (size_t k = 0; k < lhs.size(); ++k) r.push_back(lhs[k] - rhs[k]);
            }
        return r;
    };
    QVec zero(nvars, Rational(0));
    QVec r0 = residual(zero);
    int rows = static_cast<int>(r0.size());
    QMat aug(rows, nvars + 1);
    for (int k = 0; k < nvars; ++k) {
        QVec e = zero;
        e[k] = 1;
        QVec rk = residual(e);
        for (int i = 0; i < rows; ++i) aug(i, k) = rk[i] - r0[i];
    }
    for (int i = 0; i < rows; ++i) aug(i, nvars) = -r0[i];
    auto piv = rref(aug);
    if (!piv.empty() && piv.back() == nvars) return std::nullopt;
    QVec t = zero;
    for (size_t r = 0; r < piv.size(); ++r) t[piv[r]] = aug(static_cast<int>(r), nvars);
    auto b = build(t);
    if (!verify_isomorphism(sc, target, QMat::from_cols(b))) return std::nullopt;
    return b;
}

// {v in within : op v = w v}
VecSpace eigen_within(const QMat& op, const Rational& w, const VecSpace& within) {
    const auto& wb = within.basis();
    int n = within.ambient();
    if (wb.empty()) return VecSpace(n);
    std::vector<QVec> imgs;
    for (auto& b : wb) {
        QVec im = op * b;
        for (int k = 0; k < n; ++k) im[k] -= w * b[k];
        imgs.push_back(im);
    }
    std::vector<QVec> out;
    for (auto& y : kernel(QMat::from_cols(imgs))) out.push_back(combo(y, wb));
    return VecSpace::span(n, out);
}

Rational eigen_ratio(const QVec& img, const QVec& v) {
    for (size_t k = 0; k < v.size(); ++k)
        if (v[k] != 0) return img[k] / v[k];
    return 0;
}

struct WeightSpace {
    std::vector<Rational> weight;  // value on each torus element
    VecSpace space;
};

// Simultaneous eigenspaces of commuting semisimple ad(t_i) on an invariant subspace.
std::vector<WeightSpace> joint_weights(const StructureConstants& sc, const std::vector<QVec>& torus,
                                       const VecSpace& on) {
    std::vector<QMat> ads;
    for (auto& t : torus) ads.push_back(sc.ad(t));
    std::vector<WeightSpace> best;
    for (int m = 1; m <= 40; ++m) {
        QVec z(sc.dim, Rational(0));
        Rational pw = 1;
        for (auto& t : torus) {
            z = plus(z, scaled(t, pw));
            pw *= m + 1;
        }
        QMat adz = sc.ad(z);
        auto roots = rational_roots(char_poly(restrict_map(adz, on)));
        std::vector<WeightSpace> ws;
        int total = 0;
        bool ok = true;
        for (auto& r : roots) {
            VecSpace e = eigen_within(adz, r.root, on);
            total += e.dim();
            WeightSpace w{{}, e};
            for (auto& ad : ads) {
                QVec v = e.basis().at(0);
                Rational lam = eigen_ratio(ad * v, v);
                for (auto& b : e.basis())
                    if (ad * b != scaled(b, lam)) ok = false;
                w.weight.push_back(lam);
            }
            ws.push_back(w);
        }
        if (!ok || total != on.dim()) continue;
        if (ws.size() > best.size()) best = ws;
        if (static_cast<int>(best.size()) == on.dim()) break;
    }
    if (best.empty()) unrecognized("torus does not act diagonalisably over Q");
    return best;
}

// p with w1(p) = v1 and w2(p) = v2, where w(p) = sum_k p_k w[k].
std::optional<std::vector<Rational>> solve2(const std::vector<Rational>& w1, const std::vector<Rational>& w2,
                                            const Rational& v1, const Rational& v2) {
    Rational d = w1[0] * w2[1] - w1[1] * w2[0];
    if (d == 0) return std::nullopt;
    return std::vector<Rational>{(v1 * w2[1] - v2 * w1[1]) / d, (w1[0] * v2 - w2[0] * v1) / d};
}

Rational scalar_of(const QMat& m1x1) { return m1x1(0, 0); }

bool independent(const std::vector<QVec>& vs) { return rank(QMat::from_cols(vs)) == static_cast<int>(vs.size()); }

// Elements h of the nilpotent subalgebra H (given by basis) with ad h semisimple.
std::vector<QVec> semisimple_elements(const StructureConstants& sc, const VecSpace& h) {
    std::vector<QVec> nil_parts;
    for (auto& b : h.basis()) {
        auto [s, nil] = jordan_decompose(sc.ad(b));
        QVec flat;
        for (int i = 0; i < nil.rows(); ++i)
            for (int j = 0; j < nil.cols(); ++j) flat.push_back(nil(i, j));
        nil_parts.push_back(flat);
    }
    std::vector<QVec> out;
    if (nil_parts.empty()) return out;
    for (auto& y : kernel(QMat::from_cols(nil_parts))) out.push_back(combo(y, h.basis()));
    return out;
}

DeGraafClass identify_dim3(const StructureConstants& sc, QMat* out) {
    VecSpace g = sc_full(sc);
    VecSpace d = sc_bracket_space(sc, g, g);
    auto finish = [&](DeGraafClass c, const std::vector<QVec>& b) {
        QMat m = checked_basis(sc, degraaf_sc(c), b, c.to_string());
        if (out) *out = m;
        return c;
    };
    if (d.dim() == 0) return finish({"L1", {}}, {sc.unit(0), sc.unit(1), sc.unit(2)});
    if (d.dim() == 2) {
        QVec x3 = complement_basis(g, d).at(0);
        QMat m = restrict_map(sc.ad(x3), d);
        Rational mu;
        if (m.is_scalar(&mu)) return finish({"L2", {}}, {d.basis()[0], d.basis()[1], scaled(x3, 1 / mu)});
        Rational tr = m.trace();
        Rational s;
        DeGraafClass cls;
        if (tr != 0) {
            s = 1 / tr;
            cls = {"L3", {-det(m * s)}};
        } else {
            Rational a0 = -det(m);
            Rational k = squarefree_kernel(a0);
            if (!rational_sqrt(k / a0, s)) unrecognized("square class reduction failed");
            cls = {"L4", {k}};
        }
        QVec x3s = scaled(x3, s);
        for (auto& v : {d.basis()[0], d.basis()[1], plus(d.basis()[0], d.basis()[1])}) {
            QVec x2 = sc.bracket(x3s, v);
            if (independent({v, x2})) return finish(cls, {v, x2, x3s});
        }
        unrecognized("no cyclic vector for the derived algebra");
    }
    QVec dv = d.basis()[0];
    VecSpace line = VecSpace::span(sc.dim, {dv});
    VecSpace cent = sc_centralizer(sc, line, g);
    if (cent.dim() == g.dim()) {
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                QVec br = sc.bracket(sc.unit(i), sc.unit(j));
                if (i != j && br != QVec(3, Rational(0))) return finish({"L4", {0}}, {sc.unit(j), br, sc.unit(i)});
            }
    }
    for (int i = 0; i < 3; ++i) {
        QVec br = sc.bracket(sc.unit(i), dv);
        if (br == QVec(3, Rational(0))) continue;
        Rational mu = line.coords(br)[0];
        QVec x3 = scaled(sc.unit(i), 1 / mu);
        QVec y = complement_basis(cent, line).at(0);
        Rational c = line.coords(sc.bracket(x3, y))[0];
        QVec x1 = plus(y, scaled(dv, 1 - c));
        return finish({"L3", {0}}, {x1, dv, x3});
    }
    unrecognized("three-dimensional algebra outside the L families");
}

DeGraafClass identify_dim4(const StructureConstants& sc, QMat* out) {
    VecSpace g = sc_full(sc);
    VecSpace nil = sc_nilradical(sc);
    auto finish = [&](DeGraafClass c, const std::vector<QVec>& b) {
        QMat m = checked_basis(sc, degraaf_sc(c), b, c.to_string());
        if (out) *out = m;
        return c;
    };
    auto fit = [&](DeGraafClass c, const std::function<std::vector<QVec>(const QVec&)>& build, int nvars) {
        auto b = affine_fit(sc, degraaf_sc(c), build, nvars);
        if (!b) unrecognized("could not realise " + c.to_string());
        return finish(c, *b);
    };
    if (nil.dim() == 4) {
        if (sc_lower_central_dims(sc) != std::vector<int>{4, 2, 1, 0}) unrecognized("nilpotent but not filiform");
        VecSpace g1 = sc_bracket_space(sc, g, g);
        VecSpace c1 = sc_centralizer(sc, g1, g);
        QVec x1 = complement_basis(c1, g1).at(0);
        std::vector<QVec> cands;
        for (int i = 0; i < 4; ++i) cands.push_back(sc.unit(i));
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j) cands.push_back(plus(sc.unit(i), sc.unit(j)));
        for (auto& x4 : cands) {
            if (c1.contains(x4)) continue;
            QVec x2 = sc.bracket(x4, x1), x3 = sc.bracket(x4, x2);
            std::vector<QVec> b{x1, x2, x3, x4};
            if (independent(b) && verify_isomorphism(sc, degraaf_sc({"M7", {0, 0}}), QMat::from_cols(b)))
                return finish({"M7", {0, 0}}, b);
        }
        unrecognized("filiform basis not found");
    }
    if (nil.dim() == 3) {
        QVec x4 = complement_basis(g, nil).at(0);
        QMat ad4 = sc.ad(x4);
        VecSpace nn = sc_bracket_space(sc, nil, nil);
        const auto& nb = nil.basis();
        if (nn.dim() == 0) {
            QMat dm = restrict_map(ad4, nil);
            Rational mu;
            if (dm.is_scalar(&mu)) return finish({"M2", {}}, {nb[0], nb[1], nb[2], scaled(x4, 1 / mu)});
            Rational tr = dm.trace(), s;
            if (tr != 0) {
                s = 1 / tr;
            } else {
                Poly cp = char_poly(dm);
                Rational b0 = -cp.coeff(1), a0 = -cp.coeff(0);
                if (a0 != 0 && b0 != 0) s = b0 / a0;
                else if (a0 == 0) {
                    if (!rational_sqrt(squarefree_kernel(b0) / b0, s)) unrecognized("square class reduction failed");
                } else if (!rational_cbrt(cubefree_kernel(a0) / a0, s)) {
                    unrecognized("cube class reduction failed");
                }
            }
            QMat ds = dm * s;
            Poly cp = char_poly(ds);
            DeGraafClass cls{tr != 0 ? "M6" : "M7", {-cp.coeff(0), -cp.coeff(1)}};
            std::vector<QVec> cands;
            for (int i = 0; i < 3; ++i) {
                QVec e(3, Rational(0));
                e[i] = 1;
                cands.push_back(e);
            }
            cands.push_back({1, 1, 0});
            cands.push_back({1, 0, 1});
            cands.push_back({0, 1, 1});
            cands.push_back({1, 1, 1});
            cands.push_back({1, 2, 4});
            for (auto& v : cands) {
                QVec dv = ds * v, ddv = ds * dv;
                if (!independent({v, dv, ddv})) continue;
                return finish(cls, {combo(v, nb), combo(dv, nb), combo(ddv, nb), scaled(x4, s)});
            }
            unrecognized("derivation of the abelian nilradical is not cyclic");
        }
        if (nn.dim() != 1) unrecognized("unexpected nilradical");
        std::vector<QVec> reps;
        QMat cbar = induced_map(ad4, nil, nn, &reps);
        Rational mu;
        if (cbar.is_scalar(&mu)) {
            QVec x1 = reps[0], x3 = reps[1], x2 = sc.bracket(x3, x1);
            QVec x4s = scaled(x4, 1 / mu);
            return fit({"M12", {}}, [&](const QVec& t) { return std::vector<QVec>{x1, x2, x3, plus(x4s, combo(t, nb))}; },
                       3);
        }
        Rational tr = cbar.trace(), s;
        DeGraafClass cls;
        if (tr != 0) {
            s = 1 / tr;
            cls = {"M13", {-det(cbar * s)}};
        } else {
            Rational a0 = -det(cbar);
            Rational k = squarefree_kernel(a0);
            if (!rational_sqrt(k / a0, s)) unrecognized("square class reduction failed");
            cls = {"M14", {k}};
        }
        QMat cs = cbar * s;
        for (QVec c : {QVec{1, 0}, QVec{0, 1}, QVec{1, 1}}) {
            if (!independent({c, cs * c})) continue;
            QVec x3 = combo(c, reps);
            QVec x4s = scaled(x4, s);
            auto build = [&](const QVec& t) {
                QVec y = plus(x4s, combo(t, nb));
                QVec x1 = sc.bracket(y, x3);
                return std::vector<QVec>{x1, sc.bracket(x3, x1), x3, y};
            };
            return fit(cls, build, 3);
        }
        unrecognized("no cyclic vector modulo the centre");
    }
    if (nil.dim() == 2) {
        auto comp = complement_basis(g, nil);
        auto ws = joint_weights(sc, comp, nil);
        if (ws.size() != 2) unrecognized("complement does not split the nilradical");
        QVec u = ws[0].space.basis()[0], v = ws[1].space.basis()[0];
        auto p1 = solve2(ws[0].weight, ws[1].weight, 1, 0);
        auto p3 = solve2(ws[0].weight, ws[1].weight, 0, 1);
        if (!p1 || !p3) unrecognized("dependent weights");
        QVec x1 = combo(*p1, comp), x3 = combo(*p3, comp);
        auto build = [&](const QVec& t) {
            return std::vector<QVec>{plus(x1, plus(scaled(u, t[0]), scaled(v, t[1]))), u,
                                     plus(x3, plus(scaled(u, t[2]), scaled(v, t[3]))), v};
        };
        return fit({"M8", {}}, build, 4);
    }
    unrecognized("four-dimensional algebra outside the families occurring in sp(4)");
}

}  // namespace

DeGraafClass identify_degraaf(const StructureConstants& sc, QMat* basis) {
    int n = sc.dim;
    if (n < 1 || n > 4) throw UnsupportedDimension("de Graaf identification covers dimensions 1 to 4");
    if (sc_derived_dims(sc).back() != 0) unrecognized("algebra is not solvable");
    if (n == 1) {
        if (basis) *basis = QMat::identity(1);
        return {"J", {}};
    }
    if (n == 2) {
        if (sc.is_abelian()) {
            if (basis) *basis = QMat::identity(2);
            return {"K1", {}};
        }
        VecSpace g = sc_full(sc);
        VecSpace d = sc_bracket_space(sc, g, g);
        QVec dv = d.basis()[0];
        QVec b = complement_basis(g, d).at(0);
        Rational c = d.coords(sc.bracket(b, dv))[0];
        DeGraafClass cls{"K2", {}};
        QMat m = checked_basis(sc, degraaf_sc(cls), {scaled(b, 1 / c), dv}, "K2");
        if (basis) *basis = m;
        return cls;
    }
    if (n == 3) return identify_dim3(sc, basis);
    return identify_dim4(sc, basis);
}

SWClass identify_sw_high(const StructureConstants& sc, QMat* basis) {
    int n = sc.dim;
    if (n < 5 || n > 6) throw UnsupportedDimension("high-dimensional identification covers dimensions 5 and 6");
    if (sc_derived_dims(sc).back() != 0) unrecognized("algebra is not solvable");
    VecSpace g = sc_full(sc);
    VecSpace nil = sc_nilradical(sc);
    int k = n - nil.dim();
    VecSpace h = sc_cartan_subalgebra(sc);
    VecSpace hss = VecSpace::span(n, semisimple_elements(sc, h));
    std::vector<QVec> torus = complement_basis(hss, hss.intersect(nil));
    if (static_cast<int>(torus.size()) != k) unrecognized("no torus complementary to the nilradical");
    auto finish = [&](const SWClass& c, const std::vector<QVec>& b) {
        QMat m = checked_basis(sc, sw_sc(c), b, c.to_string());
        if (basis) *basis = m;
        return c;
    };
    VecSpace nn = sc_bracket_space(sc, nil, nil);
    if (nil.dim() == 4) {
        VecSpace n2 = sc_bracket_space(sc, nil, nn);
        if (nn.dim() != 2 || n2.dim() != 1 || sc_bracket_space(sc, nil, n2).dim() != 0)
            unrecognized("nilradical is not n_{4,1}");
        VecSpace cen = sc_centralizer(sc, nn, nil);
        std::vector<Rational> mu4, mu3;
        for (auto& t : torus) {
            mu4.push_back(scalar_of(induced_map(sc.ad(t), nil, cen)));
            mu3.push_back(scalar_of(induced_map(sc.ad(t), cen, nn)));
        }
        std::vector<QVec> elems;
        std::vector<Rational> w4, w3;
        SWClass cls;
        if (k == 1) {
            if (mu4[0] != 0) {
                Rational a = mu3[0] / mu4[0];
                elems = {scaled(torus[0], 1 / mu4[0])};
                w4 = {1};
                w3 = {a};
                if (a == 0) cls = {"s_{5,36}", {}, ""};
                else if (a == -2) cls = {"s_{5,33}", {}, ""};
                else cls = {"s_{5,35}", {a}, ""};
            } else if (mu3[0] != 0) {
                elems = {scaled(torus[0], 1 / mu3[0])};
                w4 = {0};
                w3 = {1};
                cls = {"s_{5,37}", {}, ""};
            } else {
                unrecognized("torus acts trivially on the nilradical quotients");
            }
        } else {
            // p with mu4(p) = v4 and mu3(p) = v3.
            auto p5 = solve2(mu4, mu3, 1, 0);
            auto p6 = solve2(mu4, mu3, 0, 1);
            if (!p5 || !p6) unrecognized("dependent torus weights");
            elems = {combo(*p5, torus), combo(*p6, torus)};
            w4 = {1, 0};
            w3 = {0, 1};
            cls = {"s_{6,242}", {}, ""};
        }
        VecSpace e4s = nil, e3s = cen;
        for (size_t i = 0; i < elems.size(); ++i) {
            e4s = eigen_within(sc.ad(elems[i]), w4[i], e4s);
            e3s = eigen_within(sc.ad(elems[i]), w3[i], e3s);
        }
        auto c4 = complement_basis(e4s, e4s.intersect(cen));
        auto c3 = complement_basis(e3s, e3s.intersect(nn));
        if (c4.empty() || c3.empty()) unrecognized("weight vectors for n_{4,1} not found");
        QVec e4 = c4[0], e3 = c3[0], e2 = sc.bracket(e3, e4), e1 = sc.bracket(e2, e4);
        std::vector<QVec> b{e1, e2, e3, e4};
        for (auto& e : elems) b.push_back(e);
        return finish(cls, b);
    }
    if (nil.dim() == 3 && k == 2) {
        auto ws = joint_weights(sc, torus, nil);
        // Weight functionals as 2-vectors over the torus basis.
        auto dual = [&](const std::vector<Rational>& wa, const std::vector<Rational>& wb, const Rational& va,
                        const Rational& vb) {
            // p with wa(p) = va, wb(p) = vb where w(p) = sum p_k w_k.
            auto p = solve2(wa, wb, va, vb);
            if (!p) unrecognized("dependent weights");
            return combo(*p, torus);
        };
        if (nn.dim() == 0) {
            if (ws.size() != 3) unrecognized("abelian nilradical without distinct weights");
            std::optional<std::pair<Rational, Rational>> best;
            std::array<int, 3> best_perm{};
            std::array<int, 3> perm{0, 1, 2};
            do {
                auto& wi = ws[perm[0]].weight;
                auto& wj = ws[perm[1]].weight;
                auto& wl = ws[perm[2]].weight;
                auto ab = solve2({wi[0], wj[0]}, {wi[1], wj[1]}, wl[0], wl[1]);
                if (!ab) continue;
                Rational a = (*ab)[0], b = (*ab)[1];
                if (b == 0 || abs_q(b) > abs_q(a) || abs_q(a) > 1) continue;
                if (!best || std::make_pair(a, b) > *best) {
                    best = std::make_pair(a, b);
                    best_perm = perm;
                }
            } while (std::next_permutation(perm.begin(), perm.end()));
            if (!best) unrecognized("weights violate the s_{5,41} conditions");
            auto& wi = ws[best_perm[0]].weight;
            auto& wj = ws[best_perm[1]].weight;
            std::vector<QVec> b{ws[best_perm[0]].space.basis()[0], ws[best_perm[1]].space.basis()[0],
                                ws[best_perm[2]].space.basis()[0], dual(wi, wj, 1, 0), dual(wi, wj, 0, 1)};
            return finish({"s_{5,41}", {best->first, best->second}, ""}, b);
        }
        if (nn.dim() == 1) {
            std::vector<int> outer;
            for (int i = 0; i < static_cast<int>(ws.size()); ++i)
                if (!nn.contains(ws[i].space.basis()[0])) outer.push_back(i);
            if (outer.size() != 2 || ws[outer[0]].space.dim() != 1 || ws[outer[1]].space.dim() != 1)
                unrecognized("Heisenberg nilradical without split weights");
            for (int swap = 0; swap < 2; ++swap) {
                const auto& a = ws[outer[swap]];
                const auto& c = ws[outer[1 - swap]];
                QVec e2 = a.space.basis()[0], e3 = c.space.basis()[0];
                std::vector<QVec> b{sc.bracket(e2, e3), e2, e3, dual(a.weight, c.weight, 1, 0),
                                    dual(a.weight, c.weight, 1, -1)};
                if (verify_isomorphism(sc, sw_sc({"s_{5,44}", {}, ""}), QMat::from_cols(b)))
                    return finish({"s_{5,44}", {}, ""}, b);
            }
            unrecognized("s_{5,44} basis not found");
        }
    }
    unrecognized("algebra outside the five- and six-dimensional families occurring in sp(4)");
}

Identification identify(const StructureConstants& sc) {
    Identification id;
    if (sc.dim <= 4) {
        id.degraaf = identify_degraaf(sc);
        id.sw = degraaf_to_sw(*id.degraaf);
    } else {
        id.sw = identify_sw_high(sc);
    }
    return id;
}

// ---------------------------------------------------------------- SW labels

Rational normalize_sw_param(const Rational& a, const std::string& family) {
    if (a == 0) throw ZeroParameter("SW parameter must be nonzero");
    if ((family == "s_{3,1}" || family == "s_{4,8}") && abs_q(a) > 1) return 1 / a;
    return a;
}

std::optional<std::pair<Rational, Rational>> sqrt_branch(const Rational& alpha) {
    Rational r;
    if (!rational_sqrt(1 + 4 * alpha, r)) return std::nullopt;
    Rational lp = (1 + r) / 2, lm = (1 - r) / 2;
    if (lm == 0 || lp == 0) return std::nullopt;
    if (abs_q(lp / lm) > 1) std::swap(lp, lm);
    return std::make_pair(lp, lm);
}

namespace {

std::string lambda_note(const Rational& alpha) {
    return "A=(1+2a+sqrt(1+4a))/(-2a), a=" + to_string(alpha);
}

// SW label of the algebra whose torus element acts on a 2-plane with
// characteristic polynomial x^2 - x - alpha (alpha != 0, -1/4).
SWClass lambda_class(const std::string& name, const Rational& alpha) {
    auto br = sqrt_branch(alpha);
    if (!br) return {name, {}, lambda_note(alpha)};
    return {name, {br->first / br->second}, ""};
}

// Valid (A, B) for s_{4,3} / s_{5,41}-type normalisation from three weights,
// choosing the largest admissible pair.
std::optional<std::tuple<int, int, int>> s43_order(const std::vector<Rational>& r) {
    std::optional<std::tuple<int, int, int>> best;
    std::pair<Rational, Rational> bestab;
    std::array<int, 3> p{0, 1, 2};
    do {
        if (r[p[0]] == 0) continue;
        Rational a = r[p[1]] / r[p[0]], b = r[p[2]] / r[p[0]];
        if (b == 0 || abs_q(b) > abs_q(a) || abs_q(a) > 1) continue;
        if (a == -1 && b == -1) continue;
        if (!best || std::make_pair(a, b) > bestab) {
            best = std::make_tuple(p[0], p[1], p[2]);
            bestab = {a, b};
        }
    } while (std::next_permutation(p.begin(), p.end()));
    return best;
}

}  // namespace

SWClass degraaf_to_sw(const DeGraafClass& c) {
    const auto& f = c.family;
    auto p = [&](size_t i) { return c.params.at(i); };
    if (f == "J") return {"n_{1,1}", {}, ""};
    if (f == "K1") return {"2n_{1,1}", {}, ""};
    if (f == "K2") return {"s_{2,1}", {}, ""};
    if (f == "L1") return {"3n_{1,1}", {}, ""};
    if (f == "L2") return {"s_{3,1}", {1}, ""};
    if (f == "L3") {
        if (p(0) == 0) return {"n_{1,1}+s_{2,1}", {}, ""};
        if (p(0) == Rational(-1, 4)) return {"s_{3,2}", {}, ""};
        return lambda_class("s_{3,1}", p(0));
    }
    if (f == "L4") {
        if (p(0) == 0) return {"n_{3,1}", {}, ""};
        return {"s_{3,1}", {-1}, ""};
    }
    if (f == "M2") return {"s_{4,3}", {1, 1}, ""};
    if (f == "M6") {
        Rational a = p(0), b = p(1);
        if (a == 0) {
            if (b == 0) throw OutOfCatalog("M6(0,0) does not occur");
            if (b == Rational(-1, 4)) return {"n_{1,1}+s_{3,2}", {}, ""};
            return lambda_class("n_{1,1}+s_{3,1}", b);
        }
        Poly cp({-a, -b, Rational(-1), Rational(1)});
        auto roots = rational_roots(cp);
        int total = 0;
        for (auto& r : roots) total += r.mult;
        if (total != 3) return {"s_{4,3}", {}, "eigenvalues: roots of " + cp.to_string()};
        if (roots.size() == 1) return {"s_{4,2}", {}, ""};
        if (roots.size() == 2) {
            const auto& dbl = roots[0].mult == 2 ? roots[0] : roots[1];
            const auto& sgl = roots[0].mult == 2 ? roots[1] : roots[0];
            return {"s_{4,4}", {sgl.root / dbl.root}, ""};
        }
        std::vector<Rational> r{roots[0].root, roots[1].root, roots[2].root};
        auto ord = s43_order(r);
        if (!ord) throw OutOfCatalog("no admissible s_{4,3} normalisation");
        auto [i, j, k] = *ord;
        return {"s_{4,3}", {r[j] / r[i], r[k] / r[i]}, ""};
    }
    if (f == "M7") {
        if (p(0) == 0 && p(1) == 0) return {"n_{4,1}", {}, ""};
        if (p(0) == 0) return {"n_{1,1}+s_{3,1}", {-1}, ""};
        throw OutOfCatalog(c.to_string() + " does not occur in sp(4)");
    }
    if (f == "M8") return {"s_{4,12}", {}, ""};
    if (f == "M12") return {"s_{4,8}", {1}, ""};
    if (f == "M13") {
        if (p(0) == 0) return {"s_{4,11}", {}, ""};
        if (p(0) == Rational(-1, 4)) return {"s_{4,10}", {}, ""};
        return lambda_class("s_{4,8}", p(0));
    }
    if (f == "M14") {
        if (p(0) == 0) throw OutOfCatalog("M14(0) is nilpotent");
        return {"s_{4,6}", {}, ""};
    }
    throw OutOfCatalog("no SW label for " + c.to_string());
}

// ---------------------------------------------------------------- family maps

namespace {

// Columns given as coefficient rows over x_1..x_n.
QMat map_cols(const std::vector<QVec>& cols) { return QMat::from_cols(cols); }

std::optional<FamilyMap> constructed_m6(const DeGraafClass& c) {
    StructureConstants sc = degraaf_sc(c);
    SWClass target = degraaf_to_sw(c);
    if (!target.note.empty() || c.params[0] == 0) return std::nullopt;
    QVec x4 = sc.unit(3);
    VecSpace nil = VecSpace::span(4, {sc.unit(0), sc.unit(1), sc.unit(2)});
    QMat ad4 = sc.ad(x4);
    auto roots = rational_roots(char_poly(restrict_map(ad4, nil)));
    std::vector<QVec> cols;
    if (target.name == "s_{4,2}") {
        Rational mu = roots[0].root;
        QMat m = ad4 * (1 / mu) - QMat::identity(4);
        for (int i = 0; i < 3; ++i) {
            QVec w = sc.unit(i), mw = m * w, mmw = m * mw;
            if (mmw == QVec(4, Rational(0))) continue;
            cols = {mmw, mw, w, scaled(x4, 1 / mu)};
            break;
        }
    } else if (target.name == "s_{4,4}") {
        const auto& dbl = roots[0].mult == 2 ? roots[0] : roots[1];
        const auto& sgl = roots[0].mult == 2 ? roots[1] : roots[0];
        QMat m = ad4 * (1 / dbl.root) - QMat::identity(4);
        VecSpace e3 = eigen_within(ad4, sgl.root, nil);
        for (int i = 0; i < 3; ++i) {
            QVec w = sc.unit(i), mw = m * w;
            if (mw == QVec(4, Rational(0)) || e3.contains(w)) continue;
            if (m * mw != QVec(4, Rational(0))) continue;
            cols = {mw, w, e3.basis()[0], scaled(x4, 1 / dbl.root)};
            break;
        }
    } else if (target.name == "s_{4,3}") {
        std::vector<Rational> r{roots[0].root, roots[1].root, roots[2].root};
        auto [i, j, k] = *s43_order(r);
        cols = {eigen_within(ad4, r[i], nil).basis()[0], eigen_within(ad4, r[j], nil).basis()[0],
                eigen_within(ad4, r[k], nil).basis()[0], scaled(x4, 1 / r[i])};
    }
    if (cols.empty()) return std::nullopt;
    return FamilyMap{target, map_cols(cols), std::nullopt, "constructed", "eigenvector basis of ad(x4)"};
}

}  // namespace

std::optional<FamilyMap> paper_family_map(const DeGraafClass& c) {
    const auto& f = c.family;
    SWClass target;
    try {
        target = degraaf_to_sw(c);
    } catch (const OutOfCatalog&) {
        return std::nullopt;
    }
    auto mk = [&](std::vector<QVec> cols) { return FamilyMap{target, map_cols(cols), std::nullopt, "paper", ""}; };
    Rational h(1, 2), q(1, 4);
    if (f == "K2") return mk({{0, 1}, {1, 0}});
    if (f == "L2") return mk({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    if (f == "L3") {
        Rational al = c.params[0];
        if (al == 0) return mk({{1, -1, 0}, {0, 1, 0}, {0, 0, 1}});
        if (al == -q) return mk({{1, -2, 0}, {1, -4, 0}, {0, 0, 2}});
        auto br = sqrt_branch(al);
        if (!br) return std::nullopt;
        auto [lp, lm] = *br;
        return mk({{al, lm, 0}, {al, lp, 0}, {0, 0, -lp / al}});
    }
    if (f == "L4") {
        if (c.params[0] == 0) return mk({{0, 1, 0}, {0, 0, 1}, {1, 0, 0}});
        if (c.params[0] == 1) return mk({{1, 1, 0}, {1, -1, 0}, {0, 0, 1}});
        return std::nullopt;
    }
    if (f == "M2") return mk({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}});
    if (f == "M6") {
        Rational a = c.params[0], b = c.params[1];
        if (a != 0) return std::nullopt;
        if (b == -q) return mk({{1, -4, 4, 0}, {0, 2, -4, 0}, {0, 0, -4, 0}, {0, 0, 0, 2}});
        auto br = sqrt_branch(b);
        if (!br) return std::nullopt;
        auto [lp, lm] = *br;
        return mk({{b, 1, -1, 0}, {0, b, lm, 0}, {0, b, lp, 0}, {0, 0, 0, -lp / b}});
    }
    if (f == "M7") {
        if (c.params[0] == 0 && c.params[1] == 0) return mk({{0, 0, 1, 0}, {0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, -1}});
        if (c.params[0] == 0 && c.params[1] == 1) return mk({{1, 0, -1, 0}, {0, 1, 1, 0}, {0, 1, -1, 0}, {0, 0, 0, 1}});
        return std::nullopt;
    }
    if (f == "M8") {
        QMat re = map_cols({{0, h, 0, h}, {0, 0, 0, 0}, {1, 0, 1, 0}, {0, 0, 0, 0}});
        QMat im = map_cols({{0, 0, 0, 0}, {0, -h, 0, h}, {0, 0, 0, 0}, {1, 0, -1, 0}});
        return FamilyMap{target, re, im, "paper", "complex change of basis over Q(i)"};
    }
    if (f == "M12") return mk({{0, 1, 0, 0}, {0, 0, 1, 0}, {1, 0, 0, 0}, {0, 0, 0, 1}});
    if (f == "M13") {
        Rational al = c.params[0];
        if (al == 0) return mk({{0, 1, 0, 0}, {1, 0, 0, 0}, {1, 0, -1, 0}, {0, 0, 0, 1}});
        if (al == -q) return mk({{0, -2, 0, 0}, {2, 0, -1, 0}, {0, 0, 1, 0}, {0, 0, 0, 2}});
        auto br = sqrt_branch(al);
        if (!br) return std::nullopt;
        auto [lp, lm] = *br;
        Rational lam = lp / lm, root = lp - lm;
        return mk({{0, root, 0, 0}, {lm, 0, al, 0}, {lp, 0, al, 0}, {0, 0, 0, 1 + lam}});
    }
    if (f == "M14" && c.params[0] == 1) return mk({{2, 0, 0, 0}, {1, 0, 1, 0}, {1, 0, -1, 0}, {0, 0, 0, 1}});
    return std::nullopt;
}

bool check_family_map(const DeGraafClass& c, const FamilyMap& m) {
    StructureConstants src = degraaf_sc(c), tgt = sw_sc(m.target);
    if (m.im) return verify_isomorphism_gaussian(src, tgt, m.re, *m.im);
    return verify_isomorphism(src, tgt, m.re);
}

std::optional<FamilyMap> verified_family_map(const DeGraafClass& c) {
    auto paper = paper_family_map(c);
    if (paper && check_family_map(c, *paper)) return paper;
    std::optional<FamilyMap> fixed;
    const auto& f = c.family;
    if (f == "M14" && c.params[0] == 1) {
        // [e2, e3] = [x1 + x3, x1 - x3] = 2 x2, so e1 must be 2 x2.
        fixed = FamilyMap{paper->target, map_cols({{0, 2, 0, 0}, {1, 0, 1, 0}, {1, 0, -1, 0}, {0, 0, 0, 1}}),
                          std::nullopt, "corrected", "printed map sends e1 to 2x1; bracket forces 2x2"};
    } else if (f == "M13" && paper) {
        // [e2, e3] = alpha (l+ - l-) x2, so e1 carries the factor alpha.
        Rational al = c.params[0];
        QMat re = paper->re;
        for (int i = 0; i < 4; ++i) re(i, 0) *= al;
        fixed = FamilyMap{paper->target, re, std::nullopt, "corrected",
                          "printed map sends e1 to sqrt(1+4a) x2; bracket forces a*sqrt(1+4a) x2"};
    } else if (f == "M6") {
        fixed = constructed_m6(c);
    }
    if (fixed && check_family_map(c, *fixed)) return fixed;
    return std::nullopt;
}

}  // namespace sp4cert
