#include "sp4cert/jordan.hpp"

#include <algorithm>
#include <tuple>

#include "sp4cert/errors.hpp"
#include "sp4cert/sp4.hpp"

namespace sp4cert {

std::pair<QMat, QMat> jordan_decompose(const QMat& x) {
    Poly g = squarefree_part(char_poly(x));
    Poly dg = g.derivative();
    QMat s = x;
    while (true) {
        QMat gs = eval_poly(g, s);
        if (gs.is_zero()) break;
        s = s - gs * inverse(eval_poly(dg, s));
    }
    return {s, x - s};
}

JordanDecomposition jordan_decompose(const Mat4& x) {
    auto [s, nil] = jordan_decompose(to_qmat(x));
    return {to_mat4(s), to_mat4(nil)};
}

bool is_nilpotent_mat(const QMat& x) {
    QMat p = x;
    for (int i = 1; i < x.rows(); ++i) p = p * x;
    return p.is_zero();
}

bool is_nilpotent_mat(const Mat4& x) { return mat_pow(x, 4).is_zero(); }

bool is_semisimple(const Mat4& x) { return jordan_decompose(x).nilpotent.is_zero(); }

std::vector<JordanBlock> jordan_type(const QMat& x) {
    int n = x.rows();
    auto roots = rational_roots(char_poly(x));
    int total = 0;
    for (auto& r : roots) total += r.mult;
    if (total != n) throw IrrationalSpectrum("characteristic polynomial does not split over Q");
    std::vector<JordanBlock> out;
    for (auto& r : roots) {
        QMat shifted = x - QMat::identity(n) * r.root;
        // k[j] = dim ker (x - l)^j, j = 0..mult+1
        std::vector<int> k{0};
        QMat p = QMat::identity(n);
        for (int j = 1; j <= r.mult + 1; ++j) {
            p = p * shifted;
            k.push_back(n - rank(p));
        }
        for (int j = r.mult; j >= 1; --j) {
            int at_least_j = k[j] - k[j - 1];
            int at_least_j1 = k[j + 1] - k[j];
            for (int c = 0; c < at_least_j - at_least_j1; ++c) out.push_back({r.root, j});
        }
    }
    return out;
}

std::vector<JordanBlock> jordan_type(const Mat4& x) { return jordan_type(to_qmat(x)); }

std::string to_string(const std::vector<JordanBlock>& blocks) {
    std::string s = "{";
    for (size_t i = 0; i < blocks.size(); ++i) {
        if (i) s += ", ";
        s += "(" + to_string(blocks[i].eigenvalue) + "," + std::to_string(blocks[i].size) + ")";
    }
    return s + "}";
}

std::string OrbitLabel::to_string() const {
    std::string s = "table " + std::to_string(table) + ": " + row;
    if (a || b) {
        s += " [";
        if (a) s += "a=" + sp4cert::to_string(*a);
        if (a && b) s += ", ";
        if (b) s += "b=" + sp4cert::to_string(*b);
        s += "]";
    }
    return s;
}

namespace {

auto order_key(const Rational& q) {
    Integer nd = abs(q.get_num() * q.get_den());
    return std::make_tuple(nd, q < 0, abs_q(q));
}

}  // namespace

std::pair<Rational, Rational> weyl_canonical(const Rational& a, const Rational& b) {
    auto orbit = weyl_orbit(a, b);
    auto best = orbit.front();
    for (auto& p : orbit)
        if (std::make_pair(order_key(p.first), order_key(p.second)) <
            std::make_pair(order_key(best.first), order_key(best.second)))
            best = p;
    return best;
}

OrbitLabel classify_element(const Mat4& x) {
    if (!in_sp4(x)) throw NotInSp4("element is not in sp(4)");
    auto blocks = jordan_type(x);
    auto jd = jordan_decompose(x);
    // Positive eigenvalues of the semisimple part, with multiplicity.
    std::vector<Rational> pos;
    int zeros = 0;
    for (auto& blk : blocks) {
        if (blk.eigenvalue > 0)
            for (int i = 0; i < blk.size; ++i) pos.push_back(blk.eigenvalue);
        if (blk.eigenvalue == 0) zeros += blk.size;
    }
    std::sort(pos.begin(), pos.end());
    OrbitLabel lab;
    if (jd.nilpotent.is_zero()) {
        lab.table = 1;
        if (zeros == 4) {
            lab.row = "T_{0,0}";
        } else if (zeros == 2) {
            lab.row = "T_{a,0}";
            lab.a = pos.at(0);
        } else if (pos.size() == 2 && pos[0] == pos[1]) {
            lab.row = "T_{a,a}";
            lab.a = pos[0];
        } else {
            lab.row = "T_{a,b}";
            auto c = weyl_canonical(pos.at(0), pos.at(1));
            lab.a = c.first;
            lab.b = c.second;
        }
        return lab;
    }
    lab.table = 2;
    if (jd.semisimple.is_zero()) {
        int maxblk = 0, count2 = 0;
        for (auto& blk : blocks) {
            maxblk = std::max(maxblk, blk.size);
            if (blk.size == 2) ++count2;
        }
        if (maxblk == 4) lab.row = "X_alpha+X_beta";
        else if (count2 == 2) lab.row = "X_beta";
        else if (maxblk == 2) lab.row = "X_alpha";
        else throw UnrecognizedFamily("nilpotent element with Jordan type " + to_string(blocks));
        return lab;
    }
    if (zeros == 2) {
        lab.row = "T_{a,0}+X_alpha";
        lab.a = pos.at(0);
    } else if (pos.size() == 2 && pos[0] == pos[1]) {
        lab.row = "T_{a,a}+X_beta";
        lab.a = pos[0];
    } else {
        throw UnrecognizedFamily("mixed element with Jordan type " + to_string(blocks));
    }
    return lab;
}

namespace {

// Matrix entry carrying the X_r coefficient of an element of b.
std::pair<int, int> root_entry(Root r) {
    switch (r) {
        case Root::Beta: return {0, 1};
        case Root::Alpha: return {1, 3};
        case Root::AlphaBeta: return {0, 3};
        case Root::Alpha2Beta: return {0, 2};
    }
    return {0, 0};
}

}  // namespace

CartanReduction conjugate_ss_into_cartan(const Mat4& x) {
    if (!in_borel(x)) throw NotInBorel("element is not in the Borel subalgebra");
    Rational a = x(0, 0), b = x(1, 1);
    Mat4 g = Mat4::identity();
    Mat4 cur = x;
    for (Root r : {Root::Beta, Root::Alpha, Root::AlphaBeta, Root::Alpha2Beta}) {
        auto [i, j] = root_entry(r);
        Rational c = cur(i, j);
        Rational gv = root_value(r, a, b);
        if (c == 0 || gv == 0) continue;
        Mat4 s = shear(r, c / gv);
        cur = conjugate(s, cur);
        g = s * g;
    }
    if (cur != T(a, b)) throw NotSemisimple("element of b is not semisimple");
    return {g, a, b};
}

}  // namespace sp4cert
