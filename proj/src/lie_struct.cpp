#include "sp4cert/lie_struct.hpp"

#include "sp4cert/errors.hpp"
#include "sp4cert/sp4.hpp"

namespace sp4cert {

// ---------------------------------------------------------------- constants

StructureConstants StructureConstants::zero(int dim) {
    StructureConstants sc;
    sc.dim = dim;
    sc.c.assign(dim, std::vector<QVec>(dim, QVec(dim, Rational(0))));
    return sc;
}

void StructureConstants::set(int i, int j, const QVec& v) {
    c[i][j] = v;
    QVec neg = v;
    for (auto& x : neg) x = -x;
    c[j][i] = neg;
}

void StructureConstants::rel(int i, int j, std::initializer_list<std::pair<int, Rational>> terms) {
    QVec v(dim, Rational(0));
    for (auto& [k, coef] : terms) v[k - 1] += coef;
    set(i - 1, j - 1, v);
}

QVec StructureConstants::unit(int i) const {
    QVec v(dim, Rational(0));
    v[i] = 1;
    return v;
}

QVec StructureConstants::bracket(const QVec& u, const QVec& v) const {
    QVec out(dim, Rational(0));
    for (int i = 0; i < dim; ++i) {
        if (u[i] == 0) continue;
        for (int j = 0; j < dim; ++j) {
            if (v[j] == 0) continue;
            Rational f = u[i] * v[j];
            for (int k = 0; k < dim; ++k)
                if (c[i][j][k] != 0) out[k] += f * c[i][j][k];
        }
    }
    return out;
}

QMat StructureConstants::ad(const QVec& u) const {
    QMat m(dim, dim);
    for (int j = 0; j < dim; ++j) {
        QVec col = bracket(u, unit(j));
        for (int k = 0; k < dim; ++k) m(k, j) = col[k];
    }
    return m;
}

bool StructureConstants::is_antisymmetric() const {
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
            for (int k = 0; k < dim; ++k)
                if (c[i][j][k] != -c[j][i][k]) return false;
    return true;
}

bool StructureConstants::satisfies_jacobi() const {
    for (int i = 0; i < dim; ++i)
        for (int j = i + 1; j < dim; ++j)
            for (int k = j + 1; k < dim; ++k) {
                QVec a = bracket(unit(i), c[j][k]);
                QVec b = bracket(unit(j), c[k][i]);
                QVec d = bracket(unit(k), c[i][j]);
                for (int l = 0; l < dim; ++l)
                    if (a[l] + b[l] + d[l] != 0) return false;
            }
    return true;
}

bool StructureConstants::is_abelian() const {
    for (auto& row : c)
        for (auto& v : row)
            for (auto& x : v)
                if (x != 0) return false;
    return true;
}

StructureConstants StructureConstants::change_basis(const QMat& p) const {
    if (p.rows() != dim || p.cols() != dim) throw DimensionMismatch("change of basis has the wrong size");
    QMat pinv = inverse(p);
    StructureConstants out = zero(dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) out.c[i][j] = pinv * bracket(p.col(i), p.col(j));
    return out;
}

// ---------------------------------------------------------------- matrices

bool is_closed(const Subspace& s) {
    auto b = s.basis();
    for (size_t i = 0; i < b.size(); ++i)
        for (size_t j = i + 1; j < b.size(); ++j)
            if (!s.contains(bracket(b[i], b[j]))) return false;
    return true;
}

Subspace generated_subalgebra(const std::vector<Mat4>& seed) {
    Subspace s = echelon_span(seed);
    while (true) {
        auto b = s.basis();
        std::vector<Mat4> all = b;
        for (size_t i = 0; i < b.size(); ++i)
            for (size_t j = i + 1; j < b.size(); ++j) all.push_back(bracket(b[i], b[j]));
        Subspace next = echelon_span(all);
        if (next.dim() == s.dim()) return s;
        s = next;
    }
}

Subspace bracket_space(const Subspace& u, const Subspace& v) {
    std::vector<Mat4> out;
    auto bu = u.basis(), bv = v.basis();
    for (auto& x : bu)
        for (auto& y : bv) out.push_back(bracket(x, y));
    return echelon_span(out);
}

std::vector<Subspace> derived_series(const Subspace& s) {
    std::vector<Subspace> out{s};
    while (true) {
        Subspace next = bracket_space(out.back(), out.back());
        if (next.dim() == out.back().dim()) return out;
        out.push_back(next);
    }
}

std::vector<Subspace> lower_central_series(const Subspace& s) {
    std::vector<Subspace> out{s};
    while (true) {
        Subspace next = bracket_space(s, out.back());
        if (next.dim() == out.back().dim()) return out;
        out.push_back(next);
    }
}

std::vector<int> dims_of(const std::vector<Subspace>& series) {
    std::vector<int> out;
    for (auto& s : series) out.push_back(s.dim());
    return out;
}

bool is_solvable(const Subspace& s) { return derived_series(s).back().dim() == 0; }
bool is_nilpotent(const Subspace& s) { return lower_central_series(s).back().dim() == 0; }
bool is_abelian(const Subspace& s) { return bracket_space(s, s).dim() == 0; }

StructureConstants structure_constants(const std::vector<Mat4>& basis) {
    int d = static_cast<int>(basis.size());
    std::vector<QVec> cols;
    for (auto& b : basis) cols.push_back(b.to_vec());
    QMat m = QMat::from_cols(cols);  // 16 x d
    if (rank(m) != d) throw DependentInputs("basis vectors are dependent");
    // Solve m * x = v through the echelon form of [m | v].
    auto solve = [&](const Mat4& v) {
        QMat aug(16, d + 1);
        for (int i = 0; i < 16; ++i) {
            for (int j = 0; j < d; ++j) aug(i, j) = m(i, j);
            aug(i, d) = v.flat()[i];
        }
        auto piv = rref(aug);
        if (!piv.empty() && piv.back() == d) throw NotClosed("bracket leaves the span");
        QVec x(d, Rational(0));
        for (size_t r = 0; r < piv.size(); ++r) x[piv[r]] = aug(static_cast<int>(r), d);
        return x;
    };
    StructureConstants sc = StructureConstants::zero(d);
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j) sc.set(i, j, solve(bracket(basis[i], basis[j])));
    return sc;
}

StructureConstants structure_constants(const Subspace& s) { return structure_constants(s.basis()); }

// ---------------------------------------------------------------- abstract

VecSpace sc_full(const StructureConstants& sc) {
    std::vector<QVec> units;
    for (int i = 0; i < sc.dim; ++i) units.push_back(sc.unit(i));
    return VecSpace::span(sc.dim, units);
}

VecSpace sc_bracket_space(const StructureConstants& sc, const VecSpace& u, const VecSpace& v) {
    std::vector<QVec> out;
    for (auto& x : u.basis())
        for (auto& y : v.basis()) out.push_back(sc.bracket(x, y));
    return VecSpace::span(sc.dim, out);
}

std::vector<int> sc_derived_dims(const StructureConstants& sc) {
    VecSpace s = sc_full(sc);
    std::vector<int> out{s.dim()};
    while (true) {
        VecSpace next = sc_bracket_space(sc, s, s);
        if (next.dim() == s.dim()) return out;
        out.push_back(next.dim());
        s = next;
    }
}

std::vector<int> sc_lower_central_dims(const StructureConstants& sc) {
    VecSpace g = sc_full(sc), s = g;
    std::vector<int> out{s.dim()};
    while (true) {
        VecSpace next = sc_bracket_space(sc, g, s);
        if (next.dim() == s.dim()) return out;
        out.push_back(next.dim());
        s = next;
    }
}

bool sc_is_abelian(const StructureConstants& sc, const VecSpace& u) { return sc_bracket_space(sc, u, u).dim() == 0; }

VecSpace sc_centralizer(const StructureConstants& sc, const VecSpace& of, const VecSpace& within) {
    // Coordinates y on within's basis with [sum y_i w_i, o] = 0 for all o.
    const auto& wb = within.basis();
    if (wb.empty()) return VecSpace(sc.dim);
    std::vector<QVec> rows;
    for (auto& o : of.basis()) {
        std::vector<QVec> imgs;
        for (auto& w : wb) imgs.push_back(sc.bracket(w, o));
        for (int k = 0; k < sc.dim; ++k) {
            QVec row;
            for (auto& im : imgs) row.push_back(im[k]);
            rows.push_back(row);
        }
    }
    if (rows.empty()) return within;
    std::vector<QVec> out;
    for (auto& y : kernel(QMat::from_rows(rows))) {
        QVec v(sc.dim, Rational(0));
        for (size_t i = 0; i < wb.size(); ++i)
            for (int k = 0; k < sc.dim; ++k) v[k] += y[i] * wb[i][k];
        out.push_back(v);
    }
    return VecSpace::span(sc.dim, out);
}

namespace {

bool is_nilpotent_qmat(const QMat& m) {
    QMat p = m;
    for (int i = 1; i < m.rows(); ++i) p = p * m;
    return p.is_zero();
}

}  // namespace

VecSpace sc_nilradical(const StructureConstants& sc) {
    int n = sc.dim;
    if (n == 0) return VecSpace(0);
    // For generic y, x is ad-nilpotent iff tr(ad x ad y^k) = 0 for k < n; any
    // y gives a superset, so retry along the moment curve until verified.
    for (int m = 1;; ++m) {
        QVec y(n);
        Rational pw = 1;
        for (int i = 0; i < n; ++i) {
            y[i] = pw;
            pw *= m;
        }
        QMat ady = sc.ad(y);
        std::vector<QMat> ads;
        for (int i = 0; i < n; ++i) ads.push_back(sc.ad(sc.unit(i)));
        std::vector<QVec> rows;
        QMat pk = QMat::identity(n);
        for (int k = 0; k < n; ++k) {
            QVec row(n);
            for (int i = 0; i < n; ++i) row[i] = (ads[i] * pk).trace();
            rows.push_back(row);
            pk = pk * ady;
        }
        VecSpace k = VecSpace::span(n, kernel(QMat::from_rows(rows)));
        bool ok = true;
        for (auto& b : k.basis())
            if (!is_nilpotent_qmat(sc.ad(b))) {
                ok = false;
                break;
            }
        if (ok) return k;
        if (m > 64) throw UnrecognizedFamily("nilradical search did not converge");
    }
}

// Fitting null component of ad y for a regular y: a Cartan subalgebra.
VecSpace sc_cartan_subalgebra(const StructureConstants& sc) {
    VecSpace best;
    bool have = false;
    for (int m = 1; m <= 24; ++m) {
        QVec y(sc.dim);
        Rational pw = 1;
        for (int i = 0; i < sc.dim; ++i) {
            y[i] = pw;
            pw *= m + 1;
        }
        QMat p = sc.ad(y), acc = p;
        for (int i = 1; i < sc.dim; ++i) acc = acc * p;
        VecSpace k = VecSpace::span(sc.dim, kernel(acc));
        if (!have || k.dim() < best.dim()) {
            best = k;
            have = true;
        }
    }
    return best;
}

QMat restrict_map(const QMat& op, const VecSpace& u) {
    int d = u.dim();
    QMat out(d, d);
    for (int j = 0; j < d; ++j) {
        QVec c = u.coords(op * u.basis()[j]);
        for (int i = 0; i < d; ++i) out(i, j) = c[i];
    }
    return out;
}

std::vector<QVec> complement_basis(const VecSpace& sup, const VecSpace& sub) {
    std::vector<QVec> out;
    VecSpace acc = sub;
    for (auto& b : sup.basis()) {
        if (acc.contains(b)) continue;
        out.push_back(b);
        acc = acc.plus(VecSpace::span(sup.ambient(), {b}));
    }
    return out;
}

QMat induced_map(const QMat& op, const VecSpace& u, const VecSpace& z, std::vector<QVec>* reps) {
    std::vector<QVec> comp = complement_basis(u, z);
    int d = static_cast<int>(comp.size());
    // Coordinates of v modulo z: express v in basis comp + z.basis and drop z part.
    std::vector<QVec> cols = comp;
    for (auto& b : z.basis()) cols.push_back(b);
    QMat basis = QMat::from_cols(cols);
    QMat inv_full;
    {
        // Left inverse via normal equations is overkill; solve through rref.
        int n = basis.rows(), k = basis.cols();
        inv_full = QMat(k, n);
        QMat aug(n, k + n);
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < k; ++j) aug(i, j) = basis(i, j);
            aug(i, k + i) = 1;
        }
        auto piv = rref(aug);
        for (size_t r = 0; r < piv.size() && piv[r] < k; ++r)
            for (int j = 0; j < n; ++j) inv_full(piv[r], j) = aug(static_cast<int>(r), k + j);
    }
    QMat out(d, d);
    for (int j = 0; j < d; ++j) {
        QVec c = inv_full * (op * comp[j]);
        for (int i = 0; i < d; ++i) out(i, j) = c[i];
    }
    if (reps) *reps = comp;
    return out;
}

}  // namespace sp4cert
