#include "sp4cert/linalg.hpp"

#include <sstream>

#include "sp4cert/errors.hpp"

namespace sp4cert {

// ---------------------------------------------------------------- Mat4

Mat4 Mat4::identity() { return diag(1, 1, 1, 1); }

Mat4 Mat4::diag(const Rational& a, const Rational& b, const Rational& c, const Rational& d) {
    Mat4 m;
    m(0, 0) = a;
    m(1, 1) = b;
    m(2, 2) = c;
    m(3, 3) = d;
    return m;
}

Mat4 Mat4::unit(int r, int c) {
    Mat4 m;
    m(r, c) = 1;
    return m;
}

Mat4 Mat4::from_rows(const std::array<std::array<Rational, 4>, 4>& rows) {
    Mat4 m;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) m(i, j) = rows[i][j];
    return m;
}

Mat4 Mat4::from_flat(const QVec& v) {
    Mat4 m;
    for (int i = 0; i < 16; ++i) m.e_[i] = v.at(i);
    return m;
}

Mat4 Mat4::operator+(const Mat4& o) const {
    Mat4 m;
    for (int i = 0; i < 16; ++i) m.e_[i] = e_[i] + o.e_[i];
    return m;
}

Mat4 Mat4::operator-(const Mat4& o) const {
    Mat4 m;
    for (int i = 0; i < 16; ++i) m.e_[i] = e_[i] - o.e_[i];
    return m;
}

Mat4 Mat4::operator-() const {
    Mat4 m;
    for (int i = 0; i < 16; ++i) m.e_[i] = -e_[i];
    return m;
}

Mat4 Mat4::operator*(const Mat4& o) const {
    Mat4 m;
    for (int i = 0; i < 4; ++i)
        for (int k = 0; k < 4; ++k) {
            const Rational& a = (*this)(i, k);
            if (a == 0) continue;
            for (int j = 0; j < 4; ++j)
                if (o(k, j) != 0) m(i, j) += a * o(k, j);
        }
    return m;
}

Mat4 Mat4::operator*(const Rational& s) const {
    Mat4 m;
    for (int i = 0; i < 16; ++i) m.e_[i] = e_[i] * s;
    return m;
}

Mat4& Mat4::operator+=(const Mat4& o) {
    for (int i = 0; i < 16; ++i) e_[i] += o.e_[i];
    return *this;
}

Mat4 Mat4::transpose() const {
    Mat4 m;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) m(j, i) = (*this)(i, j);
    return m;
}

Rational Mat4::trace() const { return e_[0] + e_[5] + e_[10] + e_[15]; }

bool Mat4::is_zero() const {
    for (auto& x : e_)
        if (x != 0) return false;
    return true;
}

std::string Mat4::to_string() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < 4; ++i) {
        os << (i ? "; " : "");
        for (int j = 0; j < 4; ++j) os << (j ? " " : "") << sp4cert::to_string((*this)(i, j));
    }
    os << "]";
    return os.str();
}

// ---------------------------------------------------------------- QMat

QMat QMat::identity(int n) {
    QMat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

QMat QMat::from_rows(const std::vector<QVec>& rows) {
    if (rows.empty()) return QMat();
    QMat m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) m(i, j) = rows[i].at(j);
    return m;
}

QMat QMat::from_cols(const std::vector<QVec>& cols) { return from_rows(cols).transpose(); }

QVec QMat::row(int i) const { return QVec(a_.begin() + static_cast<long>(i) * c_, a_.begin() + static_cast<long>(i + 1) * c_); }

QVec QMat::col(int j) const {
    QVec v(r_);
    for (int i = 0; i < r_; ++i) v[i] = (*this)(i, j);
    return v;
}

QMat QMat::operator*(const QMat& o) const {
    QMat m(r_, o.c_);
    for (int i = 0; i < r_; ++i)
        for (int k = 0; k < c_; ++k) {
            const Rational& a = (*this)(i, k);
            if (a == 0) continue;
            for (int j = 0; j < o.c_; ++j)
                if (o(k, j) != 0) m(i, j) += a * o(k, j);
        }
    return m;
}

QVec QMat::operator*(const QVec& v) const {
    QVec out(r_, Rational(0));
    for (int i = 0; i < r_; ++i)
        for (int j = 0; j < c_; ++j)
            if ((*this)(i, j) != 0 && v[j] != 0) out[i] += (*this)(i, j) * v[j];
    return out;
}

QMat QMat::operator+(const QMat& o) const {
    QMat m = *this;
    for (size_t i = 0; i < a_.size(); ++i) m.a_[i] += o.a_[i];
    return m;
}

QMat QMat::operator-(const QMat& o) const {
    QMat m = *this;
    for (size_t i = 0; i < a_.size(); ++i) m.a_[i] -= o.a_[i];
    return m;
}

QMat QMat::operator*(const Rational& s) const {
    QMat m = *this;
    for (auto& x : m.a_) x *= s;
    return m;
}

QMat QMat::transpose() const {
    QMat m(c_, r_);
    for (int i = 0; i < r_; ++i)
        for (int j = 0; j < c_; ++j) m(j, i) = (*this)(i, j);
    return m;
}

Rational QMat::trace() const {
    Rational t = 0;
    for (int i = 0; i < std::min(r_, c_); ++i) t += (*this)(i, i);
    return t;
}

bool QMat::is_zero() const {
    for (auto& x : a_)
        if (x != 0) return false;
    return true;
}

bool QMat::is_scalar(Rational* value) const {
    if (r_ != c_) return false;
    for (int i = 0; i < r_; ++i)
        for (int j = 0; j < c_; ++j) {
            if (i != j && (*this)(i, j) != 0) return false;
            if (i == j && (*this)(i, j) != (*this)(0, 0)) return false;
        }
    if (value) *value = r_ ? (*this)(0, 0) : Rational(0);
    return true;
}

std::vector<int> rref(QMat& m) {
    std::vector<int> piv;
    int r = 0;
    for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
        int p = -1;
        for (int i = r; i < m.rows(); ++i)
            if (m(i, c) != 0) {
                p = i;
                break;
            }
        if (p < 0) continue;
        if (p != r)
            for (int j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
        Rational inv = 1 / m(r, c);
        for (int j = c; j < m.cols(); ++j) m(r, j) *= inv;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c) == 0) continue;
            Rational f = m(i, c);
            for (int j = c; j < m.cols(); ++j)
                if (m(r, j) != 0) m(i, j) -= f * m(r, j);
        }
        piv.push_back(c);
        ++r;
    }
    return piv;
}

int rank(const QMat& m) {
    QMat t = m;
    return static_cast<int>(rref(t).size());
}

std::vector<QVec> kernel(const QMat& m) {
    QMat t = m;
    auto piv = rref(t);
    std::vector<bool> is_piv(m.cols(), false);
    for (int p : piv) is_piv[p] = true;
    std::vector<QVec> out;
    for (int f = 0; f < m.cols(); ++f) {
        if (is_piv[f]) continue;
        QVec v(m.cols(), Rational(0));
        v[f] = 1;
        for (size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -t(static_cast<int>(i), f);
        out.push_back(std::move(v));
    }
    return out;
}

QMat inverse(const QMat& m) {
    int n = m.rows();
    if (n != m.cols()) throw DimensionMismatch("inverse of a non-square matrix");
    QMat aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = 1;
    }
    auto piv = rref(aug);
    if (static_cast<int>(piv.size()) < n || piv[n - 1] != n - 1) throw SingularMatrix();
    QMat inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
    return inv;
}

Rational det(const QMat& m) {
    int n = m.rows();
    QMat t = m;
    Rational d = 1;
    for (int c = 0; c < n; ++c) {
        int p = -1;
        for (int i = c; i < n; ++i)
            if (t(i, c) != 0) {
                p = i;
                break;
            }
        if (p < 0) return 0;
        if (p != c) {
            for (int j = 0; j < n; ++j) std::swap(t(p, j), t(c, j));
            d = -d;
        }
        d *= t(c, c);
        for (int i = c + 1; i < n; ++i) {
            if (t(i, c) == 0) continue;
            Rational f = t(i, c) / t(c, c);
            for (int j = c; j < n; ++j) t(i, j) -= f * t(c, j);
        }
    }
    return d;
}

// Faddeev-LeVerrier: exact over Q since we only divide by 1..n.
Poly char_poly(const QMat& a) {
    int n = a.rows();
    std::vector<Rational> c(n + 1, Rational(0));
    c[n] = 1;
    QMat mk(n, n);
    for (int k = 1; k <= n; ++k) {
        QMat next = a * mk;
        for (int i = 0; i < n; ++i) next(i, i) += c[n - k + 1];
        mk = next;
        c[n - k] = -(a * mk).trace() / k;
    }
    return Poly(std::move(c));
}

QMat eval_poly(const Poly& p, const QMat& m) {
    int n = m.rows();
    QMat acc(n, n);
    for (int i = p.degree(); i >= 0; --i) {
        acc = acc * m;
        for (int j = 0; j < n; ++j) acc(j, j) += p.coeff(i);
    }
    return acc;
}

// ---------------------------------------------------------------- VecSpace

VecSpace VecSpace::span(int ambient, const std::vector<QVec>& vs) {
    VecSpace s(ambient);
    if (vs.empty()) return s;
    QMat m = QMat::from_rows(vs);
    auto piv = rref(m);
    for (size_t i = 0; i < piv.size(); ++i) s.basis_.push_back(m.row(static_cast<int>(i)));
    s.piv_ = piv;
    return s;
}

QVec VecSpace::reduce(QVec v) const {
    for (size_t i = 0; i < basis_.size(); ++i) {
        Rational f = v[piv_[i]];
        if (f == 0) continue;
        for (int j = 0; j < n_; ++j)
            if (basis_[i][j] != 0) v[j] -= f * basis_[i][j];
    }
    return v;
}

bool VecSpace::contains(const QVec& v) const {
    for (auto& x : reduce(v))
        if (x != 0) return false;
    return true;
}

bool VecSpace::contains(const VecSpace& o) const {
    for (auto& b : o.basis_)
        if (!contains(b)) return false;
    return true;
}

QVec VecSpace::coords(const QVec& v) const {
    if (!contains(v)) throw DimensionMismatch("vector not in span");
    QVec c(basis_.size());
    for (size_t i = 0; i < basis_.size(); ++i) c[i] = v[piv_[i]];
    return c;
}

VecSpace VecSpace::plus(const VecSpace& o) const {
    std::vector<QVec> all = basis_;
    all.insert(all.end(), o.basis_.begin(), o.basis_.end());
    return span(n_, all);
}

VecSpace VecSpace::intersect(const VecSpace& o) const {
    if (basis_.empty() || o.basis_.empty()) return VecSpace(n_);
    std::vector<QVec> cols = basis_;
    for (auto& b : o.basis_) {
        QVec nb = b;
        for (auto& x : nb) x = -x;
        cols.push_back(nb);
    }
    QMat m = QMat::from_cols(cols);
    std::vector<QVec> out;
    for (auto& k : kernel(m)) {
        QVec v(n_, Rational(0));
        for (size_t i = 0; i < basis_.size(); ++i)
            if (k[i] != 0)
                for (int j = 0; j < n_; ++j) v[j] += k[i] * basis_[i][j];
        out.push_back(v);
    }
    return span(n_, out);
}

// ---------------------------------------------------------------- Subspace

std::vector<Mat4> Subspace::basis() const {
    std::vector<Mat4> out;
    for (auto& b : s_.basis()) out.push_back(Mat4::from_flat(b));
    return out;
}

Subspace echelon_span(const std::vector<Mat4>& vectors) {
    std::vector<QVec> vs;
    for (auto& m : vectors) vs.push_back(m.to_vec());
    return Subspace(VecSpace::span(16, vs));
}

// ---------------------------------------------------------------- Mat4 helpers

QMat to_qmat(const Mat4& m) {
    QMat q(4, 4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) q(i, j) = m(i, j);
    return q;
}

Mat4 to_mat4(const QMat& q) {
    Mat4 m;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) m(i, j) = q(i, j);
    return m;
}

Poly char_poly(const Mat4& m) { return char_poly(to_qmat(m)); }
int rank(const Mat4& m) { return rank(to_qmat(m)); }
Mat4 inverse(const Mat4& m) { return to_mat4(inverse(to_qmat(m))); }
Rational det(const Mat4& m) { return det(to_qmat(m)); }

Mat4 eval_poly(const Poly& p, const Mat4& m) {
    Mat4 acc;
    for (int i = p.degree(); i >= 0; --i) {
        acc = acc * m;
        for (int j = 0; j < 4; ++j) acc(j, j) += p.coeff(i);
    }
    return acc;
}

Mat4 mat_pow(const Mat4& m, int e) {
    Mat4 out = Mat4::identity();
    for (int i = 0; i < e; ++i) out = out * m;
    return out;
}

}  // namespace sp4cert
