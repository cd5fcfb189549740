#pragma once

#include <array>
#include <string>
#include <vector>

#include "sp4cert/poly.hpp"
#include "sp4cert/rational.hpp"

namespace sp4cert {

using QVec = std::vector<Rational>;

// Fixed 4x4 rational matrix; 0-based (row, col) access.
class Mat4 {
public:
    Mat4() { e_.fill(Rational(0)); }
    static Mat4 zero() { return Mat4(); }
    static Mat4 identity();
    static Mat4 diag(const Rational& a, const Rational& b, const Rational& c, const Rational& d);
    static Mat4 unit(int r, int c);  // E_{r+1,c+1}
    static Mat4 from_rows(const std::array<std::array<Rational, 4>, 4>& rows);
    static Mat4 from_flat(const QVec& v);  // row-major, size 16

    Rational& operator()(int r, int c) { return e_[4 * r + c]; }
    const Rational& operator()(int r, int c) const { return e_[4 * r + c]; }
    const std::array<Rational, 16>& flat() const { return e_; }
    QVec to_vec() const { return QVec(e_.begin(), e_.end()); }

    Mat4 operator+(const Mat4& o) const;
    Mat4 operator-(const Mat4& o) const;
    Mat4 operator-() const;
    Mat4 operator*(const Mat4& o) const;
    Mat4 operator*(const Rational& s) const;
    friend Mat4 operator*(const Rational& s, const Mat4& m) { return m * s; }
    Mat4& operator+=(const Mat4& o);
    bool operator==(const Mat4& o) const { return e_ == o.e_; }
    bool operator!=(const Mat4& o) const { return !(*this == o); }

    Mat4 transpose() const;
    Rational trace() const;
    bool is_zero() const;
    std::string to_string() const;

private:
    std::array<Rational, 16> e_;
};

// Dense rectangular matrix for the ad-representations and coordinate work
// (sizes up to 16).
class QMat {
public:
    QMat() = default;
    QMat(int rows, int cols) : r_(rows), c_(cols), a_(static_cast<size_t>(rows) * cols, Rational(0)) {}
    static QMat identity(int n);
    static QMat from_rows(const std::vector<QVec>& rows);
    static QMat from_cols(const std::vector<QVec>& cols);

    int rows() const { return r_; }
    int cols() const { return c_; }
    Rational& operator()(int i, int j) { return a_[static_cast<size_t>(i) * c_ + j]; }
    const Rational& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * c_ + j]; }
    QVec row(int i) const;
    QVec col(int j) const;

    QMat operator*(const QMat& o) const;
    QVec operator*(const QVec& v) const;
    QMat operator+(const QMat& o) const;
    QMat operator-(const QMat& o) const;
    QMat operator*(const Rational& s) const;
    bool operator==(const QMat& o) const { return r_ == o.r_ && c_ == o.c_ && a_ == o.a_; }
    QMat transpose() const;
    Rational trace() const;
    bool is_zero() const;
    bool is_scalar(Rational* value = nullptr) const;

private:
    int r_ = 0, c_ = 0;
    std::vector<Rational> a_;
};

// In-place reduced row echelon form; returns pivot columns.
std::vector<int> rref(QMat& m);
int rank(const QMat& m);
std::vector<QVec> kernel(const QMat& m);  // basis of {v : m v = 0}
QMat inverse(const QMat& m);              // throws SingularMatrix
Rational det(const QMat& m);
Poly char_poly(const QMat& m);            // det(x I - m)
QMat eval_poly(const Poly& p, const QMat& m);

// Linear span of vectors in Q^n held as a unique reduced echelon basis.
class VecSpace {
public:
    VecSpace() = default;
    explicit VecSpace(int ambient) : n_(ambient) {}
    static VecSpace span(int ambient, const std::vector<QVec>& vs);

    int ambient() const { return n_; }
    int dim() const { return static_cast<int>(basis_.size()); }
    const std::vector<QVec>& basis() const { return basis_; }
    const std::vector<int>& pivots() const { return piv_; }

    QVec reduce(QVec v) const;           // remainder after elimination
    bool contains(const QVec& v) const;
    bool contains(const VecSpace& o) const;
    // Coordinates of v with respect to basis(); v must lie in the span.
    QVec coords(const QVec& v) const;
    VecSpace plus(const VecSpace& o) const;
    VecSpace intersect(const VecSpace& o) const;
    bool operator==(const VecSpace& o) const { return n_ == o.n_ && basis_ == o.basis_; }
    bool operator!=(const VecSpace& o) const { return !(*this == o); }

private:
    int n_ = 0;
    std::vector<QVec> basis_;
    std::vector<int> piv_;
};

// Subspace of 4x4 matrices, echelonised over the row-major flattening.
class Subspace {
public:
    Subspace() : s_(16) {}
    explicit Subspace(VecSpace s) : s_(std::move(s)) {}
    int dim() const { return s_.dim(); }
    std::vector<Mat4> basis() const;
    bool contains(const Mat4& m) const { return s_.contains(m.to_vec()); }
    bool contains(const Subspace& o) const { return s_.contains(o.s_); }
    QVec coords(const Mat4& m) const { return s_.coords(m.to_vec()); }
    const VecSpace& space() const { return s_; }
    Subspace plus(const Subspace& o) const { return Subspace(s_.plus(o.s_)); }
    Subspace intersect(const Subspace& o) const { return Subspace(s_.intersect(o.s_)); }
    bool operator==(const Subspace& o) const { return s_ == o.s_; }
    bool operator!=(const Subspace& o) const { return !(*this == o); }

private:
    VecSpace s_;
};

Subspace echelon_span(const std::vector<Mat4>& vectors);

QMat to_qmat(const Mat4& m);
Mat4 to_mat4(const QMat& m);

Poly char_poly(const Mat4& m);
int rank(const Mat4& m);
Mat4 inverse(const Mat4& m);  // throws SingularMatrix
Rational det(const Mat4& m);
Mat4 eval_poly(const Poly& p, const Mat4& m);
Mat4 mat_pow(const Mat4& m, int e);

}  // namespace sp4cert
