#pragma once

#include <string>
#include <utility>
#include <vector>

#include "sp4cert/rational.hpp"

namespace sp4cert {

// Univariate polynomial over Q, coefficients lowest degree first; the zero
// polynomial has no coefficients.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Rational> coeffs);
    static Poly constant(const Rational& c);
    static Poly monomial(const Rational& c, int degree);
    static Poly x() { return monomial(1, 1); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    bool is_zero() const { return c_.empty(); }
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational coeff(int i) const { return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : Rational(0); }
    const Rational& leading() const { return c_.back(); }

    Rational eval(const Rational& t) const;
    Poly derivative() const;
    Poly monic() const;

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const Rational& s) const;
    Poly operator-() const { return *this * Rational(-1); }
    bool operator==(const Poly& o) const { return c_ == o.c_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    // Euclidean division: *this = q*d + r, deg r < deg d.
    std::pair<Poly, Poly> divmod(const Poly& d) const;

    std::string to_string(const char* var = "x") const;

private:
    void trim();
    std::vector<Rational> c_;
};

Poly gcd(Poly a, Poly b);  // monic, gcd(0,0) = 0
Poly squarefree_part(const Poly& p);  // monic

struct RootMult {
    Rational root;
    int mult;
    bool operator==(const RootMult& o) const { return root == o.root && mult == o.mult; }
};

// All rational roots with multiplicity, ascending by root. Throws ZeroPolynomial.
std::vector<RootMult> rational_roots(const Poly& p);

// True when p is a product of linear factors over Q.
bool splits_over_q(const Poly& p);

// Degree-2 factor test: for a quadratic q, returns true and the roots when the
// discriminant is a rational square.
bool quadratic_rational_roots(const Poly& q, Rational& r1, Rational& r2);

}  // namespace sp4cert
