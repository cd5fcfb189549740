#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace sp4cert {

// GMP keeps mpq values canonical after every arithmetic operation.
using Rational = mpq_class;
using Integer = mpz_class;

// Accepts "p", "p/q", optional sign and surrounding blanks.
Rational parse_rational(std::string_view s);
std::vector<Rational> parse_rational_list(std::string_view s, char sep = ',');

// "p/q" in lowest terms, or "p" when q = 1.
std::string to_string(const Rational& r);

inline int sign(const Rational& r) { return sgn(r); }
inline Rational abs_q(const Rational& r) { return abs(r); }

// Prime factorisation of |n| (n != 0) as (prime, exponent) pairs, ascending.
std::vector<std::pair<Integer, unsigned>> factor(const Integer& n);
std::vector<Integer> positive_divisors(const Integer& n);

// Exact square root if r is the square of a rational.
bool rational_sqrt(const Rational& r, Rational& root);
bool rational_cbrt(const Rational& r, Rational& root);

// Representative of r modulo (Q*)^2: squarefree integer, sign preserved.
Rational squarefree_kernel(const Rational& r);
// Representative of r modulo (Q*)^3: positive-or-negative cube-free integer,
// normalised to be positive (since -1 is a cube).
Rational cubefree_kernel(const Rational& r);

Rational pow_q(const Rational& r, int e);

}  // namespace sp4cert
