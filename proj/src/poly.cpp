#include "sp4cert/poly.hpp"

#include <algorithm>
#include <sstream>

#include "sp4cert/errors.hpp"

namespace sp4cert {

Poly::Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly Poly::constant(const Rational& c) { return Poly({c}); }

Poly Poly::monomial(const Rational& c, int degree) {
    std::vector<Rational> v(degree + 1, Rational(0));
    v[degree] = c;
    return Poly(std::move(v));
}

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational Poly::eval(const Rational& t) const {
    Rational acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
    return acc;
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<Rational> d(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<long>(i);
    return Poly(std::move(d));
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    return *this * Rational(1 / leading());
}

Poly Poly::operator+(const Poly& o) const {
    std::vector<Rational> v(std::max(c_.size(), o.c_.size()), Rational(0));
    for (size_t i = 0; i < c_.size(); ++i) v[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) v[i] += o.c_[i];
    return Poly(std::move(v));
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly();
    std::vector<Rational> v(c_.size() + o.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
    return Poly(std::move(v));
}

Poly Poly::operator*(const Rational& s) const {
    std::vector<Rational> v = c_;
    for (auto& x : v) x *= s;
    return Poly(std::move(v));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& d) const {
    if (d.is_zero()) throw ZeroPolynomial("division by the zero polynomial");
    std::vector<Rational> r = c_;
    int dd = d.degree();
    if (degree() < dd) return {Poly(), *this};
    std::vector<Rational> q(degree() - dd + 1, Rational(0));
    for (int k = degree(); k >= dd; --k) {
        if (r[k] == 0) continue;
        Rational f = r[k] / d.leading();
        q[k - dd] = f;
        for (int i = 0; i <= dd; ++i) r[k - dd + i] -= f * d.c_[i];
    }
    return {Poly(std::move(q)), Poly(std::move(r))};
}

std::string Poly::to_string(const char* var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Rational& c = c_[i];
        if (c == 0) continue;
        Rational a = abs(c);
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        bool unit = a == 1 && i > 0;
        if (!unit) os << sp4cert::to_string(a);
        if (i > 0) {
            if (!unit) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

Poly gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

Poly squarefree_part(const Poly& p) {
    if (p.is_zero()) throw ZeroPolynomial();
    Poly g = gcd(p, p.derivative());
    return p.divmod(g).first.monic();
}

namespace {

// Multiplicity of root r in p (p nonzero).
int multiplicity(Poly p, const Rational& r) {
    Poly lin({-r, Rational(1)});
    int m = 0;
    while (true) {
        auto [q, rem] = p.divmod(lin);
        if (!rem.is_zero()) return m;
        ++m;
        p = q;
    }
}

}  // namespace

std::vector<RootMult> rational_roots(const Poly& p) {
    if (p.is_zero()) throw ZeroPolynomial();
    std::vector<RootMult> out;
    int zero_mult = 0;
    while (p.coeff(zero_mult) == 0) ++zero_mult;
    if (zero_mult) out.push_back({Rational(0), zero_mult});
    // Squarefree part of the zero-free cofactor, made primitive over Z.
    std::vector<Rational> rest(p.coeffs().begin() + zero_mult, p.coeffs().end());
    Poly q = Poly(rest);
    if (q.degree() >= 1) {
        Poly s = squarefree_part(q);
        Integer lcm = 1;
        for (auto& c : s.coeffs()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den().get_mpz_t());
        Integer a0 = Integer(s.coeff(0) * lcm);
        Integer an = Integer(s.leading() * lcm);
        auto ps = positive_divisors(a0);
        auto qs = positive_divisors(an);
        std::vector<Rational> found;
        for (auto& num : ps)
            for (auto& den : qs)
                for (int sg : {1, -1}) {
                    Rational cand(Integer(sg * num), den);
                    cand.canonicalize();
                    if (std::find(found.begin(), found.end(), cand) != found.end()) continue;
                    if (s.eval(cand) == 0) found.push_back(cand);
                }
        for (auto& r : found) out.push_back({r, multiplicity(q, r)});
    }
    std::sort(out.begin(), out.end(), [](const RootMult& x, const RootMult& y) { return x.root < y.root; });
    return out;
}

bool splits_over_q(const Poly& p) {
    int total = 0;
    for (auto& rm : rational_roots(p)) total += rm.mult;
    return total == p.degree();
}

bool quadratic_rational_roots(const Poly& q, Rational& r1, Rational& r2) {
    if (q.degree() != 2) return false;
    Rational a = q.coeff(2), b = q.coeff(1), c = q.coeff(0);
    Rational disc = b * b - 4 * a * c, s;
    if (!rational_sqrt(disc, s)) return false;
    r1 = (-b - s) / (2 * a);
    r2 = (-b + s) / (2 * a);
    if (r1 > r2) std::swap(r1, r2);
    return true;
}

}  // namespace sp4cert
