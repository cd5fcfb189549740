#include "sp4cert/rational.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "sp4cert/errors.hpp"

namespace sp4cert {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

bool all_digits(std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

Integer pollard_brent(const Integer& n) {
    if (mpz_even_p(n.get_mpz_t())) return 2;
    for (unsigned long c = 1;; ++c) {
        Integer y = 2, x, g = 1, q = 1, ys;
        unsigned long r = 1;
        const unsigned long m = 64;
        auto f = [&](const Integer& v) { Integer t = (v * v + c) % n; return t; };
        do {
            x = y;
            for (unsigned long i = 0; i < r; ++i) y = f(y);
            unsigned long k = 0;
            do {
                ys = y;
                for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
                    y = f(y);
                    Integer d = abs(x - y);
                    q = (q * d) % n;
                }
                mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                k += m;
            } while (k < r && g == 1);
            r *= 2;
        } while (g == 1);
        if (g == n) {
            do {
                ys = f(ys);
                Integer d = abs(x - ys);
                mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
            } while (g == 1);
        }
        if (g != n) return g;
    }
}

void factor_into(Integer n, std::map<Integer, unsigned>& out) {
    if (n == 1) return;
    if (mpz_probab_prime_p(n.get_mpz_t(), 30)) {
        ++out[n];
        return;
    }
    Integer d = pollard_brent(n);
    factor_into(d, out);
    factor_into(Integer(n / d), out);
}

}  // namespace

Rational parse_rational(std::string_view s) {
    s = trim(s);
    if (s.empty()) throw ParseError("empty rational");
    bool neg = false;
    if (s.front() == '+' || s.front() == '-') {
        neg = s.front() == '-';
        s.remove_prefix(1);
    }
    auto slash = s.find('/');
    std::string_view num = trim(s.substr(0, slash));
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : trim(s.substr(slash + 1));
    if (!all_digits(num) || !all_digits(den)) throw ParseError("malformed rational '" + std::string(s) + "'");
    Integer p{std::string(num)}, q{std::string(den)};
    if (q == 0) throw ParseError("zero denominator in rational");
    Rational r(p, q);
    r.canonicalize();
    return neg ? Rational(-r) : r;
}

std::vector<Rational> parse_rational_list(std::string_view s, char sep) {
    std::vector<Rational> out;
    while (true) {
        auto pos = s.find(sep);
        out.push_back(parse_rational(s.substr(0, pos)));
        if (pos == std::string_view::npos) break;
        s.remove_prefix(pos + 1);
    }
    return out;
}

std::string to_string(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::vector<std::pair<Integer, unsigned>> factor(const Integer& n0) {
    std::map<Integer, unsigned> acc;
    Integer n = abs(n0);
    for (unsigned long p = 2; p < 2000 && n > 1; ++p) {
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            ++acc[Integer(p)];
            n /= p;
        }
    }
    factor_into(n, acc);
    return {acc.begin(), acc.end()};
}

std::vector<Integer> positive_divisors(const Integer& n) {
    std::vector<Integer> divs{1};
    for (auto& [p, e] : factor(n)) {
        size_t base = divs.size();
        Integer pk = 1;
        for (unsigned k = 1; k <= e; ++k) {
            pk *= p;
            for (size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

bool rational_sqrt(const Rational& r, Rational& root) {
    if (r < 0) return false;
    const Integer& p = r.get_num();
    const Integer& q = r.get_den();
    if (!mpz_perfect_square_p(p.get_mpz_t()) || !mpz_perfect_square_p(q.get_mpz_t())) return false;
    Integer sp, sq;
    mpz_sqrt(sp.get_mpz_t(), p.get_mpz_t());
    mpz_sqrt(sq.get_mpz_t(), q.get_mpz_t());
    root = Rational(sp, sq);
    root.canonicalize();
    return true;
}

bool rational_cbrt(const Rational& r, Rational& root) {
    Integer p = abs(r.get_num()), q = r.get_den(), cp, cq;
    if (!mpz_root(cp.get_mpz_t(), p.get_mpz_t(), 3) || !mpz_root(cq.get_mpz_t(), q.get_mpz_t(), 3)) return false;
    root = Rational(cp, cq);
    root.canonicalize();
    if (r < 0) root = -root;
    return true;
}

Rational squarefree_kernel(const Rational& r) {
    if (r == 0) return 0;
    Integer n = r.get_num() * r.get_den();
    Integer k = 1;
    for (auto& [p, e] : factor(n))
        if (e % 2) k *= p;
    return Rational(n < 0 ? Integer(-k) : k);
}

Rational cubefree_kernel(const Rational& r) {
    if (r == 0) return 0;
    Integer n = r.get_num() * r.get_den() * r.get_den();
    Integer k = 1;
    for (auto& [p, e] : factor(n))
        for (unsigned i = 0; i < e % 3; ++i) k *= p;
    return Rational(k);
}

Rational pow_q(const Rational& r, int e) {
    if (e < 0) {
        if (r == 0) throw SingularMatrix("zero to a negative power");
        return pow_q(Rational(1 / r), -e);
    }
    Rational out = 1;
    for (int i = 0; i < e; ++i) out *= r;
    return out;
}

}  // namespace sp4cert
