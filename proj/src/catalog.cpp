#include "sp4cert/catalog.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <chrono>
#include <map>
#include <mutex>
#include <random>
#include <sstream>
#include <thread>

#include "sp4cert/errors.hpp"
#include "sp4cert/sp4.hpp"

namespace sp4cert {

// ---------------------------------------------------------------- expressions

namespace {

class ExprParser {
public:
    ExprParser(const std::string& s, const Rational& a) : s_(s), a_(a) {}

    Rational parse_all() {
        Rational v = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected character");
        return v;
    }

    Mat4 parse_element() {
        Mat4 out;
        skip();
        bool first = true;
        while (pos_ < s_.size()) {
            int sg = 1;
            skip();
            if (peek('+')) {
                ++pos_;
            } else if (peek('-')) {
                ++pos_;
                sg = -1;
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            skip();
            Rational coef = 1;
            if (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '(')) {
                coef = primary();
                skip();
                if (peek('/')) {
                    ++pos_;
                    Rational d = primary();
                    if (d == 0) throw ZeroParameter("division by zero in '" + s_ + "'");
                    coef /= d;
                }
                skip();
                if (!peek('*')) fail("expected '*' after coefficient");
                ++pos_;
                skip();
            }
            out += atom() * (coef * sg);
            first = false;
            skip();
        }
        if (first) fail("empty element");
        return out;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError(what + " in '" + s_ + "'", 1, static_cast<int>(pos_) + 1);
    }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool peek(char c) const { return pos_ < s_.size() && s_[pos_] == c; }
    bool take(const std::string& word) {
        if (s_.compare(pos_, word.size(), word) == 0) {
            pos_ += word.size();
            return true;
        }
        return false;
    }

    Rational expr() {
        Rational v = term();
        while (true) {
            skip();
            if (peek('+')) {
                ++pos_;
                v += term();
            } else if (peek('-')) {
                ++pos_;
                v -= term();
            } else {
                return v;
            }
        }
    }
    Rational term() {
        Rational v = factor();
        while (true) {
            skip();
            if (peek('*')) {
                ++pos_;
                v *= factor();
            } else if (peek('/')) {
                ++pos_;
                Rational d = factor();
                if (d == 0) throw ZeroParameter("division by zero in '" + s_ + "'");
                v /= d;
            } else {
                return v;
            }
        }
    }
    Rational factor() {
        skip();
        if (peek('-')) {
            ++pos_;
            return -factor();
        }
        if (peek('+')) {
            ++pos_;
            return factor();
        }
        Rational base = primary();
        skip();
        if (peek('^')) {
            ++pos_;
            skip();
            size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (start == pos_) fail("expected exponent");
            base = pow_q(base, std::stoi(s_.substr(start, pos_ - start)));
        }
        return base;
    }
    Rational primary() {
        skip();
        if (peek('(')) {
            ++pos_;
            Rational v = expr();
            skip();
            if (!peek(')')) fail("expected ')'");
            ++pos_;
            return v;
        }
        if (peek('a')) {
            ++pos_;
            return a_;
        }
        size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected number");
        return Rational(s_.substr(start, pos_ - start));
    }
    Mat4 atom() {
        if (take("Xalpha")) return X(Root::Alpha);
        if (take("Xbeta")) return X(Root::Beta);
        if (take("Xa2b")) return X(Root::Alpha2Beta);
        if (take("Xab")) return X(Root::AlphaBeta);
        if (take("T(")) {
            Rational x = expr();
            skip();
            if (!peek(',')) fail("expected ','");
            ++pos_;
            Rational y = expr();
            skip();
            if (!peek(')')) fail("expected ')'");
            ++pos_;
            return T(x, y);
        }
        fail("expected T(.,.), Xalpha, Xbeta, Xab or Xa2b");
    }

    const std::string& s_;
    Rational a_;
    size_t pos_ = 0;
};

// Splits "name(args)" at the first '(' outside braces.
std::pair<std::string, std::string> split_call(const std::string& s) {
    int depth = 0;
    for (size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '{') ++depth;
        if (s[i] == '}') --depth;
        if (s[i] == '(' && depth == 0) {
            if (s.back() != ')') throw ParseError("unbalanced label '" + s + "'");
            return {s.substr(0, i), s.substr(i + 1, s.size() - i - 2)};
        }
    }
    return {s, ""};
}

// Top-level comma split (ignores commas inside parentheses).
std::vector<std::string> split_args(const std::string& s) {
    std::vector<std::string> out;
    int depth = 0;
    std::string cur;
    for (char c : s) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == ',' && depth == 0) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

}  // namespace

Rational eval_param_expr(const std::string& expr, const Rational& a) { return ExprParser(expr, a).parse_all(); }

Mat4 eval_element_expr(const std::string& expr, const Rational& a) { return ExprParser(expr, a).parse_element(); }

// ---------------------------------------------------------------- entries

bool CatalogEntry::admissible(const Rational& a) const {
    if (!parametric) return true;
    if (std::find(excluded.begin(), excluded.end(), a) != excluded.end()) return false;
    try {
        if (degraaf.empty())
            (void)sw_at(a);
        else
            (void)degraaf_at(a);
        (void)basis_at(a);
    } catch (const ZeroParameter&) {
        return false;
    }
    return true;
}

std::vector<Mat4> CatalogEntry::basis_at(const Rational& a) const {
    std::vector<Mat4> out;
    for (auto& b : basis) out.push_back(eval_element_expr(b, a));
    return out;
}

Subspace CatalogEntry::subalgebra_at(const Rational& a) const { return echelon_span(basis_at(a)); }

DeGraafClass CatalogEntry::degraaf_at(const Rational& a) const {
    if (degraaf.empty()) throw OutOfCatalog("row " + row_id + " has no de Graaf class");
    auto [name, args] = split_call(degraaf);
    DeGraafClass c{name, {}};
    for (auto& e : split_args(args)) c.params.push_back(eval_param_expr(e, a));
    return c;
}

SWClass CatalogEntry::sw_at(const Rational& a) const {
    if (sw == "auto") return degraaf_to_sw(degraaf_at(a));
    auto [name, args] = split_call(sw);
    SWClass c{name, {}, ""};
    for (auto& item : split_args(args)) {
        auto eq = item.find('=');
        std::string e = eq == std::string::npos ? item : item.substr(eq + 1);
        if (e.rfind("branch(", 0) == 0) {
            Rational alpha = eval_param_expr(e.substr(7, e.size() - 8), a);
            SWClass derived = degraaf_to_sw(DeGraafClass{"L3", {alpha}});
            if (!derived.note.empty()) {
                c.note = derived.note;
                c.params.clear();
                return c;
            }
            c.params.push_back(derived.params.at(0));
        } else {
            c.params.push_back(eval_param_expr(e, a));
        }
    }
    return c;
}

std::string CatalogEntry::conditions() const {
    if (!parametric || excluded.empty()) return "";
    std::string s = "a not in {";
    for (size_t i = 0; i < excluded.size(); ++i) s += (i ? ", " : "") + to_string(excluded[i]);
    return s + "}";
}

namespace {

CatalogEntry row(int table, std::string category, std::string id, std::vector<std::string> basis, std::string dg,
                 std::string sw) {
    CatalogEntry e;
    e.table = table;
    e.category = std::move(category);
    e.row_id = std::move(id);
    e.dimension = static_cast<int>(basis.size());
    e.basis = std::move(basis);
    e.degraaf = std::move(dg);
    e.sw = std::move(sw);
    return e;
}

CatalogEntry prow(int table, std::string category, std::string id, std::vector<std::string> basis, std::string dg,
                  std::string sw, std::vector<Rational> excluded, std::vector<CatalogEquivalence> eqs) {
    CatalogEntry e = row(table, std::move(category), std::move(id), std::move(basis), std::move(dg), std::move(sw));
    e.parametric = true;
    e.excluded = std::move(excluded);
    e.equivalences = std::move(eqs);
    return e;
}

const std::vector<std::string> kT = {"T(1,0)", "T(0,1)"};
const std::vector<std::string> kNp = {"Xalpha", "Xab", "Xa2b"};
const std::vector<std::string> kN = {"Xbeta", "Xalpha", "Xab", "Xa2b"};

std::vector<std::string> cat(std::vector<std::string> a, const std::vector<std::string>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

std::vector<CatalogEntry> build_catalog() {
    const std::vector<Rational> gen{0, 1, -1};
    const std::string ss = "semisimple", nil = "nilpotent", ntjd = "non-trivial Jordan decomposition";
    const std::string both = "semisimple and nilpotent elements", noss = "no semisimple elements, not nilpotent";
    const std::string cartan = "contains a Cartan subalgebra", reg = "regular semisimple, no Cartan subalgebra",
                      nonreg = "non-regular semisimple only, no Cartan subalgebra";
    std::vector<CatalogEntry> c;

    // One-dimensional.
    c.push_back(prow(1, ss, "<T_{a,1}>", {"T(a,1)"}, "J", "n_{1,1}", gen, {{"-a", "AJ"}, {"1/a", "W"}}));
    c.push_back(row(1, ss, "<T_{1,0}>", {"T(1,0)"}, "J", "n_{1,1}"));
    c.push_back(row(1, ss, "<T_{1,1}>", {"T(1,1)"}, "J", "n_{1,1}"));
    c.push_back(row(1, nil, "<X_alpha>", {"Xalpha"}, "J", "n_{1,1}"));
    c.push_back(row(1, nil, "<X_beta>", {"Xbeta"}, "J", "n_{1,1}"));
    c.push_back(row(1, nil, "<X_alpha+X_beta>", {"Xalpha+Xbeta"}, "J", "n_{1,1}"));
    c.push_back(row(1, ntjd, "<T_{1,0}+X_alpha>", {"T(1,0)+Xalpha"}, "J", "n_{1,1}"));
    c.push_back(row(1, ntjd, "<T_{1,1}+X_beta>", {"T(1,1)+Xbeta"}, "J", "n_{1,1}"));

    // Two-dimensional.
    c.push_back(row(2, ss, "t", kT, "K1", "2n_{1,1}"));
    c.push_back(row(2, both, "<T_{3,1}, X_alpha+X_beta>", {"T(3,1)", "Xalpha+Xbeta"}, "K2", "s_{2,1}"));
    c.push_back(prow(2, both, "<T_{a,1}, X_alpha>", {"T(a,1)", "Xalpha"}, "K2", "s_{2,1}", gen, {{"-a", "AJ"}}));
    c.push_back(prow(2, both, "<T_{a,1}, X_beta>", {"T(a,1)", "Xbeta"}, "K2", "s_{2,1}", gen, {{"1/a", "J*W"}}));
    c.push_back(row(2, both, "<T_{1,0}, X_alpha>", {"T(1,0)", "Xalpha"}, "K1", "2n_{1,1}"));
    c.push_back(row(2, both, "<T_{1,0}, X_beta>", {"T(1,0)", "Xbeta"}, "K2", "s_{2,1}"));
    c.push_back(row(2, both, "<T_{1,0}, X_alpha+2beta>", {"T(1,0)", "Xa2b"}, "K2", "s_{2,1}"));
    c.push_back(row(2, both, "<T_{1,1}, X_alpha>", {"T(1,1)", "Xalpha"}, "K2", "s_{2,1}"));
    c.push_back(row(2, both, "<T_{1,1}, X_beta>", {"T(1,1)", "Xbeta"}, "K1", "2n_{1,1}"));
    c.push_back(row(2, both, "<T_{1,1}, X_alpha+beta>", {"T(1,1)", "Xab"}, "K2", "s_{2,1}"));
    c.push_back(row(2, noss, "<T_{1,1}+X_beta, X_alpha+2beta>", {"T(1,1)+Xbeta", "Xa2b"}, "K2", "s_{2,1}"));
    c.push_back(row(2, noss, "<T_{1,0}+X_alpha, X_alpha+beta>", {"T(1,0)+Xalpha", "Xab"}, "K2", "s_{2,1}"));
    c.push_back(row(2, noss, "<T_{1,0}+X_alpha, X_alpha+2beta>", {"T(1,0)+Xalpha", "Xa2b"}, "K2", "s_{2,1}"));
    c.push_back(row(2, nil, "<X_alpha, X_alpha+beta>", {"Xalpha", "Xab"}, "K1", "2n_{1,1}"));
    c.push_back(row(2, nil, "<X_alpha, X_alpha+2beta>", {"Xalpha", "Xa2b"}, "K1", "2n_{1,1}"));
    c.push_back(row(2, nil, "<X_beta+X_alpha, X_alpha+2beta>", {"Xbeta+Xalpha", "Xa2b"}, "K1", "2n_{1,1}"));

    // Three-dimensional.
    c.push_back(row(3, cartan, "<t, X_alpha>", cat(kT, {"Xalpha"}), "L3(0)", "n_{1,1}+s_{2,1}"));
    c.push_back(row(3, cartan, "<t, X_beta>", cat(kT, {"Xbeta"}), "L3(0)", "n_{1,1}+s_{2,1}"));
    c.push_back(prow(3, reg, "<T_{a,1}, X_alpha, X_alpha+beta>", {"T(a,1)", "Xalpha", "Xab"}, "L3(-2*(a+1)/(a+3)^2)",
                     "s_{3,1}(A=branch(-2*(a+1)/(a+3)^2))", {0, 1, -1, -3}, {}));
    c.push_back(row(3, reg, "<T_{-3,1}, X_alpha, X_alpha+beta>", {"T(-3,1)", "Xalpha", "Xab"}, "L4(1)",
                    "s_{3,1}(A=-1)"));
    c.push_back(prow(3, reg, "<T_{a,1}, X_alpha, X_alpha+2beta>", {"T(a,1)", "Xalpha", "Xa2b"}, "L3(-a/(a+1)^2)",
                     "s_{3,1}(A=branch(-a/(a+1)^2))", gen, {{"1/a", "W"}}));
    c.push_back(row(3, reg, "<T_{3,1}, X_alpha+X_beta, X_alpha+2beta>", {"T(3,1)", "Xalpha+Xbeta", "Xa2b"},
                    "L3(-3/16)", "s_{3,1}(A=1/3)"));
    c.push_back(row(3, nonreg, "<T_{1,0}, X_alpha, X_alpha+beta>", {"T(1,0)", "Xalpha", "Xab"}, "L3(0)",
                    "n_{1,1}+s_{2,1}"));
    c.push_back(row(3, nonreg, "<T_{1,0}, X_alpha, X_alpha+2beta>", {"T(1,0)", "Xalpha", "Xa2b"}, "L3(0)",
                    "n_{1,1}+s_{2,1}"));
    c.push_back(row(3, nonreg, "<T_{1,0}, X_alpha+beta, X_alpha+2beta>", {"T(1,0)", "Xab", "Xa2b"}, "L3(-2/9)",
                    "s_{3,1}(A=1/2)"));
    c.push_back(row(3, nonreg, "<T_{1,-1}, X_alpha+beta, X_alpha+2beta>", {"T(1,-1)", "Xab", "Xa2b"}, "L3(0)",
                    "n_{1,1}+s_{2,1}"));
    c.push_back(row(3, nonreg, "<T_{1,-1}, X_alpha, X_alpha+2beta>", {"T(1,-1)", "Xalpha", "Xa2b"}, "L4(1)",
                    "s_{3,1}(A=-1)"));
    c.push_back(row(3, nonreg, "<T_{1,-1}, X_beta, X_alpha+2beta>", {"T(1,-1)", "Xbeta", "Xa2b"}, "L2",
                    "s_{3,1}(A=1)"));
    c.push_back(row(3, nonreg, "<T_{1,1}, X_alpha, X_alpha+2beta>", {"T(1,1)", "Xalpha", "Xa2b"}, "L2",
                    "s_{3,1}(A=1)"));
    c.push_back(row(3, noss, "<T_{1,1}+X_beta, X_alpha+beta, X_alpha+2beta>", {"T(1,1)+Xbeta", "Xab", "Xa2b"},
                    "L3(-1/4)", "s_{3,2}"));
    c.push_back(row(3, noss, "<T_{1,-1}+X_alpha+beta, X_alpha, X_alpha+2beta>", {"T(1,-1)+Xab", "Xalpha", "Xa2b"},
                    "L4(1)", "s_{3,1}(A=-1)"));
    c.push_back(row(3, noss, "<T_{1,0}+X_alpha, X_alpha+beta, X_alpha+2beta>", {"T(1,0)+Xalpha", "Xab", "Xa2b"},
                    "L3(-2/9)", "s_{3,1}(A=1/2)"));
    c.push_back(row(3, nil, "n_p", kNp, "L1", "3n_{1,1}"));
    c.push_back(row(3, nil, "<X_beta, X_alpha+beta, X_alpha+2beta>", {"Xbeta", "Xab", "Xa2b"}, "L4(0)", "n_{3,1}"));
    c.push_back(row(3, nil, "<X_alpha+X_beta, X_alpha+beta, X_alpha+2beta>", {"Xalpha+Xbeta", "Xab", "Xa2b"}, "L4(0)",
                    "n_{3,1}"));

    // Four-dimensional.
    c.push_back(row(4, cartan, "<t, X_alpha, X_alpha+beta>", cat(kT, {"Xalpha", "Xab"}), "M8", "s_{4,12}"));
    c.push_back(row(4, cartan, "<t, X_alpha, X_alpha+2beta>", cat(kT, {"Xalpha", "Xa2b"}), "M8", "s_{4,12}"));
    c.push_back(prow(4, reg, "<T_{a,1}, n_p>", cat({"T(a,1)"}, kNp),
                     "M6(4*a/(27*(a+1)^2),-2*(a^2+4*a+1)/(9*(a+1)^2))", "auto", gen, {{"1/a", "W"}}));
    c.push_back(prow(4, reg, "<T_{a,1}, X_beta, X_alpha+beta, X_alpha+2beta>", {"T(a,1)", "Xbeta", "Xab", "Xa2b"},
                     "M13((1-a^2)/(4*a^2))", "s_{4,8}(A=branch((1-a^2)/(4*a^2)))", gen, {{"-a", "A"}}));
    c.push_back(row(4, reg, "<T_{3,1}, X_alpha+X_beta, X_alpha+beta, X_alpha+2beta>",
                    {"T(3,1)", "Xalpha+Xbeta", "Xab", "Xa2b"}, "M13(-2/9)", "s_{4,8}(A=1/2)"));
    c.push_back(row(4, nonreg, "<T_{0,1}, n_p>", cat({"T(0,1)"}, kNp), "M6(0,-2/9)", "n_{1,1}+s_{3,1}(A=1/2)"));
    c.push_back(row(4, nonreg, "<T_{0,1}, X_beta, X_alpha+beta, X_alpha+2beta>", {"T(0,1)", "Xbeta", "Xab", "Xa2b"},
                    "M14(1)", "s_{4,6}"));
    c.push_back(row(4, nonreg, "<T_{1,0}, X_beta, X_alpha+beta, X_alpha+2beta>", {"T(1,0)", "Xbeta", "Xab", "Xa2b"},
                    "M12", "s_{4,8}(A=1)"));
    c.push_back(row(4, nonreg, "<T_{1,1}, n_p>", cat({"T(1,1)"}, kNp), "M2", "s_{4,3}(A=1,B=1)"));
    c.push_back(row(4, nonreg, "<T_{1,-1}, n_p>", cat({"T(1,-1)"}, kNp), "M7(0,1)", "n_{1,1}+s_{3,1}(A=-1)"));
    c.push_back(row(4, nonreg, "<T_{1,1}, X_beta, X_alpha+beta, X_alpha+2beta>", {"T(1,1)", "Xbeta", "Xab", "Xa2b"},
                    "M13(0)", "s_{4,11}"));
    c.push_back(row(4, noss, "<T_{1,1}+X_beta, X_alpha, X_alpha+beta, X_alpha+2beta>",
                    {"T(1,1)+Xbeta", "Xalpha", "Xab", "Xa2b"}, "M6(1/27,-1/3)", "s_{4,2}"));
    c.push_back(row(4, noss, "<T_{1,0}+X_alpha, X_beta, X_alpha+beta, X_alpha+2beta>",
                    {"T(1,0)+Xalpha", "Xbeta", "Xab", "Xa2b"}, "M13(-1/4)", "s_{4,10}"));
    c.push_back(row(4, nil, "n", kN, "M7(0,0)", "n_{4,1}"));

    // Five- and six-dimensional.
    c.push_back(row(5, cartan, "<t, n_p>", cat(kT, kNp), "", "s_{5,41}(A=1/2,B=1/2)"));
    c.push_back(row(5, cartan, "<t, X_beta, X_alpha+beta, X_alpha+2beta>", cat(kT, {"Xbeta", "Xab", "Xa2b"}), "",
                    "s_{5,44}"));
    c.push_back(prow(5, reg, "<T_{a,1}, n>", cat({"T(a,1)"}, kN), "", "s_{5,35}(A=2/(a-1))", gen, {}));
    c.push_back(row(5, nonreg, "<T_{1,-1}, n>", cat({"T(1,-1)"}, kN), "", "s_{5,35}(A=-1)"));
    c.push_back(row(5, nonreg, "<T_{1,1}, n>", cat({"T(1,1)"}, kN), "", "s_{5,37}"));
    c.push_back(row(5, nonreg, "<T_{1,0}, n>", cat({"T(1,0)"}, kN), "", "s_{5,36}"));
    c.push_back(row(5, nonreg, "<T_{0,1}, n>", cat({"T(0,1)"}, kN), "", "s_{5,33}"));
    c.push_back(row(5, cartan, "b", cat(kT, kN), "", "s_{6,242}"));
    return c;
}

}  // namespace

const std::vector<CatalogEntry>& load_catalog() {
    static const std::vector<CatalogEntry> entries = build_catalog();
    return entries;
}

std::vector<const CatalogEntry*> catalog_rows(int dimension) {
    std::vector<const CatalogEntry*> out;
    for (auto& e : load_catalog())
        if (e.dimension == dimension) out.push_back(&e);
    return out;
}

// ---------------------------------------------------------------- JSON

namespace {

// Coefficient form of an element expression: {"T": [x, y], "Xalpha": q, ...}.
nlohmann::json element_terms(const std::string& expr) {
    nlohmann::json j = nlohmann::json::object();
    std::string s;
    for (char ch : expr)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    size_t pos = 0;
    while (pos < s.size()) {
        std::string sign = "";
        if (s[pos] == '+' || s[pos] == '-') {
            if (s[pos] == '-') sign = "-";
            ++pos;
        }
        std::string coef = "1";
        size_t star = s.find('*', pos);
        size_t nextx = s.find_first_of("TX", pos);
        if (star != std::string::npos && star < nextx) {
            coef = s.substr(pos, star - pos);
            pos = star + 1;
        }
        if (s.compare(pos, 2, "T(") == 0) {
            int depth = 0;
            size_t end = pos + 1, comma = std::string::npos;
            for (; end < s.size(); ++end) {
                if (s[end] == '(') ++depth;
                if (s[end] == ')' && --depth == 0) break;
                if (s[end] == ',' && depth == 1) comma = end;
            }
            if (end >= s.size() || comma == std::string::npos) throw ParseError("malformed T(.,.) in '" + expr + "'");
            std::string x = s.substr(pos + 2, comma - pos - 2), y = s.substr(comma + 1, end - comma - 1);
            std::string scale = sign + (coef == "1" ? "" : coef + "*");
            j["T"] = {scale.empty() ? x : scale + "(" + x + ")", scale.empty() ? y : scale + "(" + y + ")"};
            pos = end + 1;
        } else {
            size_t end = s.find_first_of("+-", pos);
            std::string name = s.substr(pos, end == std::string::npos ? std::string::npos : end - pos);
            j[name] = sign + coef;
            pos = end == std::string::npos ? s.size() : end;
        }
    }
    return j;
}

std::string element_from_terms(const nlohmann::json& j) {
    if (!j.is_object()) throw ParseError("basis element must be an object of terms");
    std::string s;
    for (auto& [key, val] : j.items()) {
        if (!s.empty()) s += "+";
        if (key == "T") {
            if (!val.is_array() || val.size() != 2) throw ParseError("T term needs two entries");
            s += "T(" + val[0].get<std::string>() + "," + val[1].get<std::string>() + ")";
        } else {
            static const char* names[] = {"Xalpha", "Xbeta", "Xab", "Xa2b"};
            if (std::find(std::begin(names), std::end(names), key) == std::end(names))
                throw ParseError("unknown basis term '" + key + "'");
            std::string c = val.get<std::string>();
            bool neg = !c.empty() && c[0] == '-';
            if (neg) {
                if (!s.empty()) s.pop_back();
                s += "-";
                c = c.substr(1);
            }
            s += c + "*" + key;
        }
    }
    return s;
}

}  // namespace

nlohmann::json catalog_to_json(const std::vector<CatalogEntry>& entries) {
    nlohmann::json out = nlohmann::json::array();
    for (auto& e : entries) {
        nlohmann::json j;
        j["table"] = e.table;
        j["row"] = e.row_id;
        j["category"] = e.category;
        j["dim"] = e.dimension;
        j["basis"] = nlohmann::json::array();
        for (auto& b : e.basis) j["basis"].push_back(element_terms(b));
        j["parametric"] = e.parametric;
        j["conditions"] = e.conditions();
        j["excluded"] = nlohmann::json::array();
        for (auto& x : e.excluded) j["excluded"].push_back(to_string(x));
        j["equiv"] = nlohmann::json::array();
        for (auto& q : e.equivalences) j["equiv"].push_back({{"param", q.param_map}, {"conjugator", q.conjugator}});
        j["degraaf"] = e.degraaf;
        j["sw"] = e.sw;
        j["isomap"] = e.dimension <= 4 ? "identification basis onto " + e.degraaf + ", then family map to SW"
                                        : "identification basis onto the SW presentation";
        out.push_back(j);
    }
    return out;
}

std::vector<CatalogEntry> catalog_from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw ParseError("catalog JSON must be an array");
    std::vector<CatalogEntry> out;
    try {
        for (auto& r : j) {
            CatalogEntry e;
            e.table = r.at("table").get<int>();
            e.row_id = r.at("row").get<std::string>();
            e.category = r.value("category", "");
            e.dimension = r.at("dim").get<int>();
            for (auto& b : r.at("basis")) e.basis.push_back(element_from_terms(b));
            if (static_cast<int>(e.basis.size()) != e.dimension)
                throw ParseError("row " + e.row_id + ": basis size disagrees with dim");
            e.parametric = r.value("parametric", false);
            for (auto& x : r.value("excluded", nlohmann::json::array())) e.excluded.push_back(parse_rational(x.get<std::string>()));
            for (auto& q : r.value("equiv", nlohmann::json::array()))
                e.equivalences.push_back({q.at("param").get<std::string>(), q.value("conjugator", "")});
            e.degraaf = r.value("degraaf", "");
            e.sw = r.at("sw").get<std::string>();
            out.push_back(e);
        }
    } catch (const nlohmann::json::exception& ex) {
        throw ParseError(std::string("catalog JSON: ") + ex.what());
    }
    return out;
}

// ---------------------------------------------------------------- conjugator search

bool conjugates_to(const Mat4& g, const Subspace& from, const Subspace& to) {
    return conjugate_subalgebra(g, from) == to;
}

namespace {

struct Letter {
    std::string name;
    Mat4 m;
};

const std::vector<Letter>& search_alphabet() {
    static const std::vector<Letter> letters = [] {
        std::vector<Letter> out;
        for (const char* w : {"W", "A", "J", "AJ", "WA"}) out.push_back({w, parse_conjugator(w).matrix});
        for (Root r : kPositiveRoots)
            for (Rational z : {Rational(1), Rational(-1), Rational(2), Rational(-2), Rational(1, 2), Rational(-1, 2)}) {
                std::string name = "shear:" + root_name(r) + ":" + to_string(z);
                out.push_back({name, shear(r, z)});
            }
        return out;
    }();
    return letters;
}

}  // namespace

std::optional<NamedConjugator> search_conjugator(const Subspace& from, const Subspace& to) {
    if (from.dim() != to.dim()) return std::nullopt;
    if (from == to) return NamedConjugator{"I", Mat4::identity()};
    const auto& al = search_alphabet();
    for (auto& x : al)
        if (conjugates_to(x.m, from, to)) return NamedConjugator{x.name, x.m};
    for (auto& x : al)
        for (auto& y : al) {
            Mat4 g = x.m * y.m;
            if (conjugates_to(g, from, to)) return NamedConjugator{x.name + "*" + y.name, g};
        }
    for (auto& x : al)
        for (auto& y : al) {
            Mat4 xy = x.m * y.m;
            for (auto& z : al) {
                Mat4 g = xy * z.m;
                if (conjugates_to(g, from, to)) return NamedConjugator{x.name + "*" + y.name + "*" + z.name, g};
            }
        }
    return std::nullopt;
}

// ---------------------------------------------------------------- verification

namespace {

bool trivially_abelian_family(const std::string& f) { return f == "J" || f == "K1" || f == "L1"; }

void check_identification(const CatalogEntry& e, const Rational& a, const Subspace& s, SampleCheck& out) {
    StructureConstants sc = structure_constants(s);
    if (e.dimension <= 4) {
        DeGraafClass expected = e.degraaf_at(a);
        out.degraaf_expected = expected.to_string();
        QMat basis;
        DeGraafClass found = identify_degraaf(sc, &basis);
        out.degraaf_found = found.to_string();
        SWClass sw_expected = e.sw_at(a);
        SWClass sw_found = degraaf_to_sw(found);
        out.sw_expected = sw_expected.to_string();
        out.sw_found = sw_found.to_string();
        out.identification_ok = found == expected && sw_found == sw_expected;
        if (!sw_found.note.empty()) {
            out.family_map = "none (parameter not rational)";
            out.family_map_ok = true;
        } else if (trivially_abelian_family(found.family)) {
            out.family_map = "identity (abelian)";
            out.family_map_ok = true;
        } else if (auto fm = verified_family_map(found)) {
            out.family_map = fm->origin + (fm->im ? " (over Q(i))" : "");
            out.family_map_ok = check_family_map(found, *fm) && fm->target == sw_found;
        } else {
            out.family_map = "missing";
            out.family_map_ok = false;
        }
    } else {
        SWClass expected = e.sw_at(a);
        out.sw_expected = expected.to_string();
        QMat basis;
        SWClass found = identify_sw_high(sc, &basis);
        out.sw_found = found.to_string();
        out.identification_ok = found == expected;
        out.family_map = "identification basis";
        out.family_map_ok = verify_isomorphism(sc, sw_sc(found), basis);
    }
}

}  // namespace

EntryReport verify_entry(const CatalogEntry& e, const std::vector<Rational>& params) {
    EntryReport rep;
    rep.table = e.table;
    rep.row_id = e.row_id;
    std::vector<std::optional<Rational>> points;
    if (e.parametric)
        for (auto& p : params) points.push_back(p);
    else
        points.push_back(std::nullopt);
    rep.pass = true;
    for (auto& pt : points) {
        SampleCheck sc;
        sc.a = pt;
        Rational a = pt.value_or(Rational(0));
        if (pt && !e.admissible(a)) {
            sc.admissible = false;
            sc.pass = true;
            rep.samples.push_back(sc);
            continue;
        }
        try {
            auto basis = e.basis_at(a);
            sc.in_borel = std::all_of(basis.begin(), basis.end(), [](const Mat4& m) { return in_borel(m); });
            Subspace s = echelon_span(basis);
            sc.dimension_ok = s.dim() == e.dimension;
            sc.closed = is_closed(s);
            sc.solvable = sc.closed && is_solvable(s);
            if (sc.closed) check_identification(e, a, s, sc);
            for (auto& q : e.equivalences) {
                EquivalenceCheck ec;
                ec.param_map = q.param_map;
                ec.from = a;
                try {
                    ec.to = eval_param_expr(q.param_map, a);
                } catch (const ZeroParameter&) {
                    ec.how = "skipped (inadmissible)";
                    ec.ok = true;
                    sc.equivalences.push_back(ec);
                    continue;
                }
                if (!e.admissible(ec.to)) {
                    ec.how = "skipped (inadmissible)";
                    ec.ok = true;
                    sc.equivalences.push_back(ec);
                    continue;
                }
                Subspace target = e.subalgebra_at(ec.to);
                if (!q.conjugator.empty()) {
                    NamedConjugator g = parse_conjugator(q.conjugator);
                    if (in_sp4_group(g.matrix) && conjugates_to(g.matrix, s, target)) {
                        ec.conjugator = g.name;
                        ec.how = "explicit";
                        ec.ok = true;
                    }
                }
                if (!ec.ok) {
                    if (auto g = search_conjugator(s, target)) {
                        ec.conjugator = g->name;
                        ec.how = "searched";
                        ec.ok = true;
                    } else {
                        ec.how = "unverified (search exhausted)";
                    }
                }
                sc.equivalences.push_back(ec);
            }
        } catch (const Error& ex) {
            sc.errors.push_back(ex.what());
        }
        sc.pass = sc.errors.empty() && sc.in_borel && sc.dimension_ok && sc.closed && sc.solvable &&
                  sc.identification_ok && sc.family_map_ok &&
                  std::all_of(sc.equivalences.begin(), sc.equivalences.end(), [](auto& q) { return q.ok; });
        rep.pass = rep.pass && sc.pass;
        rep.samples.push_back(sc);
    }
    return rep;
}

std::vector<Rational> parameter_orbit(const CatalogEntry& e, const Rational& a, const std::vector<Rational>& pool) {
    std::vector<Rational> seen{a};
    for (size_t i = 0; i < seen.size() && seen.size() < 64; ++i)
        for (auto& q : e.equivalences) {
            try {
                Rational b = eval_param_expr(q.param_map, seen[i]);
                if (std::find(seen.begin(), seen.end(), b) == seen.end()) seen.push_back(b);
            } catch (const ZeroParameter&) {
            }
        }
    std::vector<Rational> out;
    for (auto& p : pool)
        if (std::find(seen.begin(), seen.end(), p) != seen.end()) out.push_back(p);
    return out;
}

namespace {

template <typename F>
void parallel_for(size_t n, unsigned threads, F&& f) {
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<size_t>(n, 1)));
    std::atomic<size_t> next{0};
    auto work = [&] {
        for (size_t i = next++; i < n; i = next++) f(i);
    };
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();
}

struct Instance {
    const CatalogEntry* entry;
    std::optional<Rational> a;
    InvariantSignature sig;
    std::string label() const {
        return entry->row_id + (a ? " [a=" + to_string(*a) + "]" : std::string());
    }
};

std::vector<Instance> instances(const std::vector<CatalogEntry>& entries, const std::vector<Rational>& params) {
    std::vector<Instance> out;
    for (auto& e : entries) {
        if (!e.parametric) {
            out.push_back({&e, std::nullopt, {}});
            continue;
        }
        for (auto& p : params)
            if (e.admissible(p)) out.push_back({&e, p, {}});
    }
    return out;
}

std::vector<SeparationCheck> separations_of(std::vector<Instance>& inst, const std::vector<Rational>& params,
                                            unsigned threads) {
    parallel_for(inst.size(), threads, [&](size_t i) {
        inst[i].sig = signature(inst[i].entry->subalgebra_at(inst[i].a.value_or(Rational(0))));
    });
    std::vector<SeparationCheck> out;
    for (size_t i = 0; i < inst.size(); ++i)
        for (size_t j = i + 1; j < inst.size(); ++j) {
            if (inst[i].entry->dimension != inst[j].entry->dimension) continue;
            SeparationCheck c;
            c.dimension = inst[i].entry->dimension;
            c.left = inst[i].label();
            c.right = inst[j].label();
            if (inst[i].entry == inst[j].entry && inst[i].a) {
                auto orb = parameter_orbit(*inst[i].entry, *inst[i].a, params);
                c.expect_equal = std::find(orb.begin(), orb.end(), *inst[j].a) != orb.end();
            }
            c.witness = first_difference(inst[i].sig, inst[j].sig);
            c.ok = c.expect_equal ? !c.witness : c.witness.has_value();
            out.push_back(c);
        }
    return out;
}

}  // namespace

std::vector<SeparationCheck> verify_separations(const std::vector<CatalogEntry>& entries,
                                                const std::vector<Rational>& params) {
    auto inst = instances(entries, params);
    return separations_of(inst, params, 1);
}

VerificationReport verify_catalog(const std::vector<Rational>& params, unsigned threads) {
    auto t0 = std::chrono::steady_clock::now();
    VerificationReport rep;
    rep.samples = params;
    const auto& cat = load_catalog();
    rep.entries.resize(cat.size());
    parallel_for(cat.size(), threads, [&](size_t i) { rep.entries[i] = verify_entry(cat[i], params); });
    auto inst = instances(cat, params);
    rep.separations = separations_of(inst, params, threads);
    rep.pass = std::all_of(rep.entries.begin(), rep.entries.end(), [](auto& e) { return e.pass; }) &&
               std::all_of(rep.separations.begin(), rep.separations.end(), [](auto& s) { return s.ok; });
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

nlohmann::json VerificationReport::to_json() const {
    nlohmann::json j;
    j["samples"] = nlohmann::json::array();
    for (auto& s : samples) j["samples"].push_back(to_string(s));
    j["pass"] = pass;
    j["entries"] = nlohmann::json::array();
    for (auto& e : entries) {
        nlohmann::json je{{"table", e.table}, {"row", e.row_id}, {"pass", e.pass}};
        je["samples"] = nlohmann::json::array();
        for (auto& s : e.samples) {
            nlohmann::json js;
            js["a"] = s.a ? nlohmann::json(to_string(*s.a)) : nlohmann::json(nullptr);
            js["admissible"] = s.admissible;
            if (s.admissible) {
                js["in_borel"] = s.in_borel;
                js["closed"] = s.closed;
                js["dimension_ok"] = s.dimension_ok;
                js["solvable"] = s.solvable;
                js["degraaf"] = {{"expected", s.degraaf_expected}, {"found", s.degraaf_found}};
                js["sw"] = {{"expected", s.sw_expected}, {"found", s.sw_found}};
                js["identification_ok"] = s.identification_ok;
                js["family_map"] = {{"origin", s.family_map}, {"ok", s.family_map_ok}};
                js["equivalences"] = nlohmann::json::array();
                for (auto& q : s.equivalences)
                    js["equivalences"].push_back({{"param", q.param_map},
                                                  {"from", to_string(q.from)},
                                                  {"to", to_string(q.to)},
                                                  {"conjugator", q.conjugator},
                                                  {"how", q.how},
                                                  {"ok", q.ok}});
                js["errors"] = s.errors;
            }
            js["pass"] = s.pass;
            je["samples"].push_back(js);
        }
        j["entries"].push_back(je);
    }
    j["separations"] = nlohmann::json::array();
    for (auto& s : separations)
        j["separations"].push_back({{"dim", s.dimension},
                                    {"left", s.left},
                                    {"right", s.right},
                                    {"expect_equal", s.expect_equal},
                                    {"witness", s.witness ? nlohmann::json(*s.witness) : nlohmann::json(nullptr)},
                                    {"ok", s.ok}});
    return j;
}

std::string VerificationReport::to_text() const {
    std::ostringstream o;
    o << "samples:";
    for (auto& s : samples) o << " " << to_string(s);
    o << "\n\n";
    for (auto& e : entries) {
        int checked = 0, skipped = 0;
        std::string conj, map;
        for (auto& s : e.samples) {
            if (!s.admissible) {
                ++skipped;
                continue;
            }
            ++checked;
            for (auto& q : s.equivalences)
                if (q.ok && !q.conjugator.empty() && conj.find(q.conjugator) == std::string::npos)
                    conj += (conj.empty() ? "" : ",") + q.conjugator;
            if (map.empty()) map = s.family_map;
        }
        const SampleCheck* first = nullptr;
        for (auto& s : e.samples)
            if (s.admissible) {
                first = &s;
                break;
            }
        o << (e.pass ? "PASS " : "FAIL ") << "table " << e.table << "  " << e.row_id;
        if (first) {
            if (!first->degraaf_found.empty()) o << "  " << first->degraaf_found;
            o << "  " << first->sw_found;
        }
        o << "  map: " << map;
        if (!conj.empty()) o << "  conj: " << conj;
        o << "  (" << checked << " checked";
        if (skipped) o << ", " << skipped << " inadmissible";
        o << ")\n";
        for (auto& s : e.samples) {
            if (s.pass) continue;
            o << "    a=" << (s.a ? to_string(*s.a) : "-") << ":";
            if (!s.in_borel) o << " not-in-borel";
            if (!s.dimension_ok) o << " wrong-dimension";
            if (!s.closed) o << " not-closed";
            if (!s.solvable) o << " not-solvable";
            if (!s.identification_ok)
                o << " identification(expected " << s.degraaf_expected << " " << s.sw_expected << ", found "
                  << s.degraaf_found << " " << s.sw_found << ")";
            if (!s.family_map_ok) o << " family-map(" << s.family_map << ")";
            for (auto& q : s.equivalences)
                if (!q.ok) o << " equivalence(" << q.param_map << ": " << q.how << ")";
            for (auto& err : s.errors) o << " error(" << err << ")";
            o << "\n";
        }
    }
    int ok = 0, bad = 0;
    for (auto& s : separations) (s.ok ? ok : bad)++;
    o << "\nseparations: " << ok << " ok, " << bad << " failed\n";
    for (auto& s : separations)
        if (!s.ok)
            o << "  FAIL dim " << s.dimension << ": " << s.left << " vs " << s.right
              << (s.expect_equal ? " (should agree, differ in " + s.witness.value_or("?") + ")" : " (collide)") << "\n";
    o << "\n" << (pass ? "catalog verified" : "catalog verification FAILED") << "\n";
    return o.str();
}

// ---------------------------------------------------------------- matching

namespace {

const InvariantSignature& fixed_row_signature(const CatalogEntry& e) {
    static std::mutex mu;
    static std::map<const CatalogEntry*, InvariantSignature> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(&e);
    if (it == cache.end()) it = cache.emplace(&e, signature(e.subalgebra_at(0))).first;
    return it->second;
}

// Values of a for which T_{a,1} has the eigenvalue ratios of the
// non-nilpotent direction of s.
std::vector<Rational> parameter_candidates(const Subspace& s) {
    Subspace v = nilpotent_subspace(s);
    if (s.dim() - v.dim() != 1) return {};
    Mat4 y = Mat4::from_flat(complement_basis(s.space(), v.space()).at(0));
    std::vector<Rational> mags;
    try {
        for (auto& r : rational_roots(char_poly(y)))
            if (r.root > 0) mags.push_back(r.root);
    } catch (const Error&) {
        return {};
    }
    std::vector<Rational> out;
    for (auto& p : mags)
        for (auto& q : mags)
            if (p != q)
                for (int sg : {1, -1}) out.push_back(sg * p / q);
    return out;
}

}  // namespace

std::vector<CatalogMatch> match_catalog(const Subspace& s) {
    std::vector<CatalogMatch> out;
    InvariantSignature sig = signature(s);
    auto cands = parameter_candidates(s);
    for (auto* e : catalog_rows(s.dim())) {
        if (!e->parametric) {
            if (fixed_row_signature(*e) == sig) out.push_back({e, std::nullopt});
            continue;
        }
        for (auto& a : cands) {
            if (!e->admissible(a)) continue;
            if (signature(e->subalgebra_at(a)) == sig) {
                out.push_back({e, a});
                break;
            }
        }
    }
    return out;
}

ProbeResult random_subalgebra_probe(int count, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> pick(0, 9);
    const std::vector<Rational> vals{1, -1, 2, -2, 3, Rational(1, 2)};
    const std::vector<Mat4> bb{T(1, 0), T(0, 1), X(Root::Alpha), X(Root::Beta), X(Root::AlphaBeta), X(Root::Alpha2Beta)};
    ProbeResult res;
    for (int attempt = 0; res.generated < count && attempt < 20 * count; ++attempt) {
        int gens = 1 + pick(rng) % 2;
        std::vector<Mat4> seed_elems;
        for (int g = 0; g < gens; ++g) {
            Mat4 m;
            for (auto& b : bb)
                if (pick(rng) < 4) m += b * vals[pick(rng) % vals.size()];
            if (!m.is_zero()) seed_elems.push_back(m);
        }
        if (seed_elems.empty()) continue;
        Subspace s = generated_subalgebra(seed_elems);
        if (s.dim() == 0 || s.dim() > 4) continue;
        ++res.generated;
        if (!match_catalog(s).empty()) {
            ++res.matched;
        } else {
            std::string d = "dim " + std::to_string(s.dim()) + " generated by";
            for (auto& m : seed_elems) d += " " + m.to_string();
            res.unmatched.push_back(d);
        }
    }
    return res;
}

}  // namespace sp4cert
