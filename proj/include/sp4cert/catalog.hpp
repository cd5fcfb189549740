#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "sp4cert/classify.hpp"
#include "sp4cert/identify.hpp"
#include "sp4cert/lie_struct.hpp"
#include "sp4cert/sp4.hpp"

namespace sp4cert {

// ---------------------------------------------------------------- expressions

// Rational expression in the parameter a: numbers, a, + - * / ^int, parentheses.
// Throws ParseError; division by zero throws ZeroParameter.
Rational eval_param_expr(const std::string& expr, const Rational& a);

// Element of sp(4) written as a sum of terms [q*]atom with atoms
// T(<expr>,<expr>), Xalpha, Xbeta, Xab, Xa2b; e.g. "T(1,0)+Xalpha",
// "Xalpha-2*Xbeta". Throws ParseError.
Mat4 eval_element_expr(const std::string& expr, const Rational& a);

// ---------------------------------------------------------------- entries

struct CatalogEquivalence {
    std::string param_map;   // a' as an expression in a, e.g. "1/a"
    std::string conjugator;  // NamedConjugator recipe; empty means search
};

struct CatalogEntry {
    int table = 1;
    std::string row_id;
    std::string category;
    int dimension = 1;
    std::vector<std::string> basis;  // element expressions in a
    bool parametric = false;
    std::vector<Rational> excluded;  // a must avoid these values
    std::vector<CatalogEquivalence> equivalences;
    std::string degraaf;  // e.g. "L3(-a/(a+1)^2)"; empty for dimensions 5, 6
    // e.g. "s_{3,1}(A=branch(-a/(a+1)^2))"; "auto" derives it from degraaf.
    // branch(x) is the normalised root ratio for x^2 - x - x.
    std::string sw;

    bool admissible(const Rational& a) const;
    std::vector<Mat4> basis_at(const Rational& a) const;
    Subspace subalgebra_at(const Rational& a) const;
    DeGraafClass degraaf_at(const Rational& a) const;
    SWClass sw_at(const Rational& a) const;
    std::string conditions() const;
};

const std::vector<CatalogEntry>& load_catalog();
std::vector<const CatalogEntry*> catalog_rows(int dimension);

nlohmann::json catalog_to_json(const std::vector<CatalogEntry>& entries);
std::vector<CatalogEntry> catalog_from_json(const nlohmann::json& j);  // throws ParseError

// ---------------------------------------------------------------- conjugator search

// Words of length <= 3 over {W, A, J, AJ, WA} and root shears with
// z in {+-1, +-2, +-1/2}, looking for g with g from g^-1 = to.
std::optional<NamedConjugator> search_conjugator(const Subspace& from, const Subspace& to);
bool conjugates_to(const Mat4& g, const Subspace& from, const Subspace& to);

// ---------------------------------------------------------------- verification

struct EquivalenceCheck {
    std::string param_map;
    Rational from, to;
    std::string conjugator;
    std::string how;  // "explicit", "searched", "unverified (search exhausted)", "skipped (inadmissible)"
    bool ok = false;
};

struct SampleCheck {
    std::optional<Rational> a;
    bool admissible = true;
    bool in_borel = false, closed = false, dimension_ok = false, solvable = false;
    std::string degraaf_expected, degraaf_found;
    std::string sw_expected, sw_found;
    bool identification_ok = false;
    std::string family_map;  // origin of the verified map, or why none applies
    bool family_map_ok = false;
    std::vector<EquivalenceCheck> equivalences;
    std::vector<std::string> errors;
    bool pass = false;
};

struct EntryReport {
    int table = 0;
    std::string row_id;
    std::vector<SampleCheck> samples;
    bool pass = false;
};

struct SeparationCheck {
    int dimension = 0;
    std::string left, right;  // "row [a=..]"
    bool expect_equal = false;
    std::optional<std::string> witness;  // first differing signature field
    bool ok = false;
};

struct VerificationReport {
    std::vector<Rational> samples;
    std::vector<EntryReport> entries;
    std::vector<SeparationCheck> separations;
    double seconds = 0;  // wall time; kept out of the rendered report
    bool pass = false;
    nlohmann::json to_json() const;
    std::string to_text() const;
};

EntryReport verify_entry(const CatalogEntry& e, const std::vector<Rational>& params);
// All same-dimension instances: orbit-equivalent parameters of one row must
// share a signature, every other pair must differ in some field.
std::vector<SeparationCheck> verify_separations(const std::vector<CatalogEntry>& entries,
                                                const std::vector<Rational>& params);
VerificationReport verify_catalog(const std::vector<Rational>& params, unsigned threads = 0);

// Parameter values related to a by the row's equivalences, restricted to pool.
std::vector<Rational> parameter_orbit(const CatalogEntry& e, const Rational& a, const std::vector<Rational>& pool);

// Catalog rows whose signature matches s at some admissible parameter.
struct CatalogMatch {
    const CatalogEntry* entry;
    std::optional<Rational> a;
};
std::vector<CatalogMatch> match_catalog(const Subspace& s);

struct ProbeResult {
    int generated = 0;  // subalgebras of dimension <= 4 examined
    int matched = 0;
    std::vector<std::string> unmatched;  // descriptions of unmatched subalgebras
};
ProbeResult random_subalgebra_probe(int count, unsigned seed);

}  // namespace sp4cert
