#include "doctest.h"
#include "sp4cert/catalog.hpp"
#include "sp4cert/errors.hpp"
#include "sp4cert/sp4.hpp"

using namespace sp4cert;

namespace {
const CatalogEntry& entry(const std::string& id) {
    for (auto& e : load_catalog())
        if (e.row_id == id) return e;
    throw OutOfCatalog(id);
}
}  // namespace

TEST_CASE("row counts per dimension") {
    CHECK(catalog_rows(1).size() == 8);
    CHECK(catalog_rows(2).size() == 16);
    CHECK(catalog_rows(3).size() == 19);
    CHECK(catalog_rows(4).size() == 14);
    CHECK(catalog_rows(5).size() + catalog_rows(6).size() == 8);
}

TEST_CASE("row data") {
    CHECK(entry("<T_{1,0}, X_alpha>").degraaf == "K1");
    const CatalogEntry& tb = entry("<T_{a,1}, X_beta>");
    REQUIRE(tb.equivalences.size() == 1);
    CHECK(tb.equivalences[0].param_map == "1/a");
    CHECK(entry("b").sw == "s_{6,242}");
    CHECK(entry("b").dimension == 6);
}

TEST_CASE("expressions") {
    CHECK(eval_param_expr("-2*(a+1)/(a+3)^2", 2) == Rational(-6, 25));
    CHECK(eval_param_expr("1/a", Rational(-2, 3)) == Rational(-3, 2));
    CHECK_THROWS_AS(eval_param_expr("1/a", 0), ZeroParameter);
    CHECK_THROWS_AS(eval_param_expr("2*(a", 1), ParseError);
    CHECK(eval_element_expr("T(a,1)+2*Xalpha", 3) == T(3, 1) + X(Root::Alpha) * Rational(2));
    CHECK(eval_element_expr("Xbeta-Xa2b", 0) == X(Root::Beta) - X(Root::Alpha2Beta));
    CHECK_THROWS_AS(eval_element_expr("Xgamma", 0), ParseError);
}

TEST_CASE("single rows verify") {
    EntryReport r = verify_entry(entry("<T_{a,1}, X_alpha, X_alpha+2beta>"), {2, Rational(1, 2)});
    CHECK(r.pass);
    for (auto& s : r.samples)
        for (auto& q : s.equivalences) CHECK(q.ok);
    EntryReport m2 = verify_entry(entry("<T_{1,1}, n_p>"), {});
    CHECK(m2.pass);
    CHECK(m2.samples.at(0).degraaf_found == "M2");
    EntryReport s533 = verify_entry(entry("<T_{0,1}, n>"), {});
    CHECK(s533.pass);
    CHECK(s533.samples.at(0).sw_found == "s_{5,33}");
}

TEST_CASE("inadmissible parameters are skipped") {
    EntryReport r = verify_entry(entry("<T_{a,1}, X_alpha, X_alpha+beta>"), {-3, 1});
    CHECK(r.pass);
    for (auto& s : r.samples) CHECK_FALSE(s.admissible);
}

TEST_CASE("parameter orbits") {
    const CatalogEntry& e = entry("<T_{a,1}>");
    auto orb = parameter_orbit(e, 2, {2, -2, Rational(1, 2), Rational(-1, 2), 3});
    CHECK(orb.size() == 4);
}

TEST_CASE("conjugator search") {
    const CatalogEntry& e = entry("<T_{a,1}, X_beta>");
    auto g = search_conjugator(e.subalgebra_at(2), e.subalgebra_at(Rational(1, 2)));
    REQUIRE(g);
    CHECK(conjugates_to(g->matrix, e.subalgebra_at(2), e.subalgebra_at(Rational(1, 2))));
    CHECK_FALSE(search_conjugator(entry("<X_alpha>").subalgebra_at(0), entry("<X_beta>").subalgebra_at(0)));
}

TEST_CASE("matching random subalgebras") {
    auto m = match_catalog(generated_subalgebra({T(2, 1), X(Root::Alpha)}));
    REQUIRE(m.size() == 1);
    CHECK(m[0].entry->row_id == "<T_{a,1}, X_alpha>");
    REQUIRE(m[0].a);
    CHECK(abs(*m[0].a) == 2);
    auto n = match_catalog(generated_subalgebra({X(Root::Alpha), X(Root::Beta)}));
    REQUIRE(n.size() == 1);
    CHECK(n[0].entry->row_id == "n");
    ProbeResult p = random_subalgebra_probe(30, 11);
    CHECK(p.generated == 30);
    CHECK(p.matched == p.generated);
}

TEST_CASE("catalog JSON round-trips") {
    nlohmann::json j = catalog_to_json(load_catalog());
    std::vector<CatalogEntry> back = catalog_from_json(nlohmann::json::parse(j.dump()));
    REQUIRE(back.size() == load_catalog().size());
    for (size_t i = 0; i < back.size(); ++i) {
        const CatalogEntry& a = load_catalog()[i];
        const CatalogEntry& b = back[i];
        CHECK(a.row_id == b.row_id);
        CHECK(a.excluded == b.excluded);
        CHECK(a.degraaf == b.degraaf);
        CHECK(a.sw == b.sw);
        Rational p = 7;
        CHECK(a.subalgebra_at(p) == b.subalgebra_at(p));
    }
    CHECK(catalog_to_json(back) == j);
    CHECK_THROWS_AS(catalog_from_json(nlohmann::json::parse(R"([{"row": "x"}])")), ParseError);
}
