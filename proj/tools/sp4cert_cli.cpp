#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "sp4cert/catalog.hpp"
#include "sp4cert/classify.hpp"
#include "sp4cert/errors.hpp"
#include "sp4cert/identify.hpp"
#include "sp4cert/io.hpp"
#include "sp4cert/jordan.hpp"
#include "sp4cert/sp4.hpp"

using namespace sp4cert;

namespace {

struct CliConfig {
    std::string subcommand;
    std::string input_path;
    std::string params;
    std::string conjugator;
    std::optional<unsigned> seed;
    std::string output = "text";
};

Subalgebra load_subalgebra(const CliConfig& cfg) {
    if (cfg.input_path.empty()) throw ParseError("--input is required");
    return subalgebra_from_json(read_json_file(cfg.input_path));
}

void emit(const CliConfig& cfg, const nlohmann::json& j, const std::string& text) {
    if (cfg.output == "json")
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text;
}

int verify_catalog_cmd(const CliConfig& cfg) {
    std::vector<Rational> params = cfg.params.empty() ? param_samples_from_env() : parse_rational_list(cfg.params);
    VerificationReport rep = verify_catalog(params);
    nlohmann::json j = rep.to_json();
    std::string text = rep.to_text();
    if (cfg.seed) {
        ProbeResult pr = random_subalgebra_probe(100, *cfg.seed);
        j["probe"] = {{"seed", *cfg.seed}, {"generated", pr.generated}, {"matched", pr.matched}, {"unmatched", pr.unmatched}};
        text += "probe (seed " + std::to_string(*cfg.seed) + "): " + std::to_string(pr.matched) + "/" +
                std::to_string(pr.generated) + " random subalgebras matched a catalog row\n";
        for (auto& u : pr.unmatched) text += "  unmatched: " + u + "\n";
    }
    emit(cfg, j, text);
    return rep.pass ? 0 : 1;
}

int identify_cmd(const CliConfig& cfg) {
    Subalgebra s = load_subalgebra(cfg);
    if (!is_closed(s.space)) throw NotClosed("input is not closed under the bracket");
    if (!is_solvable(s.space)) throw UnrecognizedFamily("input is not solvable");
    Identification id = identify(structure_constants(s.space));
    nlohmann::json j;
    std::string text;
    j["dim"] = s.dim();
    text += "dimension: " + std::to_string(s.dim()) + "\n";
    if (id.degraaf) {
        j["degraaf"] = id.degraaf->to_string();
        text += "de Graaf: " + id.degraaf->to_string() + "\n";
    }
    j["sw"] = id.sw.to_string();
    text += "SW: " + id.sw.to_string() + "\n";
    j["catalog"] = nlohmann::json::array();
    for (auto& m : match_catalog(s.space)) {
        std::string a = m.a ? to_string(*m.a) : "";
        j["catalog"].push_back({{"table", m.entry->table}, {"row", m.entry->row_id}, {"a", a}});
        text += "catalog: table " + std::to_string(m.entry->table) + " " + m.entry->row_id + (a.empty() ? "" : " a=" + a) +
                "\n";
    }
    if (j["catalog"].empty()) text += "catalog: no row with this signature\n";
    emit(cfg, j, text);
    return 0;
}

int invariants_cmd(const CliConfig& cfg) {
    Subalgebra s = load_subalgebra(cfg);
    if (!is_closed(s.space)) throw NotClosed("input is not closed under the bracket");
    InvariantSignature sig = signature(s.space);
    std::string text;
    for (auto& [k, v] : sig.fields()) text += k + ": " + v + "\n";
    emit(cfg, signature_to_json(sig), text);
    return 0;
}

int conjugate_cmd(const CliConfig& cfg) {
    Subalgebra s = load_subalgebra(cfg);
    if (cfg.conjugator.empty()) throw ParseError("--conjugator is required");
    NamedConjugator g = parse_conjugator(cfg.conjugator);
    if (!in_sp4_group(g.matrix)) throw NotInSp4("conjugator '" + cfg.conjugator + "' is not in Sp(4)");
    Subalgebra image{conjugate_subalgebra(g.matrix, s.space), s.ambient};
    std::cout << subalgebra_to_json(image).dump(2) << "\n";
    return 0;
}

int classify_element_cmd(const CliConfig& cfg) {
    if (cfg.input_path.empty()) throw ParseError("--input is required");
    Mat4 x = element_from_json(read_json_file(cfg.input_path));
    OrbitLabel l = classify_element(x);
    nlohmann::json j{{"table", l.table}, {"row", l.row}, {"label", l.to_string()},
                     {"jordan_type", to_string(jordan_type(x))}};
    if (l.a) j["a"] = to_string(*l.a);
    if (l.b) j["b"] = to_string(*l.b);
    emit(cfg, j,
         l.to_string() + "\njordan type: " + to_string(jordan_type(x)) + "\n");
    return 0;
}

int export_catalog_cmd(const CliConfig&) {
    std::cout << catalog_to_json(load_catalog()).dump(2) << "\n";
    return 0;
}

int run(const CliConfig& cfg) {
    if (cfg.subcommand == "verify-catalog") return verify_catalog_cmd(cfg);
    if (cfg.subcommand == "identify") return identify_cmd(cfg);
    if (cfg.subcommand == "invariants") return invariants_cmd(cfg);
    if (cfg.subcommand == "conjugate") return conjugate_cmd(cfg);
    if (cfg.subcommand == "classify-element") return classify_element_cmd(cfg);
    return export_catalog_cmd(cfg);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact certification of solvable subalgebras of sp(4, Q)"};
    app.require_subcommand(1);
    CliConfig cfg;
    unsigned seed = 0;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--output", cfg.output, "Report format")->check(CLI::IsMember({"json", "text"}));
    };
    auto* verify = app.add_subcommand("verify-catalog", "Certify every catalog row, equivalence and separation");
    verify->add_option("--params", cfg.params, "Comma-separated parameter samples (default: SP4_PARAM_SAMPLES or built-in)");
    verify->add_option("--seed", seed, "Also run a random subalgebra probe with this seed");
    add_common(verify);
    for (auto [name, help] : {std::pair{"identify", "Identify a subalgebra up to isomorphism and match catalog rows"},
                              std::pair{"invariants", "Print the conjugacy invariants of a subalgebra"},
                              std::pair{"conjugate", "Conjugate a subalgebra by a named element of Sp(4)"},
                              std::pair{"classify-element", "Sp(4)-class of a single element"}}) {
        auto* sub = app.add_subcommand(name, help);
        sub->add_option("--input", cfg.input_path, "JSON input file")->required();
        if (std::string(name) == "conjugate")
            sub->add_option("--conjugator", cfg.conjugator, "Conjugator recipe, e.g. W*shear:alpha:1/2")->required();
        add_common(sub);
    }
    add_common(app.add_subcommand("export-catalog", "Print the catalog as JSON"));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    cfg.subcommand = app.get_subcommands().front()->get_name();
    if (verify->count("--seed")) cfg.seed = seed;

    try {
        return run(cfg);
    } catch (const ParseError& e) {
        std::cerr << "parse error";
        if (e.line) std::cerr << " (line " << e.line << ", column " << e.column << ")";
        std::cerr << ": " << e.what() << "\n";
        return 2;
    } catch (const IrrationalSpectrum& e) {
        std::cerr << "irrational spectrum: " << e.what()
                  << "\nthe characteristic polynomial does not split over Q; compare characteristic polynomials "
                     "instead of eigenvalues\n";
        return 3;
    } catch (const UnrecognizedFamily& e) {
        std::cerr << "unrecognized family: " << e.what()
                  << "\nthe structure constants match no supported isomorphism class\n";
        return 3;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
