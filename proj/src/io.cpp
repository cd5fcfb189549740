#include "sp4cert/io.hpp"

#include <fstream>
#include <sstream>

#include "sp4cert/errors.hpp"
#include "sp4cert/sp4.hpp"

namespace sp4cert {

namespace {

std::pair<int, int> line_column(const std::string& text, size_t byte) {
    int line = 1, col = 1;
    for (size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

Rational entry(const nlohmann::json& e) {
    if (e.is_string()) return parse_rational(e.get<std::string>());
    if (e.is_number_integer()) return Rational(std::to_string(e.get<long long>()));
    throw ParseError("matrix entries must be Rational strings or integers");
}

}  // namespace

nlohmann::json parse_json_text(const std::string& text) {
    try {
        return nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& ex) {
        auto [line, col] = line_column(text, ex.byte == 0 ? 0 : ex.byte - 1);
        throw ParseError(std::string("invalid JSON: ") + ex.what(), line, col);
    }
}

nlohmann::json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot read '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_json_text(ss.str());
}

nlohmann::json mat_to_json(const Mat4& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (int r = 0; r < 4; ++r) {
        nlohmann::json row = nlohmann::json::array();
        for (int c = 0; c < 4; ++c) row.push_back(to_string(m(r, c)));
        rows.push_back(row);
    }
    return rows;
}

Mat4 mat_from_json(const nlohmann::json& j) {
    if (!j.is_array() || j.size() != 4) throw ParseError("matrix must have 4 rows");
    Mat4 m;
    for (int r = 0; r < 4; ++r) {
        if (!j[r].is_array() || j[r].size() != 4) throw ParseError("matrix row " + std::to_string(r + 1) + " must have 4 entries");
        for (int c = 0; c < 4; ++c) m(r, c) = entry(j[r][c]);
    }
    return m;
}

nlohmann::json subalgebra_to_json(const Subalgebra& s) {
    nlohmann::json j;
    j["ambient"] = s.ambient;
    j["basis"] = nlohmann::json::array();
    for (auto& m : s.space.basis()) j["basis"].push_back(mat_to_json(m));
    return j;
}

Subalgebra subalgebra_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("basis")) throw ParseError("subalgebra needs a \"basis\" array");
    std::string ambient = j.value("ambient", std::string("sp4"));
    if (ambient != "sp4") throw ParseError("unsupported ambient '" + ambient + "'");
    if (!j["basis"].is_array()) throw ParseError("\"basis\" must be an array");
    std::vector<Mat4> basis;
    for (auto& m : j["basis"]) {
        basis.push_back(mat_from_json(m));
        if (!in_sp4(basis.back())) throw NotInSp4("basis element " + std::to_string(basis.size()) + " is not in sp(4)");
    }
    Subspace s = echelon_span(basis);
    if (s.dim() != static_cast<int>(basis.size())) throw DependentInputs("basis elements are linearly dependent");
    return Subalgebra{s, ambient};
}

Mat4 element_from_json(const nlohmann::json& j) {
    if (j.is_object()) {
        if (!j.contains("matrix")) throw ParseError("element needs a \"matrix\" field");
        return mat_from_json(j["matrix"]);
    }
    return mat_from_json(j);
}

nlohmann::json signature_to_json(const InvariantSignature& s) {
    nlohmann::json j = nlohmann::json::object();
    for (auto& [k, v] : s.fields()) j[k] = v;
    return j;
}

}  // namespace sp4cert
