#include "cycloschur/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace cycloschur {

JsonInputError::JsonInputError(const std::string& what, std::size_t line)
    : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line) {}

namespace {

std::size_t line_of(const std::string& text, std::size_t byte) {
    byte = std::min(byte, text.size());
    return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(byte), '\n'));
}

Rational rational_from_json(const Json& j) {
    if (j.is_number_integer()) return Rational(integer_from_json(j));
    if (!j.is_string()) throw JsonInputError("expected an integer string, got " + std::string(j.type_name()), 0);
    const auto& s = j.get_ref<const std::string&>();
    Rational r;
    if (s.empty() || r.set_str(s, 10) != 0) throw JsonInputError("'" + s + "' is not an exact number", 0);
    r.canonicalize();
    return r;
}

std::string rational_text(const Rational& r) { return r.get_str(); }

Arc arc_from_json(const Json& j, const char* field) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_string() || !j[1].is_string())
        throw JsonInputError(std::string("each entry of '") + field + "' must be a pair of vertex names", 0);
    return {j[0].get<std::string>(), j[1].get<std::string>()};
}

}  // namespace

Json parse_json_text(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw JsonInputError(e.what(), line_of(text, e.byte == 0 ? 0 : e.byte - 1));
    }
}

Json integer_to_json(const Integer& v) { return v.get_str(); }

Integer integer_from_json(const Json& j) {
    if (j.is_number_unsigned()) return Integer(std::to_string(j.get<std::uint64_t>()));
    if (j.is_number_integer()) return Integer(std::to_string(j.get<std::int64_t>()));
    if (!j.is_string()) throw JsonInputError("expected an integer, got " + std::string(j.type_name()), 0);
    const auto& s = j.get_ref<const std::string&>();
    Integer v;
    if (s.empty() || v.set_str(s, 10) != 0) throw JsonInputError("'" + s + "' is not an integer", 0);
    return v;
}

Json matrix_to_json(const RationalMatrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(rational_text(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

namespace {

// Byte offset of the opening bracket of row `row` in a top-level array.
std::size_t row_offset(const std::string& text, std::size_t row) {
    int depth = 0;
    bool in_string = false;
    std::size_t seen = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (in_string) {
            if (c == '\\') ++i;
            else if (c == '"') in_string = false;
            continue;
        }
        if (c == '"') in_string = true;
        else if (c == '[') {
            if (++depth == 2 && seen++ == row) return i;
        } else if (c == ']') --depth;
    }
    return text.size();
}

RationalMatrix matrix_rows_from_json(const Json& j, std::size_t& current_row) {
    if (!j.is_array()) throw JsonInputError("a matrix must be an array of rows", 0);
    const std::size_t rows = j.size();
    const std::size_t cols = rows == 0 ? 0 : (j[0].is_array() ? j[0].size() : 0);
    RationalMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        current_row = i;
        if (!j[i].is_array()) throw JsonInputError("row " + std::to_string(i) + " is not an array", 0);
        if (j[i].size() != cols)
            throw JsonInputError("row " + std::to_string(i) + " has " + std::to_string(j[i].size()) +
                                     " entries, expected " + std::to_string(cols), 0);
        for (std::size_t c = 0; c < cols; ++c) m(i, c) = rational_from_json(j[i][c]);
    }
    return m;
}

}  // namespace

RationalMatrix matrix_from_json(const Json& j) {
    std::size_t row = 0;
    return matrix_rows_from_json(j, row);
}

RationalMatrix read_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw JsonInputError("cannot open '" + path + "'", 0);
    std::stringstream buf;
    buf << in.rdbuf();
    const std::string text = buf.str();
    Json j;
    try {
        j = parse_json_text(text);
    } catch (const JsonInputError& e) {
        throw JsonInputError(path + ": " + e.what(), e.line());
    }
    std::size_t row = 0;
    try {
        return matrix_rows_from_json(j, row);
    } catch (const JsonInputError& e) {
        const std::size_t line = j.is_array() ? line_of(text, row_offset(text, row)) : 1;
        throw JsonInputError(path + ": " + e.what(), line);
    }
}

Json network_to_json(const NetworkInstance& instance) {
    Json out;
    out["vertices"] = instance.vertices();
    Json tree = Json::array(), edges = Json::array();
    for (const auto& [u, v] : instance.tree()) tree.push_back({u, v});
    for (const auto& [u, v] : instance.edges()) edges.push_back({u, v});
    out["tree"] = std::move(tree);
    out["edges"] = std::move(edges);
    return out;
}

NetworkInstance network_from_json(const Json& j) {
    if (!j.is_object()) throw JsonInputError("a network instance must be an object", 0);
    for (const char* key : {"vertices", "tree", "edges"})
        if (!j.contains(key) || !j[key].is_array()) throw JsonInputError(std::string("missing array '") + key + "'", 0);
    std::vector<std::string> vertices;
    for (const auto& v : j["vertices"]) {
        if (!v.is_string()) throw JsonInputError("vertex names must be strings", 0);
        vertices.push_back(v.get<std::string>());
    }
    std::vector<Arc> tree, edges;
    for (const auto& a : j["tree"]) tree.push_back(arc_from_json(a, "tree"));
    for (const auto& a : j["edges"]) edges.push_back(arc_from_json(a, "edges"));
    return NetworkInstance(std::move(vertices), std::move(tree), std::move(edges));
}

Json coefficients_to_json(const std::vector<Integer>& coeffs) {
    Json out = Json::array();
    for (const auto& c : coeffs) {
        if (c.fits_slong_p()) out.push_back(c.get_si());
        else out.push_back(c.get_str());
    }
    return out;
}

Json polynomial_to_json(const IntPolynomial& p) { return coefficients_to_json(p.coeffs()); }

Json partition_to_json(const Partition& lambda) { return lambda.parts(); }

Json schur_row_to_json(std::uint64_t n, const Partition& lambda, const Integer& value) {
    Json row;
    row["n"] = n;
    row["lambda"] = partition_to_json(lambda);
    row["value"] = value.fits_slong_p() ? Json(value.get_si()) : Json(value.get_str());
    return row;
}

Json basis_pair_to_json(const BasisPair& pair) {
    Json out;
    out["first"] = pair.first;
    out["second"] = pair.second;
    out["first_abs_det"] = rational_text(pair.first_abs_det);
    out["second_abs_det"] = rational_text(pair.second_abs_det);
    return out;
}

Json verdict_to_json(const TheoremVerdict& verdict) {
    Json out;
    out["schema"] = "1";
    out["n"] = verdict.n;
    out["max_part"] = verdict.max_part;
    out["star"] = verdict.star.satisfied;

    Json direct;
    direct["pass"] = verdict.direct.pass;
    direct["complete"] = verdict.direct.complete;
    direct["partitions"] = verdict.direct.partitions;
    if (verdict.direct.counterexample) {
        const auto& [lambda, value] = *verdict.direct.counterexample;
        direct["counterexample"] = schur_row_to_json(verdict.n, lambda, value);
    }
    out["direct"] = std::move(direct);

    Json structural;
    structural["pass"] = verdict.structural.pass;
    structural["mode"] = to_string(verdict.structural.mode);
    structural["a"] = verdict.structural.abs_det ? Json(rational_text(*verdict.structural.abs_det)) : Json(nullptr);
    if (verdict.structural.witness) structural["witness"] = basis_pair_to_json(*verdict.structural.witness);
    out["structural"] = std::move(structural);
    out["consistent"] = verdict.consistent();
    return out;
}

}  // namespace cycloschur
