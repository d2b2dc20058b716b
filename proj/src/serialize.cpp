#include "crlab/serialize.hpp"

#include <istream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "crlab/errors.hpp"

namespace crlab {

namespace {

using Json = nlohmann::ordered_json;

[[noreturn]] void bad(const std::string& path, const std::string& msg) {
    throw UsageError("space file: " + path + ": " + msg);
}

const Json& need(const Json& j, const char* key, const std::string& path) {
    if (!j.is_object() || !j.contains(key)) bad(path + "." + key, "missing");
    return j.at(key);
}

long long need_int(const Json& j, const char* key, const std::string& path) {
    const Json& v = need(j, key, path);
    if (!v.is_number_integer()) bad(path + "." + key, "expected an integer");
    return v.get<long long>();
}

Json matrix_to_json(const Matrix& m) {
    Json rows = Json::array();
    for (int i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

Matrix json_to_matrix(const Json& j, const Field& f, int rows, int cols, const std::string& path) {
    if (!j.is_array() || static_cast<int>(j.size()) != rows) bad(path, "expected " + std::to_string(rows) + " rows");
    std::vector<Elt> flat;
    flat.reserve(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols));
    for (int i = 0; i < rows; ++i) {
        const Json& row = j.at(static_cast<std::size_t>(i));
        if (!row.is_array() || static_cast<int>(row.size()) != cols)
            bad(path + "[" + std::to_string(i) + "]", "expected " + std::to_string(cols) + " entries");
        for (int c = 0; c < cols; ++c) {
            const Json& cell = row.at(static_cast<std::size_t>(c));
            if (!cell.is_number_integer() || cell.get<long long>() < 0 ||
                cell.get<std::uint64_t>() >= f.order())
                bad(path + "[" + std::to_string(i) + "][" + std::to_string(c) + "]",
                    "encoding out of range for " + f.describe());
            flat.push_back(cell.get<Elt>());
        }
    }
    return Matrix::from_flat(f, rows, cols, flat);
}

Json field_to_json(const Field& f) {
    Json out;
    out["p"] = f.characteristic();
    out["k"] = f.degree();
    out["modulus"] = f.modulus();
    return out;
}

Field json_to_field(const Json& j, const std::string& path) {
    const long long p = need_int(j, "p", path);
    const long long k = need_int(j, "k", path);
    if (p < 2 || !is_prime(static_cast<std::uint64_t>(p))) bad(path + ".p", "not a prime");
    if (k < 1) bad(path + ".k", "degree must be >= 1");
    const Json& mod = need(j, "modulus", path);
    if (!mod.is_array() || mod.size() != static_cast<std::size_t>(k) + 1)
        bad(path + ".modulus", "expected k+1 coefficients");
    std::vector<Elt> coeffs;
    for (const auto& c : mod) {
        if (!c.is_number_integer() || c.get<long long>() < 0 || c.get<long long>() >= p)
            bad(path + ".modulus", "coefficient out of range");
        coeffs.push_back(c.get<Elt>());
    }
    if (k >= 2 && !validate_modulus(static_cast<std::uint32_t>(p), coeffs))
        bad(path + ".modulus", "reducible modulus");
    try {
        return Field(static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(k), coeffs);
    } catch (const UsageError& e) {
        bad(path, e.what());
    }
}

Json parse_text(const std::string& text) {
    Json j = Json::parse(text, nullptr, false);
    if (j.is_discarded()) throw UsageError("space file: not valid JSON");
    return j;
}

} // namespace

std::string space_to_json(const AffineSpace& s) {
    Json out;
    out["field"] = field_to_json(s.field());
    out["rows"] = s.rows();
    out["cols"] = s.cols();
    out["base"] = matrix_to_json(s.canonical_base());
    Json basis = Json::array();
    for (const auto& b : s.basis()) basis.push_back(matrix_to_json(b));
    out["basis"] = std::move(basis);
    return out.dump(2) + "\n";
}

void write_space(std::ostream& out, const AffineSpace& s) { out << space_to_json(s); }

AffineSpace parse_space(const std::string& text, std::ostream* warnings) {
    Json j = parse_text(text);
    const Field f = json_to_field(need(j, "field", "$"), "$.field");
    const long long rows = need_int(j, "rows", "$");
    const long long cols = need_int(j, "cols", "$");
    if (rows < 1 || cols < 1) bad("$.rows/cols", "shape must be >= 1");
    Matrix base = json_to_matrix(need(j, "base", "$"), f, static_cast<int>(rows),
                                 static_cast<int>(cols), "$.base");
    const Json& basis_json = need(j, "basis", "$");
    if (!basis_json.is_array()) bad("$.basis", "expected an array of matrices");
    std::vector<Matrix> basis;
    for (std::size_t i = 0; i < basis_json.size(); ++i)
        basis.push_back(json_to_matrix(basis_json.at(i), f, static_cast<int>(rows),
                                       static_cast<int>(cols),
                                       "$.basis[" + std::to_string(i) + "]"));
    AffineSpace s(base, basis);
    if (s.dim() != static_cast<int>(basis.size()) && warnings)
        *warnings << "warning: dependent basis reduced from " << basis.size() << " to " << s.dim()
                  << " matrices\n";
    return s;
}

AffineSpace read_space(std::istream& in, std::ostream* warnings) {
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_space(buf.str(), warnings);
}

std::string witness_to_json(const Witness& w) {
    Json out;
    out["field"] = field_to_json(w.P.field());
    out["rows"] = w.P.rows();
    out["cols"] = w.Q.rows();
    out["P"] = matrix_to_json(w.P);
    out["Q"] = matrix_to_json(w.Q);
    return out.dump(2) + "\n";
}

Witness parse_witness(const std::string& text) {
    Json j = parse_text(text);
    const Field f = json_to_field(need(j, "field", "$"), "$.field");
    const long long rows = need_int(j, "rows", "$");
    const long long cols = need_int(j, "cols", "$");
    Matrix p = json_to_matrix(need(j, "P", "$"), f, static_cast<int>(rows),
                              static_cast<int>(rows), "$.P");
    Matrix q = json_to_matrix(need(j, "Q", "$"), f, static_cast<int>(cols),
                              static_cast<int>(cols), "$.Q");
    return Witness(p, q);
}

} // namespace crlab
