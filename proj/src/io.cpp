#include "pencils/io.hpp"

#include <fstream>
#include <sstream>

#include "pencils/errors.hpp"

namespace pencils {

namespace {

int read_int(const json& j, const char* key, const std::string& what) {
    if (!j.contains(key) || !j[key].is_number_integer())
        throw ParseError(what + ": missing or non-integer field '" + key + "'");
    return j[key].get<int>();
}

Scalar read_scalar(const json& j, const std::string& what) {
    if (!j.is_string()) throw ParseError(what + ": scalar entries must be strings");
    return Scalar::parse(j.get<std::string>());
}

json vec_to_json(const ScalarVec& v) {
    json out = json::array();
    for (const Scalar& s : v) out.push_back(s.str());
    return out;
}

ScalarVec vec_from_json(const json& j, int len, const std::string& what) {
    if (!j.is_array() || static_cast<int>(j.size()) != len)
        throw ParseError(what + ": expected an array of " + std::to_string(len) + " scalars");
    ScalarVec v;
    v.reserve(static_cast<std::size_t>(len));
    for (const json& e : j) v.push_back(read_scalar(e, what));
    return v;
}

} // namespace

json matrix_to_json(const Mat& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows; ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols; ++j) row.push_back(m.at(i, j).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

Mat matrix_from_json(const json& j, const std::string& what) {
    if (!j.is_array() || j.empty()) throw ParseError(what + ": expected a non-empty array of rows");
    const int rows = static_cast<int>(j.size());
    if (!j[0].is_array()) throw ParseError(what + ": rows must be arrays");
    const int cols = static_cast<int>(j[0].size());
    if (cols == 0) throw ParseError(what + ": rows must be non-empty");
    Mat m(rows, cols);
    for (int i = 0; i < rows; ++i) {
        if (!j[static_cast<std::size_t>(i)].is_array() ||
            static_cast<int>(j[static_cast<std::size_t>(i)].size()) != cols)
            throw ParseError(what + ": ragged rows");
        for (int c = 0; c < cols; ++c)
            m.at(i, c) = read_scalar(j[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)], what);
    }
    return m;
}

json pencil_to_json(const Pencil& p) {
    json j;
    j["m"] = p.m;
    j["n"] = p.n;
    j["A"] = matrix_to_json(p.A);
    j["B"] = matrix_to_json(p.B);
    return j;
}

Pencil pencil_from_json(const json& j) {
    if (!j.is_object()) throw ParseError("pencil: expected a JSON object");
    const int m = read_int(j, "m", "pencil");
    const int n = read_int(j, "n", "pencil");
    if (m < 1 || n < 1) throw ParseError("pencil: sizes must be >= 1");
    if (!j.contains("A") || !j.contains("B")) throw ParseError("pencil: missing coefficient 'A' or 'B'");
    Mat A = matrix_from_json(j["A"], "pencil A");
    Mat B = matrix_from_json(j["B"], "pencil B");
    if (A.rows != m || A.cols != n || B.rows != m || B.cols != n)
        throw ParseError("pencil: coefficient shapes disagree with m, n");
    return Pencil(std::move(A), std::move(B));
}

namespace {

const char* kind_name(CanonicalBlock::Kind k) {
    switch (k) {
        case CanonicalBlock::Kind::RightSingular: return "L";
        case CanonicalBlock::Kind::LeftSingular: return "LT";
        case CanonicalBlock::Kind::FiniteJordan: return "J";
        default: return "N";
    }
}

} // namespace

json canonical_form_to_json(const CanonicalForm& cf) {
    json j;
    json blocks = json::array();
    for (const CanonicalBlock& b : cf.blocks) {
        json jb;
        jb["kind"] = kind_name(b.kind);
        jb["order"] = b.order;
        if (b.kind == CanonicalBlock::Kind::FiniteJordan) jb["mu"] = b.mu.str();
        blocks.push_back(std::move(jb));
    }
    j["blocks"] = std::move(blocks);
    if (cf.E) j["E"] = matrix_to_json(*cf.E);
    if (cf.F) j["F"] = matrix_to_json(*cf.F);
    return j;
}

CanonicalForm canonical_form_from_json(const json& j) {
    if (!j.is_object() || !j.contains("blocks") || !j["blocks"].is_array())
        throw ParseError("canonical form: expected an object with a 'blocks' array");
    CanonicalForm cf;
    for (const json& jb : j["blocks"]) {
        if (!jb.is_object() || !jb.contains("kind") || !jb["kind"].is_string())
            throw ParseError("canonical form: each block needs a string 'kind'");
        const std::string kind = jb["kind"].get<std::string>();
        const int order = read_int(jb, "order", "canonical form block");
        try {
            if (kind == "L") {
                cf.blocks.push_back(CanonicalBlock::right(order));
            } else if (kind == "LT") {
                cf.blocks.push_back(CanonicalBlock::left(order));
            } else if (kind == "J") {
                if (!jb.contains("mu")) throw ParseError("canonical form: finite block needs 'mu'");
                cf.blocks.push_back(CanonicalBlock::finite(order, read_scalar(jb["mu"], "block mu")));
            } else if (kind == "N") {
                cf.blocks.push_back(CanonicalBlock::infinite(order));
            } else {
                throw ParseError("canonical form: unknown block kind '" + kind + "'");
            }
        } catch (const PreconditionError& e) {
            throw ParseError(std::string("canonical form: ") + e.what());
        }
    }
    if (cf.blocks.empty()) throw ParseError("canonical form: needs at least one block");
    if (j.contains("E")) cf.E = matrix_from_json(j["E"], "canonical form E");
    if (j.contains("F")) cf.F = matrix_from_json(j["F"], "canonical form F");
    return cf;
}

json structure_to_json(const KroneckerStructure& s) {
    json j;
    j["nrank"] = s.nrank;
    j["right"] = s.right;
    j["left"] = s.left;
    json finite = json::array();
    for (const FiniteClassDivisor& fc : s.finite) {
        json e;
        e["class"] = fc.cls.str();
        e["segre"] = fc.segre;
        finite.push_back(std::move(e));
    }
    j["finite"] = std::move(finite);
    j["infinite"] = s.infinite;
    return j;
}

json verdict_to_json(const InclusionVerdict& v) {
    json j;
    j["included"] = v.included;
    if (v.witness) {
        json w;
        w["condition"] = v.witness->condition;
        w["prefix"] = v.witness->prefix;
        if (v.witness->eigenvalue) w["class"] = *v.witness->eigenvalue;
        j["witness"] = std::move(w);
    }
    return j;
}

json decomposition_to_json(const DegreePatternDecomposition& d) {
    json j;
    j["a"] = d.a;
    json terms = json::array();
    for (const RankOneTerm& t : d.terms) {
        json jt = json::object();
        auto put = [&jt](const char* key, const ScalarVec& v) {
            for (const Scalar& s : v)
                if (!s.is_zero()) {
                    jt[key] = vec_to_json(v);
                    return;
                }
        };
        put("u0", t.u0);
        put("u1", t.u1);
        put("v0", t.v0);
        put("v1", t.v1);
        terms.push_back(std::move(jt));
    }
    j["terms"] = std::move(terms);
    return j;
}

DegreePatternDecomposition decomposition_from_json(const json& j, int m, int n) {
    if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array())
        throw ParseError("decomposition: expected an object with a 'terms' array");
    DegreePatternDecomposition d;
    d.a = read_int(j, "a", "decomposition");
    for (const json& jt : j["terms"]) {
        if (!jt.is_object()) throw ParseError("decomposition: terms must be objects");
        RankOneTerm t;
        auto get = [&](const char* key, int len) {
            return jt.contains(key) ? vec_from_json(jt[key], len, std::string("term ") + key)
                                    : ScalarVec(static_cast<std::size_t>(len));
        };
        t.u0 = get("u0", m);
        t.u1 = get("u1", m);
        t.v0 = get("v0", n);
        t.v1 = get("v1", n);
        d.terms.push_back(std::move(t));
    }
    return d;
}

json parse_json_text(const std::string& text, const std::string& what) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ParseError(what + ": malformed JSON");
    return j;
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_json_text(buf.str(), path);
}

} // namespace pencils
