#include "nbihom/io.hpp"

#include "nbihom/errors.hpp"

#include <json.hpp>

#include <fstream>
#include <set>
#include <sstream>

namespace nbihom {

namespace {

using nlohmann::json;

json parse_json(const std::string& text, const std::string& origin) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(origin + ": " + e.what());
    }
}

void check_keys(const json& obj, const std::set<std::string>& allowed,
                const std::set<std::string>& required, const std::string& where) {
    if (!obj.is_object()) throw ValidationError(where + ": expected an object");
    for (auto it = obj.begin(); it != obj.end(); ++it)
        if (!allowed.count(it.key()))
            throw ValidationError(where + ": unknown key '" + it.key() + "'");
    for (const auto& k : required)
        if (!obj.contains(k)) throw ValidationError(where + ": missing key '" + k + "'");
}

int get_int(const json& v, const std::string& where) {
    if (!v.is_number_integer()) throw ValidationError(where + ": expected an integer");
    return v.get<int>();
}

std::string get_string(const json& v, const std::string& where) {
    if (!v.is_string()) throw ValidationError(where + ": expected a string");
    return v.get<std::string>();
}

Rational parse_rational_entry(const json& v, const std::string& where) {
    const std::string s = get_string(v, where);
    try {
        return Rational::parse(s);
    } catch (const Error& e) {
        throw ValidationError(where + ": " + e.what());
    }
}

Poly parse_poly_entry(const json& v, const std::string& where) {
    const std::string s = get_string(v, where);
    try {
        return Poly::parse(s);
    } catch (const Error& e) {
        throw ValidationError(where + ": " + e.what());
    }
}

template <class K>
K parse_entry(const json& v, const std::string& where);
template <>
Rational parse_entry<Rational>(const json& v, const std::string& where) {
    return parse_rational_entry(v, where);
}
template <>
Poly parse_entry<Poly>(const json& v, const std::string& where) {
    return parse_poly_entry(v, where);
}

template <class K>
Matrix<K> parse_matrix(const json& v, int rows, int cols, const std::string& where) {
    if (!v.is_array() || static_cast<int>(v.size()) != rows)
        throw ValidationError(where + ": expected " + std::to_string(rows) + " rows");
    Matrix<K> m(rows, cols);
    for (int i = 0; i < rows; ++i) {
        const json& row = v[i];
        if (!row.is_array() || static_cast<int>(row.size()) != cols)
            throw ValidationError(where + ": row " + std::to_string(i + 1) + " must have " +
                                  std::to_string(cols) + " entries");
        for (int j = 0; j < cols; ++j)
            m(i, j) = parse_entry<K>(row[j], where + "[" + std::to_string(i + 1) + "][" +
                                                 std::to_string(j + 1) + "]");
    }
    return m;
}

template <class K>
Vector<K> parse_vector(const json& v, int dim, const std::string& where) {
    if (!v.is_array() || static_cast<int>(v.size()) != dim)
        throw ValidationError(where + ": expected " + std::to_string(dim) + " entries");
    Vector<K> out(dim, K(0));
    for (int i = 0; i < dim; ++i)
        out[i] = parse_entry<K>(v[i], where + "[" + std::to_string(i + 1) + "]");
    return out;
}

Provenance parse_provenance(const json& v, const std::string& where) {
    check_keys(v, {"construction", "note", "multiplicativity_waived"}, {"construction"}, where);
    Provenance p;
    p.construction = get_string(v["construction"], where + ".construction");
    if (v.contains("note")) p.note = get_string(v["note"], where + ".note");
    if (v.contains("multiplicativity_waived")) {
        if (!v["multiplicativity_waived"].is_boolean())
            throw ValidationError(where + ".multiplicativity_waived: expected a boolean");
        p.multiplicativity_waived = v["multiplicativity_waived"].get<bool>();
    }
    return p;
}

template <class K>
void parse_algebra_common(const json& j, Algebra<K>& alg, const std::string& origin) {
    alg.dim = get_int(j["dim"], origin + ".dim");
    alg.arity = get_int(j["arity"], origin + ".arity");
    if (alg.dim < 1) throw ValidationError(origin + ".dim: must be at least 1");
    if (alg.arity < 2) throw ValidationError(origin + ".arity: must be at least 2");
    alg.flavor = flavor_from_name(get_string(j["flavor"], origin + ".flavor"));
    alg.alpha = parse_matrix<K>(j["alpha"], alg.dim, alg.dim, origin + ".alpha");
    alg.beta = parse_matrix<K>(j["beta"], alg.dim, alg.dim, origin + ".beta");

    const json& br = j["bracket"];
    if (!br.is_array()) throw ValidationError(origin + ".bracket: expected an array");
    std::set<std::vector<int>> seen;
    for (std::size_t e = 0; e < br.size(); ++e) {
        const std::string where = origin + ".bracket[" + std::to_string(e + 1) + "]";
        check_keys(br[e], {"args", "value"}, {"args", "value"}, where);
        const json& args = br[e]["args"];
        if (!args.is_array() || static_cast<int>(args.size()) != alg.arity)
            throw ValidationError(where + ".args: expected " + std::to_string(alg.arity) +
                                  " indices");
        std::vector<int> tuple(alg.arity);
        for (int s = 0; s < alg.arity; ++s) {
            tuple[s] = get_int(args[s], where + ".args");
            if (tuple[s] < 1 || tuple[s] > alg.dim)
                throw ValidationError(where + ".args: index " + std::to_string(tuple[s]) +
                                      " out of range 1.." + std::to_string(alg.dim));
        }
        if (!seen.insert(tuple).second)
            throw ValidationError(where + ": duplicate bracket tuple");
        alg.set_bracket(tuple, parse_vector<K>(br[e]["value"], alg.dim, where + ".value"));
    }

    if (j.contains("tau")) alg.tau = parse_vector<K>(j["tau"], alg.dim, origin + ".tau");
    if (j.contains("provenance"))
        alg.provenance = parse_provenance(j["provenance"], origin + ".provenance");
}

QAlgebra parse_algebra(const json& j, const std::string& origin) {
    check_keys(j, {"format", "dim", "arity", "flavor", "alpha", "beta", "bracket", "tau",
                   "provenance"},
               {"format", "dim", "arity", "flavor", "alpha", "beta", "bracket"}, origin);
    QAlgebra alg;
    parse_algebra_common(j, alg, origin);
    alg.validate();
    return alg;
}

ParamFamily parse_family(const json& j, const std::string& origin) {
    check_keys(j, {"format", "dim", "arity", "flavor", "alpha", "beta", "bracket", "tau",
                   "provenance", "parameters"},
               {"format", "dim", "arity", "flavor", "alpha", "beta", "bracket", "parameters"},
               origin);
    ParamFamily fam;
    parse_algebra_common(j, fam.algebra, origin);

    const json& ps = j["parameters"];
    if (!ps.is_array()) throw ValidationError(origin + ".parameters: expected an array");
    for (std::size_t e = 0; e < ps.size(); ++e) {
        const std::string where = origin + ".parameters[" + std::to_string(e + 1) + "]";
        check_keys(ps[e], {"name", "grid"}, {"name"}, where);
        Parameter p;
        p.name = get_string(ps[e]["name"], where + ".name");
        if (ps[e].contains("grid")) {
            const json& g = ps[e]["grid"];
            if (!g.is_array() || g.empty())
                throw ValidationError(where + ".grid: expected a non-empty array");
            for (std::size_t i = 0; i < g.size(); ++i)
                p.grid.push_back(parse_rational_entry(
                    g[i], where + ".grid[" + std::to_string(i + 1) + "]"));
        } else {
            p.grid = default_grid();
        }
        fam.parameters.push_back(std::move(p));
    }
    fam.validate();
    return fam;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open '" + path + "' for writing");
    out << text;
    if (!out) throw Error("failed writing '" + path + "'");
}

template <class K>
json matrix_to_json(const Matrix<K>& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

template <class K>
json vector_to_json(const Vector<K>& v) {
    json out = json::array();
    for (const auto& c : v) out.push_back(c.str());
    return out;
}

json provenance_to_json(const Provenance& p) {
    json out;
    out["construction"] = p.construction;
    if (!p.note.empty()) out["note"] = p.note;
    if (p.multiplicativity_waived) out["multiplicativity_waived"] = true;
    return out;
}

template <class K>
json algebra_common_to_json(const Algebra<K>& alg) {
    json j;
    j["dim"] = alg.dim;
    j["arity"] = alg.arity;
    j["flavor"] = flavor_name(alg.flavor);
    j["alpha"] = matrix_to_json(alg.alpha);
    j["beta"] = matrix_to_json(alg.beta);
    json br = json::array();
    for (const auto& [tuple, value] : alg.bracket) {
        json entry;
        entry["args"] = tuple;
        entry["value"] = vector_to_json(value);
        br.push_back(std::move(entry));
    }
    j["bracket"] = std::move(br);
    if (alg.tau) j["tau"] = vector_to_json(*alg.tau);
    if (alg.provenance) j["provenance"] = provenance_to_json(*alg.provenance);
    return j;
}

json algebra_to_json(const QAlgebra& alg) {
    json j = algebra_common_to_json(alg);
    j["format"] = "nbihom-algebra/1";
    return j;
}

json family_to_json(const ParamFamily& fam) {
    json j = algebra_common_to_json(fam.algebra);
    j["format"] = "nbihom-family/1";
    json ps = json::array();
    for (const auto& p : fam.parameters) {
        json e;
        e["name"] = p.name;
        json g = json::array();
        for (const auto& r : p.grid) g.push_back(r.str());
        e["grid"] = std::move(g);
        ps.push_back(std::move(e));
    }
    j["parameters"] = std::move(ps);
    return j;
}

} // namespace

LoadedObject parse_object(const std::string& text, const std::string& origin) {
    const json j = parse_json(text, origin);
    if (!j.is_object()) throw ValidationError(origin + ": expected a JSON object");
    if (!j.contains("format")) throw ValidationError(origin + ": missing key 'format'");
    const std::string format = get_string(j["format"], origin + ".format");
    if (format == "nbihom-algebra/1") return parse_algebra(j, origin);
    if (format == "nbihom-family/1") return parse_family(j, origin);
    throw ValidationError(origin + ": unsupported format '" + format + "'");
}

LoadedObject load_object(const std::string& path) {
    return parse_object(read_file(path), path);
}

std::string render_algebra_json(const QAlgebra& alg) { return algebra_to_json(alg).dump(2) + "\n"; }

std::string render_family_json(const ParamFamily& fam) { return family_to_json(fam).dump(2) + "\n"; }

std::string render_algebra_record(const QAlgebra& alg) {
    json j;
    j["type"] = "algebra";
    j["value"] = algebra_to_json(alg);
    return j.dump();
}

std::string render_family_record(const ParamFamily& fam) {
    json j;
    j["type"] = "family";
    j["value"] = family_to_json(fam);
    return j.dump();
}

void save_algebra(const QAlgebra& alg, const std::string& path) {
    write_file(path, render_algebra_json(alg));
}

void save_family(const ParamFamily& fam, const std::string& path) {
    write_file(path, render_family_json(fam));
}

QMatrix load_matrix(const std::string& path) {
    const json j = parse_json(read_file(path), path);
    check_keys(j, {"format", "rows", "cols", "entries"}, {"format", "rows", "cols", "entries"},
               path);
    if (get_string(j["format"], path + ".format") != "nbihom-matrix/1")
        throw ValidationError(path + ": unsupported format");
    const int rows = get_int(j["rows"], path + ".rows");
    const int cols = get_int(j["cols"], path + ".cols");
    if (rows < 0 || cols < 0) throw ValidationError(path + ": negative shape");
    return parse_matrix<Rational>(j["entries"], rows, cols, path + ".entries");
}

void save_matrix(const QMatrix& m, const std::string& path) {
    json j;
    j["format"] = "nbihom-matrix/1";
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    j["entries"] = matrix_to_json(m);
    write_file(path, j.dump(2) + "\n");
}

std::pair<QMatrix, QMatrix> load_maps(const std::string& path) {
    const json j = parse_json(read_file(path), path);
    check_keys(j, {"format", "dim", "alpha", "beta"}, {"format", "dim", "alpha", "beta"}, path);
    if (get_string(j["format"], path + ".format") != "nbihom-maps/1")
        throw ValidationError(path + ": unsupported format");
    const int dim = get_int(j["dim"], path + ".dim");
    if (dim < 1) throw ValidationError(path + ".dim: must be at least 1");
    return {parse_matrix<Rational>(j["alpha"], dim, dim, path + ".alpha"),
            parse_matrix<Rational>(j["beta"], dim, dim, path + ".beta")};
}

void save_maps(const QMatrix& alpha, const QMatrix& beta, const std::string& path) {
    if (alpha.rows() != alpha.cols() || beta.rows() != alpha.rows() || beta.cols() != alpha.rows())
        throw DimensionError("save_maps: alpha and beta must be square with equal dimension");
    json j;
    j["format"] = "nbihom-maps/1";
    j["dim"] = alpha.rows();
    j["alpha"] = matrix_to_json(alpha);
    j["beta"] = matrix_to_json(beta);
    write_file(path, j.dump(2) + "\n");
}

} // namespace nbihom
