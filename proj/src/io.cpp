#include "smallcover/io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "smallcover/errors.hpp"

namespace smallcover {
namespace {

bool is_scalar(const Json& j) { return !j.is_array() && !j.is_object(); }

void dump_into(const Json& j, int indent, std::string& out) {
    const std::string pad(indent + 2, ' ');
    if (j.is_object()) {
        if (j.empty()) {
            out += "{}";
            return;
        }
        out += "{\n";
        bool first = true;
        for (const auto& [key, value] : j.items()) {
            if (!first) out += ",\n";
            first = false;
            out += pad + Json(key).dump() + ": ";
            dump_into(value, indent + 2, out);
        }
        out += "\n" + std::string(indent, ' ') + "}";
    } else if (j.is_array()) {
        if (std::all_of(j.begin(), j.end(), is_scalar)) {
            out += "[";
            for (std::size_t i = 0; i < j.size(); ++i) {
                if (i != 0) out += ", ";
                out += j[i].dump();
            }
            out += "]";
            return;
        }
        out += "[\n";
        for (std::size_t i = 0; i < j.size(); ++i) {
            if (i != 0) out += ",\n";
            out += pad;
            dump_into(j[i], indent + 2, out);
        }
        out += "\n" + std::string(indent, ' ') + "]";
    } else {
        out += j.dump();
    }
}

void expect_fields(const Json& j, const std::string& what, std::initializer_list<const char*> fields) {
    if (!j.is_object()) throw SchemaError(what + ": expected an object");
    std::set<std::string> expected(fields.begin(), fields.end());
    for (const auto& f : expected) {
        if (!j.contains(f)) throw SchemaError(f + ": missing field in " + what);
    }
    for (const auto& [key, value] : j.items()) {
        if (!expected.contains(key)) throw SchemaError(key + ": unknown field in " + what);
    }
}

long long get_int(const Json& j, const std::string& field) {
    if (!j.is_number_integer()) throw SchemaError(field + ": expected an integer");
    return j.get<long long>();
}

int get_small_int(const Json& j, const std::string& field) {
    const long long v = get_int(j, field);
    if (v < -(1LL << 30) || v > (1LL << 30)) throw SchemaError(field + ": integer out of range");
    return static_cast<int>(v);
}

std::vector<int> get_int_list(const Json& j, const std::string& field) {
    if (!j.is_array()) throw SchemaError(field + ": expected an array");
    std::vector<int> out;
    for (std::size_t i = 0; i < j.size(); ++i) {
        out.push_back(get_small_int(j[i], field + "[" + std::to_string(i) + "]"));
    }
    return out;
}

std::string get_string(const Json& j, const std::string& field) {
    if (!j.is_string()) throw SchemaError(field + ": expected a string");
    return j.get<std::string>();
}

Json int_list(const std::vector<int>& xs) {
    Json a = Json::array();
    for (int x : xs) a.push_back(x);
    return a;
}

}  // namespace

std::string canonical_dump(const Json& value) {
    std::string out;
    dump_into(value, 0, out);
    out += "\n";
    return out;
}

Json to_json(const Polytope& p) {
    Json j;
    j["dim"] = p.dim();
    j["facets"] = p.facet_labels();
    Json vertices = Json::array();
    for (const auto& v : p.vertices()) vertices.push_back(int_list(v));
    j["vertices"] = std::move(vertices);
    return j;
}

Json to_json(const CharMap& map) {
    Json j;
    j["n"] = map.n();
    j["mode"] = to_string(map.mode());
    Json vectors = Json::array();
    for (BitVector v : map.vectors()) vectors.push_back(v.bits());
    j["vectors"] = std::move(vectors);
    return j;
}

Json to_json(const BadFace& bad) {
    Json j;
    j["face"] = int_list(bad.face);
    j["circuit_size"] = bad.circuit_size;
    j["witness_vertex"] = int_list(bad.witness_vertex);
    return j;
}

Json to_json(const std::vector<BadFace>& bad) {
    Json a = Json::array();
    for (const auto& b : bad) a.push_back(to_json(b));
    return a;
}

Json to_json(const ResolutionStep& step) {
    Json j;
    j["face"] = int_list(step.face);
    j["circuit_size"] = step.circuit_size;
    j["new_facet_index"] = step.new_facet_index;
    j["chosen_vector"] = step.chosen_vector.bits();
    j["vertices_removed"] = step.vertices_removed;
    j["vertices_added"] = step.vertices_added;
    return j;
}

Json to_json(const ResolutionReport& report) {
    Json j;
    Json steps = Json::array();
    for (const auto& s : report.steps) steps.push_back(to_json(s));
    j["steps"] = std::move(steps);
    j["initial_bad_count"] = report.initial_bad_count;
    j["final_polytope"] = to_json(report.final_polytope);
    j["final_map"] = to_json(report.final_map);
    j["terminated"] = to_string(report.terminated);
    return j;
}

Json to_json(const ChromaticCertificate& cert) {
    Json j;
    j["chi"] = cert.chi;
    j["status"] = to_string(cert.status);
    j["lower"] = cert.lower;
    j["upper"] = cert.upper;
    j["clique"] = int_list(cert.clique);
    j["coloring"] = int_list(cert.coloring);
    return j;
}

Json to_json(const LiftReport& report) {
    Json j;
    Json dets = Json::array();
    for (const auto& d : report.determinants) {
        Json e;
        e["vertex"] = int_list(d.vertex);
        e["determinant"] = d.determinant;
        dets.push_back(std::move(e));
    }
    j["all_odd"] = report.all_odd;
    j["failure_count"] = report.failures.size();
    j["determinants"] = std::move(dets);
    return j;
}

Polytope polytope_from_json(const Json& j) {
    expect_fields(j, "polytope", {"dim", "facets", "vertices"});
    const int dim = get_small_int(j["dim"], "dim");
    if (!j["facets"].is_array()) throw SchemaError("facets: expected an array");
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < j["facets"].size(); ++i) {
        labels.push_back(get_string(j["facets"][i], "facets[" + std::to_string(i) + "]"));
    }
    if (!j["vertices"].is_array()) throw SchemaError("vertices: expected an array");
    std::vector<VertexSet> vertices;
    for (std::size_t i = 0; i < j["vertices"].size(); ++i) {
        vertices.push_back(get_int_list(j["vertices"][i], "vertices[" + std::to_string(i) + "]"));
    }
    Polytope p(dim, std::move(labels), std::move(vertices));
    if (auto diags = validate(p); !diags.empty()) {
        const auto& d = diags.front();
        const std::string field = d.kind == DiagnosticKind::bad_dimension    ? "dim"
                                  : d.kind == DiagnosticKind::too_few_facets ? "facets"
                                                                             : "vertices";
        throw InvariantError(field + ": " + to_string(d.kind) + ": " + d.message);
    }
    return p;
}

CharMap charmap_from_json(const Json& j) {
    expect_fields(j, "characteristic map", {"n", "mode", "vectors"});
    const int n = get_small_int(j["n"], "n");
    const auto mode = parse_map_mode(get_string(j["mode"], "mode"));
    if (!mode) throw SchemaError("mode: expected \"general\" or \"oriented\"");
    if (!j["vectors"].is_array()) throw SchemaError("vectors: expected an array");
    std::vector<BitVector> vectors;
    for (std::size_t i = 0; i < j["vectors"].size(); ++i) {
        const std::string field = "vectors[" + std::to_string(i) + "]";
        const long long v = get_int(j["vectors"][i], field);
        if (v < 0 || v > 0xFFFFFFFFLL) throw SchemaError(field + ": expected an unsigned 32-bit integer");
        vectors.emplace_back(static_cast<std::uint32_t>(v));
    }
    return CharMap(n, std::move(vectors), *mode);
}

ResolutionReport report_from_json(const Json& j) {
    expect_fields(j, "resolution report", {"steps", "initial_bad_count", "final_polytope", "final_map", "terminated"});
    ResolutionReport r;
    if (!j["steps"].is_array()) throw SchemaError("steps: expected an array");
    for (std::size_t i = 0; i < j["steps"].size(); ++i) {
        const std::string at = "steps[" + std::to_string(i) + "]";
        const Json& s = j["steps"][i];
        expect_fields(s, at, {"face", "circuit_size", "new_facet_index", "chosen_vector", "vertices_removed",
                              "vertices_added"});
        ResolutionStep step;
        step.face = get_int_list(s["face"], at + ".face");
        step.circuit_size = get_small_int(s["circuit_size"], at + ".circuit_size");
        step.new_facet_index = get_small_int(s["new_facet_index"], at + ".new_facet_index");
        const long long w = get_int(s["chosen_vector"], at + ".chosen_vector");
        if (w <= 0 || w > 0xFFFFFFFFLL) throw InvariantError(at + ".chosen_vector: expected a nonzero vector");
        step.chosen_vector = BitVector{static_cast<std::uint32_t>(w)};
        step.vertices_removed = get_small_int(s["vertices_removed"], at + ".vertices_removed");
        step.vertices_added = get_small_int(s["vertices_added"], at + ".vertices_added");
        r.steps.push_back(std::move(step));
    }
    r.initial_bad_count = get_small_int(j["initial_bad_count"], "initial_bad_count");
    r.final_polytope = polytope_from_json(j["final_polytope"]);
    r.final_map = charmap_from_json(j["final_map"]);
    const auto t = parse_termination(get_string(j["terminated"], "terminated"));
    if (!t) throw SchemaError("terminated: unknown status");
    r.terminated = *t;
    return r;
}

Json parse_json(std::string_view text) {
    try {
        return Json::parse(text.begin(), text.end());
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(e.what());
    }
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write " + path.string());
    out << text;
    if (!out) throw Error("write failed: " + path.string());
}

Polytope load_polytope(const std::filesystem::path& path) { return polytope_from_json(parse_json(read_text_file(path))); }
CharMap load_charmap(const std::filesystem::path& path) { return charmap_from_json(parse_json(read_text_file(path))); }
ResolutionReport load_report(const std::filesystem::path& path) {
    return report_from_json(parse_json(read_text_file(path)));
}

void save(const std::filesystem::path& path, const Polytope& p) { write_text_file(path, canonical_dump(to_json(p))); }
void save(const std::filesystem::path& path, const CharMap& map) { write_text_file(path, canonical_dump(to_json(map))); }
void save(const std::filesystem::path& path, const ResolutionReport& report) {
    write_text_file(path, canonical_dump(to_json(report)));
}

}  // namespace smallcover
