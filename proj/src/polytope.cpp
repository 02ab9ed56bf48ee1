#include "smallcover/polytope.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

#include "smallcover/errors.hpp"

namespace smallcover {
namespace {

std::string join(std::span<const int> xs) {
    std::string s = "{";
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i != 0) s += ",";
        s += std::to_string(xs[i]);
    }
    return s + "}";
}

// Calls f(subset) for every k-subset of the sorted set `items`, in lexicographic order.
template <typename F>
void for_each_subset(std::span<const int> items, int k, F&& f) {
    const int n = static_cast<int>(items.size());
    if (k < 0 || k > n) return;
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    std::vector<int> subset(k);
    while (true) {
        for (int i = 0; i < k; ++i) subset[i] = items[idx[i]];
        f(subset);
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) return;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace

std::vector<std::string> default_labels(int facet_count) {
    std::vector<std::string> labels;
    labels.reserve(facet_count);
    for (int i = 0; i < facet_count; ++i) labels.push_back("F" + std::to_string(i));
    return labels;
}

Polytope::Polytope(int dim, std::vector<std::string> facet_labels, std::vector<VertexSet> vertices)
    : dim_(dim), labels_(std::move(facet_labels)), vertices_(std::move(vertices)) {
    for (auto& v : vertices_) std::sort(v.begin(), v.end());
    std::sort(vertices_.begin(), vertices_.end());
}

Polytope::Polytope(int dim, int facet_count, std::vector<VertexSet> vertices)
    : Polytope(dim, default_labels(facet_count), std::move(vertices)) {}

const char* to_string(DiagnosticKind kind) {
    switch (kind) {
        case DiagnosticKind::bad_dimension: return "bad-dimension";
        case DiagnosticKind::too_few_facets: return "too-few-facets";
        case DiagnosticKind::wrong_arity: return "wrong-arity";
        case DiagnosticKind::index_out_of_range: return "index-out-of-range";
        case DiagnosticKind::repeated_facet: return "repeated-facet";
        case DiagnosticKind::duplicate_vertex: return "duplicate-vertex";
        case DiagnosticKind::facet_underused: return "facet-underused";
        case DiagnosticKind::edge_condition: return "edge-condition";
    }
    return "unknown";
}

std::vector<Diagnostic> validate(const Polytope& p) {
    std::vector<Diagnostic> out;
    const int n = p.dim();
    const int m = p.facet_count();

    if (n < 1) {
        out.push_back({DiagnosticKind::bad_dimension, {n}, "dimension " + std::to_string(n) + " < 1"});
        return out;
    }
    if (m < n + 1) {
        out.push_back({DiagnosticKind::too_few_facets, {m},
                       std::to_string(m) + " facets, need at least " + std::to_string(n + 1)});
    }

    std::vector<bool> well_formed(p.vertices().size(), true);
    for (std::size_t i = 0; i < p.vertices().size(); ++i) {
        const VertexSet& v = p.vertices()[i];
        if (static_cast<int>(v.size()) != n) {
            out.push_back({DiagnosticKind::wrong_arity, v,
                           "vertex " + join(v) + " has " + std::to_string(v.size()) + " facets, expected " +
                               std::to_string(n)});
            well_formed[i] = false;
        }
        if (std::any_of(v.begin(), v.end(), [m](int f) { return f < 0 || f >= m; })) {
            out.push_back({DiagnosticKind::index_out_of_range, v,
                           "vertex " + join(v) + " references a facet outside [0, " + std::to_string(m) + ")"});
            well_formed[i] = false;
        }
        if (std::adjacent_find(v.begin(), v.end()) != v.end()) {
            out.push_back({DiagnosticKind::repeated_facet, v, "vertex " + join(v) + " repeats a facet"});
            well_formed[i] = false;
        }
        if (i > 0 && p.vertices()[i - 1] == v) {
            out.push_back({DiagnosticKind::duplicate_vertex, v, "vertex " + join(v) + " listed more than once"});
        }
    }

    std::vector<int> usage(std::max(m, 0), 0);
    std::map<std::vector<int>, int> ridge_counts;
    for (std::size_t i = 0; i < p.vertices().size(); ++i) {
        if (!well_formed[i]) continue;
        const VertexSet& v = p.vertices()[i];
        for (int f : v) ++usage[f];
        for_each_subset(v, n - 1, [&](const std::vector<int>& s) { ++ridge_counts[s]; });
    }
    for (int f = 0; f < m; ++f) {
        if (usage[f] < n) {
            out.push_back({DiagnosticKind::facet_underused, {f},
                           "facet " + std::to_string(f) + " lies on " + std::to_string(usage[f]) +
                               " vertices, expected at least " + std::to_string(n)});
        }
    }
    for (const auto& [edge, count] : ridge_counts) {
        if (count != 2) {
            out.push_back({DiagnosticKind::edge_condition, edge,
                           "edge " + join(edge) + " has " + std::to_string(count) + " endpoints, expected 2"});
        }
    }
    return out;
}

bool is_valid(const Polytope& p) { return validate(p).empty(); }

bool is_subset(std::span<const int> small, std::span<const int> big) {
    return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

bool is_face(const Polytope& p, std::span<const int> face) {
    return std::any_of(p.vertices().begin(), p.vertices().end(),
                       [&](const VertexSet& v) { return is_subset(face, v); });
}

std::vector<VertexSet> vertices_containing(const Polytope& p, std::span<const int> face) {
    std::vector<VertexSet> out;
    for (const auto& v : p.vertices()) {
        if (is_subset(face, v)) out.push_back(v);
    }
    return out;
}

std::vector<FaceSet> faces_of_codim(const Polytope& p, int k) {
    if (k < 1 || k > p.dim()) {
        throw std::invalid_argument("codimension " + std::to_string(k) + " outside [1, " +
                                    std::to_string(p.dim()) + "]");
    }
    std::vector<FaceSet> faces;
    for (const auto& v : p.vertices()) {
        for_each_subset(v, k, [&](const std::vector<int>& s) { faces.push_back(s); });
    }
    std::sort(faces.begin(), faces.end());
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
    return faces;
}

std::vector<long long> f_vector(const Polytope& p) {
    const int n = p.dim();
    std::vector<long long> f(n);
    f[0] = p.vertex_count();
    for (int k = 1; k < n; ++k) f[n - k] = static_cast<long long>(faces_of_codim(p, k).size());
    return f;
}

long long euler_alternating_sum(std::span<const long long> f) {
    long long sum = 0;
    for (std::size_t i = 0; i < f.size(); ++i) sum += (i % 2 == 0) ? f[i] : -f[i];
    return sum;
}

bool satisfies_euler(std::span<const long long> f, int dim) {
    const long long expected = (dim % 2 == 0) ? 0 : 2;
    return euler_alternating_sum(f) == expected;
}

Graph facet_adjacency(const Polytope& p) {
    Graph g(p.facet_count());
    for (const auto& v : p.vertices()) {
        for (std::size_t a = 0; a < v.size(); ++a)
            for (std::size_t b = a + 1; b < v.size(); ++b) g.add_edge(v[a], v[b]);
    }
    return g;
}

Truncation truncate_face(const Polytope& p, std::span<const int> face) {
    const int k = static_cast<int>(face.size());
    if (k < 2 || k > p.dim()) {
        throw InvariantError("truncate_face: " + join(face) + " has codimension " + std::to_string(k) +
                             ", expected 2.." + std::to_string(p.dim()));
    }
    if (!std::is_sorted(face.begin(), face.end()) || std::adjacent_find(face.begin(), face.end()) != face.end()) {
        throw InvariantError("truncate_face: " + join(face) + " is not a sorted facet set");
    }
    const int new_facet = p.facet_count();

    std::vector<VertexSet> vertices;
    vertices.reserve(p.vertices().size() + static_cast<std::size_t>(k) * 2);
    int removed = 0;
    int added = 0;
    for (const auto& v : p.vertices()) {
        if (!is_subset(face, v)) {
            vertices.push_back(v);
            continue;
        }
        ++removed;
        for (int s : face) {
            VertexSet nv;
            nv.reserve(v.size());
            for (int f : v)
                if (f != s) nv.push_back(f);
            nv.push_back(new_facet);
            vertices.push_back(std::move(nv));
            ++added;
        }
    }
    if (removed == 0) throw InvariantError("truncate_face: " + join(face) + " is not a face");

    std::string label = "T(";
    for (int i = 0; i < k; ++i) {
        if (i != 0) label += ",";
        label += p.label(face[i]);
    }
    label += ")";
    auto labels = p.facet_labels();
    labels.push_back(std::move(label));

    Truncation t{Polytope(p.dim(), std::move(labels), std::move(vertices)), new_facet, removed, added};
    if (auto diags = validate(t.polytope); !diags.empty()) {
        throw InvariantError("truncate_face: result invalid: " + diags.front().message);
    }
    return t;
}

}  // namespace smallcover
