#pragma once

#include <span>
#include <string>
#include <vector>

#include "smallcover/graph.hpp"

namespace smallcover {

/// Sorted set of facet indices. In a simple polytope a face of codimension k is
/// identified with the k facets containing it.
using FaceSet = std::vector<int>;

/// The n facets meeting at a vertex, sorted ascending.
using VertexSet = std::vector<int>;

/// Combinatorial simple n-polytope given by vertex-facet incidence.
///
/// Construction only canonicalizes (each vertex set sorted, vertex list sorted
/// lexicographically); structural checks live in validate() so that broken
/// inputs can still be inspected and reported on.
class Polytope {
public:
    Polytope() = default;
    Polytope(int dim, std::vector<std::string> facet_labels, std::vector<VertexSet> vertices);
    /// Facets labelled "F0", "F1", ...
    Polytope(int dim, int facet_count, std::vector<VertexSet> vertices);

    int dim() const { return dim_; }
    int facet_count() const { return static_cast<int>(labels_.size()); }
    int vertex_count() const { return static_cast<int>(vertices_.size()); }

    const std::vector<std::string>& facet_labels() const { return labels_; }
    const std::string& label(int facet) const { return labels_.at(facet); }
    const std::vector<VertexSet>& vertices() const { return vertices_; }

    friend bool operator==(const Polytope&, const Polytope&) = default;

private:
    int dim_ = 0;
    std::vector<std::string> labels_;
    std::vector<VertexSet> vertices_;
};

std::vector<std::string> default_labels(int facet_count);

enum class DiagnosticKind {
    bad_dimension,
    too_few_facets,
    wrong_arity,
    index_out_of_range,
    repeated_facet,
    duplicate_vertex,
    facet_underused,
    edge_condition,
};

const char* to_string(DiagnosticKind kind);

struct Diagnostic {
    DiagnosticKind kind;
    std::vector<int> witness;
    std::string message;
};

/// Every violated structural invariant, each with a witness. Empty means valid.
std::vector<Diagnostic> validate(const Polytope& p);

bool is_valid(const Polytope& p);

bool is_subset(std::span<const int> small, std::span<const int> big);

/// True iff `face` is contained in at least one vertex set.
bool is_face(const Polytope& p, std::span<const int> face);

/// Vertex sets containing `face`, in canonical order.
std::vector<VertexSet> vertices_containing(const Polytope& p, std::span<const int> face);

/// All faces of codimension k (1 <= k <= dim), sorted lexicographically.
std::vector<FaceSet> faces_of_codim(const Polytope& p, int k);

/// [f_0, ..., f_{n-1}].
std::vector<long long> f_vector(const Polytope& p);

/// f_0 - f_1 + ... +- f_{n-1}; equals 1 - (-1)^n for any polytope.
long long euler_alternating_sum(std::span<const long long> f);
bool satisfies_euler(std::span<const long long> f, int dim);

/// Facets i != j are adjacent iff some vertex lies on both.
Graph facet_adjacency(const Polytope& p);

struct Truncation {
    Polytope polytope;
    int new_facet = 0;
    int vertices_removed = 0;
    int vertices_added = 0;
};

/// Cut off the face `face` (codimension 2..n). Every vertex V containing the
/// face is replaced by the vertices (V \ {s}) u {new} for s in the face. The new
/// facet gets index m and label "T(<labels of face>)".
///
/// Throws InvariantError if `face` is not a face, is a facet, or the result
/// fails validation.
Truncation truncate_face(const Polytope& p, std::span<const int> face);

}  // namespace smallcover
