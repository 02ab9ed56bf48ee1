#pragma once

#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "smallcover/charmap.hpp"
#include "smallcover/polytope.hpp"

namespace smallcover {

/// Vertices that truncate_face(p, face) would create, with the new facet at
/// index p.facet_count().
std::vector<VertexSet> prospective_vertices(const Polytope& p, std::span<const int> face);

/// Smallest-bitmask vector w (odd-weight only in oriented mode) such that every
/// vertex created by truncating `face` is non-singular when the new facet
/// carries w. Throws NoVectorFound if no candidate works.
BitVector resolution_vector(const Polytope& p, const CharMap& map, std::span<const int> face);

struct ResolutionStep {
    FaceSet face;
    int circuit_size = 0;
    int new_facet_index = 0;
    BitVector chosen_vector;
    int vertices_removed = 0;
    int vertices_added = 0;

    friend bool operator==(const ResolutionStep&, const ResolutionStep&) = default;
};

enum class Termination { success, budget_exhausted, no_vector_found };

const char* to_string(Termination t);
std::optional<Termination> parse_termination(std::string_view text);

struct ResolutionReport {
    std::vector<ResolutionStep> steps;
    int initial_bad_count = 0;
    Polytope final_polytope;
    CharMap final_map;
    Termination terminated = Termination::success;

    friend bool operator==(const ResolutionReport&, const ResolutionReport&) = default;
};

/// State seen at the start of every iteration of resolve(), including the
/// final one where `bad` is empty.
struct ResolutionSnapshot {
    int iteration = 0;
    const Polytope& polytope;
    const CharMap& map;
    const std::vector<BadFace>& bad;
};

using ResolutionObserver = std::function<void(const ResolutionSnapshot&)>;

inline constexpr int kDefaultBudget = 1000;

/// Repeatedly truncates the bad face with the smallest circuit (ties broken
/// lexicographically) and decorates the new facet with resolution_vector()
/// until no bad face is left or `budget` steps have been taken.
///
/// Never throws for budget exhaustion or a missing vector; those end up in
/// ResolutionReport::terminated with the partial trace.
ResolutionReport resolve(const Polytope& p, const CharMap& map, int budget = kDefaultBudget,
                         const ResolutionObserver& observer = {});

}  // namespace smallcover
