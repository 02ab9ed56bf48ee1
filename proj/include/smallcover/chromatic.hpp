#pragma once

#include <chrono>
#include <optional>
#include <vector>

#include "smallcover/charmap.hpp"
#include "smallcover/graph.hpp"
#include "smallcover/polytope.hpp"

namespace smallcover {

enum class ChromaticStatus { exact, bounds_only };

const char* to_string(ChromaticStatus s);

/// Lower bound witnessed by a clique, upper bound witnessed by a proper coloring.
/// When status is exact, chi == lower == upper; otherwise chi holds the upper bound.
/// lower exceeds the clique size only when an exhaustive coloring search proved it.
struct ChromaticCertificate {
    int chi = 0;
    int lower = 0;
    int upper = 0;
    std::vector<int> clique;    // sorted node indices, size == lower
    std::vector<int> coloring;  // colors in [0, upper), canonical by first occurrence
    ChromaticStatus status = ChromaticStatus::exact;
};

inline constexpr std::chrono::milliseconds kDefaultTimeBudget{10000};

/// Maximum clique by bitset branch and bound with a coloring bound. If the
/// deadline passes, the best clique found so far is returned.
std::vector<int> maximum_clique(const Graph& g, std::chrono::milliseconds budget = kDefaultTimeBudget);

/// Saturation-greedy (DSATUR) coloring; canonical colors.
std::vector<int> dsatur_coloring(const Graph& g);

/// Relabels colors 0, 1, ... in order of first appearance.
std::vector<int> canonical_coloring(const std::vector<int>& coloring);

bool is_proper_coloring(const Graph& g, const std::vector<int>& coloring);
bool is_clique(const Graph& g, const std::vector<int>& nodes);

/// Re-checks clique adjacency, coloring properness and the bound sizes.
bool verify_certificate(const Graph& g, const ChromaticCertificate& cert);

/// Exact chromatic number: clique lower bound, then the hint (if proper) and
/// DSATUR as upper bounds, then DSATUR branch and bound to close the gap.
/// Budget exhaustion yields status bounds_only, never an error.
ChromaticCertificate chromatic_number(const Graph& g, const std::optional<std::vector<int>>& hint = std::nullopt,
                                      std::chrono::milliseconds budget = kDefaultTimeBudget);

/// Chromatic number of the facet adjacency graph; a characteristic map hint
/// contributes its induced coloring.
ChromaticCertificate chromatic_number(const Polytope& p, const std::optional<CharMap>& hint = std::nullopt,
                                      std::chrono::milliseconds budget = kDefaultTimeBudget);

}  // namespace smallcover
