#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "smallcover/gf2.hpp"
#include "smallcover/polytope.hpp"

namespace smallcover {

enum class MapMode { general, oriented };

const char* to_string(MapMode mode);
std::optional<MapMode> parse_map_mode(std::string_view text);

/// Assignment of a nonzero vector of Z_2^n to every facet, index-aligned with
/// the polytope's facets. In oriented mode every vector has odd weight.
class CharMap {
public:
    CharMap() = default;
    /// Throws InvariantError naming the offending index on a zero vector, a
    /// vector wider than n bits, or an even vector in oriented mode.
    CharMap(int n, std::vector<BitVector> vectors, MapMode mode = MapMode::general);

    int n() const { return n_; }
    MapMode mode() const { return mode_; }
    int size() const { return static_cast<int>(vectors_.size()); }
    const std::vector<BitVector>& vectors() const { return vectors_; }
    BitVector operator[](int facet) const { return vectors_.at(facet); }

    /// Copy with one more facet vector (the facet created by a truncation).
    CharMap extended(BitVector v) const;

    friend bool operator==(const CharMap&, const CharMap&) = default;

private:
    int n_ = 0;
    std::vector<BitVector> vectors_;
    MapMode mode_ = MapMode::general;
};

/// Throws std::invalid_argument unless `map` has one vector per facet of `p`
/// and width p.dim().
void require_aligned(const Polytope& p, const CharMap& map);

std::vector<BitVector> vectors_at(const CharMap& map, std::span<const int> facets);

/// The vectors on the facets of `vertex` are linearly independent over GF(2).
bool is_nonsingular_at(const Polytope& p, const CharMap& map, std::span<const int> vertex);

/// A face whose facet vectors form a circuit (minimal GF(2)-dependent set).
struct BadFace {
    FaceSet face;
    int circuit_size = 0;
    VertexSet witness_vertex;

    friend bool operator==(const BadFace&, const BadFace&) = default;
};

/// All bad faces of (p, map), deduplicated by face (keeping the
/// lexicographically smallest witness) and sorted by (circuit_size, face).
std::vector<BadFace> bad_faces(const Polytope& p, const CharMap& map);

struct InducedColoring {
    std::vector<std::uint32_t> colors;  // color of facet i is the bitmask of map[i]
    bool proper = false;
    int colors_used = 0;
};

InducedColoring induced_coloring(const Polytope& p, const CharMap& map);

/// Every vector has odd weight (the orientability criterion for small covers).
bool oriented_valid(const CharMap& map);

struct VertexDeterminant {
    VertexSet vertex;
    long long determinant = 0;
};

struct LiftReport {
    std::vector<VertexDeterminant> determinants;  // one per vertex, canonical order
    std::vector<VertexDeterminant> failures;      // |det| != 1
    bool all_odd = true;                          // odd det at every GF(2)-nonsingular vertex
};

/// Integer determinants of the 0/1 lifts of the vertex matrices. A report,
/// not a check: |det| = 1 is not required of a mod-2 characteristic map.
LiftReport lift_determinant_report(const Polytope& p, const CharMap& map);

/// Exact determinant of a square integer matrix (fraction-free elimination).
long long integer_determinant(std::vector<std::vector<long long>> matrix);

enum class Preset { paper_example, odd_bijection, identity_first };

const char* to_string(Preset preset);
std::optional<Preset> parse_preset(std::string_view name);

/// Builds a named decoration for `p`:
///  - paper_example: the fixed 15-vector decoration of the dual of C^4(15);
///  - odd_bijection: facets onto the odd-weight vectors in increasing order
///    (oriented mode, needs m = 2^(n-1));
///  - identity_first: facet i -> e_{i+1} for i < n, then the smallest unused
///    nonzero masks (needs m <= 2^n - 1).
/// Throws std::invalid_argument on a size mismatch.
CharMap make_preset(Preset preset, const Polytope& p);

}  // namespace smallcover
