#include "smallcover/charmap.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>
#include <stdexcept>

#include "smallcover/errors.hpp"

namespace smallcover {

const char* to_string(MapMode mode) { return mode == MapMode::oriented ? "oriented" : "general"; }

std::optional<MapMode> parse_map_mode(std::string_view text) {
    if (text == "general") return MapMode::general;
    if (text == "oriented") return MapMode::oriented;
    return std::nullopt;
}

CharMap::CharMap(int n, std::vector<BitVector> vectors, MapMode mode)
    : n_(n), vectors_(std::move(vectors)), mode_(mode) {
    if (n_ < 1 || n_ > kMaxDimension) {
        throw InvariantError("n: " + std::to_string(n_) + " outside [1, " + std::to_string(kMaxDimension) + "]");
    }
    for (std::size_t i = 0; i < vectors_.size(); ++i) {
        const std::string where = "vectors[" + std::to_string(i) + "]";
        if (vectors_[i].is_zero()) throw InvariantError(where + ": zero vector");
        if (!vectors_[i].fits(n_)) {
            throw InvariantError(where + ": " + std::to_string(vectors_[i].bits()) + " does not fit in " +
                                 std::to_string(n_) + " bits");
        }
        if (mode_ == MapMode::oriented && parity(vectors_[i]) != Parity::odd) {
            throw InvariantError(where + ": even weight in oriented mode");
        }
    }
}

CharMap CharMap::extended(BitVector v) const {
    auto vs = vectors_;
    vs.push_back(v);
    return CharMap(n_, std::move(vs), mode_);
}

void require_aligned(const Polytope& p, const CharMap& map) {
    if (map.size() != p.facet_count() || map.n() != p.dim()) {
        throw std::invalid_argument("characteristic map (n=" + std::to_string(map.n()) + ", " +
                                    std::to_string(map.size()) + " vectors) does not match polytope (dim " +
                                    std::to_string(p.dim()) + ", " + std::to_string(p.facet_count()) + " facets)");
    }
}

std::vector<BitVector> vectors_at(const CharMap& map, std::span<const int> facets) {
    std::vector<BitVector> out;
    out.reserve(facets.size());
    for (int f : facets) out.push_back(map[f]);
    return out;
}

bool is_nonsingular_at(const Polytope& p, const CharMap& map, std::span<const int> vertex) {
    require_aligned(p, map);
    return is_independent(vectors_at(map, vertex), map.n());
}

std::vector<BadFace> bad_faces(const Polytope& p, const CharMap& map) {
    require_aligned(p, map);
    std::map<FaceSet, BadFace> found;
    // Vertices are visited in canonical order, so the first witness is the smallest.
    for (const auto& v : p.vertices()) {
        const auto vs = vectors_at(map, v);
        if (is_independent(vs, map.n())) continue;
        for (const auto& circuit : circuits(vs, map.n())) {
            FaceSet face;
            face.reserve(circuit.size());
            for (int i : circuit) face.push_back(v[i]);
            found.try_emplace(face, BadFace{face, static_cast<int>(face.size()), v});
        }
    }
    std::vector<BadFace> out;
    out.reserve(found.size());
    for (auto& [face, bad] : found) out.push_back(std::move(bad));
    std::stable_sort(out.begin(), out.end(),
                     [](const BadFace& a, const BadFace& b) { return a.circuit_size < b.circuit_size; });
    return out;
}

InducedColoring induced_coloring(const Polytope& p, const CharMap& map) {
    require_aligned(p, map);
    InducedColoring c;
    c.colors.reserve(map.size());
    std::set<std::uint32_t> distinct;
    for (BitVector v : map.vectors()) {
        c.colors.push_back(v.bits());
        distinct.insert(v.bits());
    }
    c.colors_used = static_cast<int>(distinct.size());
    c.proper = true;
    for (const auto& v : p.vertices()) {
        for (std::size_t a = 0; a < v.size() && c.proper; ++a)
            for (std::size_t b = a + 1; b < v.size(); ++b)
                if (c.colors[v[a]] == c.colors[v[b]]) {
                    c.proper = false;
                    break;
                }
        if (!c.proper) break;
    }
    return c;
}

bool oriented_valid(const CharMap& map) {
    return std::all_of(map.vectors().begin(), map.vectors().end(),
                       [](BitVector v) { return parity(v) == Parity::odd; });
}

long long integer_determinant(std::vector<std::vector<long long>> a) {
    // Bareiss: every intermediate entry is a minor of the input, so division is exact.
    const std::size_t n = a.size();
    if (n == 0) return 1;
    long long sign = 1;
    long long previous = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && a[swap_row][k] == 0) ++swap_row;
            if (swap_row == n) return 0;
            std::swap(a[k], a[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / previous;
            }
        }
        previous = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

LiftReport lift_determinant_report(const Polytope& p, const CharMap& map) {
    require_aligned(p, map);
    const int n = map.n();
    LiftReport report;
    for (const auto& v : p.vertices()) {
        // Columns are the coefficient tuples of the facet vectors.
        std::vector<std::vector<long long>> m(n, std::vector<long long>(n, 0));
        for (int col = 0; col < n; ++col) {
            const auto bits = map[v[col]].bits();
            for (int row = 0; row < n; ++row) m[row][col] = (bits >> row) & 1U;
        }
        VertexDeterminant d{v, integer_determinant(std::move(m))};
        if (d.determinant % 2 == 0 && is_nonsingular_at(p, map, v)) report.all_odd = false;
        if (std::llabs(d.determinant) != 1) report.failures.push_back(d);
        report.determinants.push_back(std::move(d));
    }
    return report;
}

const char* to_string(Preset preset) {
    switch (preset) {
        case Preset::paper_example: return "paper-example";
        case Preset::odd_bijection: return "odd-bijection";
        case Preset::identity_first: return "identity-first";
    }
    return "unknown";
}

std::optional<Preset> parse_preset(std::string_view name) {
    for (Preset p : {Preset::paper_example, Preset::odd_bijection, Preset::identity_first}) {
        if (name == to_string(p)) return p;
    }
    return std::nullopt;
}

CharMap make_preset(Preset preset, const Polytope& p) {
    const int n = p.dim();
    const int m = p.facet_count();
    const auto mismatch = [&](const std::string& need) {
        return std::invalid_argument(std::string(to_string(preset)) + " needs " + need + "; polytope has dim " +
                                     std::to_string(n) + " and " + std::to_string(m) + " facets");
    };
    if (n < 1 || n > kMaxDimension) throw mismatch("1 <= dim <= " + std::to_string(kMaxDimension));

    std::vector<BitVector> vs;
    switch (preset) {
        case Preset::paper_example: {
            if (n != 4 || m != 15) throw mismatch("dim 4 and 15 facets");
            // e1=1, e2=2, e3=4, e4=8
            for (std::uint32_t bits : {1u, 3u, 4u, 8u, 9u, 11u, 10u, 2u, 6u, 7u, 5u, 13u, 12u, 14u, 15u}) {
                vs.emplace_back(bits);
            }
            return CharMap(n, std::move(vs), MapMode::general);
        }
        case Preset::odd_bijection: {
            if (m != (1 << (n - 1))) throw mismatch(std::to_string(1 << (n - 1)) + " facets");
            for (std::uint32_t bits = 1; bits < (1u << n); ++bits) {
                if (parity(BitVector{bits}) == Parity::odd) vs.emplace_back(bits);
            }
            return CharMap(n, std::move(vs), MapMode::oriented);
        }
        case Preset::identity_first: {
            if (m > (1 << n) - 1) throw mismatch("at most " + std::to_string((1 << n) - 1) + " facets");
            std::set<std::uint32_t> used;
            for (int i = 0; i < std::min(n, m); ++i) {
                vs.push_back(BitVector::unit(i));
                used.insert(vs.back().bits());
            }
            for (std::uint32_t bits = 1; static_cast<int>(vs.size()) < m; ++bits) {
                if (!used.contains(bits)) vs.emplace_back(bits);
            }
            return CharMap(n, std::move(vs), MapMode::general);
        }
    }
    throw std::invalid_argument("unknown preset");
}

}  // namespace smallcover
