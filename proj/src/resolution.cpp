#include "smallcover/resolution.hpp"

#include <stdexcept>
#include <string>

#include "smallcover/errors.hpp"

namespace smallcover {

std::vector<VertexSet> prospective_vertices(const Polytope& p, std::span<const int> face) {
    const int new_facet = p.facet_count();
    std::vector<VertexSet> out;
    for (const auto& v : vertices_containing(p, face)) {
        for (int s : face) {
            VertexSet nv;
            for (int f : v)
                if (f != s) nv.push_back(f);
            nv.push_back(new_facet);
            out.push_back(std::move(nv));
        }
    }
    return out;
}

BitVector resolution_vector(const Polytope& p, const CharMap& map, std::span<const int> face) {
    require_aligned(p, map);
    const int n = map.n();
    const auto created = prospective_vertices(p, face);
    if (created.empty()) throw std::invalid_argument("resolution_vector: not a face");

    // The surviving facets of each created vertex; the candidate is appended last.
    std::vector<std::vector<BitVector>> bases;
    bases.reserve(created.size());
    for (const auto& v : created) {
        auto vs = vectors_at(map, std::span<const int>(v).first(v.size() - 1));
        vs.emplace_back();
        bases.push_back(std::move(vs));
    }

    const std::uint32_t limit = std::uint32_t{1} << n;
    for (std::uint32_t bits = 1; bits < limit; ++bits) {
        const BitVector w{bits};
        if (map.mode() == MapMode::oriented && parity(w) != Parity::odd) continue;
        bool ok = true;
        for (auto& vs : bases) {
            vs.back() = w;
            if (!is_independent(vs, n)) {
                ok = false;
                break;
            }
        }
        if (ok) return w;
    }

    std::string face_text;
    for (int f : face) face_text += (face_text.empty() ? "" : ",") + std::to_string(f);
    throw NoVectorFound("no vector resolves face {" + face_text + "}");
}

const char* to_string(Termination t) {
    switch (t) {
        case Termination::success: return "success";
        case Termination::budget_exhausted: return "budget_exhausted";
        case Termination::no_vector_found: return "no_vector_found";
    }
    return "unknown";
}

std::optional<Termination> parse_termination(std::string_view text) {
    for (auto t : {Termination::success, Termination::budget_exhausted, Termination::no_vector_found}) {
        if (text == to_string(t)) return t;
    }
    return std::nullopt;
}

ResolutionReport resolve(const Polytope& p, const CharMap& map, int budget, const ResolutionObserver& observer) {
    require_aligned(p, map);
    if (budget < 1) throw std::invalid_argument("resolve: budget must be >= 1");

    ResolutionReport report;
    Polytope current = p;
    CharMap current_map = map;

    for (int iteration = 0;; ++iteration) {
        const auto bad = bad_faces(current, current_map);
        if (iteration == 0) report.initial_bad_count = static_cast<int>(bad.size());
        if (observer) observer(ResolutionSnapshot{iteration, current, current_map, bad});

        if (bad.empty()) {
            report.terminated = Termination::success;
            break;
        }
        if (static_cast<int>(report.steps.size()) >= budget) {
            report.terminated = Termination::budget_exhausted;
            break;
        }

        // bad_faces() is sorted by (circuit size, face): the front is the target.
        const BadFace& target = bad.front();
        BitVector w;
        try {
            w = resolution_vector(current, current_map, target.face);
        } catch (const NoVectorFound&) {
            report.terminated = Termination::no_vector_found;
            break;
        }
        auto cut = truncate_face(current, target.face);
        report.steps.push_back(ResolutionStep{target.face, target.circuit_size, cut.new_facet, w,
                                              cut.vertices_removed, cut.vertices_added});
        current = std::move(cut.polytope);
        current_map = current_map.extended(w);
    }

    report.final_polytope = std::move(current);
    report.final_map = std::move(current_map);
    return report;
}

}  // namespace smallcover
