#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "smallcover/chromatic.hpp"
#include "smallcover/io.hpp"
#include "smallcover/resolution.hpp"

namespace smallcover {

/// The three end-to-end constructions:
///  - main:  dual C^4(15), fixed decoration, chi = 15 = 2^4 - 1;
///  - main2: dual C^4(8), odd-weight bijection, oriented, chi = 8 = 2^3;
///  - main3: dual C^5(16), odd-weight bijection, oriented, chi = 16 = 2^4.
enum class ReproduceTarget { main, main2, main3 };

const char* to_string(ReproduceTarget t);
std::optional<ReproduceTarget> parse_reproduce_target(std::string_view text);

struct Check {
    std::string name;
    std::string expected;
    std::string observed;
    bool passed = false;
};

struct ReproduceSummary {
    ReproduceTarget target = ReproduceTarget::main;
    std::string start;  // description of the starting polytope and decoration
    std::vector<BadFace> initial_bad;
    std::map<int, int> initial_bad_by_size;
    ResolutionReport report;
    std::vector<long long> final_f_vector;
    bool euler_ok = false;
    ChromaticCertificate chromatic;
    bool oriented_throughout = true;
    std::map<int, int> circuit_sizes_observed;  // size -> number of (iteration, face) sightings
    std::vector<std::string> notes;
    std::vector<Check> checks;

    bool passed() const;
    /// One-line digest, e.g. "bad edges: 13, bad vertices: 17, steps: 30, f = [...], chi = 15".
    std::string headline() const;
};

/// Reference lists for the fixed decoration of dual C^4(15).
const std::vector<FaceSet>& reference_bad_edges();
const std::vector<FaceSet>& reference_bad_vertices();

ReproduceSummary reproduce(ReproduceTarget target,
                           std::chrono::milliseconds chromatic_budget = kDefaultTimeBudget);

Json to_json(const ReproduceSummary& summary);

}  // namespace smallcover
