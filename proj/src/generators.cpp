#include "smallcover/generators.hpp"

#include <set>
#include <stdexcept>
#include <string>

namespace smallcover {

bool satisfies_gale_evenness(std::span<const int> subset, int m) {
    // Checking consecutive non-members suffices: the member count between any
    // two non-members is a sum of counts between consecutive ones.
    std::size_t pos = 0;
    int previous_gap = -1;
    int members_since_gap = 0;
    for (int i = 0; i < m; ++i) {
        if (pos < subset.size() && subset[pos] == i) {
            ++pos;
            ++members_since_gap;
            continue;
        }
        if (previous_gap >= 0 && members_since_gap % 2 != 0) return false;
        previous_gap = i;
        members_since_gap = 0;
    }
    return true;
}

Polytope dual_cyclic(int n, int m) {
    if (n < 2) throw std::invalid_argument("dual_cyclic: dimension must be >= 2");
    if (m <= n) {
        throw std::invalid_argument("dual_cyclic: need more facets than dimension (got n=" + std::to_string(n) +
                                    ", m=" + std::to_string(m) + ")");
    }
    std::vector<VertexSet> vertices;
    std::vector<int> subset(n);
    for (int i = 0; i < n; ++i) subset[i] = i;
    while (true) {
        if (satisfies_gale_evenness(subset, m)) vertices.push_back(subset);
        int i = n - 1;
        while (i >= 0 && subset[i] == m - n + i) --i;
        if (i < 0) break;
        ++subset[i];
        for (int j = i + 1; j < n; ++j) subset[j] = subset[j - 1] + 1;
    }
    return Polytope(n, m, std::move(vertices));
}

Polytope product(const Polytope& p, const Polytope& q) {
    const int offset = p.facet_count();
    auto labels = p.facet_labels();
    const std::set<std::string> taken(labels.begin(), labels.end());
    for (const auto& label : q.facet_labels()) {
        // Primes keep labels unique, e.g. segment x segment -> F0 F1 F0' F1'.
        labels.push_back(taken.contains(label) ? label + "'" : label);
    }

    std::vector<VertexSet> vertices;
    vertices.reserve(p.vertices().size() * q.vertices().size());
    for (const auto& a : p.vertices()) {
        for (const auto& b : q.vertices()) {
            VertexSet v = a;
            for (int f : b) v.push_back(f + offset);
            vertices.push_back(std::move(v));
        }
    }
    return Polytope(p.dim() + q.dim(), std::move(labels), std::move(vertices));
}

Polytope segment() { return Polytope(1, 2, {{0}, {1}}); }

}  // namespace smallcover
