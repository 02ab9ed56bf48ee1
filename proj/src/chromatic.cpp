#include "smallcover/chromatic.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace smallcover {
namespace {

using Clock = std::chrono::steady_clock;

class Deadline {
public:
    explicit Deadline(std::chrono::milliseconds budget) : end_(Clock::now() + budget) {}

    bool expired() {
        if (expired_) return true;
        if ((calls_++ & 0xFF) == 0 && Clock::now() >= end_) expired_ = true;
        return expired_;
    }
    bool hit() const { return expired_; }

private:
    Clock::time_point end_;
    unsigned calls_ = 0;
    bool expired_ = false;
};

class CliqueSearch {
public:
    CliqueSearch(const Graph& g, Deadline& deadline) : g_(g), deadline_(deadline) {}

    std::vector<int> run() {
        if (g_.size() == 0) return {};
        best_ = {0};
        expand(g_.all_nodes());
        std::sort(best_.begin(), best_.end());
        return best_;
    }

private:
    // Greedy sequential coloring of `candidates`; bounds[i] is the color number
    // of order[i], so no clique inside order[0..i] exceeds bounds[i].
    void color_sort(NodeSet candidates, std::vector<int>& order, std::vector<int>& bounds) const {
        int color = 0;
        while (!candidates.empty()) {
            ++color;
            NodeSet open = candidates;
            while (!open.empty()) {
                const int v = open.first();
                open.reset(v);
                open.subtract(g_.neighbors(v));
                candidates.reset(v);
                order.push_back(v);
                bounds.push_back(color);
            }
        }
    }

    void expand(NodeSet candidates) {
        if (deadline_.expired()) return;
        std::vector<int> order;
        std::vector<int> bounds;
        color_sort(candidates, order, bounds);
        for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
            if (current_.size() + bounds[i] <= best_.size()) return;
            const int v = order[i];
            current_.push_back(v);
            NodeSet next = candidates & g_.neighbors(v);
            if (next.empty()) {
                if (current_.size() > best_.size()) best_ = current_;
            } else {
                expand(std::move(next));
            }
            current_.pop_back();
            candidates.reset(v);
            if (deadline_.hit()) return;
        }
    }

    const Graph& g_;
    Deadline& deadline_;
    std::vector<int> current_;
    std::vector<int> best_;
};

// DSATUR state shared by the greedy pass and the branch and bound.
class Dsatur {
public:
    Dsatur(const Graph& g, int max_colors)
        : g_(g), colors_(g.size(), -1), counts_(g.size(), std::vector<int>(max_colors + 1, 0)),
          saturation_(g.size(), 0), uncolored_degree_(g.size()) {
        for (int v = 0; v < g.size(); ++v) uncolored_degree_[v] = g.degree(v);
    }

    void assign(int v, int c) {
        colors_[v] = c;
        g_.neighbors(v).for_each([&](int u) {
            if (counts_[u][c]++ == 0) ++saturation_[u];
            --uncolored_degree_[u];
        });
    }

    void unassign(int v) {
        const int c = colors_[v];
        colors_[v] = -1;
        g_.neighbors(v).for_each([&](int u) {
            if (--counts_[u][c] == 0) --saturation_[u];
            ++uncolored_degree_[u];
        });
    }

    // Uncolored vertex of maximum saturation, then maximum uncolored degree, then smallest index.
    int pick() const {
        int best = -1;
        for (int v = 0; v < g_.size(); ++v) {
            if (colors_[v] >= 0) continue;
            if (best < 0 || saturation_[v] > saturation_[best] ||
                (saturation_[v] == saturation_[best] && uncolored_degree_[v] > uncolored_degree_[best])) {
                best = v;
            }
        }
        return best;
    }

    bool allowed(int v, int c) const { return counts_[v][c] == 0; }
    const std::vector<int>& colors() const { return colors_; }

private:
    const Graph& g_;
    std::vector<int> colors_;
    std::vector<std::vector<int>> counts_;
    std::vector<int> saturation_;
    std::vector<int> uncolored_degree_;
};

class ColoringSearch {
public:
    ColoringSearch(const Graph& g, int lower, std::vector<int> best, Deadline& deadline)
        : g_(g), lower_(lower), best_(std::move(best)), deadline_(deadline),
          best_count_(count_colors(best_)), state_(g, best_count_) {}

    void run(const std::vector<int>& clique) {
        if (best_count_ <= lower_) return;
        for (std::size_t i = 0; i < clique.size(); ++i) state_.assign(clique[i], static_cast<int>(i));
        search(static_cast<int>(clique.size()), static_cast<int>(clique.size()));
    }

    const std::vector<int>& best() const { return best_; }
    int best_count() const { return best_count_; }

    static int count_colors(const std::vector<int>& coloring) {
        return static_cast<int>(std::set<int>(coloring.begin(), coloring.end()).size());
    }

private:
    void search(int colored, int used) {
        if (deadline_.expired()) return;
        if (colored == g_.size()) {
            best_ = state_.colors();
            best_count_ = used;
            return;
        }
        const int v = state_.pick();
        for (int c = 0; c < used; ++c) {
            if (!state_.allowed(v, c)) continue;
            state_.assign(v, c);
            search(colored + 1, used);
            state_.unassign(v);
            if (best_count_ <= lower_ || used >= best_count_ || deadline_.hit()) return;
        }
        if (used + 1 < best_count_) {
            state_.assign(v, used);
            search(colored + 1, used + 1);
            state_.unassign(v);
        }
    }

    const Graph& g_;
    int lower_;
    std::vector<int> best_;
    Deadline& deadline_;
    int best_count_;
    Dsatur state_;
};

}  // namespace

const char* to_string(ChromaticStatus s) { return s == ChromaticStatus::exact ? "exact" : "bounds_only"; }

std::vector<int> maximum_clique(const Graph& g, std::chrono::milliseconds budget) {
    Deadline deadline(budget);
    return CliqueSearch(g, deadline).run();
}

std::vector<int> dsatur_coloring(const Graph& g) {
    Dsatur state(g, g.size());
    int used = 0;
    for (int colored = 0; colored < g.size(); ++colored) {
        const int v = state.pick();
        int c = 0;
        while (!state.allowed(v, c)) ++c;
        used = std::max(used, c + 1);
        state.assign(v, c);
    }
    return canonical_coloring(state.colors());
}

std::vector<int> canonical_coloring(const std::vector<int>& coloring) {
    std::map<int, int> relabel;
    std::vector<int> out;
    out.reserve(coloring.size());
    for (int c : coloring) {
        auto [it, inserted] = relabel.try_emplace(c, static_cast<int>(relabel.size()));
        out.push_back(it->second);
    }
    return out;
}

bool is_proper_coloring(const Graph& g, const std::vector<int>& coloring) {
    if (static_cast<int>(coloring.size()) != g.size()) return false;
    for (int v = 0; v < g.size(); ++v) {
        bool ok = true;
        g.neighbors(v).for_each([&](int u) { ok = ok && coloring[u] != coloring[v]; });
        if (!ok) return false;
    }
    return true;
}

bool is_clique(const Graph& g, const std::vector<int>& nodes) {
    for (std::size_t a = 0; a < nodes.size(); ++a)
        for (std::size_t b = a + 1; b < nodes.size(); ++b)
            if (!g.adjacent(nodes[a], nodes[b])) return false;
    return true;
}

bool verify_certificate(const Graph& g, const ChromaticCertificate& cert) {
    // An exhausted branch and bound may prove a lower bound above the clique size.
    if (!is_clique(g, cert.clique) || static_cast<int>(cert.clique.size()) > cert.lower) return false;
    if (cert.status == ChromaticStatus::bounds_only && static_cast<int>(cert.clique.size()) != cert.lower) return false;
    if (!is_proper_coloring(g, cert.coloring)) return false;
    if (ColoringSearch::count_colors(cert.coloring) != cert.upper) return false;
    if (cert.lower > cert.upper) return false;
    if (cert.status == ChromaticStatus::exact) return cert.lower == cert.upper && cert.chi == cert.upper;
    return cert.chi == cert.upper;
}

ChromaticCertificate chromatic_number(const Graph& g, const std::optional<std::vector<int>>& hint,
                                      std::chrono::milliseconds budget) {
    Deadline deadline(budget);
    ChromaticCertificate cert;
    cert.clique = CliqueSearch(g, deadline).run();
    cert.lower = static_cast<int>(cert.clique.size());

    std::vector<int> best = dsatur_coloring(g);
    if (hint && is_proper_coloring(g, *hint) &&
        ColoringSearch::count_colors(*hint) < ColoringSearch::count_colors(best)) {
        best = *hint;
    }

    ColoringSearch search(g, cert.lower, std::move(best), deadline);
    if (!deadline.hit()) search.run(cert.clique);

    cert.coloring = canonical_coloring(search.best());
    cert.upper = search.best_count();
    cert.chi = cert.upper;
    if (!deadline.hit()) cert.lower = cert.upper;  // search ran to completion
    cert.status = cert.lower == cert.upper ? ChromaticStatus::exact : ChromaticStatus::bounds_only;
    if (!verify_certificate(g, cert)) throw std::logic_error("chromatic_number: certificate failed verification");
    return cert;
}

ChromaticCertificate chromatic_number(const Polytope& p, const std::optional<CharMap>& hint,
                                      std::chrono::milliseconds budget) {
    std::optional<std::vector<int>> colors;
    if (hint) {
        const auto induced = induced_coloring(p, *hint);
        colors.emplace(induced.colors.begin(), induced.colors.end());
    }
    return chromatic_number(facet_adjacency(p), colors, budget);
}

}  // namespace smallcover
