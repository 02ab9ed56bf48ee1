#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "smallcover/chromatic.hpp"
#include "smallcover/generators.hpp"
#include "smallcover/resolution.hpp"

using namespace smallcover;

namespace {

Graph to_graph(const oracle::AdjacencyList& adj) {
    Graph g(static_cast<int>(adj.size()));
    for (int i = 0; i < static_cast<int>(adj.size()); ++i)
        for (int j : adj[i]) g.add_edge(i, j);
    return g;
}

int brute_clique(const oracle::AdjacencyList& adj) {
    const int n = static_cast<int>(adj.size());
    int best = 0;
    for (unsigned s = 0; s < (1u << n); ++s) {
        bool ok = true;
        for (int i = 0; i < n && ok; ++i) {
            if (!((s >> i) & 1U)) continue;
            for (int j = i + 1; j < n && ok; ++j) {
                if (!((s >> j) & 1U)) continue;
                ok = std::find(adj[i].begin(), adj[i].end(), j) != adj[i].end();
            }
        }
        if (ok) best = std::max(best, __builtin_popcount(s));
    }
    return best;
}

}  // namespace

TEST_CASE("dual cyclic polytopes: chi equals the number of facets") {
    const auto cert = chromatic_number(dual_cyclic(4, 15));
    CHECK(cert.status == ChromaticStatus::exact);
    CHECK(cert.chi == 15);
    CHECK(cert.clique.size() == 15);
    CHECK(verify_certificate(facet_adjacency(dual_cyclic(4, 15)), cert));
}

TEST_CASE("polygons have chi 2 or 3 by parity") {
    for (int m = 3; m <= 12; ++m) {
        const auto cert = chromatic_number(dual_cyclic(2, m));
        CHECK(cert.status == ChromaticStatus::exact);
        CHECK(cert.chi == (m % 2 == 0 ? 2 : 3));
    }
}

TEST_CASE("chi is at least the dimension") {
    for (const auto& p : {dual_cyclic(4, 8), dual_cyclic(5, 9), product(dual_cyclic(3, 6), segment())}) {
        CHECK(chromatic_number(p).chi >= p.dim());
    }
    Polytope cube = segment();
    for (int i = 1; i < 5; ++i) cube = product(cube, segment());
    CHECK(chromatic_number(cube).chi == 5);
}

TEST_CASE("a proper hint closes the gap") {
    const auto p = dual_cyclic(4, 8);
    const auto r = resolve(p, make_preset(Preset::odd_bijection, p));
    const auto cert = chromatic_number(r.final_polytope, r.final_map);
    CHECK(cert.status == ChromaticStatus::exact);
    CHECK(cert.chi == 8);
}

TEST_CASE("canonical coloring") {
    CHECK(canonical_coloring({7, 3, 7, 9, 3}) == std::vector<int>{0, 1, 0, 2, 1});
}

TEST_CASE("maximum clique matches brute force") {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 12);
        const auto adj = oracle::random_graph(rng, n, 20 + static_cast<int>(rng() % 70));
        const auto g = to_graph(adj);
        const auto clique = maximum_clique(g);
        CHECK(is_clique(g, clique));
        CHECK(static_cast<int>(clique.size()) == brute_clique(adj));
    }
}

TEST_CASE("chromatic number matches the exhaustive oracle on random graphs") {
    std::mt19937 rng(4242);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = static_cast<int>(rng() % 11);
        const auto adj = oracle::random_graph(rng, n, 10 + static_cast<int>(rng() % 80));
        const auto g = to_graph(adj);
        const auto cert = chromatic_number(g);
        REQUIRE(cert.status == ChromaticStatus::exact);
        CHECK(cert.chi == oracle::chromatic_number(adj));
        CHECK(verify_certificate(g, cert));
        const auto greedy = dsatur_coloring(g);
        CHECK(is_proper_coloring(g, greedy));
    }
}

TEST_CASE("a graph where the clique bound is not tight") {
    // Mycielski graph of C5 (Groetzsch): triangle-free, chi = 4.
    Graph g(11);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(5 + i, (i + 1) % 5);
        g.add_edge(5 + i, (i + 4) % 5);
        g.add_edge(5 + i, 10);
    }
    const auto cert = chromatic_number(g);
    CHECK(maximum_clique(g).size() == 2);
    CHECK(cert.status == ChromaticStatus::exact);
    CHECK(cert.chi == 4);
    CHECK(verify_certificate(g, cert));

    const auto rushed = chromatic_number(g, std::nullopt, std::chrono::milliseconds{0});
    CHECK(rushed.status == ChromaticStatus::bounds_only);
    CHECK(rushed.lower < rushed.upper);
    CHECK(rushed.chi == rushed.upper);
    CHECK(verify_certificate(g, rushed));

    oracle::AdjacencyList adj(11);
    for (int i = 0; i < 11; ++i)
        for (int j = 0; j < 11; ++j)
            if (g.adjacent(i, j)) adj[i].push_back(j);
    CHECK(oracle::chromatic_number(adj) == 4);
}

TEST_CASE("verify_certificate rejects tampering") {
    const auto p = dual_cyclic(2, 5);
    const auto g = facet_adjacency(p);
    auto cert = chromatic_number(p);
    REQUIRE(verify_certificate(g, cert));
    auto bad_coloring = cert;
    bad_coloring.coloring[1] = bad_coloring.coloring[0];
    CHECK_FALSE(verify_certificate(g, bad_coloring));
    auto bad_clique = cert;
    bad_clique.clique = {0, 2};
    CHECK_FALSE(verify_certificate(g, bad_clique));
}
