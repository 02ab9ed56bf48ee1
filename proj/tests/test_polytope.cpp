#include <algorithm>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "smallcover/errors.hpp"
#include "smallcover/generators.hpp"
#include "smallcover/polytope.hpp"

using namespace smallcover;

namespace {

bool has_kind(const std::vector<Diagnostic>& diags, DiagnosticKind kind, const std::vector<int>& witness) {
    return std::any_of(diags.begin(), diags.end(),
                       [&](const Diagnostic& d) { return d.kind == kind && d.witness == witness; });
}

Polytope cube(int n) {
    Polytope p = segment();
    for (int i = 1; i < n; ++i) p = product(p, segment());
    return p;
}

// Every proper subset of `face` (size >= 1).
std::vector<std::vector<int>> proper_subsets(const std::vector<int>& face) {
    std::vector<std::vector<int>> out;
    const unsigned full = (1u << face.size()) - 1;
    for (unsigned s = 1; s < full; ++s) {
        std::vector<int> sub;
        for (std::size_t i = 0; i < face.size(); ++i)
            if ((s >> i) & 1U) sub.push_back(face[i]);
        out.push_back(sub);
    }
    return out;
}

void check_structure(const Polytope& p) {
    CHECK(validate(p).empty());
    const auto f = f_vector(p);
    CHECK(satisfies_euler(f, p.dim()));
    CHECK(p.dim() * f[0] == 2 * (p.dim() >= 2 ? f[1] : f[0]));
}

}  // namespace

TEST_CASE("construction canonicalizes vertex order") {
    const Polytope p(2, 3, {{2, 1}, {0, 2}, {1, 0}});
    CHECK(p.vertices() == std::vector<VertexSet>{{0, 1}, {0, 2}, {1, 2}});
    CHECK(p.facet_labels() == std::vector<std::string>{"F0", "F1", "F2"});
}

TEST_CASE("validate") {
    CHECK(validate(dual_cyclic(4, 15)).empty());

    SUBCASE("duplicate vertex") {
        auto vs = dual_cyclic(4, 5).vertices();
        vs.push_back(vs.front());
        const auto diags = validate(Polytope(4, 5, vs));
        CHECK(has_kind(diags, DiagnosticKind::duplicate_vertex, vs.front()));
    }
    SUBCASE("edge in three vertices") {
        const Polytope p(2, 4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {2, 3}});
        CHECK(has_kind(validate(p), DiagnosticKind::edge_condition, {0}));
    }
    SUBCASE("wrong arity and out-of-range index") {
        const Polytope p(2, 3, {{0, 1}, {1, 2}, {0, 2, 1}, {0, 7}});
        const auto diags = validate(p);
        CHECK(has_kind(diags, DiagnosticKind::wrong_arity, {0, 1, 2}));
        CHECK(has_kind(diags, DiagnosticKind::index_out_of_range, {0, 7}));
    }
    SUBCASE("repeated facet in a vertex") {
        CHECK(has_kind(validate(Polytope(2, 3, {{0, 1}, {1, 2}, {0, 0}})), DiagnosticKind::repeated_facet, {0, 0}));
    }
    SUBCASE("too few facets and unused facet") {
        CHECK(has_kind(validate(Polytope(2, 2, {{0, 1}})), DiagnosticKind::too_few_facets, {2}));
        const auto diags = validate(Polytope(2, 4, {{0, 1}, {1, 2}, {0, 2}}));
        CHECK(has_kind(diags, DiagnosticKind::facet_underused, {3}));
    }
    SUBCASE("dimension below one") { CHECK(has_kind(validate(Polytope(0, 2, {})), DiagnosticKind::bad_dimension, {0})); }
}

TEST_CASE("is_face") {
    const auto p = dual_cyclic(4, 15);
    CHECK(is_face(p, std::vector{2, 7, 8}));

    // {0,2,4}: no Gale vertex contains it
    const auto gale = oracle::gale_vertices(4, 15);
    const std::vector<int> probe{0, 2, 4};
    REQUIRE(std::none_of(gale.begin(), gale.end(), [&](const std::vector<int>& v) {
        return std::includes(v.begin(), v.end(), probe.begin(), probe.end());
    }));
    CHECK_FALSE(is_face(p, probe));

    for (const auto& v : p.vertices()) CHECK(is_face(p, v));
}

TEST_CASE("faces_of_codim") {
    const auto p = dual_cyclic(4, 15);
    CHECK(faces_of_codim(p, 1).size() == 15);
    const auto edges = faces_of_codim(p, 3);
    CHECK(std::binary_search(edges.begin(), edges.end(), FaceSet{2, 7, 8}));
    CHECK(std::binary_search(edges.begin(), edges.end(), FaceSet{0, 1, 7}));

    const auto gale = oracle::gale_vertices(4, 15);
    REQUIRE(oracle::faces_of_codim(gale, 2).size() == 105);
    CHECK(faces_of_codim(p, 2).size() == 105);

    CHECK_THROWS_AS(faces_of_codim(p, 0), std::invalid_argument);
    CHECK_THROWS_AS(faces_of_codim(p, 5), std::invalid_argument);
}

TEST_CASE("faces_of_codim matches subset enumeration on small polytopes") {
    for (const auto& p : {dual_cyclic(4, 5), cube(3), cube(4), dual_cyclic(2, 5), dual_cyclic(3, 7)}) {
        for (int k = 1; k <= p.dim(); ++k) {
            const auto expected = oracle::faces_of_codim(p.vertices(), k);
            const auto got = faces_of_codim(p, k);
            CHECK(std::set<FaceSet>(got.begin(), got.end()) == expected);
            CHECK(std::is_sorted(got.begin(), got.end()));
        }
    }
}

TEST_CASE("f_vector") {
    const auto gale = oracle::gale_vertices(4, 15);
    const std::vector<long long> expected{static_cast<long long>(gale.size()),
                                          static_cast<long long>(oracle::faces_of_codim(gale, 3).size()),
                                          static_cast<long long>(oracle::faces_of_codim(gale, 2).size()), 15};
    REQUIRE(expected == std::vector<long long>{90, 180, 105, 15});
    CHECK(f_vector(dual_cyclic(4, 15)) == expected);
    CHECK(f_vector(dual_cyclic(4, 5)) == std::vector<long long>{5, 10, 10, 5});
    CHECK(f_vector(segment()) == std::vector<long long>{2});
}

TEST_CASE("facet_adjacency") {
    const auto k15 = facet_adjacency(dual_cyclic(4, 15));
    for (int i = 0; i < 15; ++i) {
        CHECK_FALSE(k15.adjacent(i, i));
        CHECK(k15.degree(i) == 14);
    }

    const auto c = facet_adjacency(cube(4));
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) CHECK(c.adjacent(i, j) == (i != j && i / 2 != j / 2));
}

TEST_CASE("truncate an edge of the 4-simplex") {
    const auto simplex = dual_cyclic(4, 5);
    const auto t = truncate_face(simplex, std::vector{0, 1, 2});
    CHECK(t.new_facet == 5);
    CHECK(t.vertices_removed == 2);
    CHECK(t.vertices_added == 6);
    CHECK(t.polytope.label(5) == "T(F0,F1,F2)");
    const auto prism = vertices_containing(t.polytope, std::vector{5});
    CHECK(prism == std::vector<VertexSet>{{0, 1, 3, 5}, {0, 1, 4, 5}, {0, 2, 3, 5}, {0, 2, 4, 5}, {1, 2, 3, 5},
                                          {1, 2, 4, 5}});
    CHECK(t.polytope.vertex_count() - simplex.vertex_count() == 4);
    CHECK_FALSE(is_face(t.polytope, std::vector{0, 1, 2}));
    for (const auto& sub : proper_subsets({0, 1, 2})) CHECK(is_face(t.polytope, sub));
    check_structure(t.polytope);
}

TEST_CASE("truncate a vertex of the 4-simplex") {
    const auto simplex = dual_cyclic(4, 5);
    const auto t = truncate_face(simplex, std::vector{0, 1, 2, 3});
    CHECK(t.vertices_removed == 1);
    CHECK(t.vertices_added == 4);
    CHECK(vertices_containing(t.polytope, std::vector{5}) ==
          std::vector<VertexSet>{{0, 1, 2, 5}, {0, 1, 3, 5}, {0, 2, 3, 5}, {1, 2, 3, 5}});
    CHECK(t.polytope.vertex_count() - simplex.vertex_count() == 3);
    check_structure(t.polytope);
}

TEST_CASE("truncate_face errors") {
    const auto p = dual_cyclic(4, 15);
    CHECK_THROWS_AS(truncate_face(p, std::vector{0, 2, 4}), InvariantError);
    CHECK_THROWS_AS(truncate_face(p, std::vector{3}), InvariantError);
    CHECK_THROWS_AS(truncate_face(p, std::vector{0, 1, 2, 3, 4}), InvariantError);
    CHECK_THROWS_AS(truncate_face(p, std::vector{8, 7, 2}), InvariantError);
}

TEST_CASE("random truncation sequences preserve validity, Euler and face structure") {
    std::mt19937 rng(2024);
    const std::vector<Polytope> starts{dual_cyclic(4, 8), dual_cyclic(5, 9), cube(4), dual_cyclic(3, 6),
                                       product(dual_cyclic(2, 5), segment())};
    for (const auto& start : starts) {
        Polytope p = start;
        for (int step = 0; step < 12; ++step) {
            const int k = 2 + static_cast<int>(rng() % (p.dim() - 1));
            const auto faces = faces_of_codim(p, k);
            const auto& face = faces[rng() % faces.size()];
            const auto before = p.vertex_count();
            const auto touched = static_cast<int>(vertices_containing(p, face).size());
            const auto t = truncate_face(p, face);
            CHECK(t.polytope.facet_count() == p.facet_count() + 1);
            CHECK(t.vertices_removed == touched);
            CHECK(t.vertices_added == touched * k);
            CHECK(t.polytope.vertex_count() == before - touched + touched * k);
            CHECK_FALSE(is_face(t.polytope, face));
            for (const auto& sub : proper_subsets(face)) CHECK(is_face(t.polytope, sub));
            check_structure(t.polytope);
            p = t.polytope;
        }
    }
}
