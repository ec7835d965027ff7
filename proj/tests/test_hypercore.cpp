#include <doctest.h>

#include <random>
#include <set>
#include <sstream>

#include "kneserlab/hypergraph.hpp"

using namespace kneserlab;

namespace {

Hypergraph k4_graph() { return Hypergraph(4, 2, all_r_subsets(4, 2)); }

Hypergraph star_521() {
    return Hypergraph(5, 2, {{1, 2}, {1, 3}, {1, 4}, {1, 5}});
}

Hypergraph random_hypergraph(std::mt19937_64& rng, int n, int r, int max_edges) {
    auto universe = all_r_subsets(n, r);
    std::vector<std::vector<int>> edges;
    int m = static_cast<int>(rng() % static_cast<std::uint64_t>(max_edges + 1));
    std::vector<std::size_t> idx(universe.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    for (int i = 0; i < m && i < static_cast<int>(universe.size()); ++i) {
        std::size_t j = static_cast<std::size_t>(i) + rng() % (idx.size() - static_cast<std::size_t>(i));
        std::swap(idx[static_cast<std::size_t>(i)], idx[j]);
        edges.push_back(universe[idx[static_cast<std::size_t>(i)]]);
    }
    return Hypergraph(n, r, std::move(edges));
}

}  // namespace

TEST_CASE("intersect_size on canonical sets") {
    CHECK(intersect_size(mask_of({1, 2, 3}), mask_of({1, 2, 3})) == 3);
    CHECK(intersect_size(mask_of({1, 2}), mask_of({3, 4})) == 0);
    CHECK(intersect_size(mask_of({1, 2, 3}), mask_of({2, 3, 4})) == 2);
}

TEST_CASE("conflict graph of the complete graph on four vertices is a perfect matching") {
    Hypergraph h = k4_graph();
    ConflictGraph g = conflict_graph(h, 1);
    // Oracle: check all 15 index pairs for disjointness directly.
    int adjacent_pairs = 0;
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j) {
            bool disjoint = intersect_size(h.mask(i), h.mask(j)) == 0;
            CHECK(g.adjacent(i, j) == disjoint);
            if (disjoint) ++adjacent_pairs;
        }
    CHECK(adjacent_pairs == 3);
    for (int i = 0; i < 6; ++i) CHECK(g.degree(i) == 1);
}

TEST_CASE("conflict graph of a star is edgeless") {
    ConflictGraph g = conflict_graph(star_521(), 1);
    CHECK(g.edge_count() == 0);
}

TEST_CASE("conflict graph of all triples of [5] at ell=2 is 3-regular on 10 vertices") {
    Hypergraph h(5, 3, all_r_subsets(5, 3));
    ConflictGraph g = conflict_graph(h, 2);
    CHECK(g.vertex_count() == 10);
    CHECK(g.edge_count() == 15);
    for (int i = 0; i < 10; ++i) {
        CHECK(g.degree(i) == 3);
        for (int j = 0; j < 10; ++j)
            if (i != j) CHECK(g.adjacent(i, j) == (intersect_size(h.mask(i), h.mask(j)) == 1));
    }
}

TEST_CASE("conflict graph rejects ell >= r") {
    CHECK_THROWS_AS(conflict_graph(star_521(), 2), error);
}

TEST_CASE("is_kneser_coloring on the named examples") {
    Hypergraph star = star_521();
    CHECK(is_kneser_coloring(star, 1, {{1, 2, 3, 1}}));
    CHECK(is_kneser_coloring(star, 1, {{2, 2, 2, 2}}));

    Hypergraph k4 = k4_graph();
    // Edges in lexicographic order: 12,13,14,23,24,34. Monochromatic 12/34 fails.
    CHECK_FALSE(is_kneser_coloring(k4, 1, {{1, 2, 3, 2, 3, 1}}));
    // Color classes {12,13,14} and {23,24,34} are both intersecting.
    CHECK(is_kneser_coloring(k4, 1, {{1, 1, 1, 2, 2, 2}}));
}

TEST_CASE("kneser colorings are exactly the proper colorings of the conflict graph") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 4 + static_cast<int>(rng() % 3);
        int r = 2 + static_cast<int>(rng() % 2);
        int ell = 1 + static_cast<int>(rng() % (r - 1));
        Hypergraph h = random_hypergraph(rng, n, r, 8);
        ConflictGraph g = conflict_graph(h, ell);
        int k = 2 + static_cast<int>(rng() % 3);
        KneserColoring delta;
        for (int e = 0; e < h.edge_count(); ++e)
            delta.colors.push_back(1 + static_cast<int>(rng() % static_cast<std::uint64_t>(k)));
        bool proper = true;
        for (int i = 0; i < g.vertex_count(); ++i)
            for (int j : g.neighbors(i))
                if (j > i && delta.colors[static_cast<std::size_t>(i)] ==
                                 delta.colors[static_cast<std::size_t>(j)])
                    proper = false;
        CHECK(is_kneser_coloring(h, ell, delta) == proper);
    }
}

TEST_CASE("adding a hyperedge never removes a conflict among existing edges") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 5 + static_cast<int>(rng() % 2);
        int r = 2 + static_cast<int>(rng() % 2);
        int ell = 1 + static_cast<int>(rng() % (r - 1));
        Hypergraph h = random_hypergraph(rng, n, r, 6);
        auto universe = all_r_subsets(n, r);
        std::vector<std::vector<int>> extended = h.edges();
        bool added = false;
        for (const auto& e : universe) {
            if (std::find(extended.begin(), extended.end(), e) == extended.end()) {
                extended.push_back(e);
                added = true;
                break;
            }
        }
        if (!added) continue;
        Hypergraph h2(n, r, extended);
        auto adjacency_pairs = [ell](const Hypergraph& hh) {
            std::set<std::pair<std::uint64_t, std::uint64_t>> out;
            ConflictGraph g = conflict_graph(hh, ell);
            for (int i = 0; i < g.vertex_count(); ++i)
                for (int j : g.neighbors(i))
                    if (j > i) out.insert({hh.mask(i), hh.mask(j)});
            return out;
        };
        auto before = adjacency_pairs(h);
        auto after = adjacency_pairs(h2);
        CHECK(std::includes(after.begin(), after.end(), before.begin(), before.end()));
    }
}

TEST_CASE("file format round trip") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 4 + static_cast<int>(rng() % 4);
        int r = 2 + static_cast<int>(rng() % 3);
        if (r >= n) r = n - 1;
        Hypergraph h = random_hypergraph(rng, n, r, 10);
        CHECK(parse_hypergraph(format_hypergraph(h)) == h);
        for (int i = 0; i < h.edge_count(); ++i) {
            CHECK(mask_of(verts_of(h.mask(i))) == h.mask(i));
            CHECK(verts_of(h.mask(i)) == h.edges()[static_cast<std::size_t>(i)]);
        }
    }
}

TEST_CASE("parser rejects malformed input") {
    CHECK_THROWS_AS(parse_hypergraph("5 2 2\n1 2\n1 2\n"), error);   // duplicate edge
    CHECK_THROWS_AS(parse_hypergraph("5 2 1\n2 1\n"), error);        // unsorted vertices
    CHECK_THROWS_AS(parse_hypergraph("5 2 1\n1 6\n"), error);        // out of range
    CHECK_THROWS_AS(parse_hypergraph("5 2 2\n1 3\n1 2\n"), error);   // misordered edges
    CHECK_THROWS_AS(parse_hypergraph("5 2 2\n1 2\n"), error);        // truncated
    CHECK_THROWS_AS(parse_hypergraph("5 2 1\n1 1\n"), error);        // repeated vertex
}

TEST_CASE("vertex cap and degenerate shapes") {
    CHECK_THROWS_AS(Hypergraph(65, 2, {}), error);
    Hypergraph empty(5, 7, {});  // r > n with no edges is legal
    CHECK(empty.edge_count() == 0);
    Hypergraph zero(0, 1, {});
    CHECK(zero.edge_count() == 0);
}
