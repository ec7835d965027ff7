#include <doctest.h>

#include <functional>
#include <numeric>
#include <random>

#include "kneserlab/closedform.hpp"
#include "kneserlab/exactcount.hpp"

using namespace kneserlab;

namespace {

Hypergraph star_521() { return Hypergraph(5, 2, {{1, 2}, {1, 3}, {1, 4}, {1, 5}}); }

Hypergraph k4_graph() { return Hypergraph(4, 2, all_r_subsets(4, 2)); }

Hypergraph random_hypergraph(std::mt19937_64& rng, int n, int r, int max_edges) {
    auto universe = all_r_subsets(n, r);
    std::vector<std::vector<int>> edges;
    int m = static_cast<int>(rng() % static_cast<std::uint64_t>(max_edges + 1));
    std::vector<std::size_t> idx(universe.size());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    for (int i = 0; i < m && i < static_cast<int>(universe.size()); ++i) {
        std::size_t j = static_cast<std::size_t>(i) + rng() % (idx.size() - static_cast<std::size_t>(i));
        std::swap(idx[static_cast<std::size_t>(i)], idx[j]);
        edges.push_back(universe[idx[static_cast<std::size_t>(i)]]);
    }
    return Hypergraph(n, r, std::move(edges));
}

}  // namespace

TEST_CASE("kappa on the worked instances") {
    CHECK(kappa_backtrack(star_521(), 3, 1) == 81);
    CHECK(kappa_backtrack(k4_graph(), 2, 1) == 8);
    CHECK(kappa_backtrack(k4_graph(), 3, 1) == 216);
    CHECK(kappa_backtrack(Hypergraph(5, 2, {}), 4, 1) == 1);
}

TEST_CASE("kappa via the chromatic polynomial") {
    CHECK(kappa_chromatic(k4_graph(), 2, 1) == 8);
    CHECK(kappa_chromatic(k4_graph(), 3, 1) == 216);
    CHECK(kappa_chromatic(star_521(), 3, 1) == 81);  // edgeless conflict graph: k^m

    // Three pairwise disjoint edges: conflict graph is a triangle, so two
    // colors cannot work.
    Hypergraph triple(6, 2, {{1, 2}, {3, 4}, {5, 6}});
    CHECK(kappa_chromatic(triple, 2, 1) == 0);
    CHECK(kappa_backtrack(triple, 2, 1) == 0);
    CHECK(kappa_chromatic(triple, 3, 1) == 6);  // falling factorial 3*2*1
}

TEST_CASE("chromatic polynomial basics") {
    // Triangle: x(x-1)(x-2).
    ConflictGraph g(3);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(0, 2);
    ChromaticPolynomial p = chromatic_polynomial(g);
    CHECK(p.evaluate(0) == 0);
    CHECK(p.evaluate(1) == 0);
    CHECK(p.evaluate(2) == 0);
    CHECK(p.evaluate(3) == 6);
    CHECK(p.evaluate(4) == 24);

    // The 3-regular conflict graph of all triples of [5] at ell=2 admits
    // 120 proper 3-colorings; both routes agree.
    Hypergraph petersen_source(5, 3, all_r_subsets(5, 3));
    CHECK(kappa_chromatic(petersen_source, 3, 2) == 120);
    CHECK(kappa_backtrack(petersen_source, 3, 2) == 120);
    CHECK(kappa_chromatic(petersen_source, 2, 2) == 0);
}

TEST_CASE("chromatic polynomial evaluates to nonnegative counts at every x >= 0") {
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 25; ++trial) {
        Hypergraph h = random_hypergraph(rng, 6, 2, 9);
        if (h.edge_count() == 0) continue;
        ChromaticPolynomial p = chromatic_polynomial(conflict_graph(h, 1));
        if (h.edge_count() >= 1) CHECK(p.evaluate(0) == 0);
        for (int x = 0; x <= 6; ++x) CHECK(p.evaluate(x) >= 0);
    }
}

TEST_CASE("chromatic budget is a hard error") {
    Budget tiny;
    tiny.max_chromatic_vertices = 3;
    CHECK_THROWS_AS(kappa_chromatic(k4_graph(), 2, 1, tiny), resource_error);
    Budget starved;
    starved.max_chromatic_nodes = 1;
    Hypergraph dense(6, 2, all_r_subsets(6, 2));
    CHECK_THROWS_AS(kappa_chromatic(dense, 3, 1, starved), resource_error);
}

TEST_CASE("backtracking and chromatic counts agree on random instances") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 120; ++trial) {
        int n = 4 + static_cast<int>(rng() % 4);
        int r = 2 + static_cast<int>(rng() % 3);
        if (r >= n) r = n - 1;
        int ell = 1 + static_cast<int>(rng() % (r - 1 > 0 ? r - 1 : 1));
        if (ell >= r) continue;
        int k = 1 + static_cast<int>(rng() % 5);
        Hypergraph h = random_hypergraph(rng, n, r, 10);
        CHECK(kappa_backtrack(h, k, ell) == kappa_chromatic(h, k, ell));
    }
}

TEST_CASE("monochromatic validity") {
    // kappa(H,1,ell) > 0 exactly when the edge set is pairwise ell-intersecting.
    Hypergraph good(6, 3, {{1, 2, 3}, {1, 2, 4}, {2, 3, 4}});
    CHECK(kappa_backtrack(good, 1, 2) == 1);
    Hypergraph bad(6, 3, {{1, 2, 3}, {1, 4, 5}});
    CHECK(kappa_backtrack(bad, 1, 2) == 0);
}

TEST_CASE("minimum ell-cover instances") {
    // A star: the fixed ell-set.
    Hypergraph star = complete_from_cover(6, 3, CoverConfig(2, {{1, 2}}));
    CoverConfig c1 = min_l_cover(star, 2);
    REQUIRE(c1.size() == 1);
    CHECK(c1.sets()[0] == std::vector<int>{1, 2});

    // Two disjoint 1-sets once n is large enough that no single vertex works.
    Hypergraph pair_cover = complete_from_cover(6, 2, CoverConfig(1, {{1}, {2}}));
    CHECK(min_l_cover(pair_cover, 1).size() == 2);

    // The complete graph on four vertices needs three vertices.
    CHECK(min_l_cover(k4_graph(), 1).size() == 3);

    CHECK_THROWS_AS(min_l_cover(Hypergraph(4, 2, {}), 1), error);
}

TEST_CASE("minimum cover is minimal against exhaustive search") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 30; ++trial) {
        int n = 5 + static_cast<int>(rng() % 2);
        int r = 2 + static_cast<int>(rng() % 2);
        int ell = 1 + static_cast<int>(rng() % (r - 1 > 0 ? r - 1 : 1));
        if (ell >= r) continue;
        Hypergraph h = random_hypergraph(rng, n, r, 8);
        if (h.edge_count() == 0) continue;
        CoverConfig cover = min_l_cover(h, ell);
        // Every edge is covered.
        for (auto em : h.masks()) {
            bool hit = false;
            for (auto tm : cover.masks())
                if ((em & tm) == tm) hit = true;
            CHECK(hit);
        }
        // No smaller cover exists among all ell-subset collections.
        auto candidates = all_r_subsets(n, ell);
        bool smaller = false;
        std::vector<int> pick(candidates.size(), 0);
        std::function<void(std::size_t, int)> rec = [&](std::size_t next, int chosen) {
            if (smaller || chosen >= cover.size()) return;
            bool all_hit = true;
            for (auto em : h.masks()) {
                bool hit = false;
                for (std::size_t i = 0; i < candidates.size(); ++i)
                    if (pick[i] && (em & mask_of(candidates[i])) == mask_of(candidates[i])) hit = true;
                if (!hit) all_hit = false;
            }
            if (all_hit) {
                smaller = true;
                return;
            }
            for (std::size_t i = next; i < candidates.size(); ++i) {
                pick[i] = 1;
                rec(i + 1, chosen + 1);
                pick[i] = 0;
            }
        };
        rec(0, 0);
        CHECK_FALSE(smaller);
    }
}

TEST_CASE("star classification instances") {
    // An anchored coloring of the two-1-set cover hypergraph.
    CoverConfig cover(1, {{1}, {2}});
    Hypergraph h = complete_from_cover(5, 2, cover);  // edges 12,13,14,15,23,24,25
    // Blocks {1,2} on t1, {3,4} on t2: color edge {1,2} with 1, other 1-edges
    // with 2, 2-edges with 3.
    KneserColoring star_delta{{1, 2, 2, 2, 3, 3, 3}};
    StarClassification sc = classify_star(h, cover, 4, 1, star_delta);
    CHECK(sc.cls == StarClass::Star);
    REQUIRE(sc.split.size() == 2);
    CHECK(sc.split[0] + sc.split[1] == 4);

    // Three colors on t1-edges and one on t2-edges: anchored, but (3,1) is
    // not an optimal split.
    KneserColoring gen_delta{{1, 2, 3, 1, 4, 4, 4}};
    CHECK(classify_star(h, cover, 4, 1, gen_delta).cls == StarClass::GeneralizedStar);

    // One color class mixing a t1-only edge with a t2-only edge is non-star
    // (but still a Kneser coloring since they intersect).
    Hypergraph mix(5, 2, {{1, 3}, {2, 3}});
    KneserColoring non_star{{1, 1}};
    CHECK(classify_star(mix, CoverConfig(1, {{1}, {2}}), 4, 1, non_star).cls == StarClass::NonStar);

    // Invalid colorings are rejected.
    Hypergraph disjoint(4, 2, {{1, 2}, {3, 4}});
    CHECK_THROWS_AS(classify_star(disjoint, CoverConfig(1, {{1}, {3}}), 2, 1, KneserColoring{{1, 1}}),
                    error);
}

TEST_CASE("star count on a star hypergraph is k to the edge count") {
    CoverConfig cover(2, {{1, 2}});
    Hypergraph h = complete_from_cover(6, 3, cover);
    CHECK(star_count_exact(h, cover, 3, 2) == big_pow(3, BigCount(h.edge_count())));
}

TEST_CASE("star count of the two-vertex cover at k=4, frozen oracle value") {
    CoverConfig cover(1, {{1}, {2}});
    Hypergraph h = complete_from_cover(5, 2, cover);
    REQUIRE(h.edge_count() == 7);

    // Independent oracle: enumerate all 4^7 colorings and classify each.
    BigCount oracle = 0;
    std::vector<int> colors(7, 1);
    while (true) {
        KneserColoring delta{colors};
        if (is_kneser_coloring(h, 1, delta) &&
            classify_star(h, cover, 4, 1, delta).cls == StarClass::Star)
            oracle += 1;
        int i = 0;
        while (i < 7 && colors[static_cast<std::size_t>(i)] == 4) {
            colors[static_cast<std::size_t>(i)] = 1;
            ++i;
        }
        if (i == 7) break;
        ++colors[static_cast<std::size_t>(i)];
    }
    CHECK(oracle == 1488);
    CHECK(star_count_exact(h, cover, 4, 1, {}, StarCountMethod::InclusionExclusion) == oracle);
    CHECK(star_count_exact(h, cover, 4, 1, {}, StarCountMethod::Enumeration) == oracle);
}

TEST_CASE("star count of an empty hypergraph counts the empty coloring once") {
    CoverConfig cover(1, {{1}, {2}});
    Hypergraph h(5, 2, {});
    CHECK(star_count_exact(h, cover, 4, 1) == 1);
}

TEST_CASE("both star count routes agree on random instances") {
    std::mt19937_64 rng(23);
    int compared = 0;
    for (int trial = 0; trial < 40; ++trial) {
        int n = 5 + static_cast<int>(rng() % 2);
        int k = 4 + static_cast<int>(rng() % 3);
        Hypergraph h = random_hypergraph(rng, n, 2, 7);
        if (h.edge_count() == 0) continue;
        CoverConfig cover = min_l_cover(h, 1);
        if (cover.size() > 2) continue;  // keep the subset route affordable
        BigCount via_ie = star_count_exact(h, cover, k, 1, {}, StarCountMethod::InclusionExclusion);
        BigCount via_enum = star_count_exact(h, cover, k, 1, {}, StarCountMethod::Enumeration);
        CHECK(via_ie == via_enum);
        ++compared;
    }
    CHECK(compared > 10);
}

TEST_CASE("coverage patterns: explicit hypergraph versus closed form") {
    CoverConfig cover(2, {{1, 2}, {2, 3}, {4, 5}});
    for (int n = 6; n <= 8; ++n)
        for (int r = 3; r <= 4; ++r) {
            Hypergraph h = complete_from_cover(n, r, cover);
            auto direct = coverage_patterns(h, cover);
            auto closed = coverage_patterns_complete(n, r, cover);
            CHECK(direct == closed);
        }
}

TEST_CASE("star count budgets are hard errors") {
    CoverConfig cover(1, {{1}, {2}});
    Hypergraph h = complete_from_cover(6, 2, cover);
    Budget starved;
    starved.max_union_terms = 2;
    CHECK_THROWS_AS(star_count_exact(h, cover, 4, 1, starved, StarCountMethod::InclusionExclusion),
                    resource_error);
    Budget tiny;
    tiny.max_color_enumerations = 10;
    CHECK_THROWS_AS(star_count_exact(h, cover, 4, 1, tiny, StarCountMethod::Enumeration),
                    resource_error);
}
