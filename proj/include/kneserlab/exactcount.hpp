#pragma once

// Exact counting of Kneser colorings by two independent routes (pruned
// backtracking over edges, chromatic polynomial of the conflict graph),
// minimum ell-cover search, and star-coloring classification/counting.
// Every count is an exact big integer; exceeding a budget raises
// resource_error, never a wrong number.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "kneserlab/bigint.hpp"
#include "kneserlab/families.hpp"
#include "kneserlab/hypergraph.hpp"
#include "kneserlab/splits.hpp"

namespace kneserlab {

// Hard, configurable limits. Defaults keep the full verification suite
// within minutes on one core.
struct Budget {
    int max_chromatic_vertices = 20;            // conflict-graph size for deletion-contraction
    long long max_chromatic_nodes = 64'000'000; // recursion nodes for deletion-contraction
    double max_color_enumerations = 2e8;       // k^|E| cap for coloring enumeration
    int max_union_terms = 24;                  // (s,P) pairs for the subset inclusion-exclusion
    std::uint64_t max_hypergraph_sweep = std::uint64_t{1} << 24;
};

// Number of maps E -> [1,k] whose color classes are pairwise
// ell-intersecting. Edges are processed in descending conflict-degree order
// (ties by index); colorings of distinct conflict components multiply.
// Empty edge set counts 1. Requires k >= 1, ell < r.
BigCount kappa_backtrack(const Hypergraph& h, int k, int ell);

// Chromatic polynomial in the monomial basis: coeffs[i] multiplies x^i.
// Evaluated at any integer x >= 0 it is the number of proper colorings of
// the source graph with x labeled colors.
struct ChromaticPolynomial {
    std::vector<BigCount> coeffs;

    BigCount evaluate(const BigCount& x) const;
    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
};

// Deletion-contraction with connected-component splitting, leaf pruning and
// clique base cases only; no isomorphism memoization.
ChromaticPolynomial chromatic_polynomial(const ConflictGraph& g, const Budget& budget = {});

// Independent oracle for kappa_backtrack: evaluates the chromatic polynomial
// of conflict_graph(h, ell) at k.
BigCount kappa_chromatic(const Hypergraph& h, int k, int ell, const Budget& budget = {});

// Minimum-cardinality set of ell-subsets covering every edge. Candidates are
// the ell-subsets of actual edges; exact branch and bound seeded with the
// greedy cover. Deterministic tie-breaking. Requires a nonempty edge set.
CoverConfig min_l_cover(const Hypergraph& h, int ell);

enum class StarClass { Star, GeneralizedStar, NonStar };

struct StarClassification {
    StarClass cls = StarClass::NonStar;
    // Witness for cls == Star: ordered slot sizes and the partition blocks
    // (blocks[i] = colors anchored to cover element i).
    SplitVector split;
    std::vector<std::vector<int>> blocks;
};

// Classifies a valid Kneser coloring against the cover: "star" when the
// colors can be partitioned among the cover elements with block sizes an
// optimal split, "generalized-star" when every used color is anchored to
// some cover element but no optimal split fits, "non-star" otherwise.
// Rejects invalid colorings.
StarClassification classify_star(const Hypergraph& h, const CoverConfig& cover, int k, int ell,
                                 const KneserColoring& delta);

enum class StarCountMethod { Auto, InclusionExclusion, Enumeration };

// Exact number of star colorings: the size of the union of the per-partition
// star classes over all optimal splits fitting |C| slots. Two routes:
// subset inclusion-exclusion over the (s,P) pairs, and full enumeration of
// k^|E| colorings with classification. Both are exact and must agree.
BigCount star_count_exact(const Hypergraph& h, const CoverConfig& cover, int k, int ell,
                          const Budget& budget = {}, StarCountMethod method = StarCountMethod::Auto);

// Same count for the virtual complete hypergraph of the cover (no edge list
// materialized; only the inclusion-exclusion route applies).
BigCount star_count_exact_complete(int n, int r, const CoverConfig& cover, int k, int ell,
                                   const Budget& budget = {});

// Coverage patterns: for each nonempty subset S of cover indices (bit i set
// means t_{i+1} is contained in the edge), the number of edges whose
// containment set is exactly S. Pattern 0 counts uncovered edges.
std::map<std::uint32_t, BigCount> coverage_patterns(const Hypergraph& h, const CoverConfig& cover);

// The same for the complete hypergraph on [n]: inclusion-exclusion over
// supersets, valid for arbitrary (also overlapping) covers.
std::map<std::uint32_t, BigCount> coverage_patterns_complete(int n, int r,
                                                             const CoverConfig& cover);

}  // namespace kneserlab
