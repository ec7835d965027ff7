#pragma once

// Constructors and enumerators for the hypergraph families the counting
// machinery runs on: covers of ell-sets, the complete hypergraphs they
// generate, maximum ell-intersecting families, and the exhaustive
// small-instance enumerator.

#include <cstdint>
#include <string>
#include <vector>

#include "kneserlab/hypergraph.hpp"

namespace kneserlab {

// An ordered list of c >= 1 distinct ell-subsets of [1, n].
class CoverConfig {
public:
    CoverConfig(int ell, std::vector<std::vector<int>> sets);

    int ell() const { return ell_; }
    int size() const { return static_cast<int>(sets_.size()); }
    const std::vector<std::vector<int>>& sets() const { return sets_; }
    const std::vector<std::uint64_t>& masks() const { return masks_; }
    std::uint64_t mask(int i) const { return masks_[static_cast<std::size_t>(i)]; }
    std::uint64_t union_mask() const;
    int max_vertex() const;

    int intersection_size(int i, int j) const { return intersect_size(mask(i), mask(j)); }
    int union_size(int i, int j) const { return __builtin_popcountll(mask(i) | mask(j)); }

    // Sorted multiset of pairwise intersection sizes (empty when c = 1).
    std::vector<int> pairwise_intersections() const;

    // Stable identifier used for report rows, e.g. "c=2 y=[1] sets=12|23".
    std::string signature() const;

private:
    int ell_;
    std::vector<std::vector<int>> sets_;
    std::vector<std::uint64_t> masks_;
};

struct AKParameters {
    int n;
    int r;
    int ell;
    int s;  // 0 <= s <= r - ell
};

// All r-subsets of [n] containing at least one cover element.
// Requires n >= r and n >= the largest vertex used by the cover
// (r > n is allowed and yields the empty edge set).
Hypergraph complete_from_cover(int n, int r, const CoverConfig& cover);

// ceil(k/3) mutually disjoint ell-sets {1..ell}, {ell+1..2ell}, ...
CoverConfig disjoint_cover(int n, int r, int k, int ell);

// The candidate covers behind the extremal families, by case:
//   - k in {2,3}, or k >= 5 with r >= 2*ell-1: the single disjoint cover;
//   - k = 4: {t1,t2} with |t1 inter t2| = ell-1; with
//     include_asymptotic_family, one representative per intersection size
//     y = 0..ell-1 (the wider two-set family);
//   - k >= 5 with r < 2*ell-1: one representative per multiset of pairwise
//     intersection sizes subject to |ti union tj| > r for all pairs.
std::vector<CoverConfig> candidate_covers(int n, int r, int k, int ell,
                                          bool include_asymptotic_family = false);

// The maximum ell-intersecting families: all r-subsets meeting the window
// [1, ell+2s] in at least ell+s vertices. Pairwise ell-intersecting by
// construction; requires 0 <= s <= r - ell and n >= r.
Hypergraph ak_family(const AKParameters& p);

// |{F in [n]^r : |F inter [1, ell+2s]| >= ell+s}| in closed form.
BigCount ak_family_size(int n, int r, int ell, int s);

// Maximum size of an ell-intersecting r-uniform family on [n]:
// binom(n,r) for n <= 2r-ell, otherwise max over s of ak_family_size.
BigCount turan_number(int n, int r, int ell);

// The s values attaining turan_number (ties reported; empty boundary cases
// collapse to {r-ell} when n <= 2r-ell since every family qualifies).
std::vector<int> turan_optimal_s(int n, int r, int ell);

// Exhaustive enumerator over all 2^binom(n,r) edge subsets, restartable and
// shardable by index range. Requires binom(n,r) <= 24.
class HypergraphEnumerator {
public:
    HypergraphEnumerator(int n, int r);

    std::uint64_t total() const { return std::uint64_t{1} << all_edges_.size(); }
    Hypergraph at(std::uint64_t index) const;
    // Edge masks of hypergraph `index` without materializing a Hypergraph.
    std::vector<std::uint64_t> masks_at(std::uint64_t index) const;

    int n() const { return n_; }
    int r() const { return r_; }
    const std::vector<std::vector<int>>& universe() const { return all_edges_; }

private:
    int n_;
    int r_;
    std::vector<std::vector<int>> all_edges_;
    std::vector<std::uint64_t> all_masks_;
};

// Venn-cell description of a cover configuration: cell_size[S] for each
// nonempty S subset of [c] (bit i of S = membership in t_{i+1}), with
// sum over S containing i of cell_size[S] = ell for every i. Used by the
// candidate enumeration and the conjecture explorer.
struct VennPattern {
    int c = 0;
    std::vector<int> cell_size;  // indexed by S in [1, 2^c), entry 0 unused

    std::vector<int> pairwise_intersections() const;
    int union_size(int i, int j) const;
    int total_vertices() const;
    // Lexicographically canonical representative under slot permutations.
    VennPattern canonical() const;
    bool operator==(const VennPattern& other) const {
        return c == other.c && cell_size == other.cell_size;
    }
};

// All Venn patterns of c distinct ell-sets, canonical up to slot
// permutation, optionally filtered to |ti union tj| > r for all pairs.
std::vector<VennPattern> enumerate_venn_patterns(int c, int ell, int min_pair_union = 0);

// Deterministic realization of a Venn pattern on the smallest vertices.
CoverConfig cover_from_venn(const VennPattern& pattern, int ell);

}  // namespace kneserlab
