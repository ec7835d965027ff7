#pragma once

// Verification harness: exhaustive small-instance sweeps, the two-set cover
// analysis at k=4, the cover-overlap explorer, randomized cross-validation
// of the two counting routes, and the identity/bound suites.

#include <cstdint>

#include "kneserlab/exactcount.hpp"
#include "kneserlab/report.hpp"

namespace kneserlab {

// Exhaustive maximization of kappa(.,2,ell) over every r-uniform hypergraph
// on [n] (and of kappa(.,k,ell) for k in {2,3} in the n = 2r, ell = 1
// anomaly). Checks the maximum against 2^turan and the argmax set against
// the relabeled maximum intersecting families.
ExperimentReport verify_k2(int n, int r, int ell, const Budget& budget = {});

// For each y in 0..ell-1 evaluates the generalized-star count S(y) of the
// two-set cover with overlap y, the exact kappa when affordable, and the
// c=2 versus c=1 star-sum ratio.
ExperimentReport verify_k4(int n, int r, int ell, const Budget& budget = {});

// Ranks the cover-overlap patterns allowed for k >= 5, r < 2*ell-1 by their
// exact star counts; reports (never asserts) whether the winner has all
// pairwise intersections equal to 2*ell-r-1, plus the edge-set symmetric
// difference against the disjoint-cover hypergraph.
ExperimentReport explore_conjecture(int n, int r, int k, int ell, const Budget& budget = {});

// Randomized agreement suite: backtracking vs chromatic counts, the
// star-count sandwich, and the disjoint-cover lower bound. Deterministic
// for a fixed seed. corrupt_instance >= 0 deliberately falsifies one
// comparison (negative control used by the tests).
ExperimentReport cross_validate(std::uint64_t seed, int trials, const Budget& budget = {},
                                int corrupt_instance = -1);

// Coverage-count identity sweep (b = d - a, b = e - cc entrywise) plus
// brute-force coverage classification wherever binom(n,r) <= brute_cap.
ExperimentReport verify_identities(int n_max = 30, int r_max = 8, int c_max = 5,
                                   long long brute_cap = 100000);

// Bound suite: star count <= kappa, the disjoint-cover lower bound, the
// exact-rational star bracket, alpha = star_sum across candidate covers,
// and the below-threshold observation at small n.
ExperimentReport verify_sandwich(const Budget& budget = {});

// Randomized product-inequality suite with forced boundary and strengthened
// cases mixed in.
ExperimentReport verify_product_inequality(std::uint64_t seed, int trials);

}  // namespace kneserlab
