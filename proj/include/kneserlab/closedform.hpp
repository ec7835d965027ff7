#pragma once

// Big-integer evaluation of the closed-form counting formulas: coverage
// counts over disjoint covers, the asymptotic coloring count alpha, star-sum
// products, the two-set generalized-star count S(y), the global upper bound,
// the cover-size comparison ratio, and the product inequality used to
// compare star counts. Ratios are exact rationals; floats never enter.

#include <string>
#include <vector>

#include "kneserlab/bigint.hpp"
#include "kneserlab/families.hpp"

namespace kneserlab {

// For a cover of c mutually disjoint ell-sets on [n] with two designated
// 2-color slots (t_{c-1}, t_c) and X = the remaining c-2 slots:
//   a[x]: edges containing both designated sets and a fixed x-subset of X,
//         nothing else;
//   b[y]: edges containing exactly one designated set (a fixed one) and a
//         fixed y-subset of X;
//   cc[z]: edges containing neither designated set and a fixed z-subset;
// and for the (c-1)-set cover with one designated 4-color slot t_{c-1}:
//   d[x]: edges containing t_{c-1} and a fixed x-subset of X;
//   e[z]: edges avoiding t_{c-1} with a fixed z-subset of X.
// Identities b = d - a and b = e - cc hold entrywise.
struct CoverageCount {
    int n, r, ell, c;
    std::vector<BigCount> a;   // x = 0..c-2
    std::vector<BigCount> b;   // y = 0..c-1
    std::vector<BigCount> cc;  // z = 0..c
    std::vector<BigCount> d;   // x = 0..c-2
    std::vector<BigCount> e;   // z = 0..c-1
};

// Number of r-subsets of [n] containing `required` given disjoint ell-sets
// and none of `excluded` further disjoint ell-sets (signed alternating sum).
BigCount exact_coverage(int n, int r, int ell, int required, int excluded);

// Requires c >= 2, n >= c*ell, 1 <= ell < r. Each entry is computed by its
// alternating-sum display and cross-checked against exact_coverage.
CoverageCount coverage_counts(int n, int r, int ell, int c);

struct AlphaParameters {
    int n, r, k, ell;
};

// Closed-form count of star colorings of a candidate extremal hypergraph:
// N(k) * D(k)^binom(n-ell, r-ell) when k = 4 or r < 2*ell, otherwise the
// per-residue coverage product with exponents collapsed to binomial
// coefficients. Requires k >= 4, 1 <= ell < r.
BigCount alpha(const AlphaParameters& p);

// Same value with the inner products over index subsets expanded literally
// (one factor per subset of the 3-carrying slots) instead of collapsed
// exponents; equality with alpha is asserted by the tests.
BigCount alpha_expanded(const AlphaParameters& p);

// Sum over optimal splits fitting |C| slots and ordered color partitions of
// the product over edges of (sum of block sizes of cover elements contained
// in the edge). Zero factors allowed: an uncovered edge kills its term.
BigCount star_sum(const Hypergraph& h, const CoverConfig& cover, int k, int ell);

// star_sum of the complete hypergraph of the cover on [n], without
// materializing the edge set. Valid for overlapping covers.
BigCount star_sum_complete(int n, int r, const CoverConfig& cover, int k, int ell);

// Per-partition star-class size for one fixed ordered split: the product
// over coverage patterns of (sum of slot sizes)^count on the complete
// hypergraph of the cover.
BigCount star_block_product_complete(int n, int r, const CoverConfig& cover,
                                     const std::vector<int>& slot_sizes);

// Number of generalized star colorings of the two-set cover with
// |t1 inter t2| = y at k = 4:
//   S(y) = 6*4^B + 8*(3^B1 - 3*2^B1 + 3)*4^B2,
// with B = binom(n-ell, r-ell), B2 = binom(n-2ell+y, r-2ell+y), B1 = B - B2.
// Requires 0 <= y <= ell-1.
BigCount generalized_star_count(int n, int r, int ell, int y);

// Global upper bound N(k) * k^(binom(ell*c(k), ell+1) * binom(n-ell-1, r-ell-1))
// * D(k)^binom(n-ell, r-ell). Requires k >= 4.
BigCount t1_upper_bound(int n, int r, int k, int ell);

// Exact ratio of the per-partition star counts of the complete hypergraphs
// with c(k) versus c(k)-1 disjoint ell-sets, assembled from the coverage
// counts. Exactly 1 when r = 2*ell-1. Requires k = 1 mod 3, k >= 7,
// r >= 2*ell-1, n >= c(k)*ell.
Rational appendix_ratio(int n, int r, int ell, int k);

enum class InequalitySlack {
    Boundary,        // only the general bound >= 1 is guaranteed
    StrengthenedM,   // some a_i < b_phi(i) + m: bound 1 + m/(M^2 - m^2)
    Strengthened65,  // p < q and max(m, unpaired b_j) >= 3: bound 6/5
};

struct ProductInequalityResult {
    bool hypotheses_ok = false;
    std::string violation;  // first violated hypothesis, empty when ok
    Rational lhs;
    InequalitySlack slack = InequalitySlack::Boundary;
    Rational certified_bound;  // the strongest guaranteed lower bound
    bool holds = false;        // lhs >= certified_bound (and >= 1)
};

// Evaluates m^(q-p) * prod(a_i) * prod(b_j) / (prod(a_i - m) * prod(b_j + m))
// under the hypotheses: m in {2,3,4}; m+2 <= a_i <= M; 2 <= b_j <= M;
// q >= max(p,1); mapping phi (0-based indices into b) injective with
// a_i <= b_phi(i) + m. Hypothesis violations are reported, never silently
// passed.
ProductInequalityResult product_inequality_check(const std::vector<int>& a,
                                                 const std::vector<int>& b, int m, int M,
                                                 const std::vector<int>& phi);

// The left factor of the star-count bracket: 1 - A(k) * ((k-1)/k)^binom(n-2ell, r-ell)
// with A(k) = 4 * binom(|S|+1, 2) * binom(k!, 2) * binom(c, 2) * k, where |S|
// is the number of ordered optimal splits fitting c slots. May be negative
// at small n (the bracket is then vacuous).
Rational star_bracket_factor(int n, int r, int k, int ell, int c);

}  // namespace kneserlab
