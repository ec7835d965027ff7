#pragma once

// The color-budget maximization program: maximize the product of positive
// integer components summing to at most k. Optimal multisets, the closed-form
// constants (c(k), N(k), D(k)), slot arrangements, and ordered partitions of
// the color set.

#include <vector>

#include "kneserlab/bigint.hpp"
#include "kneserlab/errors.hpp"

namespace kneserlab {

// A split: positive components, sorted descending when produced as a
// multiset; ordered when attached to labeled cover slots.
using SplitVector = std::vector<int>;

struct CND {
    int c;        // ceil(k/3)
    BigCount n;   // multiplicity coefficient
    BigCount d;   // optimal product value
};

// The optimal multisets for budget k (k >= 2), sorted descending:
//   k = 0 mod 3: {3,...,3}
//   k = 1 mod 3: {3,...,3,2,2} and {4,3,...,3}
//   k = 2 mod 3: {3,...,3,2}
std::vector<SplitVector> optimal_splits(int k);

// The optimal product value.
BigCount optimal_split_value(int k);

CND cnd(int k);

// All distinct ordered arrangements of the optimal multisets that have
// exactly c components (empty when no optimal shape fits c slots).
std::vector<SplitVector> optimal_splits_for_slots(int k, int c);

// All ordered partitions (P_1,...,P_c) of [1,k] with |P_i| = s[i].
// Requires sum s = k. Count equals k!/(s_1!...s_c!). Blocks are returned as
// sorted color lists; enumeration order is deterministic.
class OrderedPartitions {
public:
    OrderedPartitions(const SplitVector& s, int k);

    bool next(std::vector<std::vector<int>>& out);  // false when exhausted
    void reset();
    BigCount count() const;

private:
    SplitVector sizes_;
    int k_;
    bool done_ = false;
    std::vector<int> assignment_;  // color -> block index, current state

    bool valid_counts(const std::vector<int>& a) const;
};

// Convenience: materialize every ordered partition (use only when the
// multinomial is small).
std::vector<std::vector<std::vector<int>>> all_ordered_partitions(const SplitVector& s, int k);

}  // namespace kneserlab
