#include "kneserlab/splits.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "kneserlab/hypergraph.hpp"

namespace kneserlab {

std::vector<SplitVector> optimal_splits(int k) {
    if (k < 2) throw error("optimal_splits: k >= 2 required");
    std::vector<SplitVector> out;
    const int q = k / 3;
    switch (k % 3) {
        case 0: {
            out.push_back(SplitVector(static_cast<std::size_t>(q), 3));
            break;
        }
        case 1: {
            // shape (3,...,3,2,2): q-1 threes and two twos
            SplitVector a(static_cast<std::size_t>(q - 1), 3);
            a.push_back(2);
            a.push_back(2);
            out.push_back(a);
            // shape (4,3,...,3): one four and q-1 threes
            SplitVector b;
            b.push_back(4);
            b.insert(b.end(), static_cast<std::size_t>(q - 1), 3);
            out.push_back(b);
            break;
        }
        case 2: {
            SplitVector a(static_cast<std::size_t>(q), 3);
            a.push_back(2);
            out.push_back(a);
            break;
        }
    }
    return out;
}

BigCount optimal_split_value(int k) {
    auto splits = optimal_splits(k);
    BigCount v = 1;
    for (int s : splits.front()) v *= s;
    return v;
}

CND cnd(int k) {
    if (k < 2) throw error("cnd: k >= 2 required");
    CND out;
    out.c = (k + 2) / 3;
    const int fl = k / 3;
    switch (k % 3) {
        case 0:
            out.n = factorial(k) / big_pow(6, BigCount(fl));
            out.d = big_pow(3, BigCount(fl));
            break;
        case 1:
            out.n = binomial(out.c, 2) * factorial(k) / (4 * big_pow(6, BigCount(out.c - 2)));
            out.d = 4 * big_pow(3, BigCount(out.c - 2));
            break;
        case 2:
            out.n = out.c * factorial(k) / (2 * big_pow(6, BigCount(fl)));
            out.d = 2 * big_pow(3, BigCount(fl));
            break;
    }
    return out;
}

std::vector<SplitVector> optimal_splits_for_slots(int k, int c) {
    std::vector<SplitVector> out;
    for (const auto& multiset : optimal_splits(k)) {
        if (static_cast<int>(multiset.size()) != c) continue;
        SplitVector perm = multiset;
        std::sort(perm.begin(), perm.end());
        std::set<SplitVector> seen;
        do {
            if (seen.insert(perm).second) out.push_back(perm);
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    std::sort(out.begin(), out.end());
    return out;
}

OrderedPartitions::OrderedPartitions(const SplitVector& s, int k) : sizes_(s), k_(k) {
    long long total = 0;
    for (int v : s) {
        if (v < 1) throw error("ordered_partitions: block sizes must be positive");
        total += v;
    }
    if (total != k) throw error("ordered_partitions: block sizes must sum to k");
    reset();
}

void OrderedPartitions::reset() {
    assignment_.clear();
    for (std::size_t b = 0; b < sizes_.size(); ++b)
        assignment_.insert(assignment_.end(), static_cast<std::size_t>(sizes_[b]),
                           static_cast<int>(b));
    done_ = false;
}

bool OrderedPartitions::next(std::vector<std::vector<int>>& out) {
    if (done_) return false;
    out.assign(sizes_.size(), {});
    for (int color = 1; color <= k_; ++color)
        out[static_cast<std::size_t>(assignment_[static_cast<std::size_t>(color - 1)])].push_back(
            color);
    if (!std::next_permutation(assignment_.begin(), assignment_.end())) done_ = true;
    return true;
}

BigCount OrderedPartitions::count() const { return multinomial(k_, sizes_); }

std::vector<std::vector<std::vector<int>>> all_ordered_partitions(const SplitVector& s, int k) {
    OrderedPartitions it(s, k);
    std::vector<std::vector<std::vector<int>>> out;
    std::vector<std::vector<int>> p;
    while (it.next(p)) out.push_back(p);
    return out;
}

}  // namespace kneserlab
