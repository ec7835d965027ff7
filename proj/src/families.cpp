#include "kneserlab/families.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace kneserlab {

CoverConfig::CoverConfig(int ell, std::vector<std::vector<int>> sets) : ell_(ell) {
    if (ell < 1) throw error("cover: ell must be positive");
    if (sets.empty()) throw error("cover: needs at least one set");
    for (auto& t : sets) {
        if (static_cast<int>(t.size()) != ell) throw error("cover: set of wrong cardinality");
        std::sort(t.begin(), t.end());
        for (std::size_t i = 0; i < t.size(); ++i) {
            if (t[i] < 1 || t[i] > kMaxVertices) throw error("cover: vertex label out of range");
            if (i > 0 && t[i] == t[i - 1]) throw error("cover: repeated vertex in set");
        }
    }
    for (std::size_t i = 0; i < sets.size(); ++i)
        for (std::size_t j = i + 1; j < sets.size(); ++j)
            if (sets[i] == sets[j]) throw error("cover: sets must be distinct");
    sets_ = std::move(sets);
    masks_.reserve(sets_.size());
    for (const auto& t : sets_) masks_.push_back(mask_of(t));
}

std::uint64_t CoverConfig::union_mask() const {
    std::uint64_t u = 0;
    for (auto m : masks_) u |= m;
    return u;
}

int CoverConfig::max_vertex() const {
    int best = 0;
    for (const auto& t : sets_) best = std::max(best, t.back());
    return best;
}

std::vector<int> CoverConfig::pairwise_intersections() const {
    std::vector<int> out;
    for (int i = 0; i < size(); ++i)
        for (int j = i + 1; j < size(); ++j) out.push_back(intersection_size(i, j));
    std::sort(out.begin(), out.end());
    return out;
}

std::string CoverConfig::signature() const {
    std::ostringstream os;
    os << "c=" << size();
    auto inter = pairwise_intersections();
    if (!inter.empty()) {
        os << " y=[";
        for (std::size_t i = 0; i < inter.size(); ++i) os << (i ? "," : "") << inter[i];
        os << "]";
    }
    os << " sets=";
    for (int i = 0; i < size(); ++i) {
        if (i) os << "|";
        for (std::size_t j = 0; j < sets_[static_cast<std::size_t>(i)].size(); ++j)
            os << (j ? "." : "") << sets_[static_cast<std::size_t>(i)][j];
    }
    return os.str();
}

Hypergraph complete_from_cover(int n, int r, const CoverConfig& cover) {
    if (cover.max_vertex() > n) throw error("complete_from_cover: cover vertex exceeds n");
    if (cover.ell() >= r) throw error("complete_from_cover: requires ell < r");
    std::vector<std::vector<int>> edges;
    for (auto& e : all_r_subsets(n, r)) {
        std::uint64_t m = mask_of(e);
        for (auto t : cover.masks()) {
            if ((m & t) == t) {
                edges.push_back(e);
                break;
            }
        }
    }
    return Hypergraph(n, r, std::move(edges));
}

CoverConfig disjoint_cover(int n, int r, int k, int ell) {
    if (k < 2) throw error("disjoint_cover: k >= 2 required");
    const int c = (k + 2) / 3;
    if (n < r || n < c * ell)
        throw error("disjoint_cover: n too small, needs max(r, ell*ceil(k/3)) = " +
                    std::to_string(std::max(r, c * ell)));
    std::vector<std::vector<int>> sets;
    for (int i = 0; i < c; ++i) {
        std::vector<int> t(static_cast<std::size_t>(ell));
        std::iota(t.begin(), t.end(), i * ell + 1);
        sets.push_back(std::move(t));
    }
    return CoverConfig(ell, std::move(sets));
}

namespace {

// Two ell-sets inside [1, 2*ell] with intersection of size y.
CoverConfig two_set_cover(int ell, int y) {
    std::vector<int> t1(static_cast<std::size_t>(ell));
    std::iota(t1.begin(), t1.end(), 1);
    std::vector<int> t2;
    for (int v = ell - y + 1; v <= 2 * ell - y; ++v) t2.push_back(v);
    return CoverConfig(ell, {t1, t2});
}

}  // namespace

std::vector<CoverConfig> candidate_covers(int n, int r, int k, int ell,
                                          bool include_asymptotic_family) {
    if (ell >= r || ell < 1 || k < 2) throw error("candidate_covers: bad parameters");
    std::vector<CoverConfig> out;
    if (k == 2 || k == 3 || (k >= 5 && r >= 2 * ell - 1)) {
        out.push_back(disjoint_cover(n, r, k, ell));
    } else if (k == 4) {
        if (include_asymptotic_family) {
            for (int y = 0; y <= ell - 1; ++y) out.push_back(two_set_cover(ell, y));
        } else {
            out.push_back(two_set_cover(ell, ell - 1));
        }
    } else {
        // k >= 5, r < 2*ell-1: one representative per pairwise-intersection
        // multiset among patterns with every pairwise union larger than r.
        const int c = (k + 2) / 3;
        std::vector<VennPattern> pats = enumerate_venn_patterns(c, ell, r + 1);
        std::map<std::vector<int>, CoverConfig> reps;
        for (const auto& p : pats) {
            CoverConfig cover = cover_from_venn(p, ell);
            if (cover.max_vertex() > n) continue;
            auto key = cover.pairwise_intersections();
            auto it = reps.find(key);
            if (it == reps.end()) {
                reps.emplace(key, cover);
            } else if (cover.sets() < it->second.sets()) {
                it->second = cover;
            }
        }
        for (auto& [key, cover] : reps) out.push_back(cover);
    }
    std::vector<CoverConfig> valid;
    for (auto& cover : out)
        if (cover.max_vertex() <= n) valid.push_back(cover);
    if (valid.empty()) throw error("candidate_covers: n too small for any representative");
    return valid;
}

Hypergraph ak_family(const AKParameters& p) {
    if (p.s < 0 || p.s > p.r - p.ell) throw error("ak_family: s out of range [0, r-ell]");
    if (p.n < p.r) throw error("ak_family: n >= r required");
    const int w = std::min(p.ell + 2 * p.s, p.n);
    const std::uint64_t window = (w >= 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << w) - 1);
    std::vector<std::vector<int>> edges;
    for (auto& e : all_r_subsets(p.n, p.r))
        if (__builtin_popcountll(mask_of(e) & window) >= p.ell + p.s) edges.push_back(e);
    return Hypergraph(p.n, p.r, std::move(edges));
}

BigCount ak_family_size(int n, int r, int ell, int s) {
    if (s < 0 || s > r - ell) throw error("ak_family_size: s out of range");
    const int w = ell + 2 * s;
    if (w > n) {
        // Window sticks out of [n]; count directly as subsets meeting
        // [1, min(w,n)] in >= ell+s vertices.
        BigCount total = 0;
        for (int j = ell + s; j <= std::min(r, n); ++j)
            total += binomial(std::min(w, n), j) * binomial(n - std::min(w, n), r - j);
        return total;
    }
    BigCount total = 0;
    for (int j = ell + s; j <= std::min(r, w); ++j)
        total += binomial(w, j) * binomial(n - w, r - j);
    return total;
}

BigCount turan_number(int n, int r, int ell) {
    if (!(n >= r && r > ell && ell >= 1)) throw error("turan_number: requires n >= r > ell >= 1");
    if (n <= 2 * r - ell) return binomial(n, r);
    BigCount best = 0;
    for (int s = 0; s <= r - ell; ++s) best = std::max(best, ak_family_size(n, r, ell, s));
    return best;
}

std::vector<int> turan_optimal_s(int n, int r, int ell) {
    if (!(n >= r && r > ell && ell >= 1)) throw error("turan_optimal_s: requires n >= r > ell >= 1");
    if (n <= 2 * r - ell) return {r - ell};
    BigCount best = turan_number(n, r, ell);
    std::vector<int> out;
    for (int s = 0; s <= r - ell; ++s)
        if (ak_family_size(n, r, ell, s) == best) out.push_back(s);
    return out;
}

HypergraphEnumerator::HypergraphEnumerator(int n, int r) : n_(n), r_(r) {
    all_edges_ = all_r_subsets(n, r);
    if (all_edges_.size() > 24)
        throw resource_error("hypergraph enumeration: binom(n,r) = " +
                             std::to_string(all_edges_.size()) + " exceeds the cap of 24");
    all_masks_.reserve(all_edges_.size());
    for (const auto& e : all_edges_) all_masks_.push_back(mask_of(e));
}

Hypergraph HypergraphEnumerator::at(std::uint64_t index) const {
    std::vector<std::vector<int>> edges;
    for (std::size_t i = 0; i < all_edges_.size(); ++i)
        if ((index >> i) & 1) edges.push_back(all_edges_[i]);
    return Hypergraph(n_, r_, std::move(edges));
}

std::vector<std::uint64_t> HypergraphEnumerator::masks_at(std::uint64_t index) const {
    std::vector<std::uint64_t> out;
    for (std::size_t i = 0; i < all_masks_.size(); ++i)
        if ((index >> i) & 1) out.push_back(all_masks_[i]);
    return out;
}

std::vector<int> VennPattern::pairwise_intersections() const {
    std::vector<int> out;
    for (int i = 0; i < c; ++i)
        for (int j = i + 1; j < c; ++j) {
            int y = 0;
            for (int S = 1; S < (1 << c); ++S)
                if (((S >> i) & 1) && ((S >> j) & 1)) y += cell_size[static_cast<std::size_t>(S)];
            out.push_back(y);
        }
    std::sort(out.begin(), out.end());
    return out;
}

int VennPattern::union_size(int i, int j) const {
    int u = 0;
    for (int S = 1; S < (1 << c); ++S)
        if (((S >> i) & 1) || ((S >> j) & 1)) u += cell_size[static_cast<std::size_t>(S)];
    return u;
}

int VennPattern::total_vertices() const {
    int total = 0;
    for (int S = 1; S < (1 << c); ++S) total += cell_size[static_cast<std::size_t>(S)];
    return total;
}

VennPattern VennPattern::canonical() const {
    std::vector<int> perm(static_cast<std::size_t>(c));
    std::iota(perm.begin(), perm.end(), 0);
    VennPattern best = *this;
    bool first = true;
    do {
        VennPattern cand;
        cand.c = c;
        cand.cell_size.assign(static_cast<std::size_t>(1) << c, 0);
        for (int S = 1; S < (1 << c); ++S) {
            int T = 0;
            for (int i = 0; i < c; ++i)
                if ((S >> i) & 1) T |= 1 << perm[static_cast<std::size_t>(i)];
            cand.cell_size[static_cast<std::size_t>(T)] = cell_size[static_cast<std::size_t>(S)];
        }
        if (first || cand.cell_size < best.cell_size) best = cand;
        first = false;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

std::vector<VennPattern> enumerate_venn_patterns(int c, int ell, int min_pair_union) {
    if (c < 1 || ell < 1) throw error("enumerate_venn_patterns: bad parameters");
    if (c > 6) throw resource_error("enumerate_venn_patterns: c > 6 unsupported");
    const int cells = (1 << c) - 1;
    std::set<std::vector<int>> seen;
    std::vector<VennPattern> out;
    VennPattern cur;
    cur.c = c;
    cur.cell_size.assign(static_cast<std::size_t>(1) << c, 0);
    std::vector<int> remaining(static_cast<std::size_t>(c), ell);

    auto emit = [&]() {
        // Distinctness: no two sets may coincide, i.e. some cell must
        // separate every pair.
        for (int i = 0; i < c; ++i)
            for (int j = i + 1; j < c; ++j) {
                bool separated = false;
                for (int S = 1; S <= cells; ++S)
                    if ((((S >> i) & 1) != ((S >> j) & 1)) &&
                        cur.cell_size[static_cast<std::size_t>(S)] > 0)
                        separated = true;
                if (!separated) return;
                if (min_pair_union > 0 && cur.union_size(i, j) < min_pair_union) return;
            }
        VennPattern canon = cur.canonical();
        if (seen.insert(canon.cell_size).second) out.push_back(canon);
    };

    // Fill cells S = 1..cells with nonnegative sizes; membership budgets per
    // slot must land exactly on ell.
    auto rec = [&](auto&& self, int S) -> void {
        if (S > cells) {
            for (int i = 0; i < c; ++i)
                if (remaining[static_cast<std::size_t>(i)] != 0) return;
            emit();
            return;
        }
        int cap = ell;
        for (int i = 0; i < c; ++i)
            if ((S >> i) & 1) cap = std::min(cap, remaining[static_cast<std::size_t>(i)]);
        for (int v = 0; v <= cap; ++v) {
            cur.cell_size[static_cast<std::size_t>(S)] = v;
            for (int i = 0; i < c; ++i)
                if ((S >> i) & 1) remaining[static_cast<std::size_t>(i)] -= v;
            self(self, S + 1);
            for (int i = 0; i < c; ++i)
                if ((S >> i) & 1) remaining[static_cast<std::size_t>(i)] += v;
        }
        cur.cell_size[static_cast<std::size_t>(S)] = 0;
    };
    rec(rec, 1);
    std::sort(out.begin(), out.end(),
              [](const VennPattern& a, const VennPattern& b) { return a.cell_size < b.cell_size; });
    return out;
}

CoverConfig cover_from_venn(const VennPattern& pattern, int ell) {
    const int c = pattern.c;
    // Assign vertex numbers cell by cell; cells ordered by smallest member
    // slot then by mask so t1 lands on the lowest labels.
    std::vector<int> order;
    for (int S = 1; S < (1 << c); ++S) order.push_back(S);
    std::sort(order.begin(), order.end(), [](int a, int b) {
        int la = __builtin_ctz(a), lb = __builtin_ctz(b);
        if (la != lb) return la < lb;
        return a < b;
    });
    std::vector<std::vector<int>> sets(static_cast<std::size_t>(c));
    int next = 1;
    for (int S : order) {
        int sz = pattern.cell_size[static_cast<std::size_t>(S)];
        for (int v = 0; v < sz; ++v, ++next)
            for (int i = 0; i < c; ++i)
                if ((S >> i) & 1) sets[static_cast<std::size_t>(i)].push_back(next);
    }
    return CoverConfig(ell, std::move(sets));
}

}  // namespace kneserlab
