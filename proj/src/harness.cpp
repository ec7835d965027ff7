#include "kneserlab/harness.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "kneserlab/closedform.hpp"
#include "kneserlab/splits.hpp"

namespace kneserlab {

namespace {

std::string edges_signature(const Hypergraph& h, std::size_t cap = 24) {
    std::ostringstream os;
    os << "m=" << h.edge_count() << " edges=";
    const auto& es = h.edges();
    for (std::size_t i = 0; i < es.size() && i < cap; ++i) {
        if (i) os << ",";
        for (std::size_t j = 0; j < es[i].size(); ++j) os << (j ? "." : "") << es[i][j];
    }
    if (es.size() > cap) os << ",...";
    return os.str();
}

bool is_intersecting_family(const std::vector<std::uint64_t>& masks, int ell) {
    for (std::size_t i = 0; i < masks.size(); ++i)
        for (std::size_t j = i + 1; j < masks.size(); ++j)
            if (intersect_size(masks[i], masks[j]) < ell) return false;
    return true;
}

// Indices (in enumerator order) of every vertex-relabeling of the maximum
// ell-intersecting families.
std::set<std::uint64_t> max_family_relabelings(const HypergraphEnumerator& en, int ell) {
    const int n = en.n();
    const int r = en.r();
    std::map<std::uint64_t, std::size_t> position;
    for (std::size_t i = 0; i < en.universe().size(); ++i)
        position[mask_of(en.universe()[i])] = i;

    std::set<std::uint64_t> out;
    for (int s : turan_optimal_s(n, r, ell)) {
        Hypergraph f = ak_family({n, r, ell, s});
        std::vector<int> perm(static_cast<std::size_t>(n));
        std::iota(perm.begin(), perm.end(), 1);
        do {
            std::uint64_t index = 0;
            for (const auto& e : f.edges()) {
                std::vector<int> image;
                for (int v : e) image.push_back(perm[static_cast<std::size_t>(v - 1)]);
                std::sort(image.begin(), image.end());
                index |= std::uint64_t{1} << position.at(mask_of(image));
            }
            out.insert(index);
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return out;
}

CoverConfig two_set_cover(int ell, int y) {
    std::vector<int> t1(static_cast<std::size_t>(ell));
    std::iota(t1.begin(), t1.end(), 1);
    std::vector<int> t2;
    for (int v = ell - y + 1; v <= 2 * ell - y; ++v) t2.push_back(v);
    return CoverConfig(ell, {t1, t2});
}

// Edge count of the complete hypergraph of a set of ell-set masks.
BigCount complete_edge_count(int n, int r, const std::vector<std::uint64_t>& sets) {
    const int c = static_cast<int>(sets.size());
    BigCount total = 0;
    for (std::uint32_t t = 1; t < (std::uint32_t{1} << c); ++t) {
        std::uint64_t u = 0;
        for (int i = 0; i < c; ++i)
            if ((t >> i) & 1) u |= sets[static_cast<std::size_t>(i)];
        int usz = __builtin_popcountll(u);
        BigCount term = binomial(n - usz, r - usz);
        if (__builtin_popcount(t) % 2 == 1)
            total += term;
        else
            total -= term;
    }
    return total;
}

bool enumeration_affordable(int k, int m, double cap) {
    return m * std::log2(static_cast<double>(k)) <= std::log2(cap);
}

// Gate for computing kappa of a complete candidate hypergraph by
// backtracking. The search visits roughly one node per valid partial
// coloring, so the star-coloring closed form bounds the effort far more
// tightly than k^m once k >= 4.
bool kappa_affordable(int n, int r, int k, int ell, const BigCount& m, const Budget& budget) {
    if (m > 24) return false;
    if (enumeration_affordable(k, m.convert_to<int>(), budget.max_color_enumerations)) return true;
    if (k < 4) return false;
    try {
        return alpha({n, r, k, ell}) <=
               BigCount(static_cast<long long>(budget.max_color_enumerations));
    } catch (const error&) {
        return false;
    }
}

}  // namespace

ExperimentReport verify_k2(int n, int r, int ell, const Budget& budget) {
    ExperimentReport rep;
    rep.experiment = "verify_k2";
    rep.params["n"] = std::to_string(n);
    rep.params["r"] = std::to_string(r);
    rep.params["ell"] = std::to_string(ell);

    HypergraphEnumerator en(n, r);
    if (en.total() > budget.max_hypergraph_sweep)
        throw resource_error("verify_k2: sweep larger than the hypergraph budget");

    const bool anomaly = (ell == 1 && n == 2 * r);
    std::vector<int> ks = anomaly ? std::vector<int>{2, 3} : std::vector<int>{2};
    std::set<std::uint64_t> families = max_family_relabelings(en, ell);

    for (int k : ks) {
        BigCount best = -1;
        std::vector<std::uint64_t> argmax;
        for (std::uint64_t idx = 0; idx < en.total(); ++idx) {
            Hypergraph h = en.at(idx);
            BigCount kappa = kappa_backtrack(h, k, ell);
            if (kappa > best) {
                best = kappa;
                argmax.assign(1, idx);
            } else if (kappa == best) {
                argmax.push_back(idx);
            }
        }
        const std::string tag = "k=" + std::to_string(k) + ": ";
        for (std::size_t i = 0; i < argmax.size() && i < 12; ++i) {
            ReportRow row;
            row.signature = "k=" + std::to_string(k) + " " + edges_signature(en.at(argmax[i]));
            row.count = best;
            rep.rows.push_back(row);
        }
        rep.observe("extremal count", tag + std::to_string(argmax.size()) + " hypergraphs attain " +
                                          best.str());

        if (!anomaly) {
            BigCount expected = big_pow(k, turan_number(n, r, ell));
            rep.add_verdict(tag + "maximum equals k^(largest intersecting family)",
                            best == expected, best.str() + " vs " + expected.str());
            std::set<std::uint64_t> argset(argmax.begin(), argmax.end());
            rep.add_verdict(tag + "extremal set is exactly the relabeled maximum families",
                            argset == families,
                            std::to_string(argset.size()) + " extremal vs " +
                                std::to_string(families.size()) + " relabeled families");
        } else {
            BigCount expected =
                big_pow(static_cast<long long>(k) * (k - 1), binomial(2 * r - 1, r));
            rep.add_verdict(tag + "boundary n=2r maximum equals (k(k-1))^(largest family)",
                            best == expected, best.str() + " vs " + expected.str());
            bool has_nonintersecting = false;
            for (std::uint64_t idx : argmax)
                if (!is_intersecting_family(en.masks_at(idx), ell)) has_nonintersecting = true;
            rep.add_verdict(tag + "extremal set contains non-intersecting-family hypergraphs",
                            has_nonintersecting);
            if (k == 2) {
                std::set<std::uint64_t> argset(argmax.begin(), argmax.end());
                bool contains_all = std::includes(argset.begin(), argset.end(), families.begin(),
                                                  families.end());
                rep.add_verdict(tag + "every relabeled maximum family is extremal", contains_all);
                rep.add_verdict(tag + "extremal set strictly larger than the maximum families",
                                argset.size() > families.size(),
                                std::to_string(argset.size()) + " vs " +
                                    std::to_string(families.size()));
            }
        }
    }
    rep.sort_rows();
    return rep;
}

ExperimentReport verify_k4(int n, int r, int ell, const Budget& budget) {
    ExperimentReport rep;
    rep.experiment = "verify_k4";
    rep.params["n"] = std::to_string(n);
    rep.params["r"] = std::to_string(r);
    rep.params["ell"] = std::to_string(ell);
    if (ell < 1 || ell >= r) throw error("verify_k4: requires 1 <= ell < r");
    if (n < 2 * ell || n < r) throw error("verify_k4: n too small for two-set covers");

    std::vector<BigCount> s_values;
    std::vector<BigCount> kappas;
    bool all_kappa = true;
    for (int y = 0; y <= ell - 1; ++y) {
        CoverConfig cover = two_set_cover(ell, y);
        BigCount sy = generalized_star_count(n, r, ell, y);
        s_values.push_back(sy);
        ReportRow row;
        row.signature = cover.signature();
        row.count = sy;
        row.extra["y"] = std::to_string(y);

        BigCount m = complete_edge_count(n, r, cover.masks());
        if (m <= 18 && enumeration_affordable(4, m.convert_to<int>(), budget.max_color_enumerations)) {
            Hypergraph h = complete_from_cover(n, r, cover);
            BigCount kappa = kappa_backtrack(h, 4, ell);
            kappas.push_back(kappa);
            row.extra["kappa"] = kappa.str();
        } else {
            all_kappa = false;
        }
        rep.rows.push_back(row);
    }

    int argmax_s = 0;
    for (std::size_t y = 1; y < s_values.size(); ++y)
        if (s_values[y] > s_values[static_cast<std::size_t>(argmax_s)]) argmax_s = static_cast<int>(y);
    bool unique = true;
    for (std::size_t y = 0; y < s_values.size(); ++y)
        if (static_cast<int>(y) != argmax_s && s_values[y] == s_values[static_cast<std::size_t>(argmax_s)])
            unique = false;
    rep.add_verdict("two-set cover: overlap ell-1 maximizes the generalized-star count at this n",
                    argmax_s == ell - 1 && (unique || ell == 1),
                    "argmax y = " + std::to_string(argmax_s));
    if (ell >= 2)
        rep.add_verdict("two-set cover: S(ell-1) strictly beats S(ell-2) at this n",
                        s_values[static_cast<std::size_t>(ell - 1)] >
                            s_values[static_cast<std::size_t>(ell - 2)]);
    if (all_kappa && kappas.size() == s_values.size()) {
        int argmax_k = 0;
        for (std::size_t y = 1; y < kappas.size(); ++y)
            if (kappas[y] > kappas[static_cast<std::size_t>(argmax_k)]) argmax_k = static_cast<int>(y);
        rep.add_verdict("two-set cover: overlap ell-1 maximizes the exact count at this n",
                        argmax_k == ell - 1, "argmax y = " + std::to_string(argmax_k));
    }

    // Star-sum ratio of the two-set cover against the single-set cover.
    CoverConfig pair_cover = two_set_cover(ell, ell - 1);
    std::vector<int> t1(static_cast<std::size_t>(ell));
    std::iota(t1.begin(), t1.end(), 1);
    CoverConfig single_cover(ell, {t1});
    BigCount s2 = star_sum_complete(n, r, pair_cover, 4, ell);
    BigCount s1 = star_sum_complete(n, r, single_cover, 4, ell);
    rep.add_verdict("two-set versus one-set star sums are in ratio 6 to 1", s2 == 6 * s1,
                    s2.str() + " vs 6*" + s1.str());

    // Lower-bound form of S(ell-1), exact at this n.
    BigCount lhs = s_values[static_cast<std::size_t>(ell - 1)];
    BigCount rhs = 6 * big_pow(4, binomial(n - ell, r - ell)) +
                   4 * big_pow(3, binomial(n - ell - 1, r - ell)) *
                       big_pow(4, binomial(n - ell - 1, r - ell - 1));
    rep.observe("S(ell-1) dominance over its closed lower form",
                lhs >= rhs ? "holds at this n" : "fails at this n (below threshold)");
    rep.sort_rows();
    return rep;
}

ExperimentReport explore_conjecture(int n, int r, int k, int ell, const Budget& budget) {
    ExperimentReport rep;
    rep.experiment = "explore_conjecture";
    rep.params["n"] = std::to_string(n);
    rep.params["r"] = std::to_string(r);
    rep.params["k"] = std::to_string(k);
    rep.params["ell"] = std::to_string(ell);
    if (!(k >= 5 && ell < r && r < 2 * ell))
        throw error("explore_conjecture: requires k >= 5 and ell < r < 2*ell");

    const int c = (k + 2) / 3;
    BigCount pairs = 0;
    for (const auto& s : optimal_splits_for_slots(k, c)) pairs += multinomial(k, s);
    const bool use_star_count = pairs > 0 && pairs <= budget.max_union_terms;
    rep.params["count_kind"] = use_star_count ? "star_count" : "star_sum";

    std::vector<VennPattern> patterns = enumerate_venn_patterns(c, ell, r + 1);
    std::vector<CoverConfig> covers;
    for (const auto& pat : patterns) {
        CoverConfig cover = cover_from_venn(pat, ell);
        if (cover.max_vertex() <= n) covers.push_back(cover);
    }
    if (covers.empty()) throw error("explore_conjecture: no cover representative fits n");

    bool all_kappa = true;
    for (const auto& cover : covers)
        if (!kappa_affordable(n, r, k, ell, complete_edge_count(n, r, cover.masks()), budget))
            all_kappa = false;
    // Star counts coincide across representatives whenever each edge holds a
    // single cover element, so rank by the exact count when it is affordable
    // for every representative.
    rep.params["ranked_by"] = all_kappa ? "kappa" : rep.params["count_kind"];

    BigCount best = -1;
    std::vector<int> best_intersections;
    for (const auto& cover : covers) {
        BigCount star = use_star_count ? star_count_exact_complete(n, r, cover, k, ell, budget)
                                       : star_sum_complete(n, r, cover, k, ell);
        ReportRow row;
        row.signature = cover.signature();
        if (all_kappa) {
            BigCount kappa = kappa_backtrack(complete_from_cover(n, r, cover), k, ell);
            row.count = kappa;
            row.extra[rep.params["count_kind"]] = star.str();
        } else {
            row.count = star;
        }
        rep.rows.push_back(row);
        if (row.count > best) {
            best = row.count;
            best_intersections = cover.pairwise_intersections();
        }
    }

    const int target = 2 * ell - r - 1;
    bool winner_matches = !best_intersections.empty();
    for (int y : best_intersections)
        if (y != target) winner_matches = false;
    std::ostringstream ys;
    for (std::size_t i = 0; i < best_intersections.size(); ++i)
        ys << (i ? "," : "") << best_intersections[i];
    rep.observe("winner pairwise intersections", ys.str());
    rep.observe("conjectured intersection value", std::to_string(target));
    rep.observe("winner matches conjectured value", winner_matches ? "yes" : "no");

    // Stability replay: disjoint cover versus the all-common-core cover.
    if (n >= std::max(r, c * ell)) {
        CoverConfig disjoint = disjoint_cover(n, r, k, ell);
        VennPattern core;
        core.c = c;
        core.cell_size.assign(std::size_t{1} << c, 0);
        core.cell_size[static_cast<std::size_t>((1 << c) - 1)] = target;
        for (int i = 0; i < c; ++i)
            core.cell_size[std::size_t{1} << i] = ell - target;
        CoverConfig common = cover_from_venn(core, ell);
        if (common.max_vertex() <= n) {
            BigCount e0 = complete_edge_count(n, r, disjoint.masks());
            BigCount e1 = complete_edge_count(n, r, common.masks());
            std::vector<std::uint64_t> both = disjoint.masks();
            for (auto m : common.masks()) both.push_back(m);
            BigCount eu = complete_edge_count(n, r, both);
            BigCount symdiff = 2 * eu - e0 - e1;  // |A|+|B|-2|A inter B| with |A inter B|=|A|+|B|-|A u B|
            rep.observe("edge symmetric difference, disjoint vs common-core cover",
                        symdiff.str() + " of " + e1.str() + " edges (ratio " +
                            Rational(symdiff, e1).str() + ")");
        }
    }
    rep.sort_rows();
    return rep;
}

ExperimentReport cross_validate(std::uint64_t seed, int trials, const Budget& budget,
                                int corrupt_instance) {
    ExperimentReport rep;
    rep.experiment = "cross_validate";
    rep.params["seed"] = std::to_string(seed);
    rep.params["trials"] = std::to_string(trials);

    std::mt19937_64 rng(seed);
    auto below = [&](std::uint64_t bound) -> std::uint64_t { return bound ? rng() % bound : 0; };

    int agree = 0, mismatch = 0, sandwich_ok = 0, sandwich_bad = 0, star_skipped = 0;
    int lower_ok = 0, lower_bad = 0, lower_skipped = 0;
    std::string first_failure;

    for (int t = 0; t < trials; ++t) {
        int n = 4 + static_cast<int>(below(5));
        int r = 2 + static_cast<int>(below(static_cast<std::uint64_t>(std::min(4, n - 1) - 1)));
        int ell = 1 + static_cast<int>(below(static_cast<std::uint64_t>(r - 1)));
        int k = 1 + static_cast<int>(below(6));

        auto universe = all_r_subsets(n, r);
        int cap = std::min<int>(static_cast<int>(universe.size()), 12);
        int m = static_cast<int>(below(static_cast<std::uint64_t>(cap + 1)));
        std::vector<int> idx(universe.size());
        std::iota(idx.begin(), idx.end(), 0);
        for (int i = 0; i < m; ++i)
            std::swap(idx[static_cast<std::size_t>(i)],
                      idx[static_cast<std::size_t>(i) + below(idx.size() - static_cast<std::size_t>(i))]);
        std::vector<std::vector<int>> edges;
        for (int i = 0; i < m; ++i) edges.push_back(universe[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])]);
        Hypergraph h(n, r, std::move(edges));

        BigCount kb = kappa_backtrack(h, k, ell);
        if (t == corrupt_instance) kb += 1;
        BigCount kc = kappa_chromatic(h, k, ell, budget);
        if (kb == kc) {
            ++agree;
        } else {
            ++mismatch;
            if (first_failure.empty())
                first_failure = "trial " + std::to_string(t) + ": backtrack " + kb.str() +
                                " vs chromatic " + kc.str() + " on " + edges_signature(h);
        }

        if (m >= 1 && k >= 2) {
            CoverConfig cover = min_l_cover(h, ell);
            if (kb > 0 && BigCount(cover.size()) > k * binomial(r, ell)) {
                ++sandwich_bad;
                if (first_failure.empty())
                    first_failure = "trial " + std::to_string(t) +
                                    ": colorable hypergraph with minimum cover larger than "
                                    "k*binom(r,ell)";
            }
            try {
                BigCount star = star_count_exact(h, cover, k, ell, budget);
                if (star <= kb) {
                    ++sandwich_ok;
                } else {
                    ++sandwich_bad;
                    if (first_failure.empty())
                        first_failure = "trial " + std::to_string(t) + ": star " + star.str() +
                                        " exceeds kappa " + kb.str();
                }
            } catch (const resource_error&) {
                ++star_skipped;
            }
        }

        // Disjoint-cover lower bound on an independently drawn instance.
        {
            int k2 = 2 + static_cast<int>(below(5));
            int r2 = 2 + static_cast<int>(below(3));
            int ell2 = 1 + static_cast<int>(below(static_cast<std::uint64_t>(r2 - 1)));
            int c2 = (k2 + 2) / 3;
            int n2 = std::max(r2, c2 * ell2) + static_cast<int>(below(4));
            CoverConfig cover = disjoint_cover(n2, r2, k2, ell2);
            BigCount m2 = complete_edge_count(n2, r2, cover.masks());
            if (m2 <= 14 && enumeration_affordable(k2, m2.convert_to<int>(),
                                                   std::min(budget.max_color_enumerations, 2e7))) {
                Hypergraph h2 = complete_from_cover(n2, r2, cover);
                BigCount kappa = kappa_backtrack(h2, k2, ell2);
                BigCount bound =
                    big_pow(cnd(k2).d, binomial(n2 - static_cast<long long>(ell2) * c2, r2 - ell2));
                if (kappa >= bound) {
                    ++lower_ok;
                } else {
                    ++lower_bad;
                    if (first_failure.empty())
                        first_failure = "trial " + std::to_string(t) + ": kappa " + kappa.str() +
                                        " below bound " + bound.str();
                }
            } else {
                ++lower_skipped;
            }
        }
    }

    rep.add_verdict("backtracking and chromatic counts agree", mismatch == 0,
                    std::to_string(agree) + " agreed, " + std::to_string(mismatch) + " mismatched" +
                        (first_failure.empty() ? "" : "; " + first_failure));
    rep.add_verdict("star count and minimum-cover bounds hold", sandwich_bad == 0,
                    std::to_string(sandwich_ok) + " held, " + std::to_string(star_skipped) +
                        " skipped by budget");
    rep.add_verdict("disjoint-cover count meets its lower bound", lower_bad == 0,
                    std::to_string(lower_ok) + " held, " + std::to_string(lower_skipped) +
                        " skipped by budget");
    return rep;
}

ExperimentReport verify_identities(int n_max, int r_max, int c_max, long long brute_cap) {
    ExperimentReport rep;
    rep.experiment = "verify_identities";
    rep.params["n_max"] = std::to_string(n_max);
    rep.params["r_max"] = std::to_string(r_max);
    rep.params["c_max"] = std::to_string(c_max);
    rep.params["brute_cap"] = std::to_string(brute_cap);

    long long identity_checked = 0, identity_bad = 0;
    long long brute_checked = 0, brute_bad = 0;
    std::string first_failure;

    for (int r = 2; r <= r_max; ++r)
        for (int ell = 1; ell < r; ++ell)
            for (int c = 2; c <= c_max; ++c)
                for (int n = std::max(r, c * ell); n <= n_max; ++n) {
                    CoverageCount cov = coverage_counts(n, r, ell, c);
                    for (int x = 0; x <= c - 2; ++x) {
                        ++identity_checked;
                        if (cov.b[static_cast<std::size_t>(x)] !=
                            cov.d[static_cast<std::size_t>(x)] - cov.a[static_cast<std::size_t>(x)]) {
                            ++identity_bad;
                            if (first_failure.empty())
                                first_failure = "b=d-a fails at n=" + std::to_string(n) +
                                                " r=" + std::to_string(r) +
                                                " ell=" + std::to_string(ell) +
                                                " c=" + std::to_string(c) + " x=" + std::to_string(x);
                        }
                    }
                    for (int x = 0; x <= c - 1; ++x) {
                        ++identity_checked;
                        if (cov.b[static_cast<std::size_t>(x)] !=
                            cov.e[static_cast<std::size_t>(x)] - cov.cc[static_cast<std::size_t>(x)]) {
                            ++identity_bad;
                            if (first_failure.empty())
                                first_failure = "b=e-c fails at n=" + std::to_string(n) +
                                                " r=" + std::to_string(r) +
                                                " ell=" + std::to_string(ell) +
                                                " c=" + std::to_string(c) + " x=" + std::to_string(x);
                        }
                    }

                    if (n <= 62 && binomial(n, r) <= brute_cap) {
                        // Stream all r-subsets and classify containment of the
                        // disjoint cover elements directly.
                        std::vector<std::uint64_t> sets;
                        for (int i = 0; i < c; ++i) {
                            std::uint64_t t = 0;
                            for (int v = i * ell + 1; v <= (i + 1) * ell; ++v)
                                t |= std::uint64_t{1} << (v - 1);
                            sets.push_back(t);
                        }
                        std::vector<long long> count(std::size_t{1} << c, 0);
                        std::uint64_t mask = (std::uint64_t{1} << r) - 1;
                        const std::uint64_t limit = std::uint64_t{1} << n;
                        while (mask < limit) {
                            std::uint32_t pat = 0;
                            for (int i = 0; i < c; ++i)
                                if ((mask & sets[static_cast<std::size_t>(i)]) ==
                                    sets[static_cast<std::size_t>(i)])
                                    pat |= std::uint32_t{1} << i;
                            ++count[pat];
                            std::uint64_t lo = mask & (~mask + 1);
                            std::uint64_t left = mask + lo;
                            std::uint64_t changed = mask ^ left;
                            mask = left | ((changed / lo) >> 2);
                        }
                        for (std::uint32_t s = 0; s < (std::uint32_t{1} << c); ++s) {
                            ++brute_checked;
                            BigCount expected = exact_coverage(n, r, ell, __builtin_popcount(s),
                                                               c - __builtin_popcount(s));
                            if (BigCount(count[s]) != expected) {
                                ++brute_bad;
                                if (first_failure.empty())
                                    first_failure = "coverage brute force fails at n=" +
                                                    std::to_string(n) + " r=" + std::to_string(r) +
                                                    " ell=" + std::to_string(ell) +
                                                    " c=" + std::to_string(c);
                            }
                        }
                    }
                }

    rep.add_verdict("coverage identities b=d-a and b=e-c hold entrywise", identity_bad == 0,
                    std::to_string(identity_checked) + " identities checked" +
                        (first_failure.empty() ? "" : "; " + first_failure));
    rep.add_verdict("coverage counts match brute-force classification", brute_bad == 0,
                    std::to_string(brute_checked) + " pattern counts checked");
    return rep;
}

ExperimentReport verify_sandwich(const Budget& budget) {
    ExperimentReport rep;
    rep.experiment = "verify_sandwich";

    struct Instance {
        int n, r, ell, k;
    };
    const std::vector<Instance> instances = {
        {6, 2, 1, 2}, {6, 2, 1, 3}, {6, 2, 1, 4}, {7, 2, 1, 4}, {6, 2, 1, 5},
        {7, 2, 1, 5}, {6, 2, 1, 6}, {6, 3, 2, 4}, {7, 3, 2, 4}, {8, 3, 2, 5},
        {7, 3, 2, 6}, {6, 4, 3, 4}, {7, 4, 3, 5}, {8, 4, 3, 6}, {5, 3, 2, 2},
        {6, 3, 2, 3},
    };
    int processed = 0, lower_ok = 0, sandwich_ok = 0, bracket_ok = 0;
    std::string first_failure;
    for (const auto& inst : instances) {
        const int c = (inst.k + 2) / 3;
        if (inst.n < std::max(inst.r, c * inst.ell)) continue;
        ++processed;
        CoverConfig cover = disjoint_cover(inst.n, inst.r, inst.k, inst.ell);
        Hypergraph h = complete_from_cover(inst.n, inst.r, cover);
        BigCount kappa = kappa_backtrack(h, inst.k, inst.ell);
        BigCount bound = big_pow(cnd(inst.k).d,
                                 binomial(inst.n - static_cast<long long>(inst.ell) * c,
                                          inst.r - inst.ell));
        std::string where = "n=" + std::to_string(inst.n) + " r=" + std::to_string(inst.r) +
                            " ell=" + std::to_string(inst.ell) + " k=" + std::to_string(inst.k);
        if (kappa >= bound) {
            ++lower_ok;
        } else if (first_failure.empty()) {
            first_failure = "lower bound fails at " + where;
        }
        BigCount star = star_count_exact(h, cover, inst.k, inst.ell, budget);
        if (star <= kappa) {
            ++sandwich_ok;
        } else if (first_failure.empty()) {
            first_failure = "sandwich fails at " + where;
        }
        BigCount ssum = star_sum(h, cover, inst.k, inst.ell);
        Rational factor = star_bracket_factor(inst.n, inst.r, inst.k, inst.ell, c);
        bool upper = star <= ssum;
        bool lower_br = Rational(star) >= factor * Rational(ssum);
        if (upper && lower_br) {
            ++bracket_ok;
        } else if (first_failure.empty()) {
            first_failure = "star bracket fails at " + where;
        }
        ReportRow row;
        row.signature = where;
        row.count = kappa;
        row.extra["star_count"] = star.str();
        row.extra["star_sum"] = ssum.str();
        row.extra["lower_bound"] = bound.str();
        rep.rows.push_back(row);
    }
    rep.add_verdict("disjoint-cover count meets its lower bound on all instances",
                    lower_ok == processed, std::to_string(lower_ok) + " of " +
                        std::to_string(processed) + " instances");
    rep.add_verdict("star count never exceeds the total count", sandwich_ok == processed,
                    std::to_string(sandwich_ok) + " of " + std::to_string(processed) +
                        " instances");
    rep.add_verdict("exact-rational star bracket holds", bracket_ok == processed,
                    std::to_string(bracket_ok) + " of " + std::to_string(processed) +
                        " instances" + (first_failure.empty() ? "" : "; " + first_failure));

    // alpha equals the star sum on every candidate cover (k = 4, 5, 6).
    long long alpha_checked = 0, alpha_bad = 0;
    std::string alpha_failure;
    for (int k = 4; k <= 6; ++k) {
        const int c = (k + 2) / 3;
        for (int r = 2; r <= 8; ++r)
            for (int ell = 1; ell < r; ++ell) {
                int n_lo = std::max(r, std::max(c * ell, 2 * ell));
                for (int n = n_lo; n <= 30; ++n) {
                    if (binomial(n - ell, r - ell) > 20000) break;
                    BigCount a = alpha({n, r, k, ell});
                    if (a != alpha_expanded({n, r, k, ell})) {
                        ++alpha_bad;
                        if (alpha_failure.empty())
                            alpha_failure = "alpha_expanded differs at n=" + std::to_string(n);
                    }
                    for (const auto& cover : candidate_covers(n, r, k, ell, k == 4)) {
                        ++alpha_checked;
                        BigCount s = star_sum_complete(n, r, cover, k, ell);
                        if (s != a) {
                            ++alpha_bad;
                            if (alpha_failure.empty())
                                alpha_failure = "alpha != star_sum at n=" + std::to_string(n) +
                                                " r=" + std::to_string(r) +
                                                " ell=" + std::to_string(ell) +
                                                " k=" + std::to_string(k) + " cover " +
                                                cover.signature();
                        }
                    }
                }
            }
    }
    rep.add_verdict("alpha equals the star sum on every candidate cover", alpha_bad == 0,
                    std::to_string(alpha_checked) + " covers checked" +
                        (alpha_failure.empty() ? "" : "; " + alpha_failure));

    // Spot comparison behind the cover canonicalization: two realizations of
    // the pairwise-intersection multiset {1,1,1} for three 3-sets (distinct
    // overlap vertices versus one common core vertex). Their star sums agree,
    // but the exact counts differ at this scale, so the multiset does not
    // determine the count; reported, not asserted, and the explorer
    // enumerates the full overlap structures.
    {
        CoverConfig triangle(3, {{1, 2, 3}, {2, 4, 5}, {3, 5, 6}});
        CoverConfig core(3, {{1, 2, 3}, {3, 4, 5}, {3, 6, 7}});
        BigCount kappa_triangle = kappa_backtrack(complete_from_cover(7, 4, triangle), 7, 3);
        BigCount kappa_core = kappa_backtrack(complete_from_cover(7, 4, core), 7, 3);
        BigCount star_triangle = star_sum_complete(7, 4, triangle, 7, 3);
        BigCount star_core = star_sum_complete(7, 4, core, 7, 3);
        rep.add_verdict("equal pairwise overlaps give equal star sums",
                        star_triangle == star_core,
                        star_triangle.str() + " vs " + star_core.str());
        rep.observe("same overlap multiset, different exact counts",
                    "pairwise {1,1,1} at n=7, r=4, ell=3, k=7: distinct-overlap cover counts " +
                        kappa_triangle.str() + ", common-core cover counts " + kappa_core.str() +
                        (kappa_triangle == kappa_core
                             ? " (equal)"
                             : " (common core ahead; the overlap multiset does not determine the count)"));
    }

    // Below-threshold observation: at n=5, r=2, ell=1, k=3 the complete graph
    // beats the star; consistent with the asymptotic statements, which need
    // large n.
    {
        Hypergraph k5(5, 2, all_r_subsets(5, 2));
        BigCount complete = kappa_backtrack(k5, 3, 1);
        std::vector<int> t1{1};
        Hypergraph star = complete_from_cover(5, 2, CoverConfig(1, {t1}));
        BigCount star_count = kappa_backtrack(star, 3, 1);
        rep.add_verdict("below-threshold check: complete graph count is 120 at n=5",
                        complete == 120, complete.str());
        rep.observe("below-threshold behavior",
                    "complete graph " + complete.str() + " beats star " + star_count.str() +
                        " at n=5, r=2, ell=1, k=3: consistent, the asymptotic regime needs larger n");
    }
    rep.sort_rows();
    return rep;
}

ExperimentReport verify_product_inequality(std::uint64_t seed, int trials) {
    ExperimentReport rep;
    rep.experiment = "verify_product_inequality";
    rep.params["seed"] = std::to_string(seed);
    rep.params["trials"] = std::to_string(trials);

    std::mt19937_64 rng(seed);
    auto below = [&](std::uint64_t bound) -> std::uint64_t { return bound ? rng() % bound : 0; };

    int held = 0, failed = 0, boundary = 0, strengthened_m = 0, strengthened_65 = 0, rejected = 0;
    std::string first_failure;
    for (int t = 0; t < trials; ++t) {
        std::vector<int> a, b, phi;
        int m, big_m;
        if (t % 10 == 0) {
            // Forced boundary-equality shape: p = 0, all b_j = m = 2.
            m = 2;
            big_m = 4 + static_cast<int>(below(5));
            b.assign(1 + below(4), 2);
        } else {
            m = 2 + static_cast<int>(below(3));
            big_m = m + 2 + static_cast<int>(below(7));
            int p = static_cast<int>(below(5));
            int q = std::max(p, 1) + static_cast<int>(below(4));
            for (int j = 0; j < q; ++j) b.push_back(2 + static_cast<int>(below(static_cast<std::uint64_t>(big_m - 1))));
            std::vector<int> slots(static_cast<std::size_t>(q));
            std::iota(slots.begin(), slots.end(), 0);
            for (int i = 0; i < p; ++i) {
                std::size_t pick = static_cast<std::size_t>(i) + below(slots.size() - static_cast<std::size_t>(i));
                std::swap(slots[static_cast<std::size_t>(i)], slots[pick]);
                phi.push_back(slots[static_cast<std::size_t>(i)]);
            }
            for (int i = 0; i < p; ++i) {
                int hi = std::min(big_m, b[static_cast<std::size_t>(phi[static_cast<std::size_t>(i)])] + m);
                a.push_back(m + 2 + static_cast<int>(below(static_cast<std::uint64_t>(hi - m - 1))));
            }
        }
        ProductInequalityResult res = product_inequality_check(a, b, m, big_m, phi);
        if (!res.hypotheses_ok) {
            ++rejected;
            continue;
        }
        if (res.holds) {
            ++held;
            switch (res.slack) {
                case InequalitySlack::Boundary: ++boundary; break;
                case InequalitySlack::StrengthenedM: ++strengthened_m; break;
                case InequalitySlack::Strengthened65: ++strengthened_65; break;
            }
        } else {
            ++failed;
            if (first_failure.empty()) first_failure = "trial " + std::to_string(t);
        }
    }
    rep.add_verdict("product inequality holds with its certified slack", failed == 0,
                    std::to_string(held) + " held (" + std::to_string(boundary) + " boundary, " +
                        std::to_string(strengthened_m) + " strengthened, " +
                        std::to_string(strengthened_65) + " at 6/5), " + std::to_string(rejected) +
                        " hypothesis-rejected" +
                        (first_failure.empty() ? "" : "; first failure " + first_failure));
    rep.add_verdict("boundary and strengthened cases both exercised",
                    boundary > 0 && (strengthened_m + strengthened_65) > 0);
    return rep;
}

}  // namespace kneserlab
