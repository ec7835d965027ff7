#include "kneserlab/exactcount.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

namespace kneserlab {

namespace {

// ---- kappa by backtracking --------------------------------------------

struct BacktrackContext {
    int k;
    std::vector<std::vector<int>> nbr;   // earlier neighbors in DFS order
    std::vector<bool> suffix_independent;
    std::vector<int> color;              // color[i] for position i, 0 = unset
};

BigCount backtrack_count(BacktrackContext& ctx, std::size_t pos) {
    const std::size_t m = ctx.nbr.size();
    if (pos == m) return 1;
    if (ctx.suffix_independent[pos]) {
        // Every remaining vertex has all neighbors colored and no adjacency
        // among the remaining ones: multiply the free-color counts directly.
        BigCount prod = 1;
        for (std::size_t j = pos; j < m; ++j) {
            std::uint64_t used = 0;
            for (int p : ctx.nbr[j]) used |= std::uint64_t{1} << (ctx.color[static_cast<std::size_t>(p)] - 1);
            prod *= ctx.k - __builtin_popcountll(used);
        }
        return prod;
    }
    std::uint64_t used = 0;
    for (int p : ctx.nbr[pos]) used |= std::uint64_t{1} << (ctx.color[static_cast<std::size_t>(p)] - 1);
    BigCount total = 0;
    for (int col = 1; col <= ctx.k; ++col) {
        if ((used >> (col - 1)) & 1) continue;
        ctx.color[pos] = col;
        total += backtrack_count(ctx, pos + 1);
    }
    ctx.color[pos] = 0;
    return total;
}

}  // namespace

BigCount kappa_backtrack(const Hypergraph& h, int k, int ell) {
    if (k < 1) throw error("kappa_backtrack: k >= 1 required");
    if (k > 64) throw error("kappa_backtrack: k > 64 unsupported");
    const int m = h.edge_count();
    if (m == 0) return 1;
    ConflictGraph g = conflict_graph(h, ell);

    // Connected components of the conflict graph; counts multiply.
    std::vector<int> comp(static_cast<std::size_t>(m), -1);
    int ncomp = 0;
    for (int v = 0; v < m; ++v) {
        if (comp[static_cast<std::size_t>(v)] >= 0) continue;
        std::vector<int> stack{v};
        comp[static_cast<std::size_t>(v)] = ncomp;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int w : g.neighbors(u))
                if (comp[static_cast<std::size_t>(w)] < 0) {
                    comp[static_cast<std::size_t>(w)] = ncomp;
                    stack.push_back(w);
                }
        }
        ++ncomp;
    }

    BigCount result = 1;
    for (int ci = 0; ci < ncomp; ++ci) {
        std::vector<int> vertices;
        for (int v = 0; v < m; ++v)
            if (comp[static_cast<std::size_t>(v)] == ci) vertices.push_back(v);
        if (vertices.size() == 1) {
            result *= k;
            continue;
        }
        // Descending conflict degree, ties by edge index.
        std::stable_sort(vertices.begin(), vertices.end(),
                         [&](int a, int b) { return g.degree(a) > g.degree(b); });
        const std::size_t cm = vertices.size();
        std::vector<int> position(static_cast<std::size_t>(m), -1);
        for (std::size_t i = 0; i < cm; ++i) position[static_cast<std::size_t>(vertices[i])] = static_cast<int>(i);

        BacktrackContext ctx;
        ctx.k = k;
        ctx.nbr.assign(cm, {});
        ctx.color.assign(cm, 0);
        for (std::size_t i = 0; i < cm; ++i)
            for (int w : g.neighbors(vertices[i])) {
                int pw = position[static_cast<std::size_t>(w)];
                if (pw >= 0 && pw < static_cast<int>(i)) ctx.nbr[i].push_back(pw);
            }
        ctx.suffix_independent.assign(cm + 1, true);
        for (std::size_t i = cm; i-- > 0;) {
            bool indep = ctx.suffix_independent[i + 1];
            if (indep)
                for (std::size_t j = i + 1; j < cm && indep; ++j)
                    if (g.adjacent(vertices[i], vertices[j])) indep = false;
            ctx.suffix_independent[i] = indep;
        }
        result *= backtrack_count(ctx, 0);
    }
    return result;
}

// ---- chromatic polynomial ----------------------------------------------

namespace {

using Poly = std::vector<BigCount>;  // coeffs[i] * x^i

Poly poly_one() { return Poly{BigCount(1)}; }

Poly poly_mul(const Poly& a, const Poly& b) {
    Poly out(a.size() + b.size() - 1, BigCount(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

void poly_sub_inplace(Poly& a, const Poly& b) {
    if (a.size() < b.size()) a.resize(b.size(), BigCount(0));
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
}

// multiply by (x - c)
Poly poly_shift_root(const Poly& a, long long c) {
    Poly out(a.size() + 1, BigCount(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        out[i + 1] += a[i];
        out[i] -= a[i] * c;
    }
    return out;
}

struct DcContext {
    long long nodes = 0;
    long long node_budget = 0;
};

// Graph on a fixed universe of <= 32 slots; `active` marks live vertices.
Poly dc(DcContext& ctx, std::uint32_t active, std::vector<std::uint32_t> adj);

Poly dc_component(DcContext& ctx, std::uint32_t active, const std::vector<std::uint32_t>& adj) {
    if (++ctx.nodes > ctx.node_budget)
        throw resource_error("chromatic polynomial: deletion-contraction node budget exceeded");

    Poly factor = poly_one();
    std::uint32_t live = active;
    std::vector<std::uint32_t> g = adj;

    // Strip isolated vertices (factor x) and leaves (factor x-1) until fixed.
    bool changed = true;
    int isolated = 0, leaves = 0;
    while (changed) {
        changed = false;
        for (std::uint32_t rest = live; rest;) {
            int v = __builtin_ctz(rest);
            rest &= rest - 1;
            std::uint32_t nb = g[static_cast<std::size_t>(v)] & live;
            int deg = __builtin_popcount(nb);
            if (deg == 0) {
                ++isolated;
                live &= ~(std::uint32_t{1} << v);
                changed = true;
            } else if (deg == 1) {
                ++leaves;
                int u = __builtin_ctz(nb);
                g[static_cast<std::size_t>(u)] &= ~(std::uint32_t{1} << v);
                live &= ~(std::uint32_t{1} << v);
                changed = true;
            }
        }
    }
    for (int i = 0; i < isolated; ++i) factor = poly_shift_root(factor, 0);
    for (int i = 0; i < leaves; ++i) factor = poly_shift_root(factor, 1);
    if (live == 0) return factor;

    // Clique base case: falling factorial.
    bool clique = true;
    for (std::uint32_t rest = live; rest && clique;) {
        int v = __builtin_ctz(rest);
        rest &= rest - 1;
        if ((g[static_cast<std::size_t>(v)] & live) != (live & ~(std::uint32_t{1} << v))) clique = false;
    }
    if (clique) {
        int sz = __builtin_popcount(live);
        Poly p = poly_one();
        for (int i = 0; i < sz; ++i) p = poly_shift_root(p, i);
        return poly_mul(factor, p);
    }

    // Pick the edge whose endpoints share the most common neighbors: drives
    // contraction toward cliques. Ties broken lexicographically.
    int bu = -1, bv = -1, best = -1;
    for (std::uint32_t ru = live; ru;) {
        int u = __builtin_ctz(ru);
        ru &= ru - 1;
        std::uint32_t nb = g[static_cast<std::size_t>(u)] & live;
        for (std::uint32_t rv = nb; rv;) {
            int v = __builtin_ctz(rv);
            rv &= rv - 1;
            if (v <= u) continue;
            int common = __builtin_popcount(g[static_cast<std::size_t>(u)] &
                                            g[static_cast<std::size_t>(v)] & live);
            if (common > best) {
                best = common;
                bu = u;
                bv = v;
            }
        }
    }

    // Deletion.
    std::vector<std::uint32_t> del = g;
    del[static_cast<std::size_t>(bu)] &= ~(std::uint32_t{1} << bv);
    del[static_cast<std::size_t>(bv)] &= ~(std::uint32_t{1} << bu);
    Poly pd = dc(ctx, live, std::move(del));

    // Contraction of bv into bu.
    std::vector<std::uint32_t> con = g;
    con[static_cast<std::size_t>(bu)] |= con[static_cast<std::size_t>(bv)];
    con[static_cast<std::size_t>(bu)] &= ~((std::uint32_t{1} << bu) | (std::uint32_t{1} << bv));
    for (std::uint32_t rest = live; rest;) {
        int w = __builtin_ctz(rest);
        rest &= rest - 1;
        if (con[static_cast<std::size_t>(w)] & (std::uint32_t{1} << bv))
            con[static_cast<std::size_t>(w)] =
                (con[static_cast<std::size_t>(w)] & ~(std::uint32_t{1} << bv)) | (std::uint32_t{1} << bu);
    }
    con[static_cast<std::size_t>(bu)] &= ~(std::uint32_t{1} << bu);
    Poly pc = dc(ctx, live & ~(std::uint32_t{1} << bv), std::move(con));

    poly_sub_inplace(pd, pc);
    return poly_mul(factor, pd);
}

Poly dc(DcContext& ctx, std::uint32_t active, std::vector<std::uint32_t> adj) {
    if (active == 0) return poly_one();
    // Split into connected components.
    Poly result = poly_one();
    std::uint32_t remaining = active;
    while (remaining) {
        std::uint32_t comp = 0;
        std::uint32_t frontier = std::uint32_t{1} << __builtin_ctz(remaining);
        while (frontier) {
            comp |= frontier;
            std::uint32_t next = 0;
            for (std::uint32_t rest = frontier; rest;) {
                int v = __builtin_ctz(rest);
                rest &= rest - 1;
                next |= adj[static_cast<std::size_t>(v)] & remaining & ~comp;
            }
            frontier = next;
        }
        remaining &= ~comp;
        result = poly_mul(result, dc_component(ctx, comp, adj));
    }
    return result;
}

}  // namespace

BigCount ChromaticPolynomial::evaluate(const BigCount& x) const {
    BigCount acc = 0;
    for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * x + coeffs[i];
    return acc;
}

ChromaticPolynomial chromatic_polynomial(const ConflictGraph& g, const Budget& budget) {
    const int m = g.vertex_count();
    if (m > budget.max_chromatic_vertices)
        throw resource_error("chromatic polynomial: conflict graph has " + std::to_string(m) +
                             " vertices, budget allows " +
                             std::to_string(budget.max_chromatic_vertices));
    if (m > 32) throw resource_error("chromatic polynomial: more than 32 vertices unsupported");
    std::vector<std::uint32_t> adj(static_cast<std::size_t>(m), 0);
    for (int i = 0; i < m; ++i)
        for (int j : g.neighbors(i)) adj[static_cast<std::size_t>(i)] |= std::uint32_t{1} << j;
    DcContext ctx;
    ctx.node_budget = budget.max_chromatic_nodes;
    std::uint32_t active = (m == 32) ? ~std::uint32_t{0} : ((std::uint32_t{1} << m) - 1);
    ChromaticPolynomial out;
    out.coeffs = dc(ctx, active, std::move(adj));
    return out;
}

BigCount kappa_chromatic(const Hypergraph& h, int k, int ell, const Budget& budget) {
    if (k < 1) throw error("kappa_chromatic: k >= 1 required");
    if (h.edge_count() == 0) return 1;
    ConflictGraph g = conflict_graph(h, ell);
    ChromaticPolynomial p = chromatic_polynomial(g, budget);
    return p.evaluate(BigCount(k));
}

// ---- minimum ell-cover ---------------------------------------------------

namespace {

std::vector<std::uint64_t> ell_subsets_of_mask(std::uint64_t edge, int ell) {
    std::vector<int> verts = verts_of(edge);
    std::vector<std::uint64_t> out;
    std::vector<int> idx(static_cast<std::size_t>(ell));
    const int r = static_cast<int>(verts.size());
    if (ell > r) return out;
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        std::uint64_t m = 0;
        for (int i : idx) m |= std::uint64_t{1} << (verts[static_cast<std::size_t>(i)] - 1);
        out.push_back(m);
        int i = ell - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == r - (ell - i)) --i;
        if (i < 0) break;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < ell; ++j)
            idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
    return out;
}

struct CoverSearch {
    int m;                                         // number of edges
    std::vector<std::uint64_t> cands;              // candidate ell-set masks, sorted
    std::vector<std::vector<int>> covers;          // cands index -> edge indices covered
    std::vector<std::vector<int>> cands_of_edge;   // edge -> candidate indices within it
    std::vector<int> cover_count;                  // scratch: how many chosen sets cover edge
    std::vector<int> chosen;
    std::vector<int> best;

    void search(int uncovered) {
        if (uncovered == 0) {
            if (chosen.size() < best.size()) best = chosen;
            return;
        }
        if (chosen.size() + 1 > best.size()) return;  // even one more set cannot beat best
        // Branch on the uncovered edge with the fewest candidates.
        int pick = -1, fewest = -1;
        for (int e = 0; e < m; ++e) {
            if (cover_count[static_cast<std::size_t>(e)] > 0) continue;
            int ncand = static_cast<int>(cands_of_edge[static_cast<std::size_t>(e)].size());
            if (pick < 0 || ncand < fewest) {
                pick = e;
                fewest = ncand;
            }
        }
        for (int ci : cands_of_edge[static_cast<std::size_t>(pick)]) {
            chosen.push_back(ci);
            int newly = 0;
            for (int e : covers[static_cast<std::size_t>(ci)])
                if (cover_count[static_cast<std::size_t>(e)]++ == 0) ++newly;
            search(uncovered - newly);
            for (int e : covers[static_cast<std::size_t>(ci)]) --cover_count[static_cast<std::size_t>(e)];
            chosen.pop_back();
        }
    }
};

}  // namespace

CoverConfig min_l_cover(const Hypergraph& h, int ell) {
    if (h.edge_count() == 0) throw error("min_l_cover: empty hypergraph");
    if (ell < 1 || ell > h.r()) throw error("min_l_cover: requires 1 <= ell <= r");

    CoverSearch cs;
    cs.m = h.edge_count();
    std::set<std::uint64_t> cand_set;
    for (auto e : h.masks())
        for (auto t : ell_subsets_of_mask(e, ell)) cand_set.insert(t);
    cs.cands.assign(cand_set.begin(), cand_set.end());
    cs.covers.assign(cs.cands.size(), {});
    cs.cands_of_edge.assign(static_cast<std::size_t>(cs.m), {});
    for (std::size_t ci = 0; ci < cs.cands.size(); ++ci)
        for (int e = 0; e < cs.m; ++e)
            if ((h.mask(e) & cs.cands[ci]) == cs.cands[ci]) {
                cs.covers[ci].push_back(e);
                cs.cands_of_edge[static_cast<std::size_t>(e)].push_back(static_cast<int>(ci));
            }

    // Greedy upper bound: most new edges covered, ties to the smaller mask.
    {
        std::vector<bool> covered(static_cast<std::size_t>(cs.m), false);
        int left = cs.m;
        std::vector<int> greedy;
        while (left > 0) {
            int bestc = -1, bestn = -1;
            for (std::size_t ci = 0; ci < cs.cands.size(); ++ci) {
                int nn = 0;
                for (int e : cs.covers[ci])
                    if (!covered[static_cast<std::size_t>(e)]) ++nn;
                if (nn > bestn) {
                    bestn = nn;
                    bestc = static_cast<int>(ci);
                }
            }
            greedy.push_back(bestc);
            for (int e : cs.covers[static_cast<std::size_t>(bestc)]) {
                if (!covered[static_cast<std::size_t>(e)]) {
                    covered[static_cast<std::size_t>(e)] = true;
                    --left;
                }
            }
        }
        cs.best = greedy;
    }

    cs.cover_count.assign(static_cast<std::size_t>(cs.m), 0);
    cs.search(cs.m);

    std::vector<std::vector<int>> sets;
    std::vector<int> order = cs.best;
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return cs.cands[static_cast<std::size_t>(a)] < cs.cands[static_cast<std::size_t>(b)]; });
    for (int ci : order) sets.push_back(verts_of(cs.cands[static_cast<std::size_t>(ci)]));
    std::sort(sets.begin(), sets.end());
    return CoverConfig(ell, std::move(sets));
}

// ---- star classification and counting ------------------------------------

namespace {

// Is there an assignment of colors to slots with g(color) restricted to
// allowed[color] and slot i receiving exactly sizes[i] colors? Fills
// `witness` (color -> slot) on success.
bool slot_assignment(const std::vector<std::uint32_t>& allowed, const SplitVector& sizes,
                     std::vector<int>& witness) {
    const int k = static_cast<int>(allowed.size());
    const int c = static_cast<int>(sizes.size());
    std::vector<int> remaining(sizes.begin(), sizes.end());
    witness.assign(static_cast<std::size_t>(k), -1);
    std::set<std::pair<int, std::vector<int>>> dead;

    auto rec = [&](auto&& self, int color) -> bool {
        if (color == k) return true;
        std::vector<int> key(remaining);
        if (dead.count({color, key})) return false;
        for (int i = 0; i < c; ++i) {
            if (remaining[static_cast<std::size_t>(i)] == 0) continue;
            if (!((allowed[static_cast<std::size_t>(color)] >> i) & 1)) continue;
            --remaining[static_cast<std::size_t>(i)];
            witness[static_cast<std::size_t>(color)] = i;
            if (self(self, color + 1)) return true;
            ++remaining[static_cast<std::size_t>(i)];
        }
        witness[static_cast<std::size_t>(color)] = -1;
        dead.insert({color, std::move(key)});
        return false;
    };
    return rec(rec, 0);
}

std::vector<std::uint32_t> anchored_masks(const Hypergraph& h, const CoverConfig& cover, int k,
                                          const KneserColoring& delta) {
    const int c = cover.size();
    const std::uint32_t full = (c >= 32) ? ~std::uint32_t{0} : ((std::uint32_t{1} << c) - 1);
    std::vector<std::uint32_t> anchored(static_cast<std::size_t>(k), full);
    for (int e = 0; e < h.edge_count(); ++e) {
        std::uint32_t pat = 0;
        for (int i = 0; i < c; ++i)
            if ((h.mask(e) & cover.mask(i)) == cover.mask(i)) pat |= std::uint32_t{1} << i;
        anchored[static_cast<std::size_t>(delta.colors[static_cast<std::size_t>(e)] - 1)] &= pat;
    }
    return anchored;
}

}  // namespace

StarClassification classify_star(const Hypergraph& h, const CoverConfig& cover, int k, int ell,
                                 const KneserColoring& delta) {
    for (int col : delta.colors)
        if (col < 1 || col > k) throw error("classify_star: color outside [1,k]");
    if (!is_kneser_coloring(h, ell, delta)) throw error("classify_star: not a valid Kneser coloring");

    StarClassification out;
    std::vector<std::uint32_t> anchored = anchored_masks(h, cover, k, delta);
    for (int e = 0; e < h.edge_count(); ++e) {
        int col = delta.colors[static_cast<std::size_t>(e)];
        if (anchored[static_cast<std::size_t>(col - 1)] == 0) {
            out.cls = StarClass::NonStar;
            return out;
        }
    }
    std::vector<int> witness;
    for (const auto& s : optimal_splits_for_slots(k, cover.size())) {
        if (slot_assignment(anchored, s, witness)) {
            out.cls = StarClass::Star;
            out.split = s;
            out.blocks.assign(static_cast<std::size_t>(cover.size()), {});
            for (int col = 1; col <= k; ++col)
                out.blocks[static_cast<std::size_t>(witness[static_cast<std::size_t>(col - 1)])].push_back(col);
            return out;
        }
    }
    out.cls = StarClass::GeneralizedStar;
    return out;
}

std::map<std::uint32_t, BigCount> coverage_patterns(const Hypergraph& h, const CoverConfig& cover) {
    std::map<std::uint32_t, BigCount> out;
    const int c = cover.size();
    for (int e = 0; e < h.edge_count(); ++e) {
        std::uint32_t pat = 0;
        for (int i = 0; i < c; ++i)
            if ((h.mask(e) & cover.mask(i)) == cover.mask(i)) pat |= std::uint32_t{1} << i;
        out[pat] += 1;
    }
    return out;
}

std::map<std::uint32_t, BigCount> coverage_patterns_complete(int n, int r,
                                                             const CoverConfig& cover) {
    const int c = cover.size();
    if (cover.max_vertex() > n) throw error("coverage_patterns_complete: cover vertex exceeds n");
    std::vector<int> union_size(std::size_t{1} << c, 0);
    for (std::uint32_t t = 1; t < (std::uint32_t{1} << c); ++t) {
        std::uint64_t u = 0;
        for (int i = 0; i < c; ++i)
            if ((t >> i) & 1) u |= cover.mask(i);
        union_size[t] = __builtin_popcountll(u);
    }
    std::map<std::uint32_t, BigCount> out;
    for (std::uint32_t s = 1; s < (std::uint32_t{1} << c); ++s) {
        BigCount total = 0;
        // supersets of s
        const std::uint32_t rest = ((std::uint32_t{1} << c) - 1) & ~s;
        std::uint32_t sub = rest;
        while (true) {
            std::uint32_t t = s | sub;
            int u = union_size[t];
            BigCount term = binomial(n - u, r - u);
            if (__builtin_popcount(sub) % 2 == 0)
                total += term;
            else
                total -= term;
            if (sub == 0) break;
            sub = (sub - 1) & rest;
        }
        if (total != 0) out[s] = total;
    }
    return out;
}

namespace {

struct UnionIE {
    // slot maps: maps[j][color] = slot index
    std::vector<std::vector<int>> maps;
    std::vector<std::uint32_t> pat_masks;
    std::vector<BigCount> pat_counts;
    int k = 0;
    std::map<std::vector<int>, BigCount> term_memo;

    BigCount term(const std::vector<std::uint32_t>& require) {
        std::vector<int> cnt(pat_masks.size(), 0);
        for (std::size_t p = 0; p < pat_masks.size(); ++p)
            for (int col = 0; col < k; ++col)
                if ((require[static_cast<std::size_t>(col)] & ~pat_masks[p]) == 0) ++cnt[p];
        auto it = term_memo.find(cnt);
        if (it != term_memo.end()) return it->second;
        BigCount value = 1;
        for (std::size_t p = 0; p < pat_masks.size() && value != 0; ++p)
            value *= big_pow(cnt[p], pat_counts[p]);
        term_memo.emplace(std::move(cnt), value);
        return value;
    }

    BigCount run() {
        BigCount total = 0;
        std::vector<std::uint32_t> require(static_cast<std::size_t>(k), 0);
        auto rec = [&](auto&& self, std::size_t idx, int taken) -> void {
            if (idx == maps.size()) {
                if (taken == 0) return;
                BigCount t = term(require);
                if (taken % 2 == 1)
                    total += t;
                else
                    total -= t;
                return;
            }
            self(self, idx + 1, taken);
            std::vector<std::uint32_t> saved = require;
            for (int col = 0; col < k; ++col)
                require[static_cast<std::size_t>(col)] |= std::uint32_t{1} << maps[idx][static_cast<std::size_t>(col)];
            self(self, idx + 1, taken + 1);
            require = std::move(saved);
        };
        rec(rec, 0, 0);
        return total;
    }
};

BigCount star_count_ie(const std::map<std::uint32_t, BigCount>& patterns, int c, int k,
                       const Budget& budget) {
    UnionIE ie;
    ie.k = k;
    for (const auto& s : optimal_splits_for_slots(k, c)) {
        OrderedPartitions parts(s, k);
        std::vector<std::vector<int>> blocks;
        while (parts.next(blocks)) {
            std::vector<int> slot_of(static_cast<std::size_t>(k), -1);
            for (int i = 0; i < c; ++i)
                for (int col : blocks[static_cast<std::size_t>(i)])
                    slot_of[static_cast<std::size_t>(col - 1)] = i;
            ie.maps.push_back(std::move(slot_of));
        }
    }
    if (ie.maps.empty()) return 0;
    if (static_cast<int>(ie.maps.size()) > budget.max_union_terms)
        throw resource_error("star_count_exact: " + std::to_string(ie.maps.size()) +
                             " split/partition pairs exceed the inclusion-exclusion budget of " +
                             std::to_string(budget.max_union_terms));
    for (const auto& [pat, cnt] : patterns) {
        if (cnt == 0) continue;
        ie.pat_masks.push_back(pat);
        ie.pat_counts.push_back(cnt);
    }
    return ie.run();
}

BigCount star_count_enum(const Hypergraph& h, const CoverConfig& cover, int k,
                         const Budget& budget) {
    const int m = h.edge_count();
    const int c = cover.size();
    if (std::pow(static_cast<double>(k), static_cast<double>(m)) > budget.max_color_enumerations)
        throw resource_error("star_count_exact: k^|E| exceeds the enumeration budget");

    std::vector<std::uint32_t> pattern(static_cast<std::size_t>(m), 0);
    for (int e = 0; e < m; ++e)
        for (int i = 0; i < c; ++i)
            if ((h.mask(e) & cover.mask(i)) == cover.mask(i))
                pattern[static_cast<std::size_t>(e)] |= std::uint32_t{1} << i;

    std::vector<SplitVector> fitting = optimal_splits_for_slots(k, c);
    if (fitting.empty()) return 0;

    const std::uint32_t full = (std::uint32_t{1} << c) - 1;
    std::map<std::vector<std::uint32_t>, bool> star_memo;
    std::vector<int> witness;
    auto is_star = [&](const std::vector<std::uint32_t>& anchored) -> bool {
        std::vector<std::uint32_t> key = anchored;
        std::sort(key.begin(), key.end());
        auto it = star_memo.find(key);
        if (it != star_memo.end()) return it->second;
        bool ok = false;
        for (const auto& s : fitting)
            if (slot_assignment(key, s, witness)) {
                ok = true;
                break;
            }
        star_memo.emplace(std::move(key), ok);
        return ok;
    };

    BigCount total = 0;
    std::vector<std::uint32_t> anchored(static_cast<std::size_t>(k), full);
    auto rec = [&](auto&& self, int e) -> void {
        if (e == m) {
            if (is_star(anchored)) total += 1;
            return;
        }
        for (int col = 0; col < k; ++col) {
            std::uint32_t saved = anchored[static_cast<std::size_t>(col)];
            anchored[static_cast<std::size_t>(col)] = saved & pattern[static_cast<std::size_t>(e)];
            self(self, e + 1);
            anchored[static_cast<std::size_t>(col)] = saved;
        }
    };
    rec(rec, 0);
    return total;
}

}  // namespace

BigCount star_count_exact(const Hypergraph& h, const CoverConfig& cover, int k, int ell,
                          const Budget& budget, StarCountMethod method) {
    if (ell != cover.ell()) throw error("star_count_exact: cover ell mismatch");
    switch (method) {
        case StarCountMethod::InclusionExclusion:
            return star_count_ie(coverage_patterns(h, cover), cover.size(), k, budget);
        case StarCountMethod::Enumeration:
            return star_count_enum(h, cover, k, budget);
        case StarCountMethod::Auto: {
            BigCount pairs = 0;
            for (const auto& s : optimal_splits_for_slots(k, cover.size())) {
                pairs += multinomial(k, s);
                if (pairs > budget.max_union_terms) break;
            }
            if (pairs <= budget.max_union_terms)
                return star_count_ie(coverage_patterns(h, cover), cover.size(), k, budget);
            return star_count_enum(h, cover, k, budget);
        }
    }
    throw error("star_count_exact: unknown method");
}

BigCount star_count_exact_complete(int n, int r, const CoverConfig& cover, int k, int ell,
                                   const Budget& budget) {
    if (ell != cover.ell()) throw error("star_count_exact_complete: cover ell mismatch");
    if (ell >= r) throw error("star_count_exact_complete: requires ell < r");
    return star_count_ie(coverage_patterns_complete(n, r, cover), cover.size(), k, budget);
}

}  // namespace kneserlab
