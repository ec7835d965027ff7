#include "kneserlab/hypergraph.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

namespace kneserlab {

std::uint64_t mask_of(const std::vector<int>& verts) {
    std::uint64_t m = 0;
    for (int v : verts) m |= (std::uint64_t{1} << (v - 1));
    return m;
}

std::vector<int> verts_of(std::uint64_t mask) {
    std::vector<int> out;
    while (mask != 0) {
        int b = __builtin_ctzll(mask);
        out.push_back(b + 1);
        mask &= mask - 1;
    }
    return out;
}

Hypergraph::Hypergraph(int n, int r, std::vector<std::vector<int>> edges) : n_(n), r_(r) {
    if (n < 0 || n > kMaxVertices)
        throw error("hypergraph: vertex count must be in [0," + std::to_string(kMaxVertices) +
                    "], got " + std::to_string(n));
    if (r < 1) throw error("hypergraph: uniformity must be positive");
    for (auto& e : edges) {
        if (static_cast<int>(e.size()) != r)
            throw error("hypergraph: edge with " + std::to_string(e.size()) +
                        " vertices in a " + std::to_string(r) + "-uniform hypergraph");
        std::sort(e.begin(), e.end());
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] < 1 || e[i] > n) throw error("hypergraph: vertex label out of range");
            if (i > 0 && e[i] == e[i - 1]) throw error("hypergraph: repeated vertex in edge");
        }
    }
    std::sort(edges.begin(), edges.end());
    for (std::size_t i = 1; i < edges.size(); ++i)
        if (edges[i] == edges[i - 1]) throw error("hypergraph: duplicate edge");
    edges_ = std::move(edges);
    masks_.reserve(edges_.size());
    for (const auto& e : edges_) masks_.push_back(mask_of(e));
}

ConflictGraph::ConflictGraph(int m) : m_(m), neighbors_(static_cast<std::size_t>(m)) {
    adj_.assign(static_cast<std::size_t>(m), std::vector<bool>(static_cast<std::size_t>(m), false));
}

int ConflictGraph::edge_count() const {
    int total = 0;
    for (const auto& nb : neighbors_) total += static_cast<int>(nb.size());
    return total / 2;
}

void ConflictGraph::add_edge(int i, int j) {
    if (i == j) throw error("conflict graph: self-loop");
    if (adj_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) return;
    adj_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = true;
    adj_[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = true;
    neighbors_[static_cast<std::size_t>(i)].insert(
        std::lower_bound(neighbors_[static_cast<std::size_t>(i)].begin(),
                         neighbors_[static_cast<std::size_t>(i)].end(), j),
        j);
    neighbors_[static_cast<std::size_t>(j)].insert(
        std::lower_bound(neighbors_[static_cast<std::size_t>(j)].begin(),
                         neighbors_[static_cast<std::size_t>(j)].end(), i),
        i);
}

bool ConflictGraph::adjacent(int i, int j) const {
    return adj_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
}

ConflictGraph conflict_graph(const Hypergraph& h, int ell) {
    if (ell < 1 || ell >= h.r())
        throw error("conflict_graph: requires 1 <= ell < r");
    const int m = h.edge_count();
    ConflictGraph g(m);
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            if (intersect_size(h.mask(i), h.mask(j)) < ell) g.add_edge(i, j);
    return g;
}

bool is_kneser_coloring(const Hypergraph& h, int ell, const KneserColoring& delta) {
    const int m = h.edge_count();
    if (static_cast<int>(delta.colors.size()) != m)
        throw error("is_kneser_coloring: assignment not total on the edge set");
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            if (delta.colors[static_cast<std::size_t>(i)] == delta.colors[static_cast<std::size_t>(j)] &&
                intersect_size(h.mask(i), h.mask(j)) < ell)
                return false;
    return true;
}

Hypergraph read_hypergraph(std::istream& in) {
    int n = 0, r = 0;
    long long m = 0;
    if (!(in >> n >> r >> m)) throw error("hypergraph file: missing or malformed header line");
    if (m < 0) throw error("hypergraph file: negative edge count");
    std::vector<std::vector<int>> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (long long i = 0; i < m; ++i) {
        std::vector<int> e(static_cast<std::size_t>(r));
        for (int j = 0; j < r; ++j)
            if (!(in >> e[static_cast<std::size_t>(j)]))
                throw error("hypergraph file: truncated edge list");
        for (int j = 1; j < r; ++j)
            if (e[static_cast<std::size_t>(j)] <= e[static_cast<std::size_t>(j - 1)])
                throw error("hypergraph file: edge vertices not strictly increasing");
        if (!edges.empty() && !(edges.back() < e))
            throw error("hypergraph file: edges not in strict lexicographic order");
        edges.push_back(std::move(e));
    }
    return Hypergraph(n, r, std::move(edges));
}

void write_hypergraph(std::ostream& out, const Hypergraph& h) {
    out << h.n() << ' ' << h.r() << ' ' << h.edge_count() << '\n';
    for (const auto& e : h.edges()) {
        for (std::size_t j = 0; j < e.size(); ++j) out << (j ? " " : "") << e[j];
        out << '\n';
    }
}

Hypergraph parse_hypergraph(const std::string& text) {
    std::istringstream in(text);
    return read_hypergraph(in);
}

std::string format_hypergraph(const Hypergraph& h) {
    std::ostringstream out;
    write_hypergraph(out, h);
    return out.str();
}

std::vector<std::vector<int>> all_r_subsets(int n, int r) {
    std::vector<std::vector<int>> out;
    if (r > n || r < 0) return out;
    std::vector<int> cur(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) cur[static_cast<std::size_t>(i)] = i + 1;
    while (true) {
        out.push_back(cur);
        int i = r - 1;
        while (i >= 0 && cur[static_cast<std::size_t>(i)] == n - (r - 1 - i)) --i;
        if (i < 0) break;
        ++cur[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < r; ++j)
            cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)] + 1;
    }
    return out;
}

}  // namespace kneserlab
