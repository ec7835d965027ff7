#pragma once

// Core hypergraph representation. Vertices are labeled 1..n with n <= 64 so
// every edge doubles as a one-word bitmask; intersections are popcounts.
// All values are immutable after construction and safe to share.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "kneserlab/bigint.hpp"
#include "kneserlab/errors.hpp"

namespace kneserlab {

constexpr int kMaxVertices = 64;

inline int intersect_size(std::uint64_t e, std::uint64_t f) {
    return __builtin_popcountll(e & f);
}

// r-uniform hypergraph on [n], n <= 64. Edges are kept sorted
// lexicographically by vertex list, pairwise distinct, each edge stored both
// as an ascending vertex list and as a bitmask (bit v-1 for vertex v).
class Hypergraph {
public:
    Hypergraph() = default;
    // Validates, canonicalizes edge order. Throws kneserlab::error on a bad
    // edge (wrong size, repeated vertex, label outside [1,n]), a duplicate
    // edge, or n > 64. r > n is allowed when the edge set is empty.
    Hypergraph(int n, int r, std::vector<std::vector<int>> edges);

    int n() const { return n_; }
    int r() const { return r_; }
    int edge_count() const { return static_cast<int>(masks_.size()); }
    const std::vector<std::vector<int>>& edges() const { return edges_; }
    const std::vector<std::uint64_t>& masks() const { return masks_; }
    std::uint64_t mask(int i) const { return masks_[static_cast<std::size_t>(i)]; }

    bool operator==(const Hypergraph& other) const {
        return n_ == other.n_ && r_ == other.r_ && masks_ == other.masks_;
    }

private:
    int n_ = 0;
    int r_ = 0;
    std::vector<std::vector<int>> edges_;
    std::vector<std::uint64_t> masks_;
};

// Graph on hyperedge indices 0..m-1 of a source hypergraph; i and j are
// adjacent exactly when the corresponding edges intersect in fewer than ell
// vertices. Symmetric, irreflexive.
class ConflictGraph {
public:
    explicit ConflictGraph(int m = 0);

    int vertex_count() const { return m_; }
    int edge_count() const;
    void add_edge(int i, int j);
    bool adjacent(int i, int j) const;
    int degree(int i) const { return static_cast<int>(neighbors_[static_cast<std::size_t>(i)].size()); }
    const std::vector<int>& neighbors(int i) const { return neighbors_[static_cast<std::size_t>(i)]; }

private:
    int m_ = 0;
    std::vector<std::vector<int>> neighbors_;   // sorted
    std::vector<std::vector<bool>> adj_;
};

// A color assignment on edge indices; colors in [1, k].
struct KneserColoring {
    std::vector<int> colors;  // colors[i] = color of edge i
};

// Requires 1 <= ell < r.
ConflictGraph conflict_graph(const Hypergraph& h, int ell);

// True iff every color class of delta is pairwise ell-intersecting
// (equivalently: delta is a proper coloring of conflict_graph(h, ell)).
// Checked directly on edge masks, independent of ConflictGraph.
bool is_kneser_coloring(const Hypergraph& h, int ell, const KneserColoring& delta);

// Text format: first line "n r m", then m lines of r ascending vertex
// labels, edges in lexicographic order. Parsing rejects out-of-range or
// repeated labels, unsorted lines, duplicated or misordered edges.
Hypergraph read_hypergraph(std::istream& in);
void write_hypergraph(std::ostream& out, const Hypergraph& h);
Hypergraph parse_hypergraph(const std::string& text);
std::string format_hypergraph(const Hypergraph& h);

// All r-subsets of [n] in lexicographic order (empty when r > n).
std::vector<std::vector<int>> all_r_subsets(int n, int r);

std::uint64_t mask_of(const std::vector<int>& verts);
std::vector<int> verts_of(std::uint64_t mask);

}  // namespace kneserlab
