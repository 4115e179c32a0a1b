#pragma once

#include <cstdint>
#include <vector>

#include "hypercut/bits.hpp"

namespace hypercut {

// Vertex-labelled hypergraph on vertices {0, ..., n-1}. Edges are vertex
// sets and may repeat; all downstream phase semantics are mod 2, so repeats
// cancel there but are preserved here.
class Hypergraph {
  public:
    Hypergraph(int vertex_count, std::vector<VertexSet> edges);

    static Hypergraph from_vertex_lists(int vertex_count,
                                        const std::vector<std::vector<int>>& edges);

    int vertex_count() const { return n_; }
    const std::vector<VertexSet>& edges() const { return edges_; }

  private:
    int n_;
    std::vector<VertexSet> edges_;
};

// Ordered bipartition (A, B) of {0, ..., n-1}. The listed orders are fixed at
// construction and define every row/column encoding derived from the cut:
// the k-th listed vertex of a side maps to bit (side_size - 1 - k) of the
// corresponding matrix index, i.e. the first listed vertex is the most
// significant bit.
class Cut {
  public:
    Cut(int vertex_count, std::vector<int> a_vertices, std::vector<int> b_vertices);

    int vertex_count() const { return n_; }
    const std::vector<int>& a_vertices() const { return a_; }
    const std::vector<int>& b_vertices() const { return b_; }
    int a_size() const { return static_cast<int>(a_.size()); }
    int b_size() const { return static_cast<int>(b_.size()); }
    VertexSet a_set() const { return a_set_; }
    VertexSet b_set() const { return b_set_; }

    // Position of a vertex in its side's listing; -1 if it is on the other side.
    int a_position(int vertex) const;
    int b_position(int vertex) const;

    // Row/column index -> set of vertices assigned 1, and back. The inverse
    // ignores bits outside the side.
    VertexSet a_pattern(std::uint64_t row) const;
    VertexSet b_pattern(std::uint64_t col) const;
    std::uint64_t a_index(VertexSet ones) const;
    std::uint64_t b_index(VertexSet ones) const;

    Cut reversed() const { return Cut(n_, b_, a_); }

  private:
    int n_;
    std::vector<int> a_, b_;
    VertexSet a_set_ = 0, b_set_ = 0;
    std::vector<int> position_;  // per vertex: position within its side
};

// A cross hyperedge with exactly one A-vertex: {a_vertex} ∪ b_support.
struct BridgeBlock {
    int a_vertex = 0;
    VertexSet b_support = 0;  // nonempty subset of B

    auto operator<=>(const BridgeBlock&) const = default;
};

// Edges meeting both sides of the cut, in input order, multiplicity kept.
std::vector<VertexSet> cross_edges(const Hypergraph& g, const Cut& cut);

// One block per cross edge whose A-part is a single vertex; edges with two or
// more A-vertices cannot act as bridges and are skipped.
std::vector<BridgeBlock> bridge_blocks(const std::vector<VertexSet>& cross, const Cut& cut);

}  // namespace hypercut
