#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace hypercut {

// A set of vertex indices packed into a 64-bit mask; vertex i <-> bit i.
// Doubles as a monomial support: the empty set is the constant-1 monomial.
using VertexSet = std::uint64_t;

inline constexpr int kMaxVertices = 64;

constexpr VertexSet vertex_bit(int v) { return VertexSet{1} << v; }

constexpr VertexSet full_vertex_set(int n) {
    return n >= kMaxVertices ? ~VertexSet{0} : (VertexSet{1} << n) - 1;
}

inline int set_size(VertexSet s) { return std::popcount(s); }

inline int lowest_vertex(VertexSet s) { return std::countr_zero(s); }

// Ascending list of the vertices in s.
std::vector<int> vertices_of(VertexSet s);

// Packs a vertex list into a mask. Rejects indices outside [0, n) and
// repeated vertices.
VertexSet vertex_set_of(int n, const std::vector<int>& vertices);

// "{0,2,5}" with ascending vertices; "{}" for the empty set.
std::string format_vertex_set(VertexSet s);

}  // namespace hypercut
