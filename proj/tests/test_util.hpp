#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "hypercut/anf.hpp"
#include "hypercut/hypergraph.hpp"

namespace hypercut::testing {

inline AnfPolynomial random_polynomial(std::mt19937_64& rng, int n, int terms) {
    AnfPolynomial f(n);
    std::uniform_int_distribution<std::uint64_t> dist(0, full_vertex_set(n));
    for (int i = 0; i < terms; ++i) f.toggle(dist(rng));
    return f;
}

// Random hypergraph with edge sizes drawn from [min_degree, max_degree].
inline Hypergraph random_hypergraph(std::mt19937_64& rng, int n, int edge_count, int min_degree,
                                    int max_degree) {
    std::uniform_int_distribution<int> degree(min_degree, std::min(max_degree, n));
    std::uniform_int_distribution<int> vertex(0, n - 1);
    std::vector<VertexSet> edges;
    for (int i = 0; i < edge_count; ++i) {
        const int target = degree(rng);
        VertexSet e = 0;
        while (set_size(e) < target) e |= vertex_bit(vertex(rng));
        edges.push_back(e);
    }
    return Hypergraph(n, std::move(edges));
}

// Random cut with both sides nonempty.
inline Cut random_cut(std::mt19937_64& rng, int n) {
    std::uniform_int_distribution<std::uint64_t> dist(1, full_vertex_set(n) - 1);
    const VertexSet a = dist(rng);
    std::vector<int> side_a = vertices_of(a);
    std::vector<int> side_b = vertices_of(full_vertex_set(n) & ~a);
    return Cut(n, side_a, side_b);
}

}  // namespace hypercut::testing
