#include "hypercut/hypergraph.hpp"

#include <stdexcept>
#include <string>

namespace hypercut {

Hypergraph::Hypergraph(int vertex_count, std::vector<VertexSet> edges)
    : n_(vertex_count), edges_(std::move(edges)) {
    if (n_ < 0 || n_ > kMaxVertices)
        throw std::invalid_argument("vertex count must be in [0, 64], got " +
                                    std::to_string(n_));
    const VertexSet allowed = full_vertex_set(n_);
    for (VertexSet e : edges_) {
        if (e & ~allowed)
            throw std::out_of_range("edge " + format_vertex_set(e) +
                                    " contains a vertex >= " + std::to_string(n_));
    }
}

Hypergraph Hypergraph::from_vertex_lists(int vertex_count,
                                         const std::vector<std::vector<int>>& edges) {
    std::vector<VertexSet> masks;
    masks.reserve(edges.size());
    for (const auto& e : edges) masks.push_back(vertex_set_of(vertex_count, e));
    return Hypergraph(vertex_count, std::move(masks));
}

Cut::Cut(int vertex_count, std::vector<int> a_vertices, std::vector<int> b_vertices)
    : n_(vertex_count), a_(std::move(a_vertices)), b_(std::move(b_vertices)) {
    a_set_ = vertex_set_of(n_, a_);
    b_set_ = vertex_set_of(n_, b_);
    if (a_set_ & b_set_)
        throw std::invalid_argument("cut sides overlap on " +
                                    format_vertex_set(a_set_ & b_set_));
    if ((a_set_ | b_set_) != full_vertex_set(n_))
        throw std::invalid_argument(
            "cut does not cover all vertices, missing " +
            format_vertex_set(full_vertex_set(n_) & ~(a_set_ | b_set_)));
    position_.assign(static_cast<size_t>(n_), -1);
    for (size_t k = 0; k < a_.size(); ++k) position_[static_cast<size_t>(a_[k])] = static_cast<int>(k);
    for (size_t k = 0; k < b_.size(); ++k) position_[static_cast<size_t>(b_[k])] = static_cast<int>(k);
}

int Cut::a_position(int vertex) const {
    if (vertex < 0 || vertex >= n_)
        throw std::out_of_range("vertex " + std::to_string(vertex) + " outside cut");
    return (a_set_ >> vertex) & 1 ? position_[static_cast<size_t>(vertex)] : -1;
}

int Cut::b_position(int vertex) const {
    if (vertex < 0 || vertex >= n_)
        throw std::out_of_range("vertex " + std::to_string(vertex) + " outside cut");
    return (b_set_ >> vertex) & 1 ? position_[static_cast<size_t>(vertex)] : -1;
}

namespace {

VertexSet pattern_impl(const std::vector<int>& side, std::uint64_t index) {
    VertexSet out = 0;
    const int size = static_cast<int>(side.size());
    for (int k = 0; k < size; ++k)
        if ((index >> (size - 1 - k)) & 1) out |= vertex_bit(side[static_cast<size_t>(k)]);
    return out;
}

std::uint64_t index_impl(const std::vector<int>& side, VertexSet ones) {
    std::uint64_t index = 0;
    const int size = static_cast<int>(side.size());
    for (int k = 0; k < size; ++k)
        if ((ones >> side[static_cast<size_t>(k)]) & 1) index |= std::uint64_t{1} << (size - 1 - k);
    return index;
}

}  // namespace

VertexSet Cut::a_pattern(std::uint64_t row) const { return pattern_impl(a_, row); }
VertexSet Cut::b_pattern(std::uint64_t col) const { return pattern_impl(b_, col); }
std::uint64_t Cut::a_index(VertexSet ones) const { return index_impl(a_, ones); }
std::uint64_t Cut::b_index(VertexSet ones) const { return index_impl(b_, ones); }

std::vector<VertexSet> cross_edges(const Hypergraph& g, const Cut& cut) {
    if (g.vertex_count() != cut.vertex_count())
        throw std::invalid_argument("cut and hypergraph vertex counts differ");
    std::vector<VertexSet> out;
    for (VertexSet e : g.edges())
        if ((e & cut.a_set()) && (e & cut.b_set())) out.push_back(e);
    return out;
}

std::vector<BridgeBlock> bridge_blocks(const std::vector<VertexSet>& cross, const Cut& cut) {
    std::vector<BridgeBlock> out;
    for (VertexSet e : cross) {
        VertexSet a_part = e & cut.a_set();
        if (set_size(a_part) != 1) continue;
        out.push_back(BridgeBlock{lowest_vertex(a_part), e & cut.b_set()});
    }
    return out;
}

}  // namespace hypercut
