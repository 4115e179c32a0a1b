#include "hypercut/bits.hpp"

#include <sstream>
#include <stdexcept>

namespace hypercut {

std::vector<int> vertices_of(VertexSet s) {
    std::vector<int> out;
    out.reserve(set_size(s));
    while (s) {
        int v = std::countr_zero(s);
        out.push_back(v);
        s &= s - 1;
    }
    return out;
}

VertexSet vertex_set_of(int n, const std::vector<int>& vertices) {
    if (n < 0 || n > kMaxVertices)
        throw std::invalid_argument("vertex count must be in [0, 64], got " + std::to_string(n));
    VertexSet s = 0;
    for (int v : vertices) {
        if (v < 0 || v >= n)
            throw std::out_of_range("vertex " + std::to_string(v) + " outside [0, " +
                                    std::to_string(n) + ")");
        VertexSet bit = vertex_bit(v);
        if (s & bit)
            throw std::invalid_argument("vertex " + std::to_string(v) + " listed twice");
        s |= bit;
    }
    return s;
}

std::string format_vertex_set(VertexSet s) {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (int v : vertices_of(s)) {
        if (!first) os << ',';
        os << v;
        first = false;
    }
    os << '}';
    return os.str();
}

}  // namespace hypercut
