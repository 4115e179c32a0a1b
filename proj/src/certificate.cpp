#include "hypercut/certificate.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>

namespace hypercut {

VertexSet Restriction::active_a_set() const { return vertex_set_of(kMaxVertices, active_a); }
VertexSet Restriction::active_b_set() const { return vertex_set_of(kMaxVertices, active_b); }

namespace {

// Throws unless the restriction's active sets and fixed domains tile the cut.
void check_restriction(const Restriction& r, const Cut& cut) {
    const VertexSet act_a = r.active_a_set();
    const VertexSet act_b = r.active_b_set();
    if (act_a & ~cut.a_set())
        throw std::invalid_argument("restriction inconsistent with cut: active A-vertices " +
                                    format_vertex_set(act_a & ~cut.a_set()) + " are not in A");
    if (act_b & ~cut.b_set())
        throw std::invalid_argument("restriction inconsistent with cut: active B-vertices " +
                                    format_vertex_set(act_b & ~cut.b_set()) + " are not in B");
    if (r.fixed_a.domain() != (cut.a_set() & ~act_a))
        throw std::invalid_argument(
            "restriction inconsistent with cut: fixed A-bits must cover exactly the non-active "
            "A-vertices");
    if (r.fixed_b.domain() != (cut.b_set() & ~act_b))
        throw std::invalid_argument(
            "restriction inconsistent with cut: fixed B-bits must cover exactly the non-active "
            "B-vertices");
}

}  // namespace

ReducedSupportSet odd_reduced_supports(const std::vector<VertexSet>& cross, const Restriction& r,
                                       const Cut& cut) {
    check_restriction(r, cut);
    const VertexSet zeros = r.fixed_a.zeros() | r.fixed_b.zeros();
    const VertexSet active = r.active_a_set() | r.active_b_set();
    ReducedSupportSet s;
    for (VertexSet e : cross) {
        if (e & zeros) continue;
        const VertexSet reduced = e & active;
        auto [it, inserted] = s.supports.insert(reduced);
        if (!inserted) s.supports.erase(it);
    }
    return s;
}

bool residual_free(const ReducedSupportSet& s, VertexSet active_a, VertexSet active_b) {
    for (VertexSet supp : s.supports)
        if (set_size(supp) >= 3 && (supp & active_a) && (supp & active_b)) return false;
    return true;
}

F2Matrix core_matrix(const ReducedSupportSet& s, const std::vector<int>& active_a,
                     const std::vector<int>& active_b) {
    if (!residual_free(s, vertex_set_of(kMaxVertices, active_a),
                       vertex_set_of(kMaxVertices, active_b)))
        throw std::logic_error("core matrix requested for a support set with residuals");
    F2Matrix core(static_cast<int>(active_a.size()), static_cast<int>(active_b.size()));
    for (size_t k = 0; k < active_a.size(); ++k)
        for (size_t l = 0; l < active_b.size(); ++l)
            if (s.supports.count(vertex_bit(active_a[k]) | vertex_bit(active_b[l])))
                core.set(static_cast<int>(k), static_cast<int>(l), true);
    return core;
}

namespace {

std::vector<size_t> sorted_block_order(const std::vector<BridgeBlock>& blocks) {
    std::vector<size_t> order(blocks.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](size_t lhs, size_t rhs) {
        const int ls = set_size(blocks[lhs].b_support);
        const int rs = set_size(blocks[rhs].b_support);
        if (ls != rs) return ls < rs;
        return blocks[lhs].a_vertex < blocks[rhs].a_vertex;
    });
    return order;
}

std::optional<std::vector<BridgeBlock>> greedy_pick(const std::vector<BridgeBlock>& blocks,
                                                    const std::vector<size_t>& order, int r) {
    std::vector<BridgeBlock> picked;
    VertexSet used_a = 0, used_b = 0;
    for (size_t idx : order) {
        const BridgeBlock& blk = blocks[idx];
        if ((used_a & vertex_bit(blk.a_vertex)) || (used_b & blk.b_support)) continue;
        picked.push_back(blk);
        used_a |= vertex_bit(blk.a_vertex);
        used_b |= blk.b_support;
        if (static_cast<int>(picked.size()) == r) return picked;
    }
    return std::nullopt;
}

std::mt19937_64 restart_rng(std::uint64_t seed, int r, int attempt) {
    std::uint64_t mix = seed;
    mix ^= 0x9e3779b97f4a7c15ull * static_cast<std::uint64_t>(r);
    mix ^= 0xbf58476d1ce4e5b9ull * static_cast<std::uint64_t>(attempt);
    return std::mt19937_64(mix);
}

}  // namespace

std::optional<std::vector<BridgeBlock>> select_disjoint_blocks(
    const std::vector<BridgeBlock>& blocks, int r, const SearchOptions& options) {
    if (r < 0) throw std::invalid_argument("target block count must be nonnegative");
    if (r == 0) return std::vector<BridgeBlock>{};
    if (static_cast<int>(blocks.size()) < r) return std::nullopt;
    std::vector<size_t> order = sorted_block_order(blocks);
    if (auto picked = greedy_pick(blocks, order, r)) return picked;
    for (int attempt = 1; attempt <= options.restarts; ++attempt) {
        auto rng = restart_rng(options.seed, r, attempt);
        std::shuffle(order.begin(), order.end(), rng);
        if (auto picked = greedy_pick(blocks, order, r)) return picked;
    }
    return std::nullopt;
}

Restriction canonical_restriction(const std::vector<BridgeBlock>& blocks, const Cut& cut) {
    Restriction r;
    VertexSet used_a = 0, used_b = 0, reps = 0;
    for (const BridgeBlock& blk : blocks) {
        if (!((cut.a_set() >> blk.a_vertex) & 1) || (blk.b_support & ~cut.b_set()) ||
            blk.b_support == 0)
            throw std::invalid_argument("block does not fit the cut");
        if ((used_a & vertex_bit(blk.a_vertex)) || (used_b & blk.b_support))
            throw std::invalid_argument("blocks must be pairwise disjoint");
        used_a |= vertex_bit(blk.a_vertex);
        used_b |= blk.b_support;
        const int rep = lowest_vertex(blk.b_support);
        reps |= vertex_bit(rep);
        r.active_a.push_back(blk.a_vertex);
        r.active_b.push_back(rep);
    }
    // Non-representative support vertices go to 1, everything else to 0.
    r.fixed_a = PartialAssignment::over(cut.a_set() & ~used_a, 0);
    r.fixed_b = PartialAssignment::over(cut.b_set() & ~reps, used_b & ~reps);
    return r;
}

bool check_bridge_conditions(const std::vector<BridgeBlock>& blocks,
                             const std::vector<VertexSet>& cross) {
    VertexSet used_a = 0, used_b = 0;
    for (const BridgeBlock& blk : blocks) {
        if (blk.b_support == 0) return false;
        if ((used_a & vertex_bit(blk.a_vertex)) || (used_b & blk.b_support)) return false;
        used_a |= vertex_bit(blk.a_vertex);
        used_b |= blk.b_support;
    }
    std::vector<VertexSet> block_sets;
    block_sets.reserve(blocks.size());
    for (const BridgeBlock& blk : blocks)
        block_sets.push_back(vertex_bit(blk.a_vertex) | blk.b_support);

    // No edge may meet two blocks.
    for (VertexSet e : cross) {
        int met = 0;
        for (VertexSet bs : block_sets)
            if (e & bs) ++met;
        if (met >= 2) return false;
    }

    // Inside each block, the edges supported there must cancel down to the
    // block's own edge and nothing else.
    for (size_t k = 0; k < blocks.size(); ++k) {
        std::map<VertexSet, int> parity;
        for (VertexSet e : cross)
            if ((e & ~block_sets[k]) == 0) parity[e] ^= 1;
        std::erase_if(parity, [](const auto& kv) { return kv.second == 0; });
        if (parity.size() != 1 || parity.begin()->first != block_sets[k]) return false;
    }
    return true;
}

std::optional<CoreCertificate> search_and_verify(const Hypergraph& g, const Cut& cut, int r_max,
                                                 const SearchOptions& options) {
    if (r_max < 1) throw std::invalid_argument("r_max must be at least 1");
    const std::vector<VertexSet> cross = cross_edges(g, cut);
    const std::vector<BridgeBlock> blocks = bridge_blocks(cross, cut);
    if (blocks.empty()) return std::nullopt;

    const int r_top = std::min<int>(r_max, static_cast<int>(blocks.size()));
    for (int r = r_top; r >= 1; --r) {
        std::vector<size_t> order = sorted_block_order(blocks);
        std::set<std::vector<BridgeBlock>> seen;
        for (int attempt = 0; attempt <= options.restarts; ++attempt) {
            if (attempt > 0) {
                auto rng = restart_rng(options.seed, r, attempt);
                std::shuffle(order.begin(), order.end(), rng);
            }
            auto picked = greedy_pick(blocks, order, r);
            if (!picked) continue;
            std::vector<BridgeBlock> key = *picked;
            std::sort(key.begin(), key.end(), [](const BridgeBlock& x, const BridgeBlock& y) {
                return std::pair(x.a_vertex, x.b_support) < std::pair(y.a_vertex, y.b_support);
            });
            if (!seen.insert(key).second) continue;

            const Restriction restriction = canonical_restriction(*picked, cut);
            const ReducedSupportSet supports = odd_reduced_supports(cross, restriction, cut);
            if (!residual_free(supports, restriction.active_a_set(), restriction.active_b_set()))
                continue;
            F2Matrix core = core_matrix(supports, restriction.active_a, restriction.active_b);
            const int t = rank_f2(core);
            return CoreCertificate{restriction, std::move(core), t, std::uint64_t{1} << t};
        }
    }
    return std::nullopt;
}

const char* to_string(CertificateStatus status) {
    switch (status) {
        case CertificateStatus::ok: return "ok";
        case CertificateStatus::malformed: return "malformed certificate";
        case CertificateStatus::residual_found: return "residual found";
        case CertificateStatus::core_mismatch: return "core matrix mismatch";
        case CertificateStatus::rank_mismatch: return "rank mismatch";
    }
    return "unknown";
}

namespace {

bool has_duplicates_or_out_of_side(const std::vector<int>& vertices, VertexSet side) {
    VertexSet seen = 0;
    for (int v : vertices) {
        if (v < 0 || v >= kMaxVertices) return true;
        const VertexSet bit = vertex_bit(v);
        if (!(side & bit) || (seen & bit)) return true;
        seen |= bit;
    }
    return false;
}

}  // namespace

CertificateCheck check_certificate(const Hypergraph& g, const Cut& cut,
                                   const CoreCertificate& c) {
    const Restriction& r = c.restriction;
    if (r.active_a.empty() || r.active_b.empty())
        return {CertificateStatus::malformed, "active sets must be nonempty"};
    if (has_duplicates_or_out_of_side(r.active_a, cut.a_set()))
        return {CertificateStatus::malformed, "active A-vertices must be distinct members of A"};
    if (has_duplicates_or_out_of_side(r.active_b, cut.b_set()))
        return {CertificateStatus::malformed, "active B-vertices must be distinct members of B"};
    if (r.fixed_a.domain() != (cut.a_set() & ~r.active_a_set()) ||
        r.fixed_b.domain() != (cut.b_set() & ~r.active_b_set()))
        return {CertificateStatus::malformed,
                "fixed bits must cover exactly the non-active vertices of each side"};
    if (c.core.rows() != static_cast<int>(r.active_a.size()) ||
        c.core.cols() != static_cast<int>(r.active_b.size()))
        return {CertificateStatus::malformed, "core matrix shape does not match the active sets"};

    // Symbolic recheck straight from the phase polynomial.
    const PhaseDecomposition parts = cut_decompose(phase_polynomial(g), cut);
    const AnfPolynomial surviving = parts.cross.restricted(r.combined_fixing());
    const VertexSet act_a = r.active_a_set();
    const VertexSet act_b = r.active_b_set();
    F2Matrix observed(static_cast<int>(r.active_a.size()), static_cast<int>(r.active_b.size()));
    for (VertexSet m : surviving.monomials()) {
        const bool touches_a = (m & act_a) != 0;
        const bool touches_b = (m & act_b) != 0;
        if (!touches_a || !touches_b) continue;  // local phase on one side
        if (set_size(m) >= 3)
            return {CertificateStatus::residual_found,
                    "surviving cross support " + format_vertex_set(m) + " has degree >= 3"};
        int row = -1, col = -1;
        for (size_t k = 0; k < r.active_a.size(); ++k)
            if (m & vertex_bit(r.active_a[k])) row = static_cast<int>(k);
        for (size_t l = 0; l < r.active_b.size(); ++l)
            if (m & vertex_bit(r.active_b[l])) col = static_cast<int>(l);
        observed.set(row, col, true);
    }
    if (observed != c.core)
        return {CertificateStatus::core_mismatch,
                "restricted phase exposes a different bilinear core"};
    const int t = rank_f2(c.core);
    if (t != c.core_rank)
        return {CertificateStatus::rank_mismatch, "core rank is " + std::to_string(t) +
                                                      ", certificate claims " +
                                                      std::to_string(c.core_rank)};
    if (c.bound != (std::uint64_t{1} << t))
        return {CertificateStatus::rank_mismatch, "bound does not equal 2^rank"};
    return {CertificateStatus::ok, ""};
}

bool verify_certificate(const Hypergraph& g, const Cut& cut, const CoreCertificate& c) {
    return check_certificate(g, cut, c).ok();
}

}  // namespace hypercut
