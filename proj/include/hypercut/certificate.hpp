#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "hypercut/anf.hpp"
#include "hypercut/f2_matrix.hpp"
#include "hypercut/hypergraph.hpp"

namespace hypercut {

// Active index sets on each side plus fixed bits for everything else. The
// active orders define the rows/columns of the core matrix. `fixed_a` must
// cover exactly A minus the active A-vertices, `fixed_b` likewise on B.
struct Restriction {
    std::vector<int> active_a;
    std::vector<int> active_b;
    PartialAssignment fixed_a;
    PartialAssignment fixed_b;

    VertexSet active_a_set() const;
    VertexSet active_b_set() const;
    PartialAssignment combined_fixing() const { return fixed_a.merged_with(fixed_b); }

    bool operator==(const Restriction&) const = default;
};

// Self-contained witness that the Schmidt rank across the cut is at least
// `bound` = 2^core_rank: under the restriction, the surviving cross phase on
// the active variables is bilinear with incidence matrix `core`.
struct CoreCertificate {
    Restriction restriction;
    F2Matrix core;       // |active_a| x |active_b|
    int core_rank = 0;   // rank_f2(core)
    std::uint64_t bound = 1;  // 2^core_rank

    bool operator==(const CoreCertificate&) const = default;
};

// Supports on the active variables that survive a restriction with odd
// parity. The empty support (every member fixed to 1) may be present; it is
// a constant and carries no rank information.
struct ReducedSupportSet {
    std::set<VertexSet> supports;

    bool operator==(const ReducedSupportSet&) const = default;
};

// Applies the restriction to each cross edge: an edge touching a 0-fixed
// vertex drops, the rest reduce to their active part; supports occurring an
// even number of times cancel. Throws if the restriction does not cover the
// cut's non-active vertices exactly.
ReducedSupportSet odd_reduced_supports(const std::vector<VertexSet>& cross, const Restriction& r,
                                       const Cut& cut);

// True iff no support of size >= 3 touches both active sides. Supports lying
// entirely inside one side are local phases and are allowed.
bool residual_free(const ReducedSupportSet& s, VertexSet active_a, VertexSet active_b);

// Incidence matrix of the surviving bilinear supports {a_k, b_l}. Requires a
// residual-free support set.
F2Matrix core_matrix(const ReducedSupportSet& s, const std::vector<int>& active_a,
                     const std::vector<int>& active_b);

struct SearchOptions {
    std::uint64_t seed = 0;
    int restarts = 16;  // extra randomized greedy passes per target size
};

// Greedy disjoint packing: blocks sorted by B-support size then A-vertex,
// scanned with conflicts skipped; randomized restarts reshuffle the scan
// order. Returns r blocks with distinct A-vertices and pairwise disjoint
// B-supports, in selection order, or nothing.
std::optional<std::vector<BridgeBlock>> select_disjoint_blocks(
    const std::vector<BridgeBlock>& blocks, int r, const SearchOptions& options = {});

// The restriction that linearizes each selected block: active A-vertices are
// the block vertices, the representative of each B-support is its smallest
// vertex, the rest of each support is fixed to 1, everything else to 0.
Restriction canonical_restriction(const std::vector<BridgeBlock>& blocks, const Cut& cut);

// Sufficient packing test on the cross edges: (1) distinct A-vertices and
// pairwise disjoint B-supports, (2) no cross edge meets two distinct blocks,
// (3) within each block the only cross edge supported inside it, after mod-2
// cancellation of equal supports, is the block's own edge. Only edges meeting
// both sides of the cut participate: a B-local edge inside a block's support
// is not a cross edge and never enters the third condition. When this passes,
// the canonical restriction exposes an identity core of full size.
bool check_bridge_conditions(const std::vector<BridgeBlock>& blocks,
                             const std::vector<VertexSet>& cross);

// Searches target sizes from r_max down to 1; per size, tries the
// deterministic greedy selection and then seeded randomized restarts, and
// returns the first candidate whose reduced supports are residual-free.
// Deterministic for a fixed seed.
std::optional<CoreCertificate> search_and_verify(const Hypergraph& g, const Cut& cut, int r_max,
                                                 const SearchOptions& options = {});

enum class CertificateStatus {
    ok,
    malformed,        // shapes, ranges, or coverage are inconsistent
    residual_found,   // a cross support of degree >= 3 survives on the active set
    core_mismatch,    // recomputed bilinear core differs from the claimed one
    rank_mismatch,    // claimed rank/bound do not match the core matrix
};

const char* to_string(CertificateStatus status);

struct CertificateCheck {
    CertificateStatus status = CertificateStatus::ok;
    std::string detail;

    bool ok() const { return status == CertificateStatus::ok; }
};

// Independent recheck of a certificate: restricts the cross phase
// symbolically, requires the residual-free decomposition, and compares the
// exposed bilinear matrix and its rank against the claim. Accepts arbitrary
// fixed bits, not only canonical ones, and rectangular active sets.
CertificateCheck check_certificate(const Hypergraph& g, const Cut& cut,
                                   const CoreCertificate& c);
bool verify_certificate(const Hypergraph& g, const Cut& cut, const CoreCertificate& c);

}  // namespace hypercut
