#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "hypercut/certificate.hpp"
#include "hypercut/hypergraph.hpp"

namespace hypercut {

// A hypergraph together with the cut it is studied across.
struct Instance {
    Hypergraph graph;
    Cut cut;
};

// Line-oriented instance format with 1-based vertex labels:
//
//   # optional comments and blank lines
//   n 9
//   edge 1 2 3
//   edge 4 5 6
//   cut A 1 4 7
//   cut B 2 3 5 6 8 9
//
// `n` must precede every edge/cut line; both cut sides are required, must be
// nonempty, and together must list every vertex exactly once. Violations
// raise ParseError with the offending line number.
Instance parse_instance_text(const std::string& text,
                             const std::string& source_name = "<string>");
Instance load_instance_file(const std::string& path);
std::string format_instance_text(const Instance& instance, const std::string& comment = "");

// Content digest of the semantic instance (vertex count, edge multiset, cut
// orders); whitespace and comments do not contribute. "fnv1a64:" + 16 hex.
std::string instance_digest(const Instance& instance);

enum class CutOrientation { as_given, reversed };

// JSON certificate document with 1-based labels; self-contained: carries the
// restriction, the core matrix, its rank, the bound, the instance digest and
// the tool version, so it can be rechecked without any search state.
struct CertificateDocument {
    std::string instance_hash;
    CutOrientation orientation = CutOrientation::as_given;
    std::vector<int> active_a;                      // 1-based
    std::vector<int> active_b;                      // 1-based
    std::vector<std::pair<int, int>> fixed_a;       // (1-based vertex, bit)
    std::vector<std::pair<int, int>> fixed_b;
    std::vector<std::string> core_rows;             // e.g. {"10", "01"}
    int core_rank = 0;
    std::uint64_t bound = 1;
    bool rectangular = false;
    std::string tool_version;
};

CertificateDocument make_certificate_document(const Instance& instance, const CoreCertificate& c,
                                              CutOrientation orientation = CutOrientation::as_given);
std::string certificate_document_to_json(const CertificateDocument& doc);
CertificateDocument certificate_document_from_json(const std::string& text,
                                                   const std::string& source_name = "<string>");

// Reconstructs the in-memory certificate (0-based). Structural problems,
// out-of-range labels included, raise ParseError.
CoreCertificate certificate_from_document(const CertificateDocument& doc);

enum class DocumentStatus {
    ok,
    malformed,
    hash_mismatch,
    residual_found,
    core_mismatch,
    rank_mismatch,
};

const char* to_string(DocumentStatus status);

struct DocumentCheck {
    DocumentStatus status = DocumentStatus::ok;
    std::string reason;

    bool ok() const { return status == DocumentStatus::ok; }
};

// Full document verification: digest match, structural validity, and the
// independent certificate recheck against the instance.
DocumentCheck verify_certificate_document(const Instance& instance,
                                          const CertificateDocument& doc);

// Planted family of `count` disjoint bridges: block k couples one A-vertex to
// `block_size` consecutive B-vertices through a single hyperedge.
Instance make_bridge_instance(int count, int block_size);

}  // namespace hypercut
