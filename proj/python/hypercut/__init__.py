"""Exact bipartite Schmidt ranks and rank certificates for qubit hypergraph states."""

from hypercut._core import (  # noqa: F401
    AnfPolynomial,
    BridgeBlock,
    CertificateDocument,
    CoreCertificate,
    Cut,
    CutOrientation,
    F2Matrix,
    Hypergraph,
    Instance,
    OracleLimits,
    ParseError,
    PartialAssignment,
    PhaseDecomposition,
    ReducedSupportSet,
    ResourceLimitError,
    Restriction,
    SearchOptions,
    SignMatrix,
    __version__,
    bilinear_slice,
    bridge_blocks,
    build_coefficient_matrix,
    build_sign_matrix,
    canonical_restriction,
    certificate_document_from_json,
    certificate_document_to_json,
    check_bridge_conditions,
    check_certificate,
    core_matrix,
    cross_edges,
    cut_decompose,
    format_instance_text,
    instance_digest,
    load_instance_file,
    make_bridge_instance,
    make_certificate_document,
    odd_reduced_supports,
    parse_instance_text,
    phase_polynomial,
    rank_f2,
    real_rank_exact,
    residual_free,
    restricted_submatrix,
    schmidt_rank,
    search_and_verify,
    select_disjoint_blocks,
    verify_certificate,
    verify_certificate_document,
)
