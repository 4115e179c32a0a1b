#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <vector>

#include "hypercut/certificate.hpp"
#include "hypercut/errors.hpp"
#include "hypercut/f2_matrix.hpp"
#include "hypercut/instance_io.hpp"
#include "hypercut/rank_oracle.hpp"
#include "hypercut/version.hpp"

namespace py = pybind11;
using namespace hypercut;

namespace {

VertexSet mask_from_list(const std::vector<int>& vertices) {
    return vertex_set_of(kMaxVertices, vertices);
}

std::vector<std::vector<int>> edges_as_lists(const std::vector<VertexSet>& edges) {
    std::vector<std::vector<int>> out;
    out.reserve(edges.size());
    for (VertexSet e : edges) out.push_back(vertices_of(e));
    return out;
}

VertexSet point_from_bits(const AnfPolynomial& f, const std::vector<int>& bits) {
    if (static_cast<int>(bits.size()) != f.variable_count())
        throw std::invalid_argument("assignment must list all " +
                                    std::to_string(f.variable_count()) + " variables, got " +
                                    std::to_string(bits.size()));
    VertexSet x = 0;
    for (size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] != 0 && bits[i] != 1)
            throw std::invalid_argument("assignment bits must be 0 or 1");
        if (bits[i]) x |= vertex_bit(static_cast<int>(i));
    }
    return x;
}

PartialAssignment assignment_from_dict(const std::map<int, int>& fixes) {
    PartialAssignment p;
    for (auto [v, bit] : fixes) {
        if (bit != 0 && bit != 1) throw std::invalid_argument("fixed bits must be 0 or 1");
        p.fix(v, bit == 1);
    }
    return p;
}

std::map<int, int> assignment_to_dict(const PartialAssignment& p) {
    std::map<int, int> out;
    for (int v : vertices_of(p.domain())) out[v] = p.value(v) ? 1 : 0;
    return out;
}

std::vector<std::string> matrix_rows(const F2Matrix& m) {
    std::vector<std::string> rows;
    for (int r = 0; r < m.rows(); ++r) {
        std::string row;
        for (int c = 0; c < m.cols(); ++c) row += m.at(r, c) ? '1' : '0';
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact bipartite Schmidt ranks and rank certificates for qubit hypergraph states";
    m.attr("__version__") = kVersion;

    py::register_exception<ResourceLimitError>(m, "ResourceLimitError", PyExc_RuntimeError);
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

    py::class_<PartialAssignment>(m, "PartialAssignment")
        .def(py::init([](const std::map<int, int>& fixes) { return assignment_from_dict(fixes); }),
             py::arg("fixes") = std::map<int, int>{})
        .def("fix", [](PartialAssignment& p, int v, int bit) { p.fix(v, bit == 1); })
        .def("is_fixed", &PartialAssignment::is_fixed)
        .def("value", [](const PartialAssignment& p, int v) { return p.value(v) ? 1 : 0; })
        .def("as_dict", &assignment_to_dict)
        .def("__repr__", [](const PartialAssignment& p) {
            std::string out = "PartialAssignment({";
            bool first = true;
            for (auto [v, bit] : assignment_to_dict(p)) {
                if (!first) out += ", ";
                out += std::to_string(v) + ": " + std::to_string(bit);
                first = false;
            }
            return out + "})";
        });

    py::class_<AnfPolynomial>(m, "AnfPolynomial")
        .def(py::init<int>(), py::arg("variable_count"))
        .def_static(
            "from_hyperedges",
            [](int n, const std::vector<std::vector<int>>& edges) {
                return phase_polynomial(Hypergraph::from_vertex_lists(n, edges));
            },
            py::arg("variable_count"), py::arg("edges"))
        .def_static(
            "from_truth_table",
            [](int n, const std::vector<int>& table) {
                std::vector<std::uint8_t> bits;
                for (int b : table) {
                    if (b != 0 && b != 1)
                        throw std::invalid_argument("truth table entries must be 0 or 1");
                    bits.push_back(static_cast<std::uint8_t>(b));
                }
                return AnfPolynomial::from_truth_table(n, bits);
            },
            py::arg("variable_count"), py::arg("table"))
        .def_property_readonly("variable_count", &AnfPolynomial::variable_count)
        .def("monomials",
             [](const AnfPolynomial& f) {
                 std::vector<std::vector<int>> out;
                 for (VertexSet s : f.monomials()) out.push_back(vertices_of(s));
                 return out;
             })
        .def("toggle",
             [](AnfPolynomial& f, const std::vector<int>& monomial) {
                 f.toggle(mask_from_list(monomial));
             })
        .def("evaluate",
             [](const AnfPolynomial& f, const std::vector<int>& bits) {
                 return f.evaluate(point_from_bits(f, bits)) ? 1 : 0;
             })
        .def("derivative", &AnfPolynomial::derivative, py::arg("variable"))
        .def("restricted", &AnfPolynomial::restricted, py::arg("assignment"))
        .def("truth_table",
             [](const AnfPolynomial& f) {
                 std::vector<int> out;
                 for (std::uint8_t b : f.truth_table()) out.push_back(b);
                 return out;
             })
        .def("degree", &AnfPolynomial::degree)
        .def("is_zero", &AnfPolynomial::is_zero)
        .def("term_count", &AnfPolynomial::term_count)
        .def("__xor__",
             [](const AnfPolynomial& a, const AnfPolynomial& b) { return a ^ b; })
        .def(py::self == py::self)
        .def("__repr__", [](const AnfPolynomial& f) {
            return "AnfPolynomial(n=" + std::to_string(f.variable_count()) +
                   ", terms=" + std::to_string(f.term_count()) + ")";
        });

    py::class_<Hypergraph>(m, "Hypergraph")
        .def(py::init(
                 [](int n, const std::vector<std::vector<int>>& edges) {
                     return Hypergraph::from_vertex_lists(n, edges);
                 }),
             py::arg("vertex_count"), py::arg("edges"))
        .def_property_readonly("vertex_count", &Hypergraph::vertex_count)
        .def("edges", [](const Hypergraph& g) { return edges_as_lists(g.edges()); })
        .def("__repr__", [](const Hypergraph& g) {
            return "Hypergraph(n=" + std::to_string(g.vertex_count()) +
                   ", edges=" + std::to_string(g.edges().size()) + ")";
        });

    py::class_<Cut>(m, "Cut")
        .def(py::init<int, std::vector<int>, std::vector<int>>(), py::arg("vertex_count"),
             py::arg("a_vertices"), py::arg("b_vertices"))
        .def_property_readonly("a_vertices", &Cut::a_vertices)
        .def_property_readonly("b_vertices", &Cut::b_vertices)
        .def("reversed", &Cut::reversed)
        .def("__repr__", [](const Cut& c) {
            return "Cut(|A|=" + std::to_string(c.a_size()) +
                   ", |B|=" + std::to_string(c.b_size()) + ")";
        });

    m.def("phase_polynomial", &phase_polynomial, py::arg("hypergraph"));

    py::class_<PhaseDecomposition>(m, "PhaseDecomposition")
        .def_readonly("a_local", &PhaseDecomposition::a_local)
        .def_readonly("b_local", &PhaseDecomposition::b_local)
        .def_readonly("cross", &PhaseDecomposition::cross);

    m.def("cut_decompose", &cut_decompose, py::arg("polynomial"), py::arg("cut"));

    py::class_<F2Matrix>(m, "F2Matrix")
        .def(py::init<int, int>(), py::arg("rows"), py::arg("cols"))
        .def_static("identity", &F2Matrix::identity)
        .def_property_readonly("rows", &F2Matrix::rows)
        .def_property_readonly("cols", &F2Matrix::cols)
        .def("at", &F2Matrix::at)
        .def("set", &F2Matrix::set)
        .def("row_strings", &matrix_rows)
        .def("is_zero", &F2Matrix::is_zero)
        .def(py::self == py::self)
        .def("__repr__", [](const F2Matrix& mat) {
            return "F2Matrix(" + std::to_string(mat.rows()) + "x" + std::to_string(mat.cols()) +
                   ")";
        });

    m.def("rank_f2", &rank_f2, py::arg("matrix"));
    m.def("bilinear_slice", &bilinear_slice, py::arg("cross"), py::arg("cut"));

    py::class_<OracleLimits>(m, "OracleLimits")
        .def(py::init<>())
        .def(py::init([](int side, int total) {
                 return OracleLimits{side, total};
             }),
             py::arg("max_side_bits"), py::arg("max_total_bits"))
        .def_readwrite("max_side_bits", &OracleLimits::max_side_bits)
        .def_readwrite("max_total_bits", &OracleLimits::max_total_bits);

    py::class_<SignMatrix>(m, "SignMatrix")
        .def_property_readonly("row_bits", &SignMatrix::row_bits)
        .def_property_readonly("col_bits", &SignMatrix::col_bits)
        .def_property_readonly("rows", &SignMatrix::rows)
        .def_property_readonly("cols", &SignMatrix::cols)
        .def("sign", &SignMatrix::sign, py::arg("row"), py::arg("col"))
        .def("to_string", &SignMatrix::to_string)
        .def(py::self == py::self);

    m.def("build_sign_matrix", &build_sign_matrix, py::arg("cross"), py::arg("cut"),
          py::arg("limits") = OracleLimits{});
    m.def("build_coefficient_matrix", &build_coefficient_matrix, py::arg("phase"), py::arg("cut"),
          py::arg("limits") = OracleLimits{});
    m.def("real_rank_exact", &real_rank_exact, py::arg("matrix"));
    m.def("schmidt_rank", &schmidt_rank, py::arg("hypergraph"), py::arg("cut"),
          py::arg("limits") = OracleLimits{});
    m.def(
        "restricted_submatrix",
        [](const SignMatrix& mat, const std::vector<std::pair<int, int>>& row_fixes,
           const std::vector<std::pair<int, int>>& col_fixes) {
            const auto conv = [](const std::vector<std::pair<int, int>>& fixes) {
                std::vector<BitFix> out;
                for (auto [pos, bit] : fixes) out.push_back(BitFix{pos, bit == 1});
                return out;
            };
            return restricted_submatrix(mat, conv(row_fixes), conv(col_fixes));
        },
        py::arg("matrix"), py::arg("row_fixes"), py::arg("col_fixes"));

    py::class_<BridgeBlock>(m, "BridgeBlock")
        .def(py::init([](int a_vertex, const std::vector<int>& b_support) {
                 return BridgeBlock{a_vertex, mask_from_list(b_support)};
             }),
             py::arg("a_vertex"), py::arg("b_support"))
        .def_readonly("a_vertex", &BridgeBlock::a_vertex)
        .def_property_readonly("b_support",
                               [](const BridgeBlock& b) { return vertices_of(b.b_support); })
        .def(py::self == py::self)
        .def("__repr__", [](const BridgeBlock& b) {
            return "BridgeBlock(" + std::to_string(b.a_vertex) + ", " +
                   format_vertex_set(b.b_support) + ")";
        });

    m.def(
        "cross_edges",
        [](const Hypergraph& g, const Cut& cut) { return edges_as_lists(cross_edges(g, cut)); },
        py::arg("hypergraph"), py::arg("cut"));
    m.def(
        "bridge_blocks",
        [](const std::vector<std::vector<int>>& cross, const Cut& cut) {
            std::vector<VertexSet> masks;
            for (const auto& e : cross) masks.push_back(mask_from_list(e));
            return bridge_blocks(masks, cut);
        },
        py::arg("cross"), py::arg("cut"));

    py::class_<Restriction>(m, "Restriction")
        .def(py::init([](const std::vector<int>& active_a, const std::vector<int>& active_b,
                         const std::map<int, int>& fixed_a, const std::map<int, int>& fixed_b) {
                 Restriction r;
                 r.active_a = active_a;
                 r.active_b = active_b;
                 r.fixed_a = assignment_from_dict(fixed_a);
                 r.fixed_b = assignment_from_dict(fixed_b);
                 return r;
             }),
             py::arg("active_a"), py::arg("active_b"), py::arg("fixed_a") = std::map<int, int>{},
             py::arg("fixed_b") = std::map<int, int>{})
        .def_readonly("active_a", &Restriction::active_a)
        .def_readonly("active_b", &Restriction::active_b)
        .def_property_readonly("fixed_a",
                               [](const Restriction& r) { return assignment_to_dict(r.fixed_a); })
        .def_property_readonly("fixed_b",
                               [](const Restriction& r) { return assignment_to_dict(r.fixed_b); })
        .def(py::self == py::self);

    py::class_<CoreCertificate>(m, "CoreCertificate")
        .def_readonly("restriction", &CoreCertificate::restriction)
        .def_readonly("core", &CoreCertificate::core)
        .def_readonly("core_rank", &CoreCertificate::core_rank)
        .def_readonly("bound", &CoreCertificate::bound)
        .def(py::self == py::self)
        .def("__repr__", [](const CoreCertificate& c) {
            return "CoreCertificate(t=" + std::to_string(c.core_rank) +
                   ", bound=" + std::to_string(c.bound) + ")";
        });

    py::class_<ReducedSupportSet>(m, "ReducedSupportSet")
        .def("supports",
             [](const ReducedSupportSet& s) {
                 std::vector<std::vector<int>> out;
                 for (VertexSet supp : s.supports) out.push_back(vertices_of(supp));
                 return out;
             })
        .def(py::self == py::self);

    m.def(
        "odd_reduced_supports",
        [](const std::vector<std::vector<int>>& cross, const Restriction& r, const Cut& cut) {
            std::vector<VertexSet> masks;
            for (const auto& e : cross) masks.push_back(mask_from_list(e));
            return odd_reduced_supports(masks, r, cut);
        },
        py::arg("cross"), py::arg("restriction"), py::arg("cut"));
    m.def(
        "residual_free",
        [](const ReducedSupportSet& s, const std::vector<int>& active_a,
           const std::vector<int>& active_b) {
            return residual_free(s, mask_from_list(active_a), mask_from_list(active_b));
        },
        py::arg("supports"), py::arg("active_a"), py::arg("active_b"));
    m.def("core_matrix", &core_matrix, py::arg("supports"), py::arg("active_a"),
          py::arg("active_b"));

    py::class_<SearchOptions>(m, "SearchOptions")
        .def(py::init<>())
        .def(py::init([](std::uint64_t seed, int restarts) {
                 return SearchOptions{seed, restarts};
             }),
             py::arg("seed"), py::arg("restarts") = 16)
        .def_readwrite("seed", &SearchOptions::seed)
        .def_readwrite("restarts", &SearchOptions::restarts);

    m.def("select_disjoint_blocks", &select_disjoint_blocks, py::arg("blocks"), py::arg("r"),
          py::arg("options") = SearchOptions{});
    m.def("canonical_restriction", &canonical_restriction, py::arg("blocks"), py::arg("cut"));
    m.def(
        "check_bridge_conditions",
        [](const std::vector<BridgeBlock>& blocks, const std::vector<std::vector<int>>& cross) {
            std::vector<VertexSet> masks;
            for (const auto& e : cross) masks.push_back(mask_from_list(e));
            return check_bridge_conditions(blocks, masks);
        },
        py::arg("blocks"), py::arg("cross"));
    m.def("search_and_verify", &search_and_verify, py::arg("hypergraph"), py::arg("cut"),
          py::arg("r_max"), py::arg("options") = SearchOptions{});
    m.def("verify_certificate", &verify_certificate, py::arg("hypergraph"), py::arg("cut"),
          py::arg("certificate"));
    m.def(
        "check_certificate",
        [](const Hypergraph& g, const Cut& cut, const CoreCertificate& c) {
            const CertificateCheck check = check_certificate(g, cut, c);
            return py::make_tuple(check.ok(), std::string(to_string(check.status)), check.detail);
        },
        py::arg("hypergraph"), py::arg("cut"), py::arg("certificate"));

    py::class_<Instance>(m, "Instance")
        .def(py::init<Hypergraph, Cut>(), py::arg("hypergraph"), py::arg("cut"))
        .def_readonly("graph", &Instance::graph)
        .def_readonly("cut", &Instance::cut);

    m.def("parse_instance_text", &parse_instance_text, py::arg("text"),
          py::arg("source_name") = "<string>");
    m.def("load_instance_file", &load_instance_file, py::arg("path"));
    m.def("format_instance_text", &format_instance_text, py::arg("instance"),
          py::arg("comment") = "");
    m.def("instance_digest", &instance_digest, py::arg("instance"));
    m.def("make_bridge_instance", &make_bridge_instance, py::arg("count"),
          py::arg("block_size") = 2);

    py::enum_<CutOrientation>(m, "CutOrientation")
        .value("AS_GIVEN", CutOrientation::as_given)
        .value("REVERSED", CutOrientation::reversed);

    py::class_<CertificateDocument>(m, "CertificateDocument")
        .def_readonly("instance_hash", &CertificateDocument::instance_hash)
        .def_readonly("orientation", &CertificateDocument::orientation)
        .def_readonly("active_a", &CertificateDocument::active_a)
        .def_readonly("active_b", &CertificateDocument::active_b)
        .def_readonly("core_rows", &CertificateDocument::core_rows)
        .def_readonly("core_rank", &CertificateDocument::core_rank)
        .def_readonly("bound", &CertificateDocument::bound)
        .def_readonly("rectangular", &CertificateDocument::rectangular)
        .def_readonly("tool_version", &CertificateDocument::tool_version);

    m.def("make_certificate_document", &make_certificate_document, py::arg("instance"),
          py::arg("certificate"), py::arg("orientation") = CutOrientation::as_given);
    m.def("certificate_document_to_json", &certificate_document_to_json, py::arg("document"));
    m.def("certificate_document_from_json", &certificate_document_from_json, py::arg("text"),
          py::arg("source_name") = "<string>");
    m.def(
        "verify_certificate_document",
        [](const Instance& instance, const CertificateDocument& doc) {
            const DocumentCheck check = verify_certificate_document(instance, doc);
            return py::make_tuple(check.ok(), std::string(to_string(check.status)), check.reason);
        },
        py::arg("instance"), py::arg("document"));
}
