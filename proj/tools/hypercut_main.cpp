#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "hypercut/certificate.hpp"
#include "hypercut/errors.hpp"
#include "hypercut/f2_matrix.hpp"
#include "hypercut/instance_io.hpp"
#include "hypercut/rank_oracle.hpp"
#include "hypercut/version.hpp"

namespace {

using namespace hypercut;

// Exit codes: 0 success, 2 parse/validation error, 3 resource cap,
// 4 search failure, 5 verification rejection, 1 internal error.
constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitParse = 2;
constexpr int kExitResource = 3;
constexpr int kExitSearchFailed = 4;
constexpr int kExitRejected = 5;

struct DemoInstance {
    const char* name;
    const char* text;
};

constexpr DemoInstance kDemos[] = {
    {"example1",
     "# two independent cross bridges\n"
     "n 4\n"
     "edge 1 3\n"
     "edge 2 4\n"
     "cut A 1 2\n"
     "cut B 3 4\n"},
    {"example2",
     "# a single cross 3-edge\n"
     "n 3\n"
     "edge 1 2 3\n"
     "cut A 1\n"
     "cut B 2 3\n"},
    {"example3",
     "# three disjoint 3-edge bridges\n"
     "n 9\n"
     "edge 1 2 3\n"
     "edge 4 5 6\n"
     "edge 7 8 9\n"
     "cut A 1 4 7\n"
     "cut B 2 3 5 6 8 9\n"},
    {"appendixB",
     "# two bridges plus an interfering cubic cross edge\n"
     "n 4\n"
     "edge 1 3\n"
     "edge 2 4\n"
     "edge 1 2 3\n"
     "cut A 1 2\n"
     "cut B 3 4\n"},
};

std::string join_labels(const std::vector<int>& zero_based) {
    std::ostringstream os;
    for (size_t i = 0; i < zero_based.size(); ++i) {
        if (i) os << ' ';
        os << zero_based[i] + 1;
    }
    return os.str();
}

void print_instance_summary(const Instance& instance, const std::string& source) {
    std::cout << "instance: " << source << " (n=" << instance.graph.vertex_count()
              << ", edges=" << instance.graph.edges().size()
              << ", |A|=" << instance.cut.a_size() << ", |B|=" << instance.cut.b_size() << ")\n";
}

bool is_power_of_two(std::uint64_t x) { return x && (x & (x - 1)) == 0; }

int log2_exact(std::uint64_t x) {
    int k = 0;
    while ((std::uint64_t{1} << k) < x) ++k;
    return k;
}

int cmd_rank(const std::string& path, const OracleLimits& limits) {
    const Instance instance = load_instance_file(path);
    print_instance_summary(instance, path);
    const int rank = schmidt_rank(instance.graph, instance.cut, limits);
    std::cout << "schmidt rank: " << rank << "\n";
    if (is_power_of_two(static_cast<std::uint64_t>(rank)))
        std::cout << "log2 rank: " << log2_exact(static_cast<std::uint64_t>(rank)) << "\n";
    return kExitOk;
}

int cmd_slice(const std::string& path) {
    const Instance instance = load_instance_file(path);
    print_instance_summary(instance, path);
    const PhaseDecomposition parts = cut_decompose(phase_polynomial(instance.graph), instance.cut);
    const F2Matrix slice = bilinear_slice(parts.cross, instance.cut);
    const int k = rank_f2(slice);
    std::cout << "gamma_ab (" << slice.rows() << "x" << slice.cols() << "):\n"
              << slice.to_string() << "\n";
    std::cout << "rank_f2: " << k << "\n";
    const bool purely_bilinear = parts.cross.degree() <= 2;
    if (purely_bilinear)
        std::cout << "cross phase purely bilinear: yes — schmidt rank = 2^" << k << " = "
                  << (std::uint64_t{1} << k) << " (exact)\n";
    else
        std::cout << "cross phase purely bilinear: no — higher-degree cross terms present; "
                     "the bilinear rank is not a reliable predictor, try 'certify'\n";
    return kExitOk;
}

struct CertifyOutcome {
    CoreCertificate certificate;
    CutOrientation orientation = CutOrientation::as_given;
};

std::optional<CertifyOutcome> run_search(const Instance& instance, int r_max,
                                         const SearchOptions& options, bool symmetric) {
    std::optional<CertifyOutcome> best;
    if (auto cert = search_and_verify(instance.graph, instance.cut, r_max, options))
        best = CertifyOutcome{*cert, CutOrientation::as_given};
    if (symmetric) {
        if (auto cert = search_and_verify(instance.graph, instance.cut.reversed(), r_max, options))
            if (!best || cert->core_rank > best->certificate.core_rank)
                best = CertifyOutcome{*cert, CutOrientation::reversed};
    }
    return best;
}

int cmd_certify(const std::string& path, int r_max_flag, const SearchOptions& options,
                bool symmetric, const std::string& out_path, bool to_stdout, bool check_oracle,
                const OracleLimits& limits) {
    const Instance instance = load_instance_file(path);
    std::ostream& report = to_stdout ? std::cerr : std::cout;
    if (!to_stdout) print_instance_summary(instance, path);

    const int r_default = std::min(instance.cut.a_size(), instance.cut.b_size());
    const int r_max = r_max_flag > 0 ? r_max_flag : std::max(1, r_default);
    const auto outcome = run_search(instance, r_max, options, symmetric);
    if (!outcome) {
        std::cerr << "no certificate found (searched block families of size " << r_max
                  << " down to 1)\n";
        return kExitSearchFailed;
    }
    const CoreCertificate& cert = outcome->certificate;
    report << "certificate found" << (outcome->orientation == CutOrientation::reversed
                                          ? " (cut sides swapped)"
                                          : "")
           << ":\n";
    report << "  active A: " << join_labels(cert.restriction.active_a) << "\n";
    report << "  active B: " << join_labels(cert.restriction.active_b) << "\n";
    report << "  gamma_core (" << cert.core.rows() << "x" << cert.core.cols() << "):\n";
    {
        std::istringstream rows(cert.core.to_string());
        std::string row;
        while (std::getline(rows, row)) report << "    " << row << "\n";
    }
    report << "  t = rank_f2(gamma_core) = " << cert.core_rank << "\n";
    report << "  schmidt rank >= 2^" << cert.core_rank << " = " << cert.bound << "\n";

    const CertificateDocument doc =
        make_certificate_document(instance, cert, outcome->orientation);
    if (!out_path.empty()) {
        std::ofstream out(out_path);
        if (!out) {
            std::cerr << "cannot write certificate to " << out_path << "\n";
            return kExitInternal;
        }
        out << certificate_document_to_json(doc);
        report << "certificate written to " << out_path << "\n";
    }
    if (to_stdout) std::cout << certificate_document_to_json(doc);

    if (check_oracle) {
        try {
            const int exact = schmidt_rank(instance.graph, instance.cut, limits);
            report << "oracle: exact schmidt rank = " << exact << "\n";
            if (cert.bound > static_cast<std::uint64_t>(exact)) {
                std::cerr << "soundness violation: bound " << cert.bound
                          << " exceeds the exact rank " << exact << "\n";
                return kExitInternal;
            }
            report << "oracle: bound " << cert.bound << " <= exact rank " << exact
                   << " confirmed\n";
        } catch (const ResourceLimitError& e) {
            report << "oracle skipped: " << e.what() << "\n";
        }
    }
    return kExitOk;
}

int cmd_verify(const std::string& instance_path, const std::string& certificate_path) {
    const Instance instance = load_instance_file(instance_path);
    std::ifstream in(certificate_path);
    if (!in) {
        std::cerr << certificate_path << ": cannot open file\n";
        return kExitParse;
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    const CertificateDocument doc =
        certificate_document_from_json(buffer.str(), certificate_path);
    const DocumentCheck check = verify_certificate_document(instance, doc);
    if (!check.ok()) {
        std::cerr << "verification failed: " << to_string(check.status)
                  << (check.reason.empty() ? "" : " — " + check.reason) << "\n";
        return kExitRejected;
    }
    std::cout << "certificate accepted: schmidt rank >= " << doc.bound << " (t = "
              << doc.core_rank << ")\n";
    return kExitOk;
}

int check_line(const std::string& label, std::uint64_t expected, std::uint64_t computed) {
    const bool ok = expected == computed;
    std::cout << "  " << label << ": expected " << expected << ", computed " << computed
              << (ok ? "" : "  <-- MISMATCH") << "\n";
    return ok ? 0 : 1;
}

int cmd_demo(const std::string& name) {
    const DemoInstance* demo = nullptr;
    for (const auto& d : kDemos)
        if (name == d.name) demo = &d;
    if (!demo) {
        std::cerr << "unknown demo '" << name << "'; available:";
        for (const auto& d : kDemos) std::cerr << ' ' << d.name;
        std::cerr << "\n";
        return kExitParse;
    }
    const Instance instance = parse_instance_text(demo->text, name);
    std::cout << "demo " << name << "\n" << demo->text;
    const PhaseDecomposition parts = cut_decompose(phase_polynomial(instance.graph), instance.cut);
    const F2Matrix slice = bilinear_slice(parts.cross, instance.cut);
    const int slice_rank = rank_f2(slice);
    const int exact = schmidt_rank(instance.graph, instance.cut);

    int failures = 0;
    if (name == std::string("example1")) {
        failures += check_line("rank_f2(gamma_ab)", 2, static_cast<std::uint64_t>(slice_rank));
        failures += check_line("schmidt rank (rank rule exact)", 4,
                               static_cast<std::uint64_t>(exact));
    } else if (name == std::string("example2")) {
        std::cout << "  gamma_ab is zero: " << (slice.is_zero() ? "yes" : "NO") << "\n";
        failures += slice.is_zero() ? 0 : 1;
        failures += check_line("rank_f2(gamma_ab)", 0, static_cast<std::uint64_t>(slice_rank));
        failures += check_line("schmidt rank", 2, static_cast<std::uint64_t>(exact));
    } else if (name == std::string("example3")) {
        std::cout << "  gamma_ab is zero: " << (slice.is_zero() ? "yes" : "NO") << "\n";
        failures += slice.is_zero() ? 0 : 1;
        auto cert = search_and_verify(instance.graph, instance.cut, 3);
        if (!cert) {
            std::cout << "  certificate: NOT FOUND (expected t=3)\n";
            ++failures;
        } else {
            failures += check_line("certificate t", 3,
                                   static_cast<std::uint64_t>(cert->core_rank));
            failures += check_line("certificate bound", 8, cert->bound);
            std::cout << "  gamma_core == identity: "
                      << (cert->core == F2Matrix::identity(3) ? "yes" : "NO") << "\n";
            failures += cert->core == F2Matrix::identity(3) ? 0 : 1;
        }
        failures += check_line("exact schmidt rank", 8, static_cast<std::uint64_t>(exact));
    } else {  // appendixB
        const SignMatrix r = build_sign_matrix(parts.cross, instance.cut);
        std::cout << "  sign matrix R:\n";
        std::istringstream rows(r.to_string());
        std::string row;
        while (std::getline(rows, row)) std::cout << "    " << row << "\n";
        failures += check_line("rank_f2(gamma_ab)", 2, static_cast<std::uint64_t>(slice_rank));
        std::cout << "  bilinear prediction would be 2^" << slice_rank << " = "
                  << (1 << slice_rank) << "\n";
        failures += check_line("exact schmidt rank (drops below prediction)", 3,
                               static_cast<std::uint64_t>(exact));
    }
    std::cout << (failures ? "demo FAILED\n" : "demo OK\n");
    return failures ? kExitInternal : kExitOk;
}

int cmd_gen(int bridges, int block_size, const std::string& out_path) {
    const Instance instance = make_bridge_instance(bridges, block_size);
    std::ostringstream comment;
    comment << "planted family: " << bridges << " disjoint bridge(s), block size " << block_size;
    const std::string text = format_instance_text(instance, comment.str());
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path);
        if (!out) {
            std::cerr << "cannot write instance to " << out_path << "\n";
            return kExitInternal;
        }
        out << text;
        std::cout << "instance written to " << out_path << "\n";
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact bipartite Schmidt ranks and rank certificates for qubit hypergraph states"};
    app.set_version_flag("--version", std::string("hypercut ") + hypercut::kVersion);
    app.require_subcommand(1);

    OracleLimits limits;
    const auto add_limit_flags = [&](CLI::App* cmd) {
        cmd->add_option("--max-side-bits", limits.max_side_bits,
                        "Cap on each side's qubit count for sign matrices")
            ->envname("HYPERCUT_MAX_SIDE_BITS")
            ->capture_default_str();
        cmd->add_option("--max-total-bits", limits.max_total_bits,
                        "Cap on the total qubit count for sign matrices")
            ->envname("HYPERCUT_MAX_TOTAL_BITS")
            ->capture_default_str();
    };

    std::string instance_path, certificate_path, out_path, demo_name;
    int r_max = 0;
    SearchOptions options;
    bool symmetric = false, to_stdout = false, check_oracle = false;
    int gen_bridges = 0, gen_block_size = 2;

    CLI::App* rank = app.add_subcommand("rank", "Exact Schmidt rank across the cut");
    rank->add_option("instance", instance_path, "Instance file")->required();
    add_limit_flags(rank);

    CLI::App* slice = app.add_subcommand("slice", "Bilinear slice and its F2 rank");
    slice->add_option("instance", instance_path, "Instance file")->required();

    CLI::App* certify =
        app.add_subcommand("certify", "Search for a residual-free bilinear core certificate");
    certify->add_option("instance", instance_path, "Instance file")->required();
    certify->add_option("--r-max", r_max, "Largest block family to try (default min(|A|,|B|))")
        ->envname("HYPERCUT_R_MAX")
        ->check(CLI::Range(1, 64));
    certify->add_option("--seed", options.seed, "Seed for randomized restarts")
        ->envname("HYPERCUT_SEED")
        ->capture_default_str();
    certify->add_option("--restarts", options.restarts,
                        "Randomized greedy restarts per family size")
        ->envname("HYPERCUT_RESTARTS")
        ->check(CLI::Range(0, 1 << 20))
        ->capture_default_str();
    certify->add_flag("--symmetric", symmetric,
                      "Also search with the cut reversed and keep the better bound");
    certify->add_option("-o,--output", out_path, "Write the certificate document to this path");
    certify->add_flag("--stdout", to_stdout,
                      "Print the certificate document on standard output (report goes to stderr)");
    certify->add_flag("--check-oracle", check_oracle,
                      "Cross-check the bound against the exact rank when within the cap");
    add_limit_flags(certify);

    CLI::App* verify = app.add_subcommand("verify", "Recheck a certificate document");
    verify->add_option("instance", instance_path, "Instance file")->required();
    verify->add_option("certificate", certificate_path, "Certificate JSON document")->required();

    CLI::App* demo = app.add_subcommand("demo", "Run a bundled instance with known answers");
    demo->add_option("name", demo_name, "example1 | example2 | example3 | appendixB")->required();

    CLI::App* gen = app.add_subcommand("gen", "Generate a planted disjoint-bridge instance");
    gen->add_option("--bridges", gen_bridges, "Number of disjoint bridges")
        ->required()
        ->check(CLI::Range(1, 64));
    gen->add_option("--block-size", gen_block_size, "B-side vertices per bridge")
        ->check(CLI::Range(1, 64))
        ->capture_default_str();
    gen->add_option("-o,--output", out_path, "Write the instance here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitParse;
    }

    try {
        if (rank->parsed()) return cmd_rank(instance_path, limits);
        if (slice->parsed()) return cmd_slice(instance_path);
        if (certify->parsed())
            return cmd_certify(instance_path, r_max, options, symmetric, out_path, to_stdout,
                               check_oracle, limits);
        if (verify->parsed()) return cmd_verify(instance_path, certificate_path);
        if (demo->parsed()) return cmd_demo(demo_name);
        if (gen->parsed()) return cmd_gen(gen_bridges, gen_block_size, out_path);
    } catch (const hypercut::ParseError& e) {
        std::cerr << e.what() << "\n";
        return kExitParse;
    } catch (const hypercut::ResourceLimitError& e) {
        std::cerr << e.what() << "\n";
        return kExitResource;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitInternal;
}
