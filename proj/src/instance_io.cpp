#include "hypercut/instance_io.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <nlohmann/json.hpp>

#include "hypercut/errors.hpp"
#include "hypercut/version.hpp"

namespace hypercut {

namespace {

using json = nlohmann::ordered_json;

std::vector<int> parse_label_list(const std::vector<std::string>& tokens, size_t first,
                                  const std::string& source, int line) {
    std::vector<int> out;
    for (size_t i = first; i < tokens.size(); ++i) {
        int value = 0;
        try {
            size_t used = 0;
            value = std::stoi(tokens[i], &used);
            if (used != tokens[i].size()) throw std::invalid_argument("");
        } catch (const std::exception&) {
            throw ParseError(source, line, "expected a vertex label, got '" + tokens[i] + "'");
        }
        if (value < 1)
            throw ParseError(source, line, "vertex labels are 1-based, got " + tokens[i]);
        out.push_back(value - 1);
    }
    return out;
}

std::vector<std::string> split_tokens(const std::string& line) {
    std::istringstream is(line);
    std::vector<std::string> tokens;
    std::string tok;
    while (is >> tok) tokens.push_back(tok);
    return tokens;
}

}  // namespace

Instance parse_instance_text(const std::string& text, const std::string& source_name) {
    int n = -1;
    int n_line = 0;
    std::vector<std::vector<int>> edges;
    std::vector<int> side_a, side_b;
    bool have_a = false, have_b = false;

    std::istringstream is(text);
    std::string raw;
    int line_no = 0;
    while (std::getline(is, raw)) {
        ++line_no;
        const auto tokens = split_tokens(raw);
        if (tokens.empty() || tokens[0][0] == '#') continue;
        const std::string& key = tokens[0];
        if (key == "n") {
            if (n >= 0)
                throw ParseError(source_name, line_no,
                                 "duplicate 'n' line (first on line " + std::to_string(n_line) + ")");
            if (tokens.size() != 2)
                throw ParseError(source_name, line_no, "'n' takes exactly one value");
            try {
                n = std::stoi(tokens[1]);
            } catch (const std::exception&) {
                throw ParseError(source_name, line_no, "invalid vertex count '" + tokens[1] + "'");
            }
            if (n < 1 || n > kMaxVertices)
                throw ParseError(source_name, line_no,
                                 "vertex count must be in [1, 64], got " + tokens[1]);
            n_line = line_no;
        } else if (key == "edge") {
            if (n < 0) throw ParseError(source_name, line_no, "'edge' before 'n'");
            auto vertices = parse_label_list(tokens, 1, source_name, line_no);
            for (int v : vertices)
                if (v >= n)
                    throw ParseError(source_name, line_no,
                                     "vertex " + std::to_string(v + 1) + " exceeds n=" +
                                         std::to_string(n));
            VertexSet seen = 0;
            for (int v : vertices) {
                if (seen & vertex_bit(v))
                    throw ParseError(source_name, line_no,
                                     "vertex " + std::to_string(v + 1) + " repeated in edge");
                seen |= vertex_bit(v);
            }
            edges.push_back(std::move(vertices));
        } else if (key == "cut") {
            if (n < 0) throw ParseError(source_name, line_no, "'cut' before 'n'");
            if (tokens.size() < 2 || (tokens[1] != "A" && tokens[1] != "B"))
                throw ParseError(source_name, line_no, "expected 'cut A ...' or 'cut B ...'");
            auto vertices = parse_label_list(tokens, 2, source_name, line_no);
            for (int v : vertices)
                if (v >= n)
                    throw ParseError(source_name, line_no,
                                     "vertex " + std::to_string(v + 1) + " exceeds n=" +
                                         std::to_string(n));
            if (tokens[1] == "A") {
                if (have_a) throw ParseError(source_name, line_no, "duplicate 'cut A' line");
                side_a = std::move(vertices);
                have_a = true;
            } else {
                if (have_b) throw ParseError(source_name, line_no, "duplicate 'cut B' line");
                side_b = std::move(vertices);
                have_b = true;
            }
        } else {
            throw ParseError(source_name, line_no, "unknown directive '" + key + "'");
        }
    }
    if (n < 0) throw ParseError(source_name, 0, "missing 'n' line");
    if (!have_a || !have_b)
        throw ParseError(source_name, 0, "missing 'cut A' and/or 'cut B' line");
    if (side_a.empty() || side_b.empty())
        throw ParseError(source_name, 0, "both cut sides must be nonempty");
    try {
        return Instance{Hypergraph::from_vertex_lists(n, edges), Cut(n, side_a, side_b)};
    } catch (const std::exception& e) {
        throw ParseError(source_name, 0, e.what());
    }
}

Instance load_instance_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path, 0, "cannot open file");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_instance_text(buffer.str(), path);
}

std::string format_instance_text(const Instance& instance, const std::string& comment) {
    std::ostringstream os;
    if (!comment.empty()) os << "# " << comment << '\n';
    os << "n " << instance.graph.vertex_count() << '\n';
    for (VertexSet e : instance.graph.edges()) {
        os << "edge";
        for (int v : vertices_of(e)) os << ' ' << v + 1;
        os << '\n';
    }
    os << "cut A";
    for (int v : instance.cut.a_vertices()) os << ' ' << v + 1;
    os << "\ncut B";
    for (int v : instance.cut.b_vertices()) os << ' ' << v + 1;
    os << '\n';
    return os.str();
}

std::string instance_digest(const Instance& instance) {
    // Canonical serialization: edges sorted as vertex lists (multiplicity
    // kept), cut orders as given since they define all index encodings.
    std::vector<std::vector<int>> edges;
    edges.reserve(instance.graph.edges().size());
    for (VertexSet e : instance.graph.edges()) edges.push_back(vertices_of(e));
    std::sort(edges.begin(), edges.end());
    std::ostringstream os;
    os << "hypercut-instance;n=" << instance.graph.vertex_count() << ";edges=";
    for (const auto& e : edges) {
        for (int v : e) os << v << ',';
        os << ';';
    }
    os << "a=";
    for (int v : instance.cut.a_vertices()) os << v << ',';
    os << ";b=";
    for (int v : instance.cut.b_vertices()) os << v << ',';

    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char byte : os.str()) {
        h ^= byte;
        h *= 0x100000001b3ull;
    }
    std::ostringstream hex;
    hex << "fnv1a64:" << std::hex << std::setw(16) << std::setfill('0') << h;
    return hex.str();
}

namespace {

constexpr const char* kDocumentFormat = "hypercut-certificate";
constexpr int kDocumentVersion = 1;

}  // namespace

CertificateDocument make_certificate_document(const Instance& instance, const CoreCertificate& c,
                                              CutOrientation orientation) {
    CertificateDocument doc;
    doc.instance_hash = instance_digest(instance);
    doc.orientation = orientation;
    for (int v : c.restriction.active_a) doc.active_a.push_back(v + 1);
    for (int v : c.restriction.active_b) doc.active_b.push_back(v + 1);
    for (int v : vertices_of(c.restriction.fixed_a.domain()))
        doc.fixed_a.emplace_back(v + 1, c.restriction.fixed_a.value(v) ? 1 : 0);
    for (int v : vertices_of(c.restriction.fixed_b.domain()))
        doc.fixed_b.emplace_back(v + 1, c.restriction.fixed_b.value(v) ? 1 : 0);
    for (int r = 0; r < c.core.rows(); ++r) {
        std::string row;
        for (int col = 0; col < c.core.cols(); ++col) row += c.core.at(r, col) ? '1' : '0';
        doc.core_rows.push_back(std::move(row));
    }
    doc.core_rank = c.core_rank;
    doc.bound = c.bound;
    doc.rectangular = c.core.rows() != c.core.cols();
    doc.tool_version = kVersion;
    return doc;
}

std::string certificate_document_to_json(const CertificateDocument& doc) {
    json j;
    j["format"] = kDocumentFormat;
    j["version"] = kDocumentVersion;
    j["tool_version"] = doc.tool_version;
    j["instance_hash"] = doc.instance_hash;
    j["cut_orientation"] = doc.orientation == CutOrientation::reversed ? "reversed" : "as-given";
    json restriction;
    restriction["I"] = doc.active_a;
    restriction["J"] = doc.active_b;
    restriction["beta"] = doc.fixed_a;
    restriction["alpha"] = doc.fixed_b;
    j["restriction"] = std::move(restriction);
    j["gamma_core"] = doc.core_rows;
    j["t"] = doc.core_rank;
    j["bound"] = doc.bound;
    j["rectangular"] = doc.rectangular;
    return j.dump(2) + "\n";
}

CertificateDocument certificate_document_from_json(const std::string& text,
                                                   const std::string& source_name) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(source_name, 0, std::string("invalid JSON: ") + e.what());
    }
    try {
        if (j.at("format").get<std::string>() != kDocumentFormat)
            throw ParseError(source_name, 0, "not a certificate document");
        if (j.at("version").get<int>() != kDocumentVersion)
            throw ParseError(source_name, 0, "unsupported document version");
        CertificateDocument doc;
        doc.tool_version = j.value("tool_version", "");
        doc.instance_hash = j.at("instance_hash").get<std::string>();
        const std::string orient = j.value("cut_orientation", "as-given");
        if (orient == "reversed")
            doc.orientation = CutOrientation::reversed;
        else if (orient == "as-given")
            doc.orientation = CutOrientation::as_given;
        else
            throw ParseError(source_name, 0, "unknown cut_orientation '" + orient + "'");
        const json& restriction = j.at("restriction");
        doc.active_a = restriction.at("I").get<std::vector<int>>();
        doc.active_b = restriction.at("J").get<std::vector<int>>();
        for (const json& fix : restriction.at("beta"))
            doc.fixed_a.emplace_back(fix.at(0).get<int>(), fix.at(1).get<int>());
        for (const json& fix : restriction.at("alpha"))
            doc.fixed_b.emplace_back(fix.at(0).get<int>(), fix.at(1).get<int>());
        doc.core_rows = j.at("gamma_core").get<std::vector<std::string>>();
        doc.core_rank = j.at("t").get<int>();
        doc.bound = j.at("bound").get<std::uint64_t>();
        doc.rectangular = j.value("rectangular", false);
        return doc;
    } catch (const json::exception& e) {
        throw ParseError(source_name, 0, std::string("bad certificate document: ") + e.what());
    }
}

CoreCertificate certificate_from_document(const CertificateDocument& doc) {
    const auto to_zero_based = [](const std::vector<int>& labels, const char* what) {
        std::vector<int> out;
        for (int v : labels) {
            if (v < 1 || v > kMaxVertices)
                throw ParseError("<certificate>", 0,
                                 std::string(what) + " label " + std::to_string(v) +
                                     " outside [1, 64]");
            out.push_back(v - 1);
        }
        return out;
    };
    CoreCertificate c;
    c.restriction.active_a = to_zero_based(doc.active_a, "active A");
    c.restriction.active_b = to_zero_based(doc.active_b, "active B");
    const auto fill_fixes = [&](const std::vector<std::pair<int, int>>& fixes,
                                PartialAssignment& out, const char* what) {
        for (auto [label, bit] : fixes) {
            if (label < 1 || label > kMaxVertices)
                throw ParseError("<certificate>", 0,
                                 std::string(what) + " label " + std::to_string(label) +
                                     " outside [1, 64]");
            if (bit != 0 && bit != 1)
                throw ParseError("<certificate>", 0,
                                 std::string(what) + " bit must be 0 or 1, got " +
                                     std::to_string(bit));
            try {
                out.fix(label - 1, bit == 1);
            } catch (const std::exception& e) {
                throw ParseError("<certificate>", 0, e.what());
            }
        }
    };
    fill_fixes(doc.fixed_a, c.restriction.fixed_a, "beta");
    fill_fixes(doc.fixed_b, c.restriction.fixed_b, "alpha");

    const int rows = static_cast<int>(doc.core_rows.size());
    const int cols = rows ? static_cast<int>(doc.core_rows[0].size()) : 0;
    F2Matrix core(rows, cols);
    for (int r = 0; r < rows; ++r) {
        if (static_cast<int>(doc.core_rows[static_cast<size_t>(r)].size()) != cols)
            throw ParseError("<certificate>", 0, "ragged core matrix rows");
        for (int col = 0; col < cols; ++col) {
            const char ch = doc.core_rows[static_cast<size_t>(r)][static_cast<size_t>(col)];
            if (ch != '0' && ch != '1')
                throw ParseError("<certificate>", 0, "core matrix rows must be 0/1 strings");
            core.set(r, col, ch == '1');
        }
    }
    c.core = std::move(core);
    if (doc.core_rank < 0 || doc.core_rank > 63)
        throw ParseError("<certificate>", 0, "claimed rank outside [0, 63]");
    c.core_rank = doc.core_rank;
    c.bound = doc.bound;
    return c;
}

const char* to_string(DocumentStatus status) {
    switch (status) {
        case DocumentStatus::ok: return "ok";
        case DocumentStatus::malformed: return "malformed certificate";
        case DocumentStatus::hash_mismatch: return "hash mismatch";
        case DocumentStatus::residual_found: return "residual found";
        case DocumentStatus::core_mismatch: return "core matrix mismatch";
        case DocumentStatus::rank_mismatch: return "rank mismatch";
    }
    return "unknown";
}

DocumentCheck verify_certificate_document(const Instance& instance,
                                          const CertificateDocument& doc) {
    const std::string digest = instance_digest(instance);
    if (doc.instance_hash != digest)
        return {DocumentStatus::hash_mismatch, "document hash " + doc.instance_hash +
                                                   " does not match instance " + digest};
    CoreCertificate cert;
    try {
        cert = certificate_from_document(doc);
    } catch (const std::exception& e) {
        return {DocumentStatus::malformed, e.what()};
    }
    const Cut cut = doc.orientation == CutOrientation::reversed ? instance.cut.reversed()
                                                                : instance.cut;
    const CertificateCheck check = check_certificate(instance.graph, cut, cert);
    switch (check.status) {
        case CertificateStatus::ok: return {DocumentStatus::ok, ""};
        case CertificateStatus::malformed: return {DocumentStatus::malformed, check.detail};
        case CertificateStatus::residual_found:
            return {DocumentStatus::residual_found, check.detail};
        case CertificateStatus::core_mismatch:
            return {DocumentStatus::core_mismatch, check.detail};
        case CertificateStatus::rank_mismatch:
            return {DocumentStatus::rank_mismatch, check.detail};
    }
    return {DocumentStatus::malformed, "unreachable"};
}

Instance make_bridge_instance(int count, int block_size) {
    if (count < 1) throw std::invalid_argument("bridge count must be at least 1");
    if (block_size < 1) throw std::invalid_argument("block size must be at least 1");
    const int n = count * (1 + block_size);
    if (n > kMaxVertices)
        throw std::invalid_argument("bridge family needs " + std::to_string(n) +
                                    " vertices, the cap is 64");
    std::vector<std::vector<int>> edges;
    std::vector<int> side_a, side_b;
    for (int k = 0; k < count; ++k) {
        const int base = k * (1 + block_size);
        std::vector<int> edge{base};
        side_a.push_back(base);
        for (int j = 1; j <= block_size; ++j) {
            edge.push_back(base + j);
            side_b.push_back(base + j);
        }
        edges.push_back(std::move(edge));
    }
    return Instance{Hypergraph::from_vertex_lists(n, edges), Cut(n, side_a, side_b)};
}

}  // namespace hypercut
