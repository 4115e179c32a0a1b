#include "hypercut/anf.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace hypercut {

namespace {

void check_variable(int v, int n) {
    if (v < 0 || v >= n)
        throw std::out_of_range("variable " + std::to_string(v) + " outside [0, " +
                                std::to_string(n) + ")");
}

// Truth tables are only for desk-scale oracle work.
constexpr int kMaxTruthTableVars = 24;

}  // namespace

void PartialAssignment::fix(int v, bool bit) {
    if (v < 0 || v >= kMaxVertices)
        throw std::out_of_range("variable " + std::to_string(v) + " outside [0, 64)");
    if (is_fixed(v))
        throw std::invalid_argument("variable " + std::to_string(v) + " fixed twice");
    domain_ |= vertex_bit(v);
    if (bit) ones_ |= vertex_bit(v);
}

PartialAssignment PartialAssignment::fixing(std::initializer_list<std::pair<int, bool>> fixes) {
    PartialAssignment p;
    for (auto [v, bit] : fixes) p.fix(v, bit);
    return p;
}

PartialAssignment PartialAssignment::over(VertexSet domain, VertexSet ones) {
    if (ones & ~domain) throw std::invalid_argument("assigned bits outside the domain");
    PartialAssignment p;
    p.domain_ = domain;
    p.ones_ = ones;
    return p;
}

bool PartialAssignment::value(int v) const {
    if (!is_fixed(v))
        throw std::out_of_range("variable " + std::to_string(v) + " is not fixed");
    return (ones_ >> v) & 1;
}

PartialAssignment PartialAssignment::merged_with(const PartialAssignment& other) const {
    if (domain_ & other.domain_)
        throw std::invalid_argument("assignments overlap on " +
                                    format_vertex_set(domain_ & other.domain_));
    PartialAssignment p;
    p.domain_ = domain_ | other.domain_;
    p.ones_ = ones_ | other.ones_;
    return p;
}

AnfPolynomial::AnfPolynomial(int variable_count) : n_(variable_count) {
    if (n_ < 0 || n_ > kMaxVertices)
        throw std::invalid_argument("variable count must be in [0, 64], got " +
                                    std::to_string(n_));
}

AnfPolynomial AnfPolynomial::from_hyperedges(int variable_count,
                                             const std::vector<VertexSet>& edges) {
    AnfPolynomial f(variable_count);
    const VertexSet allowed = full_vertex_set(variable_count);
    for (VertexSet e : edges) {
        if (e & ~allowed)
            throw std::out_of_range("edge " + format_vertex_set(e) +
                                    " contains a vertex >= " + std::to_string(variable_count));
        f.toggle(e);
    }
    return f;
}

AnfPolynomial AnfPolynomial::from_truth_table(int variable_count,
                                              const std::vector<std::uint8_t>& table) {
    if (variable_count < 0 || variable_count > kMaxTruthTableVars)
        throw std::invalid_argument("truth tables supported for at most " +
                                    std::to_string(kMaxTruthTableVars) + " variables");
    const size_t size = size_t{1} << variable_count;
    if (table.size() != size)
        throw std::invalid_argument("truth table must have 2^" + std::to_string(variable_count) +
                                    " entries, got " + std::to_string(table.size()));
    // In-place Möbius transform over the subset lattice; self-inverse mod 2.
    std::vector<std::uint8_t> coeff(table);
    for (int i = 0; i < variable_count; ++i) {
        const size_t bit = size_t{1} << i;
        for (size_t x = 0; x < size; ++x)
            if (x & bit) coeff[x] ^= coeff[x ^ bit];
    }
    AnfPolynomial f(variable_count);
    for (size_t x = 0; x < size; ++x)
        if (coeff[x] & 1) f.terms_.insert(static_cast<VertexSet>(x));
    return f;
}

std::vector<std::uint8_t> AnfPolynomial::truth_table() const {
    if (n_ > kMaxTruthTableVars)
        throw std::invalid_argument("truth tables supported for at most " +
                                    std::to_string(kMaxTruthTableVars) + " variables");
    const size_t size = size_t{1} << n_;
    std::vector<std::uint8_t> table(size, 0);
    for (VertexSet m : terms_) table[static_cast<size_t>(m)] ^= 1;
    for (int i = 0; i < n_; ++i) {
        const size_t bit = size_t{1} << i;
        for (size_t x = 0; x < size; ++x)
            if (x & bit) table[x] ^= table[x ^ bit];
    }
    return table;
}

int AnfPolynomial::degree() const {
    int deg = 0;
    for (VertexSet m : terms_) deg = std::max(deg, set_size(m));
    return deg;
}

void AnfPolynomial::toggle(VertexSet monomial) {
    if (monomial & ~full_vertex_set(n_))
        throw std::out_of_range("monomial " + format_vertex_set(monomial) +
                                " contains a variable >= " + std::to_string(n_));
    auto [it, inserted] = terms_.insert(monomial);
    if (!inserted) terms_.erase(it);
}

bool AnfPolynomial::evaluate(VertexSet x) const {
    bool acc = false;
    for (VertexSet m : terms_)
        if ((x & m) == m) acc = !acc;
    return acc;
}

AnfPolynomial AnfPolynomial::derivative(int v) const {
    check_variable(v, n_);
    const VertexSet bit = vertex_bit(v);
    AnfPolynomial out(n_);
    for (VertexSet m : terms_)
        if (m & bit) out.toggle(m & ~bit);
    return out;
}

AnfPolynomial AnfPolynomial::restricted(const PartialAssignment& p) const {
    if (p.domain() & ~full_vertex_set(n_))
        throw std::out_of_range("assignment fixes a variable >= " + std::to_string(n_));
    const VertexSet zeros = p.zeros();
    const VertexSet ones = p.ones();
    AnfPolynomial out(n_);
    for (VertexSet m : terms_) {
        if (m & zeros) continue;
        out.toggle(m & ~ones);
    }
    return out;
}

AnfPolynomial& AnfPolynomial::operator^=(const AnfPolynomial& other) {
    if (n_ != other.n_)
        throw std::invalid_argument("XOR of polynomials over different variable counts");
    for (VertexSet m : other.terms_) toggle(m);
    return *this;
}

AnfPolynomial phase_polynomial(const Hypergraph& g) {
    return AnfPolynomial::from_hyperedges(g.vertex_count(), g.edges());
}

PhaseDecomposition cut_decompose(const AnfPolynomial& f, const Cut& cut) {
    if (f.variable_count() != cut.vertex_count())
        throw std::invalid_argument("cut and polynomial variable counts differ");
    PhaseDecomposition parts{AnfPolynomial(f.variable_count()), AnfPolynomial(f.variable_count()),
                             AnfPolynomial(f.variable_count())};
    for (VertexSet m : f.monomials()) {
        if ((m & cut.b_set()) == 0)
            parts.a_local.toggle(m);  // constant monomial lands here
        else if ((m & cut.a_set()) == 0)
            parts.b_local.toggle(m);
        else
            parts.cross.toggle(m);
    }
    return parts;
}

}  // namespace hypercut
