#pragma once

#include <cstdint>
#include <initializer_list>
#include <set>
#include <utility>
#include <vector>

#include "hypercut/bits.hpp"
#include "hypercut/hypergraph.hpp"

namespace hypercut {

// Fixed bits for a subset of variables; variables outside the domain stay free.
class PartialAssignment {
  public:
    PartialAssignment() = default;

    // Fixes variable v to bit. Refixing a variable is rejected.
    void fix(int v, bool bit);

    static PartialAssignment fixing(std::initializer_list<std::pair<int, bool>> fixes);

    // Fixes every vertex of `domain` to the corresponding bit of `ones`.
    static PartialAssignment over(VertexSet domain, VertexSet ones);

    bool is_fixed(int v) const { return (domain_ >> v) & 1; }
    bool value(int v) const;

    VertexSet domain() const { return domain_; }
    VertexSet ones() const { return ones_; }
    VertexSet zeros() const { return domain_ & ~ones_; }

    // Union of two assignments with disjoint domains.
    PartialAssignment merged_with(const PartialAssignment& other) const;

    bool operator==(const PartialAssignment&) const = default;

  private:
    VertexSet domain_ = 0;
    VertexSet ones_ = 0;
};

// Boolean polynomial in algebraic normal form: an XOR of monomials, each the
// product of the variables in its support; the empty support is the constant
// 1. Monomial coefficients live in F2, so inserting a monomial twice removes
// it, and the stored set is canonical: equal functions compare equal.
class AnfPolynomial {
  public:
    explicit AnfPolynomial(int variable_count);

    // XOR of one monomial per edge, with mod-2 cancellation of repeats. The
    // empty edge contributes the constant monomial.
    static AnfPolynomial from_hyperedges(int variable_count, const std::vector<VertexSet>& edges);

    // Inverse pair of truth-table transforms (subset-lattice Möbius/zeta).
    // `table[x]` is f at the point whose i-th variable is bit i of x.
    static AnfPolynomial from_truth_table(int variable_count,
                                          const std::vector<std::uint8_t>& table);
    std::vector<std::uint8_t> truth_table() const;

    int variable_count() const { return n_; }
    const std::set<VertexSet>& monomials() const { return terms_; }
    bool contains(VertexSet monomial) const { return terms_.count(monomial) != 0; }
    bool is_zero() const { return terms_.empty(); }
    int term_count() const { return static_cast<int>(terms_.size()); }
    int degree() const;  // 0 for the zero polynomial and for the constant

    // XORs a monomial in or out.
    void toggle(VertexSet monomial);

    // Value at the point whose i-th variable is bit i of x.
    bool evaluate(VertexSet x) const;

    // Discrete difference f(x) ^ f(x ^ e_v): monomials containing v lose the
    // factor, all others vanish.
    AnfPolynomial derivative(int v) const;

    // Fixes the assigned variables: a monomial touching a 0-fixed variable
    // drops, 1-fixed variables are removed from its support, parity
    // cancellation applies. Variable indices are kept from the parent.
    AnfPolynomial restricted(const PartialAssignment& p) const;

    AnfPolynomial& operator^=(const AnfPolynomial& other);
    friend AnfPolynomial operator^(AnfPolynomial lhs, const AnfPolynomial& rhs) {
        lhs ^= rhs;
        return lhs;
    }

    bool operator==(const AnfPolynomial&) const = default;

  private:
    int n_;
    std::set<VertexSet> terms_;
};

AnfPolynomial phase_polynomial(const Hypergraph& g);

// f split along a cut: monomials inside A (the constant included), monomials
// inside B, and the crossing monomials. XORing the three parts gives back f.
struct PhaseDecomposition {
    AnfPolynomial a_local;
    AnfPolynomial b_local;
    AnfPolynomial cross;
};

PhaseDecomposition cut_decompose(const AnfPolynomial& f, const Cut& cut);

}  // namespace hypercut
