#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hypercut/anf.hpp"
#include "hypercut/bits.hpp"
#include "hypercut/hypergraph.hpp"

namespace hypercut {

// Dense matrix over F2 with rows stored as bitmasks (bit j = column j).
// Capped at 64 columns, which covers any cut of a 64-vertex instance.
class F2Matrix {
  public:
    F2Matrix() = default;  // 0 x 0
    F2Matrix(int rows, int cols);

    static F2Matrix identity(int n);
    static F2Matrix from_rows(int cols, std::vector<std::uint64_t> rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool at(int r, int c) const;
    void set(int r, int c, bool bit);
    std::uint64_t row_bits(int r) const;
    const std::vector<std::uint64_t>& all_row_bits() const { return bits_; }

    F2Matrix transposed() const;
    bool is_zero() const;

    // One line per row, e.g. "10\n01"; "[0x0]" for the empty matrix.
    std::string to_string() const;

    bool operator==(const F2Matrix&) const = default;

  private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<std::uint64_t> bits_;
};

// Rank over F2 by Gaussian elimination on a copy, pivoting on the first set
// bit of each column; 0 for empty or all-zero matrices.
int rank_f2(const F2Matrix& m);

// Incidence matrix of the degree-2 monomials of a cross-cut polynomial:
// entry (k, l) is 1 iff the product of the k-th listed A-vertex and the l-th
// listed B-vertex is present. Monomials of degree >= 3 are ignored. Every
// monomial of `cross` must touch both sides; pass the cross part of a
// decomposition, not the full phase.
F2Matrix bilinear_slice(const AnfPolynomial& cross, const Cut& cut);

}  // namespace hypercut
