#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hypercut/anf.hpp"
#include "hypercut/hypergraph.hpp"

namespace hypercut {

// Brute-force size caps for sign matrices: each side at most `max_side_bits`,
// both sides together at most `max_total_bits`.
struct OracleLimits {
    int max_side_bits = 14;
    int max_total_bits = 26;
};

// Dense ±1 matrix of shape 2^row_bits x 2^col_bits. The row index encodes the
// A-side assignment through the cut's listed order (first listed vertex =
// most significant index bit); columns encode the B side the same way.
class SignMatrix {
  public:
    SignMatrix(int row_bits, int col_bits);  // all +1

    int row_bits() const { return row_bits_; }
    int col_bits() const { return col_bits_; }
    std::int64_t rows() const { return std::int64_t{1} << row_bits_; }
    std::int64_t cols() const { return std::int64_t{1} << col_bits_; }

    int sign(std::uint64_t row, std::uint64_t col) const;
    void set_sign(std::uint64_t row, std::uint64_t col, int sign);

    // One line per row, entries right-aligned, e.g. " 1 -1  1 -1".
    std::string to_string() const;

    bool operator==(const SignMatrix&) const = default;

  private:
    int row_bits_;
    int col_bits_;
    std::vector<std::int8_t> entries_;
};

// Sign matrix (-1)^f over the cut, one entry per (row, column) assignment.
// Pass the cross part of the phase for the phase-cleaned matrix, or the full
// phase for the raw coefficient matrix (the overall scale carries no rank
// information and is omitted). Throws ResourceLimitError beyond the caps.
SignMatrix build_sign_matrix(const AnfPolynomial& cross, const Cut& cut,
                             const OracleLimits& limits = {});
SignMatrix build_coefficient_matrix(const AnfPolynomial& phase, const Cut& cut,
                                    const OracleLimits& limits = {});

// Exact rank over the rationals via fraction-free integer elimination; no
// floating point anywhere. Runs on 64-bit integers and reruns over
// arbitrary-precision integers if an intermediate product overflows.
int real_rank_exact(const SignMatrix& m);

// Exact Schmidt rank of the hypergraph state across the cut: the rank of the
// phase-cleaned sign matrix built from the cross part of the phase.
int schmidt_rank(const Hypergraph& g, const Cut& cut, const OracleLimits& limits = {});

// Fixes a bit position of a sign matrix's row or column index. Positions
// follow the side's listed order: position 0 is the most significant bit.
struct BitFix {
    int position = 0;
    bool value = false;
};

// Submatrix on the free index bits after fixing the given positions.
SignMatrix restricted_submatrix(const SignMatrix& m, const std::vector<BitFix>& row_fixes,
                                const std::vector<BitFix>& col_fixes);

}  // namespace hypercut
