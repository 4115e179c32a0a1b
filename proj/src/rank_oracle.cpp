#include "hypercut/rank_oracle.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <type_traits>

#include "hypercut/errors.hpp"

namespace hypercut {

namespace {

constexpr int kMaxSideBitsHard = 30;  // indexable with int64 row*col

void check_limits(int a, int b, const OracleLimits& limits) {
    if (a > limits.max_side_bits || b > limits.max_side_bits || a + b > limits.max_total_bits)
        throw ResourceLimitError("sign matrix 2^" + std::to_string(a) + " x 2^" +
                                 std::to_string(b) + " exceeds the brute-force cap (" +
                                 std::to_string(limits.max_side_bits) + " bits per side, " +
                                 std::to_string(limits.max_total_bits) + " bits total)");
}

}  // namespace

SignMatrix::SignMatrix(int row_bits, int col_bits) : row_bits_(row_bits), col_bits_(col_bits) {
    if (row_bits < 0 || col_bits < 0 || row_bits > kMaxSideBitsHard ||
        col_bits > kMaxSideBitsHard)
        throw std::invalid_argument("sign matrix bits must be in [0, 30]");
    entries_.assign(static_cast<size_t>(rows() * cols()), 1);
}

int SignMatrix::sign(std::uint64_t row, std::uint64_t col) const {
    if (row >= static_cast<std::uint64_t>(rows()) || col >= static_cast<std::uint64_t>(cols()))
        throw std::out_of_range("sign matrix index out of range");
    return entries_[static_cast<size_t>(row * static_cast<std::uint64_t>(cols()) + col)];
}

void SignMatrix::set_sign(std::uint64_t row, std::uint64_t col, int sign) {
    if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +1 or -1");
    if (row >= static_cast<std::uint64_t>(rows()) || col >= static_cast<std::uint64_t>(cols()))
        throw std::out_of_range("sign matrix index out of range");
    entries_[static_cast<size_t>(row * static_cast<std::uint64_t>(cols()) + col)] =
        static_cast<std::int8_t>(sign);
}

std::string SignMatrix::to_string() const {
    std::ostringstream os;
    for (std::int64_t r = 0; r < rows(); ++r) {
        if (r) os << '\n';
        for (std::int64_t c = 0; c < cols(); ++c) {
            int s = entries_[static_cast<size_t>(r * cols() + c)];
            os << (c ? " " : "") << (s > 0 ? " 1" : "-1");
        }
    }
    return os.str();
}

namespace {

SignMatrix sign_matrix_of(const AnfPolynomial& f, const Cut& cut, const OracleLimits& limits) {
    if (f.variable_count() != cut.vertex_count())
        throw std::invalid_argument("cut and polynomial variable counts differ");
    const int a = cut.a_size();
    const int b = cut.b_size();
    check_limits(a, b, limits);
    SignMatrix m(a, b);
    const std::uint64_t n_rows = std::uint64_t{1} << a;
    const std::uint64_t n_cols = std::uint64_t{1} << b;
    for (std::uint64_t row = 0; row < n_rows; ++row) {
        // Fix the A side once per row, then sweep the B side.
        const AnfPolynomial on_b =
            f.restricted(PartialAssignment::over(cut.a_set(), cut.a_pattern(row)));
        for (std::uint64_t col = 0; col < n_cols; ++col) {
            if (on_b.evaluate(cut.b_pattern(col))) m.set_sign(row, col, -1);
        }
    }
    return m;
}

}  // namespace

SignMatrix build_sign_matrix(const AnfPolynomial& cross, const Cut& cut,
                             const OracleLimits& limits) {
    return sign_matrix_of(cross, cut, limits);
}

SignMatrix build_coefficient_matrix(const AnfPolynomial& phase, const Cut& cut,
                                    const OracleLimits& limits) {
    return sign_matrix_of(phase, cut, limits);
}

namespace {

struct Int64Overflow {};

inline std::int64_t mul_checked(std::int64_t x, std::int64_t y) {
    std::int64_t r;
    if (__builtin_mul_overflow(x, y, &r)) throw Int64Overflow{};
    return r;
}

inline std::int64_t sub_checked(std::int64_t x, std::int64_t y) {
    std::int64_t r;
    if (__builtin_sub_overflow(x, y, &r)) throw Int64Overflow{};
    return r;
}

inline std::int64_t div_checked(std::int64_t num, std::int64_t den) {
    if (num == std::numeric_limits<std::int64_t>::min() && den == -1) throw Int64Overflow{};
    return num / den;
}

// Fraction-free (Bareiss) elimination with column pivoting. Entries after k
// steps are k+1-minors of the input, so every division is exact. Works for
// any rank profile; rank-deficient columns are skipped.
template <typename Int>
int fraction_free_rank(std::vector<Int>& m, std::int64_t rows, std::int64_t cols) {
    const auto at = [&](std::int64_t r, std::int64_t c) -> Int& {
        return m[static_cast<size_t>(r * cols + c)];
    };
    Int prev{1};
    int rank = 0;
    for (std::int64_t col = 0; col < cols && rank < rows; ++col) {
        std::int64_t pivot = -1;
        for (std::int64_t r = rank; r < rows; ++r) {
            if (at(r, col) != 0) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) continue;
        if (pivot != rank)
            for (std::int64_t c = col; c < cols; ++c) std::swap(at(pivot, c), at(rank, c));
        for (std::int64_t r = rank + 1; r < rows; ++r) {
            const Int lead = at(r, col);
            if constexpr (std::is_same_v<Int, std::int64_t>) {
                for (std::int64_t c = col + 1; c < cols; ++c)
                    at(r, c) = div_checked(sub_checked(mul_checked(at(rank, col), at(r, c)),
                                                       mul_checked(lead, at(rank, c))),
                                           prev);
            } else {
                Int tmp;
                for (std::int64_t c = col + 1; c < cols; ++c) {
                    tmp = at(rank, col) * at(r, c) - lead * at(rank, c);
                    mpz_divexact(at(r, c).get_mpz_t(), tmp.get_mpz_t(), prev.get_mpz_t());
                }
            }
            at(r, col) = 0;
        }
        prev = at(rank, col);
        ++rank;
    }
    return rank;
}

template <typename Int>
int rank_of_signs(const SignMatrix& m) {
    std::vector<Int> work;
    work.reserve(static_cast<size_t>(m.rows() * m.cols()));
    for (std::int64_t r = 0; r < m.rows(); ++r)
        for (std::int64_t c = 0; c < m.cols(); ++c)
            work.emplace_back(m.sign(static_cast<std::uint64_t>(r), static_cast<std::uint64_t>(c)));
    return fraction_free_rank(work, m.rows(), m.cols());
}

}  // namespace

int real_rank_exact(const SignMatrix& m) {
    try {
        return rank_of_signs<std::int64_t>(m);
    } catch (const Int64Overflow&) {
        return rank_of_signs<mpz_class>(m);
    }
}

int schmidt_rank(const Hypergraph& g, const Cut& cut, const OracleLimits& limits) {
    if (cut.a_size() == 0 || cut.b_size() == 0)
        throw std::invalid_argument("both cut sides must be nonempty for rank computations");
    const PhaseDecomposition parts = cut_decompose(phase_polynomial(g), cut);
    return real_rank_exact(build_sign_matrix(parts.cross, cut, limits));
}

SignMatrix restricted_submatrix(const SignMatrix& m, const std::vector<BitFix>& row_fixes,
                                const std::vector<BitFix>& col_fixes) {
    const auto fold = [](int bits, const std::vector<BitFix>& fixes, const char* side) {
        std::uint64_t mask = 0, ones = 0;
        for (const BitFix& f : fixes) {
            if (f.position < 0 || f.position >= bits)
                throw std::out_of_range(std::string(side) + " bit position " +
                                        std::to_string(f.position) + " outside [0, " +
                                        std::to_string(bits) + ")");
            const std::uint64_t bit = std::uint64_t{1} << (bits - 1 - f.position);
            if (mask & bit)
                throw std::invalid_argument(std::string(side) + " bit position " +
                                            std::to_string(f.position) + " fixed twice");
            mask |= bit;
            if (f.value) ones |= bit;
        }
        return std::pair<std::uint64_t, std::uint64_t>{mask, ones};
    };
    const auto [row_mask, row_ones] = fold(m.row_bits(), row_fixes, "row");
    const auto [col_mask, col_ones] = fold(m.col_bits(), col_fixes, "column");

    // Free index bits keep their relative order.
    const auto expand = [](std::uint64_t compact, int bits, std::uint64_t fixed_mask,
                           std::uint64_t fixed_ones) {
        std::uint64_t full = fixed_ones;
        int free_left = bits - set_size(fixed_mask);
        for (int pos = 0; pos < bits; ++pos) {
            const std::uint64_t bit = std::uint64_t{1} << (bits - 1 - pos);
            if (fixed_mask & bit) continue;
            --free_left;
            if ((compact >> free_left) & 1) full |= bit;
        }
        return full;
    };

    const int free_row_bits = m.row_bits() - static_cast<int>(row_fixes.size());
    const int free_col_bits = m.col_bits() - static_cast<int>(col_fixes.size());
    SignMatrix out(free_row_bits, free_col_bits);
    for (std::uint64_t r = 0; r < (std::uint64_t{1} << free_row_bits); ++r) {
        const std::uint64_t full_row = expand(r, m.row_bits(), row_mask, row_ones);
        for (std::uint64_t c = 0; c < (std::uint64_t{1} << free_col_bits); ++c)
            out.set_sign(r, c, m.sign(full_row, expand(c, m.col_bits(), col_mask, col_ones)));
    }
    return out;
}

}  // namespace hypercut
