#include "hypercut/f2_matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace hypercut {

F2Matrix::F2Matrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0 || cols > 64)
        throw std::invalid_argument("F2 matrix shape must satisfy rows >= 0, 0 <= cols <= 64");
    bits_.assign(static_cast<size_t>(rows), 0);
}

F2Matrix F2Matrix::identity(int n) {
    F2Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.set(i, i, true);
    return m;
}

F2Matrix F2Matrix::from_rows(int cols, std::vector<std::uint64_t> rows) {
    F2Matrix m(static_cast<int>(rows.size()), cols);
    const std::uint64_t allowed = full_vertex_set(cols);
    for (std::uint64_t row : rows)
        if (row & ~allowed) throw std::out_of_range("row has bits outside the column range");
    m.bits_ = std::move(rows);
    return m;
}

bool F2Matrix::at(int r, int c) const {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
        throw std::out_of_range("F2 matrix index out of range");
    return (bits_[static_cast<size_t>(r)] >> c) & 1;
}

void F2Matrix::set(int r, int c, bool bit) {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
        throw std::out_of_range("F2 matrix index out of range");
    if (bit)
        bits_[static_cast<size_t>(r)] |= std::uint64_t{1} << c;
    else
        bits_[static_cast<size_t>(r)] &= ~(std::uint64_t{1} << c);
}

std::uint64_t F2Matrix::row_bits(int r) const {
    if (r < 0 || r >= rows_) throw std::out_of_range("F2 matrix row out of range");
    return bits_[static_cast<size_t>(r)];
}

F2Matrix F2Matrix::transposed() const {
    if (rows_ > 64)
        throw std::invalid_argument("transpose needs at most 64 rows");
    F2Matrix t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c)
            if (at(r, c)) t.set(c, r, true);
    return t;
}

bool F2Matrix::is_zero() const {
    for (std::uint64_t row : bits_)
        if (row) return false;
    return true;
}

std::string F2Matrix::to_string() const {
    if (rows_ == 0 || cols_ == 0) {
        std::ostringstream os;
        os << '[' << rows_ << 'x' << cols_ << ']';
        return os.str();
    }
    std::ostringstream os;
    for (int r = 0; r < rows_; ++r) {
        if (r) os << '\n';
        for (int c = 0; c < cols_; ++c) os << (at(r, c) ? '1' : '0');
    }
    return os.str();
}

int rank_f2(const F2Matrix& m) {
    std::vector<std::uint64_t> rows = m.all_row_bits();
    const int n_rows = m.rows();
    int rank = 0;
    for (int col = 0; col < m.cols() && rank < n_rows; ++col) {
        const std::uint64_t bit = std::uint64_t{1} << col;
        int pivot = -1;
        for (int r = rank; r < n_rows; ++r) {
            if (rows[static_cast<size_t>(r)] & bit) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) continue;
        std::swap(rows[static_cast<size_t>(rank)], rows[static_cast<size_t>(pivot)]);
        for (int r = rank + 1; r < n_rows; ++r)
            if (rows[static_cast<size_t>(r)] & bit)
                rows[static_cast<size_t>(r)] ^= rows[static_cast<size_t>(rank)];
        ++rank;
    }
    return rank;
}

F2Matrix bilinear_slice(const AnfPolynomial& cross, const Cut& cut) {
    if (cross.variable_count() != cut.vertex_count())
        throw std::invalid_argument("cut and polynomial variable counts differ");
    F2Matrix slice(cut.a_size(), cut.b_size());
    for (VertexSet m : cross.monomials()) {
        const VertexSet a_part = m & cut.a_set();
        const VertexSet b_part = m & cut.b_set();
        if (!a_part || !b_part)
            throw std::invalid_argument("monomial " + format_vertex_set(m) +
                                        " does not cross the cut; pass the cross part only");
        if (set_size(m) != 2) continue;
        slice.set(cut.a_position(lowest_vertex(a_part)), cut.b_position(lowest_vertex(b_part)),
                  true);
    }
    return slice;
}

}  // namespace hypercut
