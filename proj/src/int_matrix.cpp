#include "wtcalc/int_matrix.hpp"

#include <sstream>

namespace wtcalc {

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Int>>& rows, std::size_t cols) {
    IntMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw validation_error("from_rows: ragged row");
        for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = rows[r][c];
    }
    return m;
}

bool IntMatrix::is_zero() const {
    for (const Int& x : a_)
        if (x != 0) return false;
    return true;
}

std::vector<Int> IntMatrix::row(std::size_t r) const {
    return std::vector<Int>(a_.begin() + r * cols_, a_.begin() + (r + 1) * cols_);
}

void IntMatrix::set_row(std::size_t r, const std::vector<Int>& v) {
    if (v.size() != cols_) throw validation_error("set_row: size mismatch");
    for (std::size_t c = 0; c < cols_; ++c) a_[r * cols_ + c] = v[c];
}

void IntMatrix::swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap(a_[i * cols_ + c], a_[j * cols_ + c]);
}

void IntMatrix::swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < rows_; ++r) std::swap(a_[r * cols_ + i], a_[r * cols_ + j]);
}

void IntMatrix::negate_row(std::size_t i) {
    for (std::size_t c = 0; c < cols_; ++c) a_[i * cols_ + c] = -a_[i * cols_ + c];
}

void IntMatrix::negate_col(std::size_t i) {
    for (std::size_t r = 0; r < rows_; ++r) a_[r * cols_ + i] = -a_[r * cols_ + i];
}

void IntMatrix::addmul_row(std::size_t i, std::size_t j, const Int& f) {
    if (f == 0) return;
    for (std::size_t c = 0; c < cols_; ++c) a_[i * cols_ + c] += f * a_[j * cols_ + c];
}

void IntMatrix::addmul_col(std::size_t i, std::size_t j, const Int& f) {
    if (f == 0) return;
    for (std::size_t r = 0; r < rows_; ++r) a_[r * cols_ + i] += f * a_[r * cols_ + j];
}

IntMatrix IntMatrix::mul(const IntMatrix& o) const {
    if (cols_ != o.rows_) throw validation_error("mul: dimension mismatch");
    IntMatrix out(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Int& f = at(i, k);
            if (f == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) out.at(i, j) += f * o.at(k, j);
        }
    return out;
}

IntMatrix IntMatrix::transposed() const {
    IntMatrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
    return out;
}

IntMatrix IntMatrix::vstack(const IntMatrix& o) const {
    if (cols_ != o.cols_ && o.rows_ != 0 && rows_ != 0) throw validation_error("vstack: column mismatch");
    std::size_t c = rows_ ? cols_ : o.cols_;
    IntMatrix out(rows_ + o.rows_, c);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out.at(i, j) = at(i, j);
    for (std::size_t i = 0; i < o.rows_; ++i)
        for (std::size_t j = 0; j < o.cols_; ++j) out.at(rows_ + i, j) = o.at(i, j);
    return out;
}

std::string IntMatrix::dump() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j) os << ' ';
            os << at(i, j);
        }
        os << '\n';
    }
    return os.str();
}

std::vector<Int> row_times_matrix(const std::vector<Int>& v, const IntMatrix& m) {
    if (v.size() != m.rows()) throw validation_error("row_times_matrix: dimension mismatch");
    std::vector<Int> out(m.cols());
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0) continue;
        for (std::size_t j = 0; j < m.cols(); ++j) out[j] += v[i] * m.at(i, j);
    }
    return out;
}

}  // namespace wtcalc
