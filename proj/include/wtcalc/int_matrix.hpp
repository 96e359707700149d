#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "wtcalc/bigint.hpp"

namespace wtcalc {

/* Dense matrix over arbitrary-precision integers, row major.
   All mutating row/column operations are unimodular building blocks;
   higher layers keep matrices immutable once published. */
class IntMatrix {
public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    static IntMatrix identity(std::size_t n);
    static IntMatrix from_rows(const std::vector<std::vector<Int>>& rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    const Int& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
    Int& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }

    bool is_zero() const;
    bool operator==(const IntMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

    std::vector<Int> row(std::size_t r) const;
    void set_row(std::size_t r, const std::vector<Int>& v);

    void swap_rows(std::size_t i, std::size_t j);
    void swap_cols(std::size_t i, std::size_t j);
    void negate_row(std::size_t i);
    void negate_col(std::size_t i);
    // row i += f * row j
    void addmul_row(std::size_t i, std::size_t j, const Int& f);
    // col i += f * col j
    void addmul_col(std::size_t i, std::size_t j, const Int& f);

    IntMatrix mul(const IntMatrix& o) const;
    IntMatrix transposed() const;
    // rows of *this followed by rows of o (same column count)
    IntMatrix vstack(const IntMatrix& o) const;

    // one row per line, space-separated decimal entries
    std::string dump() const;

private:
    std::size_t rows_, cols_;
    std::vector<Int> a_;
};

std::vector<Int> row_times_matrix(const std::vector<Int>& v, const IntMatrix& m);

}  // namespace wtcalc
