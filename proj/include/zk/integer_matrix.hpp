#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace zk {

using BigInt = mpz_class;

/// Dense row-major matrix of exact integers.
class IntegerMatrix {
public:
    IntegerMatrix() = default;
    IntegerMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static IntegerMatrix identity(std::size_t n);
    static IntegerMatrix from_rows(const std::vector<std::vector<long>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    BigInt& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const BigInt& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    IntegerMatrix transpose() const;
    /// Column c as a vector.
    std::vector<BigInt> column(std::size_t c) const;
    /// Columns [first, last) as a new matrix.
    IntegerMatrix column_range(std::size_t first, std::size_t last) const;
    /// Rows [first, last) as a new matrix.
    IntegerMatrix row_range(std::size_t first, std::size_t last) const;

    bool is_zero() const;
    std::size_t nonzeros() const;

    friend IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b);
    friend bool operator==(const IntegerMatrix& a, const IntegerMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    std::string to_string() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<BigInt> data_;
};

std::vector<BigInt> operator*(const IntegerMatrix& a, const std::vector<BigInt>& x);

/// Column-major sparse matrix; each column holds (row, value) with rows
/// ascending and values nonzero.
class SparseIntegerMatrix {
public:
    using Entry = std::pair<std::size_t, BigInt>;

    SparseIntegerMatrix() = default;
    SparseIntegerMatrix(std::size_t rows, std::size_t cols) : rows_(rows), columns_(cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return columns_.size(); }

    /// Appends an entry to column c. Rows must be pushed in ascending order.
    void push(std::size_t r, std::size_t c, BigInt value);
    const std::vector<Entry>& column(std::size_t c) const { return columns_[c]; }

    std::size_t nonzeros() const;
    IntegerMatrix to_dense() const;
    SparseIntegerMatrix transpose() const;
    static SparseIntegerMatrix from_dense(const IntegerMatrix& m);

private:
    std::size_t rows_ = 0;
    std::vector<std::vector<Entry>> columns_;
};

/// Exact determinant by fraction-free (Bareiss) elimination. Square only.
BigInt determinant(const IntegerMatrix& m);

}  // namespace zk
