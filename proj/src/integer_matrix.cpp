#include "zk/integer_matrix.hpp"

#include <cassert>
#include <sstream>
#include <stdexcept>

namespace zk {

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
    IntegerMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntegerMatrix IntegerMatrix::from_rows(const std::vector<std::vector<long>>& rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.front().size();
    IntegerMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) throw std::invalid_argument("ragged rows");
        for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

IntegerMatrix IntegerMatrix::transpose() const {
    IntegerMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

std::vector<BigInt> IntegerMatrix::column(std::size_t c) const {
    std::vector<BigInt> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, c);
    return out;
}

IntegerMatrix IntegerMatrix::column_range(std::size_t first, std::size_t last) const {
    IntegerMatrix out(rows_, last - first);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = first; j < last; ++j) out(i, j - first) = (*this)(i, j);
    return out;
}

IntegerMatrix IntegerMatrix::row_range(std::size_t first, std::size_t last) const {
    IntegerMatrix out(last - first, cols_);
    for (std::size_t i = first; i < last; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out(i - first, j) = (*this)(i, j);
    return out;
}

bool IntegerMatrix::is_zero() const {
    for (const BigInt& v : data_)
        if (sgn(v) != 0) return false;
    return true;
}

std::size_t IntegerMatrix::nonzeros() const {
    std::size_t n = 0;
    for (const BigInt& v : data_) n += sgn(v) != 0 ? 1 : 0;
    return n;
}

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix shape mismatch in product");
    IntegerMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const BigInt& aik = a(i, k);
            if (sgn(aik) == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                if (sgn(b(k, j)) != 0) out(i, j) += aik * b(k, j);
            }
        }
    }
    return out;
}

std::vector<BigInt> operator*(const IntegerMatrix& a, const std::vector<BigInt>& x) {
    if (a.cols() != x.size()) throw std::invalid_argument("matrix/vector shape mismatch");
    std::vector<BigInt> out(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (sgn(a(i, j)) != 0 && sgn(x[j]) != 0) out[i] += a(i, j) * x[j];
    return out;
}

std::string IntegerMatrix::to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < rows_; ++i) {
        os << '[';
        for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << (*this)(i, j).get_str();
        os << "]\n";
    }
    return os.str();
}

void SparseIntegerMatrix::push(std::size_t r, std::size_t c, BigInt value) {
    if (sgn(value) == 0) return;
    assert(r < rows_ && c < columns_.size());
    assert(columns_[c].empty() || columns_[c].back().first < r);
    columns_[c].emplace_back(r, std::move(value));
}

std::size_t SparseIntegerMatrix::nonzeros() const {
    std::size_t n = 0;
    for (const auto& col : columns_) n += col.size();
    return n;
}

IntegerMatrix SparseIntegerMatrix::to_dense() const {
    IntegerMatrix m(rows_, columns_.size());
    for (std::size_t c = 0; c < columns_.size(); ++c)
        for (const auto& [r, v] : columns_[c]) m(r, c) = v;
    return m;
}

SparseIntegerMatrix SparseIntegerMatrix::transpose() const {
    SparseIntegerMatrix t(columns_.size(), rows_);
    // Iterating columns in order pushes rows of t in ascending order.
    for (std::size_t c = 0; c < columns_.size(); ++c)
        for (const auto& [r, v] : columns_[c]) t.columns_[r].emplace_back(c, v);
    return t;
}

SparseIntegerMatrix SparseIntegerMatrix::from_dense(const IntegerMatrix& m) {
    SparseIntegerMatrix s(m.rows(), m.cols());
    for (std::size_t c = 0; c < m.cols(); ++c)
        for (std::size_t r = 0; r < m.rows(); ++r) s.push(r, c, m(r, c));
    return s;
}

BigInt determinant(const IntegerMatrix& input) {
    if (input.rows() != input.cols()) throw std::invalid_argument("determinant of a non-square matrix");
    const std::size_t n = input.rows();
    if (n == 0) return 1;
    IntegerMatrix a = input;
    BigInt previous = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (sgn(a(k, k)) == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && sgn(a(swap_row, k)) == 0) ++swap_row;
            if (swap_row == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(swap_row, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                BigInt v = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), previous.get_mpz_t());
                a(i, j) = v;
            }
        }
        previous = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

}  // namespace zk
