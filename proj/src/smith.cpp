#include "zk/smith.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>

namespace zk {

namespace {

// Truncated quotient b / a.
BigInt quotient(const BigInt& b, const BigInt& a) {
    BigInt q;
    mpz_tdiv_q(q.get_mpz_t(), b.get_mpz_t(), a.get_mpz_t());
    return q;
}

int cmpabs(const BigInt& a, const BigInt& b) { return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()); }

// Elementary operations on A, mirrored onto U, U^{-1}, V, V^{-1}.
class DenseReducer {
public:
    DenseReducer(IntegerMatrix& a, SmithTransforms* t) : a_(a), t_(t) {}

    void swap_rows(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t c = 0; c < a_.cols(); ++c) std::swap(a_(i, c), a_(j, c));
        if (!t_) return;
        for (std::size_t c = 0; c < t_->u.cols(); ++c) std::swap(t_->u(i, c), t_->u(j, c));
        for (std::size_t r = 0; r < t_->u_inverse.rows(); ++r)
            std::swap(t_->u_inverse(r, i), t_->u_inverse(r, j));
    }

    void swap_cols(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t r = 0; r < a_.rows(); ++r) std::swap(a_(r, i), a_(r, j));
        if (!t_) return;
        for (std::size_t r = 0; r < t_->v.rows(); ++r) std::swap(t_->v(r, i), t_->v(r, j));
        for (std::size_t c = 0; c < t_->v_inverse.cols(); ++c)
            std::swap(t_->v_inverse(i, c), t_->v_inverse(j, c));
    }

    // row_dst += q * row_src
    void add_row(std::size_t dst, std::size_t src, const BigInt& q, std::size_t from_col) {
        for (std::size_t c = from_col; c < a_.cols(); ++c)
            if (sgn(a_(src, c)) != 0) a_(dst, c) += q * a_(src, c);
        if (!t_) return;
        for (std::size_t c = 0; c < t_->u.cols(); ++c)
            if (sgn(t_->u(src, c)) != 0) t_->u(dst, c) += q * t_->u(src, c);
        for (std::size_t r = 0; r < t_->u_inverse.rows(); ++r)
            if (sgn(t_->u_inverse(r, dst)) != 0) t_->u_inverse(r, src) -= q * t_->u_inverse(r, dst);
    }

    // col_dst += q * col_src
    void add_col(std::size_t dst, std::size_t src, const BigInt& q, std::size_t from_row) {
        for (std::size_t r = from_row; r < a_.rows(); ++r)
            if (sgn(a_(r, src)) != 0) a_(r, dst) += q * a_(r, src);
        if (!t_) return;
        for (std::size_t r = 0; r < t_->v.rows(); ++r)
            if (sgn(t_->v(r, src)) != 0) t_->v(r, dst) += q * t_->v(r, src);
        for (std::size_t c = 0; c < t_->v_inverse.cols(); ++c)
            if (sgn(t_->v_inverse(dst, c)) != 0) t_->v_inverse(src, c) -= q * t_->v_inverse(dst, c);
    }

    void negate_row(std::size_t i) {
        for (std::size_t c = 0; c < a_.cols(); ++c) a_(i, c) = -a_(i, c);
        if (!t_) return;
        for (std::size_t c = 0; c < t_->u.cols(); ++c) t_->u(i, c) = -t_->u(i, c);
        for (std::size_t r = 0; r < t_->u_inverse.rows(); ++r) t_->u_inverse(r, i) = -t_->u_inverse(r, i);
    }

private:
    IntegerMatrix& a_;
    SmithTransforms* t_;
};

}  // namespace

std::vector<BigInt> SmithForm::torsion() const {
    std::vector<BigInt> out;
    for (const BigInt& d : diagonal)
        if (d > 1) out.push_back(d);
    return out;
}

std::vector<BigInt> normalize_diagonal(std::vector<BigInt> entries) {
    for (BigInt& e : entries) e = abs(e);
    entries.erase(std::remove_if(entries.begin(), entries.end(), [](const BigInt& e) { return sgn(e) == 0; }),
                  entries.end());
    for (std::size_t i = 0; i < entries.size(); ++i) {
        for (std::size_t j = i + 1; j < entries.size(); ++j) {
            if (entries[j] % entries[i] == 0) continue;
            BigInt g, l;
            mpz_gcd(g.get_mpz_t(), entries[i].get_mpz_t(), entries[j].get_mpz_t());
            mpz_lcm(l.get_mpz_t(), entries[i].get_mpz_t(), entries[j].get_mpz_t());
            entries[i] = g;
            entries[j] = l;
        }
    }
    return entries;
}

SmithForm smith_normal_form(const IntegerMatrix& input, bool with_transforms) {
    IntegerMatrix a = input;
    const std::size_t rows = a.rows();
    const std::size_t cols = a.cols();
    SmithForm result;
    if (with_transforms) {
        result.transforms = SmithTransforms{IntegerMatrix::identity(rows), IntegerMatrix::identity(cols),
                                            IntegerMatrix::identity(rows), IntegerMatrix::identity(cols)};
    }
    DenseReducer ops(a, result.transforms ? &*result.transforms : nullptr);

    std::vector<std::size_t> column_fill(cols);
    for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
        // Pivot: smallest |entry|, then sparsest column.
        for (std::size_t j = t; j < cols; ++j) {
            column_fill[j] = 0;
            for (std::size_t i = t; i < rows; ++i) column_fill[j] += sgn(a(i, j)) != 0 ? 1 : 0;
        }
        bool found = false;
        std::size_t pi = 0, pj = 0;
        for (std::size_t i = t; i < rows; ++i) {
            for (std::size_t j = t; j < cols; ++j) {
                if (sgn(a(i, j)) == 0) continue;
                if (!found || cmpabs(a(i, j), a(pi, pj)) < 0 ||
                    (cmpabs(a(i, j), a(pi, pj)) == 0 && column_fill[j] < column_fill[pj])) {
                    found = true;
                    pi = i;
                    pj = j;
                }
            }
        }
        if (!found) break;
        ops.swap_rows(t, pi);
        ops.swap_cols(t, pj);

        while (true) {
            bool dirty = false;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (sgn(a(i, t)) == 0) continue;
                ops.add_row(i, t, -quotient(a(i, t), a(t, t)), t);
                dirty = dirty || sgn(a(i, t)) != 0;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (sgn(a(t, j)) == 0) continue;
                ops.add_col(j, t, -quotient(a(t, j), a(t, t)), t);
                dirty = dirty || sgn(a(t, j)) != 0;
            }
            if (dirty) {
                // A nonzero remainder is smaller than the pivot; move it in.
                std::size_t best_i = t, best_j = t;
                for (std::size_t i = t + 1; i < rows; ++i)
                    if (sgn(a(i, t)) != 0 && cmpabs(a(i, t), a(best_i, best_j)) < 0) best_i = i, best_j = t;
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (sgn(a(t, j)) != 0 && cmpabs(a(t, j), a(best_i, best_j)) < 0) best_i = t, best_j = j;
                ops.swap_rows(t, best_i);
                ops.swap_cols(t, best_j);
                continue;
            }
            // Row and column clear; enforce divisibility of the remaining block.
            bool divides = true;
            for (std::size_t i = t + 1; i < rows && divides; ++i) {
                for (std::size_t j = t + 1; j < cols; ++j) {
                    if (sgn(a(i, j)) != 0 && !mpz_divisible_p(a(i, j).get_mpz_t(), a(t, t).get_mpz_t())) {
                        ops.add_row(t, i, 1, t);
                        divides = false;
                        break;
                    }
                }
            }
            if (divides) break;
        }
        if (sgn(a(t, t)) < 0) ops.negate_row(t);
        result.diagonal.push_back(a(t, t));
    }
    return result;
}

std::vector<BigInt> invariant_factors_sparse(const SparseIntegerMatrix& input) {
    const std::size_t rows = input.rows();
    const std::size_t cols = input.cols();
    std::vector<std::map<std::size_t, BigInt>> row(rows);
    std::vector<std::set<std::size_t>> col(cols);
    for (std::size_t c = 0; c < cols; ++c) {
        for (const auto& [r, v] : input.column(c)) {
            row[r].emplace(c, v);
            col[c].insert(r);
        }
    }

    // row_dst += q * row_src, keeping the column index in sync.
    auto add_row = [&](std::size_t dst, std::size_t src, const BigInt& q) {
        for (const auto& [c, v] : row[src]) {
            auto [it, inserted] = row[dst].emplace(c, 0);
            it->second += q * v;
            if (sgn(it->second) == 0) {
                row[dst].erase(it);
                col[c].erase(dst);
            } else if (inserted) {
                col[c].insert(dst);
            }
        }
    };
    // col_dst += q * col_src
    auto add_col = [&](std::size_t dst, std::size_t src, const BigInt& q) {
        const std::vector<std::size_t> touched(col[src].begin(), col[src].end());
        for (std::size_t r : touched) {
            const BigInt delta = q * row[r].at(src);
            auto [it, inserted] = row[r].emplace(dst, 0);
            it->second += delta;
            if (sgn(it->second) == 0) {
                row[r].erase(it);
                col[dst].erase(r);
            } else if (inserted) {
                col[dst].insert(r);
            }
        }
    };

    std::vector<BigInt> diagonal;
    while (true) {
        bool found = false;
        std::size_t p = 0, c = 0;
        std::size_t best_cost = std::numeric_limits<std::size_t>::max();
        for (std::size_t r = 0; r < rows; ++r) {
            for (const auto& [j, v] : row[r]) {
                const std::size_t cost = (row[r].size() - 1) * (col[j].size() - 1);
                const int cmp = found ? cmpabs(v, row[p].at(c)) : -1;
                if (cmp < 0 || (cmp == 0 && cost < best_cost)) {
                    found = true;
                    p = r;
                    c = j;
                    best_cost = cost;
                }
            }
        }
        if (!found) break;

        while (true) {
            bool dirty = false;
            const std::vector<std::size_t> others(col[c].begin(), col[c].end());
            for (std::size_t i : others) {
                if (i == p) continue;
                add_row(i, p, -quotient(row[i].at(c), row[p].at(c)));
                dirty = dirty || row[i].count(c) != 0;
            }
            std::vector<std::size_t> row_cols;
            for (const auto& [j, v] : row[p])
                if (j != c) row_cols.push_back(j);
            for (std::size_t j : row_cols) {
                if (!row[p].count(j)) continue;
                add_col(j, c, -quotient(row[p].at(j), row[p].at(c)));
                dirty = dirty || row[p].count(j) != 0;
            }
            if (!dirty) break;
            // Re-pivot on the smallest entry in the pivot row or column.
            std::size_t bp = p, bc = c;
            for (std::size_t i : col[c])
                if (cmpabs(row[i].at(c), row[bp].at(bc)) < 0) bp = i, bc = c;
            for (const auto& [j, v] : row[p])
                if (cmpabs(v, row[bp].at(bc)) < 0) bp = p, bc = j;
            p = bp;
            c = bc;
        }
        diagonal.push_back(abs(row[p].at(c)));
        row[p].clear();
        col[c].clear();
    }
    return normalize_diagonal(std::move(diagonal));
}

SmithForm smith_normal_form(const SparseIntegerMatrix& a, bool with_transforms) {
    if (with_transforms || (a.rows() <= kDenseThreshold && a.cols() <= kDenseThreshold)) {
        return smith_normal_form(a.to_dense(), with_transforms);
    }
    SmithForm result;
    result.diagonal = invariant_factors_sparse(a);
    return result;
}

}  // namespace zk
