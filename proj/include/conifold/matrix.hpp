#pragma once

// Dense matrices over an exact field context, with elimination-based rank and
// kernel computation. Everything is deterministic: pivots are chosen as the
// first nonzero entry in column order, never by magnitude, so the same input
// produces the same echelon form over any exact field.

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "rng.hpp"

namespace conifold {

template <class F>
class Matrix {
public:
    using S = typename F::Scalar;

    Matrix(const F& field, std::size_t rows, std::size_t cols)
        : field_(field), rows_(rows), cols_(cols), data_(rows * cols, field.zero()) {}

    static Matrix from_rows(const F& field, const std::vector<std::vector<S>>& rows) {
        const std::size_t r = rows.size();
        const std::size_t c = r == 0 ? 0 : rows.front().size();
        Matrix m(field, r, c);
        for (std::size_t i = 0; i < r; ++i) {
            if (rows[i].size() != c)
                throw std::invalid_argument("Matrix::from_rows: ragged rows");
            for (std::size_t j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
        }
        return m;
    }

    const F& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    S& at(std::size_t r, std::size_t c) {
        bounds(r, c);
        return data_[r * cols_ + c];
    }
    const S& at(std::size_t r, std::size_t c) const {
        bounds(r, c);
        return data_[r * cols_ + c];
    }

    Matrix transposed() const {
        Matrix t(field_, cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
        return t;
    }

    std::vector<S> apply(const std::vector<S>& v) const {
        if (v.size() != cols_) throw std::invalid_argument("Matrix::apply: size mismatch");
        std::vector<S> out(rows_, field_.zero());
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) out[r] += at(r, c) * v[c];
        return out;
    }

    // In-place reduced row echelon form. Returns the pivot column indices in
    // ascending order; their count is the rank.
    std::vector<std::size_t> rref() {
        std::vector<std::size_t> pivots;
        std::size_t row = 0;
        for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
            std::size_t piv = row;
            while (piv < rows_ && field_.is_zero(at(piv, col))) ++piv;
            if (piv == rows_) continue;
            if (piv != row)
                for (std::size_t c = 0; c < cols_; ++c) std::swap(at(row, c), at(piv, c));
            const S scale = field_.inv(at(row, col));
            for (std::size_t c = col; c < cols_; ++c) at(row, c) = at(row, c) * scale;
            for (std::size_t r = 0; r < rows_; ++r) {
                if (r == row || field_.is_zero(at(r, col))) continue;
                const S factor = at(r, col);
                for (std::size_t c = col; c < cols_; ++c)
                    at(r, c) = at(r, c) - factor * at(row, c);
            }
            pivots.push_back(col);
            ++row;
        }
        return pivots;
    }

private:
    void bounds(std::size_t r, std::size_t c) const {
        if (r >= rows_ || c >= cols_) throw std::out_of_range("Matrix: index out of range");
    }

    F field_;
    std::size_t rows_, cols_;
    std::vector<S> data_;
};

template <class F>
std::size_t rank(const Matrix<F>& m) {
    Matrix<F> work = m;
    return work.rref().size();
}

// Basis of the right kernel {v : Mv = 0}, one vector per free column, in
// ascending free-column order. The basis is in the standard reduced form:
// vector for free column f has a 1 at f and the negated echelon entries at
// the pivot columns. Empty input edge cases: a matrix with no rows has the
// full standard basis as its kernel; a matrix with no columns has an empty
// basis.
template <class F>
std::vector<std::vector<typename F::Scalar>> kernel_basis(const Matrix<F>& m) {
    using S = typename F::Scalar;
    const F& field = m.field();
    Matrix<F> work = m;
    const std::vector<std::size_t> pivots = work.rref();

    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t p : pivots) is_pivot[p] = true;

    std::vector<std::vector<S>> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        std::vector<S> v(m.cols(), field.zero());
        v[f] = field.one();
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -work.at(r, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

template <class F>
Matrix<F> random_matrix(const F& field, SeededRng& rng, std::size_t rows, std::size_t cols) {
    Matrix<F> m(field, rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = field.random(rng);
    return m;
}

}  // namespace conifold
