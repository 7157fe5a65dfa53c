#ifndef FROBKIT_MATRIX_HPP
#define FROBKIT_MATRIX_HPP

#include "frobkit/bigint.hpp"

namespace frobkit {

/// Dense integer matrix, row-major, exact entries.
class IntMatrix {
public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(size_t rows, size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols, BigInt(0)) {}

    static IntMatrix identity(size_t n) {
        IntMatrix m(n, n);
        for (size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    BigInt& operator()(size_t i, size_t j) { return a_[i * cols_ + j]; }
    const BigInt& operator()(size_t i, size_t j) const { return a_[i * cols_ + j]; }

    bool operator==(const IntMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

    IntMatrix transposed() const {
        IntMatrix t(cols_, rows_);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    IntMatrix operator*(const IntMatrix& o) const {
        if (cols_ != o.rows_) throw InputError("matrix product: shape mismatch");
        IntMatrix r(rows_, o.cols_);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t k = 0; k < cols_; ++k) {
                const BigInt& x = (*this)(i, k);
                if (x == 0) continue;
                for (size_t j = 0; j < o.cols_; ++j) r(i, j) += x * o(k, j);
            }
        return r;
    }

    IntVec column(size_t j) const {
        IntVec c(rows_);
        for (size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
        return c;
    }

    IntVec row(size_t i) const {
        IntVec r(cols_);
        for (size_t j = 0; j < cols_; ++j) r[j] = (*this)(i, j);
        return r;
    }

    void swap_rows(size_t i, size_t j) {
        if (i == j) return;
        for (size_t k = 0; k < cols_; ++k) std::swap((*this)(i, k), (*this)(j, k));
    }
    void swap_cols(size_t i, size_t j) {
        if (i == j) return;
        for (size_t k = 0; k < rows_; ++k) std::swap((*this)(k, i), (*this)(k, j));
    }
    // row(i) += f * row(j)
    void add_row(size_t i, size_t j, const BigInt& f) {
        for (size_t k = 0; k < cols_; ++k) (*this)(i, k) += f * (*this)(j, k);
    }
    // col(i) += f * col(j)
    void add_col(size_t i, size_t j, const BigInt& f) {
        for (size_t k = 0; k < rows_; ++k) (*this)(k, i) += f * (*this)(k, j);
    }
    void negate_row(size_t i) {
        for (size_t k = 0; k < cols_; ++k) (*this)(i, k) = -(*this)(i, k);
    }

private:
    size_t rows_, cols_;
    std::vector<BigInt> a_;
};

/// Rank over Q of a list of integer vectors (fraction-free elimination).
size_t rank_of(std::vector<IntVec> vecs);

/// Determinant by Bareiss elimination; square input.
BigInt determinant(IntMatrix m);

}  // namespace frobkit

#endif
