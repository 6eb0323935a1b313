#pragma once

#include "gkz/rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace gkz {

/// Dense row-major matrix over an exact ring.
template <typename T> class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = 1;
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    T &operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const T &operator()(std::size_t r, std::size_t c) const {
        return data_[r * cols_ + c];
    }

    std::vector<T> column(std::size_t c) const {
        std::vector<T> out(rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            out[r] = (*this)(r, c);
        return out;
    }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b)
            return;
        for (std::size_t c = 0; c < cols_; ++c)
            std::swap((*this)(a, c), (*this)(b, c));
    }

    void swap_cols(std::size_t a, std::size_t b) {
        if (a == b)
            return;
        for (std::size_t r = 0; r < rows_; ++r)
            std::swap((*this)(r, a), (*this)(r, b));
    }

    /// Copy keeping only the listed columns, in the given order.
    Matrix select_columns(const std::vector<std::size_t> &keep) const {
        Matrix out(rows_, keep.size());
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < keep.size(); ++c)
                out(r, c) = (*this)(r, keep[c]);
        return out;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;

RatMatrix to_rational(const IntMatrix &m);

/// In-place reduced row echelon form; returns the pivot columns.
std::vector<std::size_t> row_reduce(RatMatrix &m);

std::size_t rank(RatMatrix m);

/// Basis of the right kernel {x : m x = 0}.
std::vector<RatVector> kernel_basis(RatMatrix m);

/// Some solution of m x = b (free variables set to zero), or nullopt when
/// the system is inconsistent.
std::optional<RatVector> solve(const RatMatrix &m, const RatVector &b);

/// Nonzero invariant factors (positive, each dividing the next).
std::vector<Integer> smith_invariants(IntMatrix m);

/// Column-style echelon reduction by unimodular column operations:
/// a * transform = [basis | 0], where the columns of `basis` are a Z-basis
/// of the group generated by the columns of a.
struct ColumnEchelon {
    IntMatrix basis;
    IntMatrix transform;
};
ColumnEchelon column_echelon(const IntMatrix &a);

/// Scales a nonzero rational vector to coprime integers, preserving sign.
std::vector<Integer> primitive_integer_vector(const RatVector &v);

} // namespace gkz
