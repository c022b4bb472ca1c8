#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <vector>

#include "lefschetz/scalar.hpp"

namespace lefschetz {

/// Dense matrix over the rationals, row-major. A 0x0 matrix is legal and is
/// the action on a trivial homology group.
class Matrix {
   public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols);
    /// Integer literal rows, e.g. Matrix{{0, 1}, {1, 0}}. All rows must have
    /// the same length.
    Matrix(std::initializer_list<std::initializer_list<long>> rows);

    static Matrix identity(std::size_t n);
    static Matrix from_rows(const std::vector<std::vector<Rational>>& rows);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }
    bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    bool is_zero() const;
    bool is_integral() const;

    Rational trace() const;
    Matrix transpose() const;

    /// Copy of the nr x nc submatrix whose top-left corner is (r0, c0).
    Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
    void set_block(std::size_t r0, std::size_t c0, const Matrix& b);

    /// Submatrix on the given (ascending) row and column index lists.
    Matrix submatrix(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const;

    Matrix& operator+=(const Matrix& rhs);
    Matrix& operator-=(const Matrix& rhs);
    Matrix& operator*=(const Rational& k);

    friend Matrix operator+(Matrix lhs, const Matrix& rhs) { return lhs += rhs; }
    friend Matrix operator-(Matrix lhs, const Matrix& rhs) { return lhs -= rhs; }
    friend Matrix operator*(Matrix lhs, const Rational& k) { return lhs *= k; }
    /// Uses the parallel kernel; see kernels.hpp.
    friend Matrix operator*(const Matrix& lhs, const Matrix& rhs);

    friend bool operator==(const Matrix& a, const Matrix& b) = default;

    const std::vector<Rational>& data() const noexcept { return data_; }

   private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

/// Block diagonal / direct sum of two matrices.
Matrix direct_sum(const Matrix& a, const Matrix& b);

std::ostream& operator<<(std::ostream& os, const Matrix& m);

}  // namespace lefschetz
