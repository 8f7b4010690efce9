#pragma once

#include "aspectra/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace aspectra {

/// Dense square-or-rectangular matrix over the rationals, row-major.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols);
    Matrix(std::initializer_list<std::initializer_list<long>> rows);

    static Matrix identity(std::size_t dim);
    static Matrix zero(std::size_t dim) { return Matrix(dim, dim); }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool square() const noexcept { return rows_ == cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    Matrix operator*(const Matrix& other) const;
    Matrix operator+(const Matrix& other) const;
    Matrix operator-(const Matrix& other) const;
    Matrix operator*(const Rational& s) const;
    bool operator==(const Matrix& other) const;

    Rational trace() const;
    Rational determinant() const;
    bool invertible() const { return determinant() != 0; }
    /// Throws InvalidRepresentation when singular.
    Matrix inverse() const;
    Matrix transpose() const;
    Matrix power(unsigned exponent) const;

    bool is_identity() const;

    std::string to_string() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

/// Block-diagonal sum.
Matrix block_diagonal(const Matrix& a, const Matrix& b);
/// Kronecker product.
Matrix kronecker(const Matrix& a, const Matrix& b);

} // namespace aspectra
