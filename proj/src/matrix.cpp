#include "aspectra/matrix.hpp"

#include "aspectra/error.hpp"

#include <cassert>
#include <sstream>
#include <utility>

namespace aspectra {

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix::Matrix(std::initializer_list<std::initializer_list<long>> rows)
{
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        assert(row.size() == cols_);
        for (long v : row)
            data_.emplace_back(v);
    }
}

Matrix Matrix::identity(std::size_t dim)
{
    Matrix m(dim, dim);
    for (std::size_t i = 0; i < dim; ++i)
        m(i, i) = 1;
    return m;
}

Matrix Matrix::operator*(const Matrix& other) const
{
    assert(cols_ == other.rows_);
    Matrix out(rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& a = (*this)(i, k);
            if (a == 0)
                continue;
            for (std::size_t j = 0; j < other.cols_; ++j) {
                const Rational& b = other(k, j);
                if (b != 0)
                    out(i, j) += a * b;
            }
        }
    return out;
}

Matrix Matrix::operator+(const Matrix& other) const
{
    assert(rows_ == other.rows_ && cols_ == other.cols_);
    Matrix out = *this;
    for (std::size_t i = 0; i < data_.size(); ++i)
        out.data_[i] += other.data_[i];
    return out;
}

Matrix Matrix::operator-(const Matrix& other) const
{
    assert(rows_ == other.rows_ && cols_ == other.cols_);
    Matrix out = *this;
    for (std::size_t i = 0; i < data_.size(); ++i)
        out.data_[i] -= other.data_[i];
    return out;
}

Matrix Matrix::operator*(const Rational& s) const
{
    Matrix out = *this;
    for (auto& v : out.data_)
        v *= s;
    return out;
}

bool Matrix::operator==(const Matrix& other) const
{
    return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
}

Rational Matrix::trace() const
{
    assert(square());
    Rational t = 0;
    for (std::size_t i = 0; i < rows_; ++i)
        t += (*this)(i, i);
    return t;
}

Rational Matrix::determinant() const
{
    assert(square());
    Matrix m = *this;
    Rational det = 1;
    const std::size_t n = rows_;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m(pivot, col) == 0)
            ++pivot;
        if (pivot == n)
            return 0;
        if (pivot != col) {
            for (std::size_t c = 0; c < n; ++c)
                std::swap(m(pivot, c), m(col, c));
            det = -det;
        }
        det *= m(col, col);
        for (std::size_t r = col + 1; r < n; ++r) {
            if (m(r, col) == 0)
                continue;
            Rational f = m(r, col) / m(col, col);
            for (std::size_t c = col; c < n; ++c)
                m(r, c) -= f * m(col, c);
        }
    }
    return det;
}

Matrix Matrix::inverse() const
{
    assert(square());
    const std::size_t n = rows_;
    Matrix m = *this;
    Matrix inv = identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m(pivot, col) == 0)
            ++pivot;
        if (pivot == n)
            throw InvalidRepresentation("matrix is singular");
        if (pivot != col)
            for (std::size_t c = 0; c < n; ++c) {
                std::swap(m(pivot, c), m(col, c));
                std::swap(inv(pivot, c), inv(col, c));
            }
        Rational p = m(col, col);
        for (std::size_t c = 0; c < n; ++c) {
            m(col, c) /= p;
            inv(col, c) /= p;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || m(r, col) == 0)
                continue;
            Rational f = m(r, col);
            for (std::size_t c = 0; c < n; ++c) {
                m(r, c) -= f * m(col, c);
                inv(r, c) -= f * inv(col, c);
            }
        }
    }
    return inv;
}

Matrix Matrix::transpose() const
{
    Matrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            out(j, i) = (*this)(i, j);
    return out;
}

Matrix Matrix::power(unsigned exponent) const
{
    Matrix result = identity(rows_);
    Matrix base = *this;
    while (exponent > 0) {
        if (exponent & 1U)
            result = result * base;
        exponent >>= 1U;
        if (exponent > 0)
            base = base * base;
    }
    return result;
}

bool Matrix::is_identity() const
{
    if (!square())
        return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if ((*this)(i, j) != (i == j ? 1 : 0))
                return false;
    return true;
}

std::string Matrix::to_string() const
{
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? ",[" : "[");
        for (std::size_t j = 0; j < cols_; ++j)
            os << (j ? "," : "") << (*this)(i, j).get_str();
        os << ']';
    }
    os << ']';
    return os.str();
}

Matrix block_diagonal(const Matrix& a, const Matrix& b)
{
    Matrix out(a.rows() + b.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            out(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j)
            out(a.rows() + i, a.cols() + j) = b(i, j);
    return out;
}

Matrix kronecker(const Matrix& a, const Matrix& b)
{
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (a(i, j) == 0)
                continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
        }
    return out;
}

} // namespace aspectra
