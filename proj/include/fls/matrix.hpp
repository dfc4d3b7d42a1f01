#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace fls {

/// Dense row-major matrix of doubles.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, double fill = 0.0);
    Matrix(std::initializer_list<std::initializer_list<double>> rows);

    static Matrix identity(std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::span<const double> row(std::size_t i) const {
        return std::span<const double>(data_).subspan(i * cols_, cols_);
    }

    double max_abs() const noexcept;

    Matrix operator+(const Matrix& other) const;
    Matrix operator-(const Matrix& other) const;
    std::vector<double> operator*(std::span<const double> v) const;

    bool operator==(const Matrix&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

/// Square, finite coefficient matrix with n >= 1.
class CrispMatrix {
public:
    /// Throws DomainError when the invariants fail.
    explicit CrispMatrix(Matrix m);
    CrispMatrix(std::initializer_list<std::initializer_list<double>> rows)
        : CrispMatrix(Matrix(rows)) {}

    std::size_t n() const noexcept { return m_.rows(); }
    double operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
    const Matrix& matrix() const noexcept { return m_; }

    bool operator==(const CrispMatrix&) const = default;

private:
    Matrix m_;
};

}  // namespace fls
