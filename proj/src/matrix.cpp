#include "fls/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "fls/fuzzy_number.hpp"

namespace fls {

Matrix::Matrix(std::size_t rows, std::size_t cols, double fill)
    : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

Matrix::Matrix(std::initializer_list<std::initializer_list<double>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) {
            throw DomainError("ragged matrix initializer");
        }
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

double Matrix::max_abs() const noexcept {
    double m = 0.0;
    for (double x : data_) m = std::max(m, std::abs(x));
    return m;
}

Matrix Matrix::operator+(const Matrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_) {
        throw DomainError("matrix shape mismatch in +");
    }
    Matrix out = *this;
    for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] += other.data_[k];
    return out;
}

Matrix Matrix::operator-(const Matrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_) {
        throw DomainError("matrix shape mismatch in -");
    }
    Matrix out = *this;
    for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] -= other.data_[k];
    return out;
}

std::vector<double> Matrix::operator*(std::span<const double> v) const {
    if (v.size() != cols_) {
        throw DomainError("matrix-vector length mismatch");
    }
    std::vector<double> out(rows_, 0.0);
    for (std::size_t i = 0; i < rows_; ++i) {
        double acc = 0.0;
        for (std::size_t j = 0; j < cols_; ++j) acc += (*this)(i, j) * v[j];
        out[i] = acc;
    }
    return out;
}

CrispMatrix::CrispMatrix(Matrix m) : m_(std::move(m)) {
    if (m_.rows() == 0) {
        throw DomainError("coefficient matrix must have n >= 1");
    }
    if (!m_.is_square()) {
        throw DomainError("coefficient matrix must be square");
    }
    for (std::size_t i = 0; i < m_.rows(); ++i) {
        for (double x : m_.row(i)) {
            if (!std::isfinite(x)) {
                throw DomainError("coefficient matrix entries must be finite");
            }
        }
    }
}

}  // namespace fls
