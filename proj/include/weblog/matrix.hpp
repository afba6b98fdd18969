#pragma once

#include <cstddef>
#include <vector>

#include "weblog/errors.hpp"

namespace weblog {

using Vector = std::vector<double>;

// Dense row-major matrix of doubles. Sizes here are small (a few hundred
// rows/columns), so no BLAS backend is used.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, double value = 0.0)
        : rows_(rows), cols_(cols), data_(rows * cols, value) {}

    static Matrix from_rows(const std::vector<std::vector<double>>& rows);

    double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return data_.empty(); }

    Vector col(std::size_t j) const;
    void set_col(std::size_t j, const Vector& v);

    const std::vector<double>& data() const { return data_; }
    std::vector<double>& data() { return data_; }

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

double dot(const Vector& a, const Vector& b);
double l2_norm(const Vector& v);

// v / ||v||2; throws ZeroVector when the norm vanishes.
Vector normalize(const Vector& v);

Vector matvec(const Matrix& a, const Vector& x);    // A x
Vector tmatvec(const Matrix& a, const Vector& x);   // A^T x
Matrix matmul(const Matrix& a, const Matrix& b);
Matrix transpose(const Matrix& a);

bool all_finite(const Vector& v);
bool all_finite(const Matrix& a);

}  // namespace weblog
