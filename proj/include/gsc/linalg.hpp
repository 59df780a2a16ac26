#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace gsc {

using Vector = std::vector<double>;

/// Dense row-major matrix of doubles. Sized at construction, zero-initialized.
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, 0.0) {}

    static Matrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    double& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
    double operator()(int i, int j) const { return data_[static_cast<std::size_t>(i) * cols_ + j]; }

    std::span<const double> data() const { return data_; }

    bool operator==(const Matrix&) const = default;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<double> data_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Vector operator*(const Matrix& m, const Vector& v);
Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator*(double s, const Matrix& m);

Matrix transpose(const Matrix& m);

/// rank-1 update helper: a + s * v v^T
Matrix add_scaled_outer(const Matrix& a, double s, const Vector& v);

double max_abs(const Matrix& m);
double max_abs_diff(const Matrix& a, const Matrix& b);

/// max |a_ij - a_ji|, zero for a symmetric matrix
double symmetry_defect(const Matrix& m);

double dot(const Vector& a, const Vector& b);
double norm(const Vector& v);

}  // namespace gsc
