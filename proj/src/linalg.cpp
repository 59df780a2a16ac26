#include "gsc/linalg.hpp"

#include <cmath>
#include <stdexcept>

namespace gsc {

Matrix Matrix::identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix product: inner dimensions differ");
    Matrix c(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int k = 0; k < a.cols(); ++k) {
            const double aik = a(i, k);
            if (aik == 0.0) continue;
            for (int j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
        }
    }
    return c;
}

Vector operator*(const Matrix& m, const Vector& v) {
    if (m.cols() != static_cast<int>(v.size())) throw std::invalid_argument("matrix-vector product: dimension mismatch");
    Vector out(m.rows(), 0.0);
    for (int i = 0; i < m.rows(); ++i) {
        double s = 0.0;
        for (int j = 0; j < m.cols(); ++j) s += m(i, j) * v[j];
        out[i] = s;
    }
    return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("matrix sum: shape mismatch");
    Matrix c(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) + b(i, j);
    return c;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("matrix difference: shape mismatch");
    Matrix c(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) - b(i, j);
    return c;
}

Matrix operator*(double s, const Matrix& m) {
    Matrix c(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) c(i, j) = s * m(i, j);
    return c;
}

Matrix transpose(const Matrix& m) {
    Matrix t(m.cols(), m.rows());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) t(j, i) = m(i, j);
    return t;
}

Matrix add_scaled_outer(const Matrix& a, double s, const Vector& v) {
    if (a.rows() != static_cast<int>(v.size()) || a.cols() != static_cast<int>(v.size()))
        throw std::invalid_argument("add_scaled_outer: dimension mismatch");
    Matrix c = a;
    for (int i = 0; i < c.rows(); ++i)
        for (int j = 0; j < c.cols(); ++j) c(i, j) += s * v[i] * v[j];
    return c;
}

double max_abs(const Matrix& m) {
    double r = 0.0;
    for (double x : m.data()) r = std::max(r, std::fabs(x));
    return r;
}

double max_abs_diff(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("max_abs_diff: shape mismatch");
    double r = 0.0;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) r = std::max(r, std::fabs(a(i, j) - b(i, j)));
    return r;
}

double symmetry_defect(const Matrix& m) {
    double r = 0.0;
    for (int i = 0; i < m.rows(); ++i)
        for (int j = i + 1; j < m.cols(); ++j) r = std::max(r, std::fabs(m(i, j) - m(j, i)));
    return r;
}

double dot(const Vector& a, const Vector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

double norm(const Vector& v) { return std::sqrt(dot(v, v)); }

}  // namespace gsc
