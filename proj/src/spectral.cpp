#include "gsc/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace gsc {

namespace {

double off_diagonal_norm(const Matrix& a) {
    double s = 0.0;
    for (int p = 0; p < a.rows(); ++p)
        for (int q = p + 1; q < a.cols(); ++q) s += a(p, q) * a(p, q);
    return std::sqrt(2.0 * s);
}

double frobenius_norm(const Matrix& a) {
    double s = 0.0;
    for (double x : a.data()) s += x * x;
    return std::sqrt(s);
}

// One Jacobi rotation zeroing a(p, q), accumulating the rotation into v.
void rotate(Matrix& a, Matrix& v, int p, int q) {
    const double apq = a(p, q);
    if (apq == 0.0) return;
    const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
    double t;
    if (std::fabs(theta) > 1e150) {
        t = 1.0 / (2.0 * theta);  // tan would underflow through the sqrt
    } else {
        t = 1.0 / (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
        if (theta < 0.0) t = -t;
    }
    const double c = 1.0 / std::sqrt(t * t + 1.0);
    const double s = t * c;
    const double tau = s / (1.0 + c);

    const double app = a(p, p);
    const double aqq = a(q, q);
    a(p, p) = app - t * apq;
    a(q, q) = aqq + t * apq;
    a(p, q) = 0.0;
    a(q, p) = 0.0;
    const int n = a.rows();
    for (int k = 0; k < n; ++k) {
        if (k == p || k == q) continue;
        const double akp = a(k, p);
        const double akq = a(k, q);
        a(k, p) = akp - s * (akq + tau * akp);
        a(p, k) = a(k, p);
        a(k, q) = akq + s * (akp - tau * akq);
        a(q, k) = a(k, q);
    }
    for (int k = 0; k < n; ++k) {
        const double vkp = v(k, p);
        const double vkq = v(k, q);
        v(k, p) = vkp - s * (vkq + tau * vkp);
        v(k, q) = vkq + s * (vkp - tau * vkq);
    }
}

}  // namespace

Spectrum eig_sym(const Matrix& m, const EigOptions& opts) {
    if (m.rows() != m.cols()) throw std::invalid_argument("eig_sym: matrix must be square");
    const int n = m.rows();
    const double scale = std::max(1.0, max_abs(m));
    if (symmetry_defect(m) > opts.symmetry_tol * scale)
        throw std::invalid_argument("eig_sym: matrix is not symmetric within tolerance");

    Matrix a = m;
    // average out representable asymmetry below the tolerance
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const double w = 0.5 * (a(i, j) + a(j, i));
            a(i, j) = w;
            a(j, i) = w;
        }

    Matrix v = Matrix::identity(n);
    const double target = 1e-15 * std::max(1.0, frobenius_norm(a));
    bool converged = false;
    for (int sweep = 0; sweep < opts.max_sweeps; ++sweep) {
        if (off_diagonal_norm(a) <= target) {
            converged = true;
            break;
        }
        for (int p = 0; p < n - 1; ++p)
            for (int q = p + 1; q < n; ++q)
                if (a(p, q) != 0.0) rotate(a, v, p, q);
    }
    if (!converged && off_diagonal_norm(a) > target)
        throw std::runtime_error("eig_sym: Jacobi iteration did not converge, off-diagonal residual " +
                                 std::to_string(off_diagonal_norm(a)));

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int i, int j) { return a(i, i) < a(j, j); });

    Spectrum s;
    s.eigenvalues.resize(n);
    s.eigenvectors = Matrix(n, n);
    for (int col = 0; col < n; ++col) {
        s.eigenvalues[col] = a(order[col], order[col]);
        for (int row = 0; row < n; ++row) s.eigenvectors(row, col) = v(row, order[col]);
    }
    return s;
}

Vector gft(const Spectrum& s, const Vector& x) {
    if (static_cast<int>(x.size()) != s.size()) throw std::invalid_argument("gft: dimension mismatch");
    Vector xhat(x.size(), 0.0);
    for (int i = 0; i < s.size(); ++i) {
        double acc = 0.0;
        for (int k = 0; k < s.size(); ++k) acc += s.eigenvectors(k, i) * x[k];
        xhat[i] = acc;
    }
    return xhat;
}

Vector igft(const Spectrum& s, const Vector& xhat) {
    if (static_cast<int>(xhat.size()) != s.size()) throw std::invalid_argument("igft: dimension mismatch");
    Vector x(xhat.size(), 0.0);
    for (int k = 0; k < s.size(); ++k) {
        double acc = 0.0;
        for (int i = 0; i < s.size(); ++i) acc += s.eigenvectors(k, i) * xhat[i];
        x[k] = acc;
    }
    return x;
}

std::vector<double> distinct_nonzero_eigs(const Spectrum& s, double rel_tol) {
    if (rel_tol < 0.0) throw std::invalid_argument("distinct_nonzero_eigs: rel_tol must be nonnegative");
    const auto& lam = s.eigenvalues;
    if (lam.size() < 2) throw std::invalid_argument("distinct_nonzero_eigs: need at least 2 eigenvalues");
    const double lambda_max = lam.back();
    const double thr = rel_tol * lambda_max;
    if (lambda_max <= thr)  // all eigenvalues in the zero cluster
        throw std::invalid_argument("distinct_nonzero_eigs: spectrum has no nonzero eigenvalues (graph not connected)");
    if (std::fabs(lam.front()) > thr)
        throw std::invalid_argument("distinct_nonzero_eigs: smallest eigenvalue is not zero; not a Laplacian spectrum");

    // cluster ascending eigenvalues on gaps, first cluster is the zero cluster
    std::vector<std::pair<double, int>> clusters;  // (sum, count)
    clusters.emplace_back(lam[0], 1);
    for (std::size_t i = 1; i < lam.size(); ++i) {
        const double prev = lam[i - 1];
        if (lam[i] - prev <= thr) {
            clusters.back().first += lam[i];
            clusters.back().second += 1;
        } else {
            clusters.emplace_back(lam[i], 1);
        }
    }
    if (clusters.front().second > 1)
        throw std::invalid_argument("distinct_nonzero_eigs: lambda_2 falls in the zero cluster (graph not connected)");

    std::vector<double> out;
    for (std::size_t c = 1; c < clusters.size(); ++c) out.push_back(clusters[c].first / clusters[c].second);
    return out;
}

}  // namespace gsc
