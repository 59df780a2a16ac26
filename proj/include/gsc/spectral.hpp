#pragma once

#include <vector>

#include "gsc/linalg.hpp"

namespace gsc {

/// Eigendecomposition of a symmetric matrix: ascending eigenvalues and an
/// orthonormal eigenvector matrix whose column i pairs with eigenvalues[i].
/// Eigenvector signs (and the basis within a degenerate eigenspace) are not
/// pinned down; consumers must only rely on sign-invariant quantities.
struct Spectrum {
    Vector eigenvalues;
    Matrix eigenvectors;

    int size() const { return static_cast<int>(eigenvalues.size()); }

    /// Copy of column i.
    Vector eigenvector(int i) const {
        Vector v(eigenvalues.size());
        for (int r = 0; r < size(); ++r) v[static_cast<std::size_t>(r)] = eigenvectors(r, i);
        return v;
    }
};

struct EigOptions {
    int max_sweeps = 100;
    double symmetry_tol = 1e-12;  // relative to max(1, max|entry|)
};

/// Cyclic Jacobi rotation on a dense symmetric matrix. Deterministic for a
/// fixed input; throws if the input is not symmetric or if the off-diagonal
/// norm fails to vanish within max_sweeps (the residual is reported).
Spectrum eig_sym(const Matrix& m, const EigOptions& opts = {});

/// Graph Fourier transform xhat = V^T x.
Vector gft(const Spectrum& s, const Vector& x);

/// Inverse transform x = V xhat.
Vector igft(const Spectrum& s, const Vector& xhat);

/// Distinct nonzero eigenvalues of a connected-graph Laplacian spectrum.
/// Eigenvalues separated by a gap of at most rel_tol * lambda_max are merged
/// into one cluster represented by its mean; the cluster holding lambda_1 = 0
/// is dropped. Throws when lambda_2 falls inside the zero cluster, i.e. the
/// source graph was not connected.
std::vector<double> distinct_nonzero_eigs(const Spectrum& s, double rel_tol = 1e-8);

}  // namespace gsc
