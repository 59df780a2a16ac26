#pragma once

#include <cstdint>
#include <string>

#include "gsc/filter.hpp"
#include "gsc/linalg.hpp"
#include "gsc/spectral.hpp"

namespace gsc {

enum class PerturbMode { shared_eigenvectors, spectral_jitter };

std::string to_string(PerturbMode m);
PerturbMode parse_perturb_mode(const std::string& name);

/// Estimated Laplacian L0 (with its spectrum) plus a bound delta_bar on how
/// far the true eigenvalues may sit from the estimated ones. Both perturbation
/// modes keep L0's eigenvectors: the deviation hypothesis constrains only
/// eigenvalues, and rotating eigenvectors is out of scope here.
struct UncertaintyModel {
    Matrix estimated;
    Spectrum spectrum;
    double delta_bar = 0.0;
    PerturbMode mode = PerturbMode::shared_eigenvectors;
};

/// Validates connectivity of the estimate (lambda_2 > 0) and delta_bar > 0.
UncertaintyModel make_uncertainty_model(Matrix estimated, double delta_bar, PerturbMode mode);

/// A "true" system matrix consistent with the model.
///   shared_eigenvectors: L0 + delta_bar * V diag{0, I} V^T, deterministic.
///   spectral_jitter: V diag{0, lambda_2 + d_2, ...} V^T with d_i drawn
///     uniformly from [-delta_bar, delta_bar]; draws with lambda_2 + d_2 <= 0
///     are rejected (up to a cap) to keep the zero eigenvalue simple.
/// The result is symmetric with zero row sums but generally not a
/// nonnegative-weight graph Laplacian.
Matrix perturb(const UncertaintyModel& model, std::uint64_t seed);

/// max_i |lambda~_i - lambda_i| pairing both ascending spectra.
double eigen_deviation(const Matrix& l_true, const Spectrum& estimated_spectrum);

/// Symmetric zero-row-sum matrix with the given ascending spectrum
/// (lambda_1 = 0 first), built on the Helmert orthonormal basis whose first
/// vector is the constant one. Lets a model be specified by eigenvalues alone.
Matrix synthesize_estimated(const Vector& eigenvalues);

/// Checks the two estimated-design hypotheses against a concrete true matrix:
/// eigenvalue deviation within delta_bar (with a small numerical slack) and
/// phi_bound below 1. Never throws; the report carries the findings.
BoundReport check_estimation_hypotheses(const UncertaintyModel& model, const Matrix& l_true);

}  // namespace gsc
