#include "gsc/uncertainty.hpp"

#include <cmath>
#include <stdexcept>

#include "gsc/random.hpp"

namespace gsc {

namespace {

constexpr int kJitterRejectionCap = 10000;
constexpr double kDefaultTargetRatio = 1e-6;

// V diag(d) V^T filled symmetrically so the result has zero symmetry defect
Matrix reconstruct(const Matrix& v, const Vector& d) {
    const int n = v.rows();
    Matrix out(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            double s = 0.0;
            for (int k = 0; k < n; ++k) s += d[static_cast<std::size_t>(k)] * v(i, k) * v(j, k);
            out(i, j) = s;
            out(j, i) = s;
        }
    }
    return out;
}

}  // namespace

std::string to_string(PerturbMode m) {
    return m == PerturbMode::shared_eigenvectors ? "shared_eigenvectors" : "spectral_jitter";
}

PerturbMode parse_perturb_mode(const std::string& name) {
    if (name == "shared_eigenvectors") return PerturbMode::shared_eigenvectors;
    if (name == "spectral_jitter") return PerturbMode::spectral_jitter;
    throw std::invalid_argument("unknown perturbation mode: " + name);
}

UncertaintyModel make_uncertainty_model(Matrix estimated, double delta_bar, PerturbMode mode) {
    if (!(delta_bar > 0.0)) throw std::invalid_argument("uncertainty model: delta_bar must be positive");
    Spectrum s = eig_sym(estimated);
    if (s.size() < 2) throw std::invalid_argument("uncertainty model: need at least 2 nodes");
    const double scale = std::max(1.0, s.eigenvalues.back());
    if (s.eigenvalues[1] <= 1e-9 * scale)
        throw std::invalid_argument("uncertainty model: estimated Laplacian is not connected (lambda_2 ~ 0)");
    return UncertaintyModel{std::move(estimated), std::move(s), delta_bar, mode};
}

Matrix perturb(const UncertaintyModel& model, std::uint64_t seed) {
    const int n = model.spectrum.size();
    if (model.mode == PerturbMode::shared_eigenvectors) {
        // L0 + delta_bar (I - v1 v1^T); v1 is the constant eigenvector
        Vector v1(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) v1[static_cast<std::size_t>(i)] = model.spectrum.eigenvectors(i, 0);
        Matrix shifted = model.estimated;
        for (int i = 0; i < n; ++i) shifted(i, i) += model.delta_bar;
        return add_scaled_outer(shifted, -model.delta_bar, v1);
    }

    Rng rng(seed);
    for (int attempt = 0; attempt < kJitterRejectionCap; ++attempt) {
        Vector d(static_cast<std::size_t>(n), 0.0);
        for (int i = 1; i < n; ++i)
            d[static_cast<std::size_t>(i)] =
                model.spectrum.eigenvalues[static_cast<std::size_t>(i)] + rng.uniform(-model.delta_bar, model.delta_bar);
        if (d[1] <= 0.0) continue;  // would disconnect the spectrum
        return reconstruct(model.spectrum.eigenvectors, d);
    }
    throw std::runtime_error("perturb: spectral jitter rejected " + std::to_string(kJitterRejectionCap) +
                             " draws; delta_bar too large relative to lambda_2");
}

double eigen_deviation(const Matrix& l_true, const Spectrum& estimated_spectrum) {
    if (l_true.rows() != estimated_spectrum.size())
        throw std::invalid_argument("eigen_deviation: dimension mismatch");
    const Spectrum s = eig_sym(l_true);
    double dev = 0.0;
    for (int i = 0; i < s.size(); ++i)
        dev = std::max(dev, std::fabs(s.eigenvalues[static_cast<std::size_t>(i)] -
                                      estimated_spectrum.eigenvalues[static_cast<std::size_t>(i)]));
    return dev;
}

Matrix synthesize_estimated(const Vector& eigenvalues) {
    const int n = static_cast<int>(eigenvalues.size());
    if (n < 2) throw std::invalid_argument("synthesize_estimated: need at least 2 eigenvalues");
    for (int i = 1; i < n; ++i)
        if (eigenvalues[static_cast<std::size_t>(i)] < eigenvalues[static_cast<std::size_t>(i - 1)])
            throw std::invalid_argument("synthesize_estimated: eigenvalues must be ascending");
    if (std::fabs(eigenvalues[0]) > 1e-12 * std::max(1.0, eigenvalues.back()))
        throw std::invalid_argument("synthesize_estimated: lambda_1 must be zero");

    Matrix v(n, n);
    const double inv_sqrt_n = 1.0 / std::sqrt(static_cast<double>(n));
    for (int i = 0; i < n; ++i) v(i, 0) = inv_sqrt_n;
    for (int k = 1; k < n; ++k) {  // Helmert vectors, orthogonal to the constant one
        const double denom = std::sqrt(static_cast<double>(k) * (k + 1.0));
        for (int i = 0; i < k; ++i) v(i, k) = 1.0 / denom;
        v(k, k) = -static_cast<double>(k) / denom;
    }
    return reconstruct(v, eigenvalues);
}

BoundReport check_estimation_hypotheses(const UncertaintyModel& model, const Matrix& l_true) {
    BoundReport report;
    report.deviation = eigen_deviation(l_true, model.spectrum);
    report.deviation_ok = report.deviation <= model.delta_bar + 1e-9;
    report.phi = phi_bound(model.spectrum.eigenvalues, model.delta_bar);
    report.contractive = report.phi < 1.0;
    report.per_period_exponent = report.contractive ? periods_to_target(report.phi, kDefaultTargetRatio) : 0;
    return report;
}

}  // namespace gsc
