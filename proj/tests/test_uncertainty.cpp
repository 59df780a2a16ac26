#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "gsc/filter.hpp"
#include "gsc/simulate.hpp"
#include "gsc/spectral.hpp"
#include "gsc/uncertainty.hpp"
#include "test_support.hpp"

using namespace gsc;
using namespace gsc::test;

namespace {

UncertaintyModel c6_model(double delta, PerturbMode mode) {
  return make_uncertainty_model(laplacian(make_cycle(6)), delta, mode);
}

}  // namespace

TEST_CASE("shared-eigenvector perturbation shifts every nonzero eigenvalue by delta") {
  UncertaintyModel m = c6_model(0.5, PerturbMode::shared_eigenvectors);
  Matrix lt = perturb(m, 0);
  Spectrum s = eig_sym(lt);
  const double expect[6] = {0.0, 1.5, 1.5, 3.5, 3.5, 4.5};
  for (int i = 0; i < 6; ++i) CHECK(std::abs(s.eigenvalues[i] - expect[i]) <= 1e-9);
  // Still a valid system matrix: symmetric with zero row sums.
  CHECK(symmetry_defect(lt) <= 1e-12);
  Vector ones(6, 1.0);
  for (double v : lt * ones) CHECK(std::abs(v) <= 1e-9);
}

TEST_CASE("shared-eigenvector perturbation ignores the seed") {
  UncertaintyModel m = c6_model(0.5, PerturbMode::shared_eigenvectors);
  Matrix a = perturb(m, 1);
  Matrix b = perturb(m, 999);
  CHECK(max_abs_diff(a, b) == 0.0);
}

TEST_CASE("vanishing delta leaves the estimate nearly unchanged") {
  UncertaintyModel m = c6_model(1e-12, PerturbMode::shared_eigenvectors);
  CHECK(max_abs_diff(perturb(m, 0), m.estimated) <= 1e-11);
}

TEST_CASE("spectral jitter is reproducible and respects the deviation budget") {
  UncertaintyModel m = c6_model(0.3, PerturbMode::spectral_jitter);
  Matrix a = perturb(m, 42);
  Matrix b = perturb(m, 42);
  CHECK(max_abs_diff(a, b) == 0.0);
  Matrix c = perturb(m, 43);
  CHECK(max_abs_diff(a, c) > 0.0);

  for (unsigned long long seed = 0; seed < 20; ++seed) {
    Matrix lt = perturb(m, seed);
    CHECK(symmetry_defect(lt) == 0.0);
    Vector ones(6, 1.0);
    for (double v : lt * ones) CHECK(std::abs(v) <= 1e-9);
    Spectrum s = eig_sym(lt);
    CHECK(std::abs(s.eigenvalues[0]) <= 1e-9);
    CHECK(s.eigenvalues[1] > 0.0);  // connectivity preserved by rejection
    CHECK(eigen_deviation(lt, m.spectrum) <= m.delta_bar + 1e-9);
  }
}

TEST_CASE("eigen deviation pairs ascending spectra") {
  UncertaintyModel m = c6_model(0.5, PerturbMode::shared_eigenvectors);
  CHECK(eigen_deviation(m.estimated, m.spectrum) <= 1e-10);
  CHECK(std::abs(eigen_deviation(perturb(m, 0), m.spectrum) - 0.5) <= 1e-9);

  // Hand-checkable diagonal case: spectra {0,1,3} vs {0,1.5,2.8}.
  Matrix a(3, 3), b(3, 3);
  a(1, 1) = 1.0;
  a(2, 2) = 3.0;
  b(1, 1) = 1.5;
  b(2, 2) = 2.8;
  CHECK(std::abs(eigen_deviation(b, eig_sym(a)) - 0.5) <= 1e-12);

  Matrix wrong(2, 2);
  CHECK_THROWS_AS(eigen_deviation(wrong, m.spectrum), std::invalid_argument);
}

TEST_CASE("model validation") {
  CHECK_THROWS_AS(c6_model(0.0, PerturbMode::shared_eigenvectors), std::invalid_argument);
  CHECK_THROWS_AS(c6_model(-0.1, PerturbMode::shared_eigenvectors), std::invalid_argument);
  // Disconnected estimate: lambda_2 ~ 0 is rejected up front.
  Matrix l = laplacian(make_disconnected());
  CHECK_THROWS_AS(make_uncertainty_model(l, 0.5, PerturbMode::shared_eigenvectors),
                  std::invalid_argument);
}

TEST_CASE("hypothesis report on the 6-cycle example") {
  UncertaintyModel m = c6_model(0.5, PerturbMode::shared_eigenvectors);
  BoundReport r = check_estimation_hypotheses(m, perturb(m, 0));
  CHECK(r.deviation_ok);
  CHECK(std::abs(r.deviation - 0.5) <= 1e-9);
  double expect_phi = 25.0 / 16384.0;
  CHECK(std::abs(r.phi - expect_phi) <= 1e-12 * expect_phi);
  CHECK(r.contractive);
  CHECK(r.per_period_exponent == periods_to_target(expect_phi, 1e-6));
  CHECK_FALSE(r.psi.has_value());
}

TEST_CASE("hypothesis report flags deviations beyond the budget") {
  UncertaintyModel wide = c6_model(1.0, PerturbMode::shared_eigenvectors);
  Matrix l_true = perturb(wide, 0);
  UncertaintyModel narrow = c6_model(0.5, PerturbMode::shared_eigenvectors);
  BoundReport r = check_estimation_hypotheses(narrow, l_true);
  CHECK_FALSE(r.deviation_ok);
  CHECK(r.deviation > 0.5);
}

TEST_CASE("hypothesis report flags a non-contractive bound") {
  // Tiny spectral gap with a large budget pushes phi over 1.
  Matrix l = synthesize_estimated({0.0, 0.1, 5.0});
  UncertaintyModel m = make_uncertainty_model(l, 1.0, PerturbMode::shared_eigenvectors);
  BoundReport r = check_estimation_hypotheses(m, m.estimated);
  CHECK(r.phi >= 1.0);
  CHECK_FALSE(r.contractive);
}

TEST_CASE("synthesized estimate realizes a prescribed spectrum") {
  Vector eigs = {0.0, 1.0, 1.0, 3.0, 3.0, 4.0};
  Matrix l = synthesize_estimated(eigs);
  REQUIRE(l.rows() == 6);
  CHECK(symmetry_defect(l) <= 1e-12);
  Vector ones(6, 1.0);
  for (double v : l * ones) CHECK(std::abs(v) <= 1e-9);
  Spectrum s = eig_sym(l);
  for (int i = 0; i < 6; ++i) CHECK(std::abs(s.eigenvalues[i] - eigs[i]) <= 1e-9);

  CHECK_THROWS_AS(synthesize_estimated({0.0}), std::invalid_argument);
  CHECK_THROWS_AS(synthesize_estimated({0.5, 1.0}), std::invalid_argument);
  CHECK_THROWS_AS(synthesize_estimated({0.0, 2.0, 1.0}), std::invalid_argument);
}

TEST_CASE("perturbed runs still converge per period under the estimated design") {
  // The practically observed contraction per period keeps the error
  // decreasing whenever the deviation hypothesis holds.
  UncertaintyModel m = c6_model(0.5, PerturbMode::shared_eigenvectors);
  GainSchedule sched = design_estimated_periodic(m.spectrum.eigenvalues);
  Matrix lt = perturb(m, 0);
  Rng rng(71);
  for (int trial = 0; trial < 5; ++trial) {
    Vector x0 = random_state(rng, 6);
    Trajectory t = run_system(x0, sched, lt, 25);
    for (int j = 1; 5 * j <= 25; ++j)
      CHECK(t.errors[static_cast<std::size_t>(5 * j)] <
            t.errors[static_cast<std::size_t>(5 * (j - 1))]);
    CHECK(t.errors[25] <= 1e-3 * t.errors[0]);
  }
}

TEST_CASE("perturb-mode names round-trip") {
  CHECK(parse_perturb_mode("shared_eigenvectors") == PerturbMode::shared_eigenvectors);
  CHECK(parse_perturb_mode("spectral_jitter") == PerturbMode::spectral_jitter);
  CHECK_THROWS_AS(parse_perturb_mode("other"), std::invalid_argument);
  CHECK(to_string(PerturbMode::spectral_jitter) == std::string("spectral_jitter"));
}
