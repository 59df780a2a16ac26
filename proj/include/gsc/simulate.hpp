#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "gsc/filter.hpp"
#include "gsc/graph.hpp"
#include "gsc/linalg.hpp"
#include "gsc/spectral.hpp"

namespace gsc {

/// Recorded run of the closed-loop dynamics. steps[i] is the time index of
/// states[i]; errors[i] is the consensus error of states[i] against the mean
/// of x(0). With the default stride of 1, steps is simply 0..t_end.
struct Trajectory {
    std::vector<std::int64_t> steps;
    std::vector<Vector> states;
    Vector errors;
    GainSchedule schedule;
    std::optional<Graph> graph;

    const Vector& initial_state() const { return states.front(); }
    const Vector& final_state() const { return states.back(); }
    double final_error() const { return errors.back(); }
};

struct RunOptions {
    // keep every stride-th state; period ends, step 0 and the final step are
    // always kept so per-period error checks stay possible on long runs
    std::int64_t stride = 1;
};

/// One update x(k+1) = (I - eps L) x = x - eps (L x).
Vector step(const Vector& x, double epsilon, const Matrix& l);

/// Squared consensus error sum_i (x_i - mean(x0))^2.
double consensus_error(const Vector& x, const Vector& x0);

/// Iterate the matrix form on an explicit system matrix (any symmetric matrix
/// with zero row sums; perturbed Laplacians are run through here).
Trajectory run_system(const Vector& x0, const GainSchedule& sched, const Matrix& l, std::int64_t t_end,
                      const RunOptions& opts = {});

/// Matrix form on a graph's Laplacian.
Trajectory run_matrix(const Vector& x0, const GainSchedule& sched, const Graph& g, std::int64_t t_end,
                      const RunOptions& opts = {});

/// Message-passing form: every agent updates from its own state and its
/// neighbors' states and weights only, in synchronous rounds. Agrees with
/// run_matrix to roundoff.
Trajectory run_local(const Vector& x0, const GainSchedule& sched, const Graph& g, std::int64_t t_end,
                     const RunOptions& opts = {});

/// Spectral form x(k) = sum_i h(lambda_i, k) v_i (v_i^T x0) evaluated per
/// recorded step from the eigendecomposition.
Trajectory run_spectral(const Vector& x0, const GainSchedule& sched, const Spectrum& s, std::int64_t t_end,
                        const RunOptions& opts = {});

}  // namespace gsc
