#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace gsc {

enum class Provenance { finite_time, estimated_periodic, unknown_topology, custom };

std::string to_string(Provenance p);
Provenance parse_provenance(const std::string& name);

/// Sequence of control gains eps_k. Either a finite prefix (gain_at returns 0
/// beyond it, which freezes the state) or a prefix of length P repeating
/// forever with period P.
class GainSchedule {
public:
    static GainSchedule finite(std::vector<double> prefix, Provenance provenance = Provenance::custom);
    static GainSchedule periodic(std::vector<double> prefix, Provenance provenance = Provenance::custom);

    double gain_at(std::int64_t k) const;

    /// Prefix length: the consensus time p for finite designs, the period P
    /// for periodic ones.
    int length() const { return static_cast<int>(prefix_.size()); }

    std::span<const double> prefix() const { return prefix_; }
    std::optional<int> period() const { return period_; }
    Provenance provenance() const { return provenance_; }

private:
    GainSchedule(std::vector<double> prefix, std::optional<int> period, Provenance provenance);
    std::vector<double> prefix_;
    std::optional<int> period_;
    Provenance provenance_;
};

/// Protocol filter h(lambda, t) = prod_{k=0}^{t-1} (1 - eps_k * lambda).
/// The empty product (t = 0) is 1, and h(0, t) = 1 for every schedule.
/// Average consensus is reached at time T exactly when h vanishes at every
/// nonzero Laplacian eigenvalue while h(0, T) stays 1.
double filter_response(const GainSchedule& sched, double lambda, std::int64_t t);

/// Finite-time design: gains 1/lambda_{p+1}, ..., 1/lambda_2, the reciprocals
/// of the p distinct nonzero eigenvalues in descending order. The resulting
/// filter vanishes at every nonzero eigenvalue from time p on, so consensus
/// is exact at time p.
GainSchedule design_finite_time(std::span<const double> distinct_nonzero);
inline GainSchedule design_finite_time(std::initializer_list<double> l) {
    return design_finite_time(std::span<const double>(l.begin(), l.size()));
}

/// Periodic design from the full ascending eigenvalue list (lambda_1 = 0
/// included, repeated eigenvalues repeated): one period of length N-1 with
/// gains 1/lambda_N, ..., 1/lambda_2. Used when the list comes from an
/// estimated Laplacian.
GainSchedule design_estimated_periodic(std::span<const double> eigenvalues);
inline GainSchedule design_estimated_periodic(std::initializer_list<double> l) {
    return design_estimated_periodic(std::span<const double>(l.begin(), l.size()));
}

/// Topology-blind periodic design from the maximum degree alone:
/// eps_k = T0 / (2 (T0 - k) dbar) for k = 0..T0-1, period T0. The gain
/// reciprocals sit at the right endpoints of the T0 uniform subintervals of
/// [0, 2 dbar], which contains the whole spectrum by Gershgorin.
GainSchedule design_unknown_topology(double d_bar, int t0);

/// Per-period squared-error contraction factor for the estimated-spectrum
/// design under eigenvalue deviation at most delta_bar:
///   phi = (delta_bar^2 / lambda_2^2) * prod_{k=1}^{N-2} (1 - (lambda_2 + delta_bar) / lambda_{k+2})^2.
/// For N = 2 the product is empty and phi = delta_bar^2 / lambda_2^2.
double phi_bound(std::span<const double> eigenvalues, double delta_bar);
inline double phi_bound(std::initializer_list<double> l, double delta_bar) {
    return phi_bound(std::span<const double>(l.begin(), l.size()), delta_bar);
}

struct PsiOptions {
    int grid_points = 100001;   // uniform samples of (0, 2*dbar]
    double refine_tol = 1e-10;  // golden-section bracket tolerance, relative to 2*dbar
};

/// Largest magnitude of the unknown-topology per-period filter over
/// lambda in (0, 2*dbar]: grid maximization followed by golden-section
/// refinement around the grid argmax. The supremum 1 is approached only as
/// lambda -> 0, which the grid excludes, so the result is strictly below 1.
/// Consensus error then satisfies e(j*T0) <= psi^(2j) * ||x(0)||^2.
double psi_bound(double d_bar, int t0, const PsiOptions& opts = {});

/// Contraction value max{1 - ln(T0+1)/alpha, 1/(2*T0)} valid when
/// lambda_2 >= 2*dbar/(alpha*T0). See varphi_alpha_contractive for the range
/// of alpha in which the value actually certifies contraction.
double varphi_alpha_bound(int t0, double alpha);

/// False when the value is 1 or more in magnitude, or when the first branch
/// 1 - ln(T0+1)/alpha drops to -1 or below (alpha too small for the bound to
/// mean anything).
bool varphi_alpha_contractive(int t0, double alpha);

/// Outcome of a bound evaluation. phi is the per-period squared-error factor
/// (phi_bound for the estimated design, psi^2 or varphi_alpha^2 for the
/// unknown-topology design); psi carries the raw filter magnitude bound when
/// one was computed.
struct BoundReport {
    double phi = 0.0;
    std::optional<double> psi;
    bool contractive = false;
    std::int64_t per_period_exponent = 0;
    bool deviation_ok = true;        // |spectrum deviation| <= delta_bar where applicable
    double deviation = 0.0;
};

/// Periods j needed to drive the error bound factor^j down to target_ratio
/// (target error over ||x(0)||^2). Returns 1 when the factor is 0 (exact
/// consensus after one period); throws if the factor is not contractive.
std::int64_t periods_to_target(double per_period_factor, double target_ratio);

}  // namespace gsc
