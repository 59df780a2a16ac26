#include "gsc/filter.hpp"

#include <cmath>
#include <stdexcept>

namespace gsc {

std::string to_string(Provenance p) {
    switch (p) {
        case Provenance::finite_time: return "finite_time";
        case Provenance::estimated_periodic: return "estimated_periodic";
        case Provenance::unknown_topology: return "unknown_topology";
        case Provenance::custom: return "custom";
    }
    return "custom";
}

Provenance parse_provenance(const std::string& name) {
    if (name == "finite_time") return Provenance::finite_time;
    if (name == "estimated_periodic") return Provenance::estimated_periodic;
    if (name == "unknown_topology") return Provenance::unknown_topology;
    if (name == "custom") return Provenance::custom;
    throw std::invalid_argument("unknown schedule provenance: " + name);
}

GainSchedule::GainSchedule(std::vector<double> prefix, std::optional<int> period, Provenance provenance)
    : prefix_(std::move(prefix)), period_(period), provenance_(provenance) {}

GainSchedule GainSchedule::finite(std::vector<double> prefix, Provenance provenance) {
    return GainSchedule(std::move(prefix), std::nullopt, provenance);
}

GainSchedule GainSchedule::periodic(std::vector<double> prefix, Provenance provenance) {
    if (prefix.empty()) throw std::invalid_argument("periodic schedule needs a nonempty period");
    const int p = static_cast<int>(prefix.size());
    return GainSchedule(std::move(prefix), p, provenance);
}

double GainSchedule::gain_at(std::int64_t k) const {
    if (k < 0) throw std::invalid_argument("gain_at: negative time");
    if (period_) return prefix_[static_cast<std::size_t>(k % *period_)];
    if (k < static_cast<std::int64_t>(prefix_.size())) return prefix_[static_cast<std::size_t>(k)];
    return 0.0;
}

double filter_response(const GainSchedule& sched, double lambda, std::int64_t t) {
    if (t < 0) throw std::invalid_argument("filter_response: negative time");
    double h = 1.0;
    for (std::int64_t k = 0; k < t; ++k) h *= 1.0 - sched.gain_at(k) * lambda;
    return h;
}

GainSchedule design_finite_time(std::span<const double> distinct_nonzero) {
    if (distinct_nonzero.empty()) throw std::invalid_argument("design_finite_time: empty eigenvalue list");
    std::vector<double> gains;
    gains.reserve(distinct_nonzero.size());
    for (std::size_t i = distinct_nonzero.size(); i-- > 0;) {
        const double lam = distinct_nonzero[i];
        if (lam <= 0.0) throw std::invalid_argument("design_finite_time: eigenvalues must be positive");
        if (i + 1 < distinct_nonzero.size() && lam >= distinct_nonzero[i + 1])
            throw std::invalid_argument("design_finite_time: eigenvalues must be strictly ascending");
        gains.push_back(1.0 / lam);
    }
    return GainSchedule::finite(std::move(gains), Provenance::finite_time);
}

GainSchedule design_estimated_periodic(std::span<const double> eigenvalues) {
    if (eigenvalues.size() < 2) throw std::invalid_argument("design_estimated_periodic: need at least 2 eigenvalues");
    for (std::size_t i = 1; i < eigenvalues.size(); ++i)
        if (eigenvalues[i] < eigenvalues[i - 1])
            throw std::invalid_argument("design_estimated_periodic: eigenvalues must be ascending");
    if (eigenvalues[1] <= 0.0)
        throw std::invalid_argument("design_estimated_periodic: lambda_2 must be positive (estimated graph not connected)");
    std::vector<double> gains;
    gains.reserve(eigenvalues.size() - 1);
    for (std::size_t i = eigenvalues.size(); i-- > 1;) gains.push_back(1.0 / eigenvalues[i]);
    return GainSchedule::periodic(std::move(gains), Provenance::estimated_periodic);
}

GainSchedule design_unknown_topology(double d_bar, int t0) {
    if (!(d_bar > 0.0)) throw std::invalid_argument("design_unknown_topology: d_bar must be positive");
    if (t0 < 1) throw std::invalid_argument("design_unknown_topology: t0 must be at least 1");
    std::vector<double> gains(static_cast<std::size_t>(t0));
    for (int k = 0; k < t0; ++k) gains[static_cast<std::size_t>(k)] = t0 / (2.0 * (t0 - k) * d_bar);
    return GainSchedule::periodic(std::move(gains), Provenance::unknown_topology);
}

double phi_bound(std::span<const double> eigenvalues, double delta_bar) {
    if (eigenvalues.size() < 2) throw std::invalid_argument("phi_bound: need at least 2 eigenvalues");
    if (!(delta_bar > 0.0)) throw std::invalid_argument("phi_bound: delta_bar must be positive");
    const double lambda2 = eigenvalues[1];
    if (lambda2 <= 0.0) throw std::invalid_argument("phi_bound: lambda_2 must be positive");
    double phi = (delta_bar * delta_bar) / (lambda2 * lambda2);
    for (std::size_t i = 2; i < eigenvalues.size(); ++i) {
        const double factor = 1.0 - (lambda2 + delta_bar) / eigenvalues[i];
        phi *= factor * factor;
    }
    return phi;
}

namespace {

double abs_filter_at(const GainSchedule& sched, double lambda, int t0) {
    return std::fabs(filter_response(sched, lambda, t0));
}

}  // namespace

double psi_bound(double d_bar, int t0, const PsiOptions& opts) {
    if (!(d_bar > 0.0)) throw std::invalid_argument("psi_bound: d_bar must be positive");
    if (t0 < 1) throw std::invalid_argument("psi_bound: t0 must be at least 1");
    if (opts.grid_points < 2) throw std::invalid_argument("psi_bound: need at least 2 grid points");

    const GainSchedule sched = design_unknown_topology(d_bar, t0);
    const double hi = 2.0 * d_bar;
    const int g = opts.grid_points;
    const double step = hi / g;

    double best = 0.0;
    int best_i = 1;
    for (int i = 1; i <= g; ++i) {
        const double value = abs_filter_at(sched, i * step, t0);
        if (value > best) {
            best = value;
            best_i = i;
        }
    }

    // golden-section refinement inside the neighbouring grid cells; the
    // bracket never extends below the first sample, keeping 0 excluded
    double lo_b = (best_i > 1) ? (best_i - 1) * step : step;
    double hi_b = (best_i < g) ? (best_i + 1) * step : hi;
    const double inv_golden = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = hi_b - inv_golden * (hi_b - lo_b);
    double d = lo_b + inv_golden * (hi_b - lo_b);
    double fc = abs_filter_at(sched, c, t0);
    double fd = abs_filter_at(sched, d, t0);
    while (hi_b - lo_b > opts.refine_tol * hi) {
        if (fc > fd) {
            hi_b = d;
            d = c;
            fd = fc;
            c = hi_b - inv_golden * (hi_b - lo_b);
            fc = abs_filter_at(sched, c, t0);
        } else {
            lo_b = c;
            c = d;
            fc = fd;
            d = lo_b + inv_golden * (hi_b - lo_b);
            fd = abs_filter_at(sched, d, t0);
        }
    }
    return std::max(best, std::max(fc, fd));
}

double varphi_alpha_bound(int t0, double alpha) {
    if (t0 < 1) throw std::invalid_argument("varphi_alpha_bound: t0 must be at least 1");
    if (!(alpha > 0.0)) throw std::invalid_argument("varphi_alpha_bound: alpha must be positive");
    return std::max(1.0 - std::log(t0 + 1.0) / alpha, 1.0 / (2.0 * t0));
}

bool varphi_alpha_contractive(int t0, double alpha) {
    const double value = varphi_alpha_bound(t0, alpha);
    const double first_branch = 1.0 - std::log(t0 + 1.0) / alpha;
    return std::fabs(value) < 1.0 && first_branch > -1.0;
}

std::int64_t periods_to_target(double per_period_factor, double target_ratio) {
    if (!(target_ratio > 0.0)) throw std::invalid_argument("periods_to_target: target ratio must be positive");
    if (per_period_factor == 0.0) return 1;
    if (!(per_period_factor > 0.0) || per_period_factor >= 1.0)
        throw std::invalid_argument("periods_to_target: per-period factor is not contractive");
    if (target_ratio >= 1.0) return 0;
    const double j = std::ceil(std::log(target_ratio) / std::log(per_period_factor));
    return static_cast<std::int64_t>(j);
}

}  // namespace gsc
