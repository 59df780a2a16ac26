#include "gsc/simulate.hpp"

#include <numeric>
#include <stdexcept>

namespace gsc {

namespace {

double mean_of(const Vector& x) {
    return std::accumulate(x.begin(), x.end(), 0.0) / static_cast<double>(x.size());
}

bool keep_step(std::int64_t k, std::int64_t t_end, const GainSchedule& sched, const RunOptions& opts) {
    if (k == 0 || k == t_end) return true;
    if (opts.stride > 1 && sched.period() && k % *sched.period() == 0) return true;
    return k % opts.stride == 0;
}

struct NeighborValue {
    double value;
    double weight;
};

// Protocol update of a single agent: its own state, the gain, and the states
// and weights of its neighbors. Nothing else is visible here.
double local_update(double own, double epsilon, std::span<const NeighborValue> neighbors) {
    double u = 0.0;
    for (const NeighborValue& nb : neighbors) u += nb.weight * (nb.value - own);
    return own + epsilon * u;
}

}  // namespace

Vector step(const Vector& x, double epsilon, const Matrix& l) {
    const Vector lx = l * x;  // throws on dimension mismatch
    Vector out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i] - epsilon * lx[i];
    return out;
}

double consensus_error(const Vector& x, const Vector& x0) {
    if (x.size() != x0.size()) throw std::invalid_argument("consensus_error: length mismatch");
    const double target = mean_of(x0);
    double e = 0.0;
    for (double xi : x) e += (xi - target) * (xi - target);
    return e;
}

Trajectory run_system(const Vector& x0, const GainSchedule& sched, const Matrix& l, std::int64_t t_end,
                      const RunOptions& opts) {
    if (t_end < 0) throw std::invalid_argument("run: t_end must be nonnegative");
    if (opts.stride < 1) throw std::invalid_argument("run: stride must be at least 1");
    Trajectory traj{{}, {}, {}, sched, std::nullopt};
    Vector x = x0;
    for (std::int64_t k = 0;; ++k) {
        if (keep_step(k, t_end, sched, opts)) {
            traj.steps.push_back(k);
            traj.states.push_back(x);
            traj.errors.push_back(consensus_error(x, x0));
        }
        if (k == t_end) break;
        x = step(x, sched.gain_at(k), l);
    }
    return traj;
}

Trajectory run_matrix(const Vector& x0, const GainSchedule& sched, const Graph& g, std::int64_t t_end,
                      const RunOptions& opts) {
    Trajectory traj = run_system(x0, sched, laplacian(g), t_end, opts);
    traj.graph = g;
    return traj;
}

Trajectory run_local(const Vector& x0, const GainSchedule& sched, const Graph& g, std::int64_t t_end,
                     const RunOptions& opts) {
    if (static_cast<int>(x0.size()) != g.size()) throw std::invalid_argument("run_local: dimension mismatch");
    if (t_end < 0) throw std::invalid_argument("run: t_end must be nonnegative");
    if (opts.stride < 1) throw std::invalid_argument("run: stride must be at least 1");

    const int n = g.size();
    std::vector<std::vector<std::pair<int, double>>> adjacency(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (j != i && g.weight(i, j) > 0.0) adjacency[i].push_back({j, g.weight(i, j)});

    Trajectory traj{{}, {}, {}, sched, g};
    Vector x = x0;
    Vector next(x.size());
    std::vector<NeighborValue> inbox;
    for (std::int64_t k = 0;; ++k) {
        if (keep_step(k, t_end, sched, opts)) {
            traj.steps.push_back(k);
            traj.states.push_back(x);
            traj.errors.push_back(consensus_error(x, x0));
        }
        if (k == t_end) break;
        const double eps = sched.gain_at(k);
        for (int i = 0; i < n; ++i) {
            inbox.clear();
            for (const auto& [j, w] : adjacency[i]) inbox.push_back({x[j], w});
            next[i] = local_update(x[i], eps, inbox);
        }
        std::swap(x, next);
    }
    return traj;
}

Trajectory run_spectral(const Vector& x0, const GainSchedule& sched, const Spectrum& s, std::int64_t t_end,
                        const RunOptions& opts) {
    if (static_cast<int>(x0.size()) != s.size()) throw std::invalid_argument("run_spectral: dimension mismatch");
    if (t_end < 0) throw std::invalid_argument("run: t_end must be nonnegative");
    if (opts.stride < 1) throw std::invalid_argument("run: stride must be at least 1");

    const Vector xhat0 = gft(s, x0);
    Vector hvals(x0.size(), 1.0);
    Vector filtered(x0.size());

    Trajectory traj{{}, {}, {}, sched, std::nullopt};
    for (std::int64_t k = 0;; ++k) {
        if (keep_step(k, t_end, sched, opts)) {
            for (std::size_t i = 0; i < filtered.size(); ++i) filtered[i] = hvals[i] * xhat0[i];
            Vector x = igft(s, filtered);
            traj.steps.push_back(k);
            traj.errors.push_back(consensus_error(x, x0));
            traj.states.push_back(std::move(x));
        }
        if (k == t_end) break;
        const double eps = sched.gain_at(k);
        for (std::size_t i = 0; i < hvals.size(); ++i) hvals[i] *= 1.0 - eps * s.eigenvalues[i];
    }
    return traj;
}

}  // namespace gsc
