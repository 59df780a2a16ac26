#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <json.hpp>

#include "gsc/filter.hpp"
#include "gsc/graph.hpp"
#include "gsc/simulate.hpp"
#include "gsc/spectral.hpp"
#include "gsc/uncertainty.hpp"

namespace gsc {

using nlohmann::json;

/// Shortest decimal representation that parses back to the same double.
std::string format_double(double v);
double parse_double(std::string_view s);

// graph files: { "n": int, "edges": [[i, j, w], ...] }, 0-based, i < j, w > 0
json to_json(const Graph& g);
Graph graph_from_json(const json& j);

// spectrum export: { "eigenvalues": [...], "eigenvectors": row-major [...] }
json to_json(const Spectrum& s);

// schedules: { "prefix": [...], "period": int|null, "provenance": string }
json to_json(const GainSchedule& sched);
GainSchedule schedule_from_json(const json& j);

json to_json(const BoundReport& r);

// uncertainty models:
// { "estimated_graph": <graph object or ascending eigenvalue list>,
//   "delta_bar": real, "mode": string, "seed": int }
struct LoadedUncertainty {
    UncertaintyModel model;
    std::uint64_t seed = 0;
};
LoadedUncertainty uncertainty_from_json(const json& j);

/// Trajectory CSV: header "k,x_0,...,x_{N-1},e", one row per recorded step,
/// values printed with format_double so reload-and-rewrite is byte-identical.
void write_trajectory_csv(std::ostream& out, const Trajectory& traj);

struct TrajectoryTable {
    std::vector<std::int64_t> steps;
    std::vector<Vector> states;
    Vector errors;
};
void write_trajectory_csv(std::ostream& out, const TrajectoryTable& table);
TrajectoryTable trajectory_table_from_csv(std::istream& in);

}  // namespace gsc
