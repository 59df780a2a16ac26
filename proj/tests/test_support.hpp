#pragma once

// Shared helpers for the test suites.

#include <cmath>
#include <cstddef>
#include <vector>

#include "gsc/graph.hpp"
#include "gsc/linalg.hpp"
#include "gsc/random.hpp"

namespace gsc::test {

inline Graph make_cycle(int n) { return generate(GraphKind::cycle, n, {}).graph; }
inline Graph make_path(int n) { return generate(GraphKind::path, n, {}).graph; }
inline Graph make_complete(int n) { return generate(GraphKind::complete, n, {}).graph; }

inline Graph make_er(int n, double p, unsigned long long seed) {
  GenerateOptions opt;
  opt.edge_probability = p;
  opt.seed = seed;
  return generate(GraphKind::erdos_renyi, n, opt).graph;
}

inline Vector random_state(Rng& rng, std::size_t n, double lo = 0.0, double hi = 1.0) {
  Vector x(n);
  for (auto& v : x) v = rng.uniform(lo, hi);
  return x;
}

inline double mean_of(const Vector& x) {
  double s = 0.0;
  for (double v : x) s += v;
  return s / static_cast<double>(x.size());
}

// Two disconnected components: a triangle {0,1,2} and an edge {3,4}.
inline Graph make_disconnected() {
  return Graph::from_edges(5, {{0, 1, 1.0}, {1, 2, 1.0}, {0, 2, 1.0}, {3, 4, 1.0}});
}

}  // namespace gsc::test
