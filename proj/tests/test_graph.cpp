#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "gsc/graph.hpp"
#include "gsc/linalg.hpp"
#include "test_support.hpp"

using namespace gsc;
using namespace gsc::test;

TEST_CASE("laplacian of a single edge") {
  Graph g = Graph::from_edges(2, {{0, 1, 1.0}});
  Matrix l = laplacian(g);
  CHECK(l(0, 0) == 1.0);
  CHECK(l(0, 1) == -1.0);
  CHECK(l(1, 0) == -1.0);
  CHECK(l(1, 1) == 1.0);
  CHECK(max_degree(g) == 1.0);
  CHECK(is_connected(g));
}

TEST_CASE("laplacian of the 6-cycle is circulant with diagonal 2") {
  Graph g = make_cycle(6);
  Matrix l = laplacian(g);
  for (int i = 0; i < 6; ++i) {
    CHECK(l(i, i) == 2.0);
    for (int j = 0; j < 6; ++j) {
      if (i == j) continue;
      int gap = std::abs(i - j);
      double expect = (gap == 1 || gap == 5) ? -1.0 : 0.0;
      CHECK(l(i, j) == expect);
    }
  }
  CHECK(max_degree(g) == 2.0);
}

TEST_CASE("laplacian rows sum to zero and L is PSD on random graphs") {
  Rng rng(42);
  for (int trial = 0; trial < 20; ++trial) {
    int n = 2 + static_cast<int>(rng.uniform01() * 14);
    Graph g = make_er(n, 0.5, 1000 + static_cast<unsigned long long>(trial));
    Matrix l = laplacian(g);
    Vector ones(static_cast<std::size_t>(n), 1.0);
    for (double v : l * ones) CHECK(std::abs(v) <= 1e-12);
    for (int k = 0; k < 50; ++k) {
      Vector v = random_state(rng, static_cast<std::size_t>(n), -1.0, 1.0);
      double q = dot(v, l * v);
      CHECK(q >= -1e-10 * dot(v, v));
    }
  }
}

TEST_CASE("weighted edges enter the degree and laplacian") {
  Graph g = Graph::from_edges(3, {{0, 1, 2.5}, {1, 2, 0.5}});
  Matrix l = laplacian(g);
  CHECK(l(0, 0) == 2.5);
  CHECK(l(1, 1) == 3.0);
  CHECK(l(2, 2) == 0.5);
  CHECK(l(0, 1) == -2.5);
  CHECK(max_degree(g) == 3.0);
}

TEST_CASE("from_edges validation") {
  std::vector<Edge> none;
  CHECK_THROWS_AS(Graph::from_edges(0, none), std::invalid_argument);
  CHECK_THROWS_AS(Graph::from_edges(1, none), std::invalid_argument);
  CHECK_THROWS_AS(Graph::from_edges(3, {{0, 3, 1.0}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph::from_edges(3, {{1, 1, 1.0}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph::from_edges(3, {{0, 1, 1.0}, {1, 0, 2.0}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph::from_edges(3, {{0, 1, 0.0}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph::from_edges(3, {{0, 1, -1.0}}), std::invalid_argument);
}

TEST_CASE("from_weights validation") {
  Matrix w(2, 2);
  w(0, 1) = 1.0;
  CHECK_THROWS_AS(Graph::from_weights(w), std::invalid_argument);  // asymmetric
  w(1, 0) = 1.0;
  w(0, 0) = 0.5;
  CHECK_THROWS_AS(Graph::from_weights(w), std::invalid_argument);  // nonzero diagonal
  w(0, 0) = 0.0;
  CHECK_NOTHROW(Graph::from_weights(w));
  w(0, 1) = w(1, 0) = -1.0;
  CHECK_THROWS_AS(Graph::from_weights(w), std::invalid_argument);  // negative weight
}

TEST_CASE("connectivity detection") {
  CHECK(is_connected(make_cycle(6)));
  CHECK(is_connected(make_path(2)));
  CHECK(is_connected(make_complete(5)));
  CHECK_FALSE(is_connected(make_disconnected()));
  Matrix w(3, 3);  // empty graph
  CHECK_FALSE(is_connected(Graph::from_weights(w)));
}

TEST_CASE("generated families have the expected edge sets") {
  Graph c6 = make_cycle(6);
  CHECK(c6.size() == 6);
  CHECK(c6.edges().size() == 6);
  Graph p6 = make_path(6);
  CHECK(p6.edges().size() == 5);
  CHECK(max_degree(p6) == 2.0);
  CHECK(make_path(2).edges().size() == 1);
  Graph k4 = make_complete(4);
  CHECK(k4.edges().size() == 6);
  CHECK(max_degree(k4) == 3.0);
  // A 2-cycle degenerates to a single edge, not a doubled one.
  Graph c2 = make_cycle(2);
  CHECK(c2.edges().size() == 1);
  CHECK(max_degree(c2) == 1.0);
}

TEST_CASE("generation is deterministic in the seed") {
  Graph a = make_er(12, 0.4, 7);
  Graph b = make_er(12, 0.4, 7);
  CHECK(max_abs_diff(a.weights(), b.weights()) == 0.0);
  // A different seed should (for this n, p) give a different graph.
  Graph c = make_er(12, 0.4, 8);
  CHECK(max_abs_diff(a.weights(), c.weights()) > 0.0);
}

TEST_CASE("erdos-renyi generation retries until connected") {
  for (unsigned long long seed = 0; seed < 10; ++seed) {
    GenerateOptions opt;
    opt.edge_probability = 0.25;
    opt.seed = seed;
    GeneratedGraph gg = generate(GraphKind::erdos_renyi, 10, opt);
    CHECK(is_connected(gg.graph));
    CHECK(gg.attempts >= 1);
    CHECK(gg.attempts <= opt.max_attempts);
  }
}

TEST_CASE("erdos-renyi generation fails loudly when connectivity is hopeless") {
  GenerateOptions opt;
  opt.edge_probability = 0.01;
  opt.max_attempts = 25;
  CHECK_THROWS_AS(generate(GraphKind::erdos_renyi, 40, opt), std::runtime_error);
}

TEST_CASE("generate validates its arguments") {
  CHECK_THROWS_AS(generate(GraphKind::cycle, 1, {}), std::invalid_argument);
  GenerateOptions bad;
  bad.edge_probability = 1.5;
  CHECK_THROWS_AS(generate(GraphKind::erdos_renyi, 5, bad), std::invalid_argument);
  bad.edge_probability = 0.0;
  CHECK_THROWS_AS(generate(GraphKind::erdos_renyi, 5, bad), std::invalid_argument);
}

TEST_CASE("graph kind names round-trip") {
  CHECK(parse_graph_kind("cycle") == GraphKind::cycle);
  CHECK(parse_graph_kind("path") == GraphKind::path);
  CHECK(parse_graph_kind("complete") == GraphKind::complete);
  CHECK(parse_graph_kind("er") == GraphKind::erdos_renyi);
  CHECK(parse_graph_kind("erdos_renyi") == GraphKind::erdos_renyi);
  CHECK_THROWS_AS(parse_graph_kind("torus"), std::invalid_argument);
  CHECK(to_string(GraphKind::erdos_renyi) == std::string("erdos_renyi"));
}
