#include <doctest.h>

#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "gsc/io.hpp"
#include "test_support.hpp"

using namespace gsc;
using namespace gsc::test;

namespace {

bool same_bits(double a, double b) {
  return std::bit_cast<std::uint64_t>(a) == std::bit_cast<std::uint64_t>(b);
}

}  // namespace

TEST_CASE("format_double round-trips exactly") {
  std::vector<double> probes = {0.0,
                                -0.0,
                                1.0,
                                -1.0,
                                1.0 / 3.0,
                                0.1,
                                2.0 / 3.0,
                                25.0 / 16384.0,
                                1e-300,
                                1e300,
                                -2.5e-7,
                                std::numeric_limits<double>::min(),
                                std::numeric_limits<double>::denorm_min(),
                                std::numeric_limits<double>::epsilon(),
                                std::numeric_limits<double>::max(),
                                123456789.123456789};
  Rng rng(101);
  for (int i = 0; i < 1000; ++i) {
    double mag = std::pow(10.0, rng.uniform(-30.0, 30.0));
    probes.push_back(rng.uniform(-1.0, 1.0) * mag);
  }
  for (double v : probes) CHECK(same_bits(parse_double(format_double(v)), v));
}

TEST_CASE("parse_double rejects malformed input") {
  CHECK_THROWS_AS(parse_double(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_double("abc"), std::invalid_argument);
  CHECK_THROWS_AS(parse_double("1.5x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_double("1,5"), std::invalid_argument);
}

TEST_CASE("graph json round-trip") {
  Graph g = make_er(9, 0.5, 13);
  json j = to_json(g);
  CHECK(j.at("n") == 9);
  CHECK(j.at("edges").size() == g.edges().size());
  Graph back = graph_from_json(json::parse(j.dump()));
  CHECK(max_abs_diff(back.weights(), g.weights()) == 0.0);
}

TEST_CASE("graph json validation") {
  CHECK_THROWS_AS(graph_from_json(json{{"edges", json::array()}}), std::invalid_argument);
  CHECK_THROWS_AS(graph_from_json(json{{"n", 3}}), std::invalid_argument);
  json base{{"n", 3}, {"edges", json::array({json::array({0, 1})})}};
  CHECK_THROWS_AS(graph_from_json(base), std::invalid_argument);  // arity
  base["edges"] = json::array({json::array({1, 0, 1.0})});
  CHECK_THROWS_AS(graph_from_json(base), std::invalid_argument);  // i >= j
  base["edges"] = json::array({json::array({1, 1, 1.0})});
  CHECK_THROWS_AS(graph_from_json(base), std::invalid_argument);  // self loop
  base["edges"] = json::array({json::array({0, 3, 1.0})});
  CHECK_THROWS_AS(graph_from_json(base), std::invalid_argument);  // out of range
  base["edges"] = json::array({json::array({0, 1, 0.0})});
  CHECK_THROWS_AS(graph_from_json(base), std::invalid_argument);  // weight <= 0
  base["edges"] = json::array({json::array({0, 1, 1.0}), json::array({0, 1, 2.0})});
  CHECK_THROWS_AS(graph_from_json(base), std::invalid_argument);  // duplicate
}

TEST_CASE("spectrum json carries n eigenvalues and n^2 eigenvector entries") {
  Spectrum s = eig_sym(laplacian(make_cycle(6)));
  json j = to_json(s);
  REQUIRE(j.at("eigenvalues").size() == 6);
  REQUIRE(j.at("eigenvectors").size() == 36);
  CHECK(std::abs(j.at("eigenvalues")[5].get<double>() - 4.0) <= 1e-9);
  // Row-major flattening: entry (i, k) sits at i*n + k.
  for (int i = 0; i < 6; ++i)
    for (int k = 0; k < 6; ++k)
      CHECK(j.at("eigenvectors")[static_cast<std::size_t>(i * 6 + k)].get<double>() ==
            s.eigenvectors(i, k));
}

TEST_CASE("schedule json round-trip") {
  GainSchedule fin = design_finite_time({1.0, 3.0, 4.0});
  json jf = to_json(fin);
  CHECK(jf.at("period").is_null());
  CHECK(jf.at("provenance") == "finite_time");
  GainSchedule finBack = schedule_from_json(json::parse(jf.dump()));
  CHECK_FALSE(finBack.period().has_value());
  CHECK(finBack.provenance() == Provenance::finite_time);
  REQUIRE(finBack.length() == 3);
  for (int k = 0; k < 3; ++k) CHECK(same_bits(finBack.gain_at(k), fin.gain_at(k)));

  GainSchedule per = design_unknown_topology(2.0, 5);
  json jp = to_json(per);
  CHECK(jp.at("period") == 5);
  GainSchedule perBack = schedule_from_json(json::parse(jp.dump()));
  REQUIRE(perBack.period().has_value());
  CHECK(*perBack.period() == 5);
  CHECK(perBack.provenance() == Provenance::unknown_topology);
  for (int k = 0; k < 12; ++k) CHECK(same_bits(perBack.gain_at(k), per.gain_at(k)));
}

TEST_CASE("schedule json validation and defaults") {
  CHECK_THROWS_AS(schedule_from_json(json::object()), std::invalid_argument);
  json j{{"prefix", std::vector<double>{0.5, 0.25}}, {"period", 3}};
  CHECK_THROWS_AS(schedule_from_json(j), std::invalid_argument);  // period != length
  j["period"] = nullptr;
  GainSchedule s = schedule_from_json(j);  // missing provenance -> custom
  CHECK(s.provenance() == Provenance::custom);
  CHECK_FALSE(s.period().has_value());
}

TEST_CASE("bound report json") {
  BoundReport r;
  r.phi = 0.25;
  r.contractive = true;
  r.per_period_exponent = 10;
  r.deviation_ok = true;
  r.deviation = 0.5;
  json j = to_json(r);
  CHECK(j.at("phi") == 0.25);
  CHECK(j.at("psi").is_null());
  CHECK(j.at("contractive") == true);
  CHECK(j.at("per_period_exponent") == 10);
  CHECK(j.at("deviation_ok") == true);
  CHECK(j.at("deviation") == 0.5);
  r.psi = 0.75;
  CHECK(to_json(r).at("psi") == 0.75);
}

TEST_CASE("uncertainty json with an explicit graph") {
  json j{{"estimated_graph", to_json(make_cycle(6))},
         {"delta_bar", 0.5},
         {"mode", "shared_eigenvectors"},
         {"seed", 7}};
  LoadedUncertainty lu = uncertainty_from_json(j);
  CHECK(lu.seed == 7);
  CHECK(lu.model.delta_bar == 0.5);
  CHECK(lu.model.mode == PerturbMode::shared_eigenvectors);
  CHECK(max_abs_diff(lu.model.estimated, laplacian(make_cycle(6))) == 0.0);
}

TEST_CASE("uncertainty json with an eigenvalue list") {
  json j{{"estimated_graph", std::vector<double>{0.0, 1.0, 1.0, 3.0, 3.0, 4.0}},
         {"delta_bar", 0.5},
         {"mode", "spectral_jitter"}};
  LoadedUncertainty lu = uncertainty_from_json(j);
  CHECK(lu.seed == 0);  // default
  CHECK(lu.model.mode == PerturbMode::spectral_jitter);
  REQUIRE(lu.model.spectrum.size() == 6);
  const double expect[6] = {0.0, 1.0, 1.0, 3.0, 3.0, 4.0};
  for (int i = 0; i < 6; ++i)
    CHECK(std::abs(lu.model.spectrum.eigenvalues[static_cast<std::size_t>(i)] - expect[i]) <=
          1e-9);
}

TEST_CASE("uncertainty json validation") {
  json good{{"estimated_graph", std::vector<double>{0.0, 2.0}},
            {"delta_bar", 0.5},
            {"mode", "shared_eigenvectors"}};
  for (const char* field : {"estimated_graph", "delta_bar", "mode"}) {
    json bad = good;
    bad.erase(field);
    CHECK_THROWS_AS(uncertainty_from_json(bad), std::invalid_argument);
  }
  json bad_mode = good;
  bad_mode["mode"] = "wobble";
  CHECK_THROWS_AS(uncertainty_from_json(bad_mode), std::invalid_argument);
}

TEST_CASE("trajectory csv round-trips bitwise") {
  Graph g = make_cycle(6);
  GainSchedule sched = design_estimated_periodic(eig_sym(laplacian(g)).eigenvalues);
  Rng rng(55);
  Vector x0 = random_state(rng, 6);
  Trajectory t = run_matrix(x0, sched, g, 10);

  std::ostringstream first;
  write_trajectory_csv(first, t);
  std::string text = first.str();
  CHECK(text.rfind("k,x_0,x_1,x_2,x_3,x_4,x_5,e\n", 0) == 0);

  std::istringstream in(text);
  TrajectoryTable table = trajectory_table_from_csv(in);
  REQUIRE(table.steps.size() == t.steps.size());
  CHECK(table.steps == t.steps);
  for (std::size_t r = 0; r < table.states.size(); ++r) {
    for (std::size_t i = 0; i < 6; ++i) CHECK(same_bits(table.states[r][i], t.states[r][i]));
    CHECK(same_bits(table.errors[r], t.errors[r]));
  }

  std::ostringstream second;
  write_trajectory_csv(second, table);
  CHECK(second.str() == text);
}

TEST_CASE("trajectory csv validation") {
  auto parse = [](const std::string& s) {
    std::istringstream in(s);
    return trajectory_table_from_csv(in);
  };
  CHECK_THROWS_AS(parse(""), std::invalid_argument);
  CHECK_THROWS_AS(parse("q,x_0,e\n0,1,0\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse("k,x_0,e\n"), std::invalid_argument);           // no rows
  CHECK_THROWS_AS(parse("k,x_0,e\n0,1\n"), std::invalid_argument);      // arity
  CHECK_THROWS_AS(parse("k,x_0,e\n0,one,0\n"), std::invalid_argument);  // bad number
  CHECK_THROWS_AS(parse("k,x_0,e\nzero,1,0\n"), std::invalid_argument);

  TrajectoryTable t = parse("k,x_0,e\n0,0.5,0\n5,0.25,0.125\n");
  REQUIRE(t.steps.size() == 2);
  CHECK(t.steps[1] == 5);
  CHECK(t.states[1][0] == 0.25);
  CHECK(t.errors[1] == 0.125);
}
