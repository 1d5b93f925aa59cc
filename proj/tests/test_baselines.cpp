#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "ace/baselines.hpp"
#include "ace/heuristic.hpp"
#include "ace/simulator.hpp"
#include "helpers.hpp"

using namespace ace;
using test_util::line_topology;
using test_util::make_flow;

TEST_CASE("fixed-rate plan samples every on-path switch") {
  ProblemInstance inst;
  inst.topology = line_topology(4, 10000.0);
  inst.flows = {make_flow(inst.topology, 0, 0, 2, 1000.0, 10.0)};
  inst.params = {0.5, 0.5, 10.0};
  auto result = fixed_rate_plan(inst, 100.0);
  CHECK(result.plan.assignment[0] == std::vector<uint8_t>{1, 1, 1, 0});
  CHECK(result.plan.rate[0] == 100.0);
  CHECK(result.violations.empty());
}

TEST_CASE("fixed rate clamps to the offered rate") {
  ProblemInstance inst;
  inst.topology = line_topology(2, 10000.0);
  inst.flows = {make_flow(inst.topology, 0, 0, 1, 300.0, 10.0)};
  inst.params = {0.5, 0.5, 10.0};
  auto result = fixed_rate_plan(inst, 5000.0);
  CHECK(result.plan.rate[0] == 300.0);
  CHECK_THROWS_AS(fixed_rate_plan(inst, 0.0), std::invalid_argument);
}

TEST_CASE("fixed rate reports capacity overruns instead of clipping") {
  ProblemInstance inst;
  inst.topology = line_topology(2, 1000.0);
  for (int f = 0; f < 3; ++f)
    inst.flows.push_back(make_flow(inst.topology, f, 0, 1, 600.0, 10.0));
  inst.params = {0.5, 0.5, 10.0};
  auto result = fixed_rate_plan(inst, 600.0);
  REQUIRE(!result.violations.empty());
  CHECK(result.violations[0].family == ConstraintFamily::Capacity);
  CHECK(result.violations[0].sw == 0);
  CHECK(result.violations[0].slack == doctest::Approx(-800.0));  // 1000 - 3*600
  CHECK(result.plan.rate[0] == 600.0);                           // not silently reduced
}

TEST_CASE("fixed-rate cost dominates any coverage-feasible plan") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 30; ++trial) {
    auto inst = test_util::random_grid_instance(rng());
    auto fixed = fixed_rate_plan(inst, inst.rate_grid->back() * 2.0);
    auto greedy = aps_offline(inst);
    CHECK(cost_term(fixed.plan, inst) >= cost_term(greedy, inst) - 1e-9);
  }
}

TEST_CASE("accuracy-only allocation is the greedy at weights (1, 0)") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 20; ++trial) {
    auto inst = test_util::random_grid_instance(rng());
    auto forced = inst;
    forced.params.accuracy_weight = 1.0;
    forced.params.cost_weight = 0.0;
    CHECK(accuracy_only_plan(inst) == aps_offline(forced));
  }
}

TEST_CASE("accuracy-only saturates a single flow to its offered rate") {
  ProblemInstance inst;
  inst.topology = line_topology(2, 5000.0);
  inst.flows = {make_flow(inst.topology, 0, 0, 1, 900.0, 100.0)};
  inst.params = {0.2, 0.8, 10.0};
  auto plan = accuracy_only_plan(inst);
  CHECK(plan.rate[0] == 900.0);
}

TEST_CASE("accuracy-only accuracy dominates cost-leaning greedy plans") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 20; ++trial) {
    auto inst = test_util::random_grid_instance(rng());
    auto lean_cost = inst;
    lean_cost.params.accuracy_weight = 0.2;
    lean_cost.params.cost_weight = 0.8;
    CHECK(accuracy_term(accuracy_only_plan(inst), inst) >=
          accuracy_term(aps_offline(lean_cost), lean_cost) - 1e-9);
  }
}

TEST_CASE("adaptive step decays when counts are quiet") {
  AdaptiveCfg cfg{0.1, 2.0, 0.5, 50.0, 400.0};
  CHECK(adaptive_polling_step(100.0, 500.0, 500.0, cfg) == 50.0);
}

TEST_CASE("adaptive step grows on a jump and clamps at the ceiling") {
  AdaptiveCfg cfg{0.1, 2.0, 0.5, 50.0, 400.0};
  CHECK(adaptive_polling_step(100.0, 500.0, 1000.0, cfg) == 200.0);
  double rate = 100.0, count = 500.0;
  for (int i = 0; i < 8; ++i) {
    rate = adaptive_polling_step(rate, count, count * 2.0, cfg);
    count *= 2.0;
    CHECK(rate <= 400.0);
  }
  CHECK(rate == 400.0);
}

TEST_CASE("adaptive step output always stays within bounds") {
  AdaptiveCfg cfg{0.1, 2.0, 0.5, 60.0, 300.0};
  std::mt19937_64 rng(61);
  double rate = 100.0, prev = 0.0;
  for (int i = 0; i < 200; ++i) {
    double curr = static_cast<double>(rng() % 2000);
    rate = adaptive_polling_step(rate, prev, curr, cfg);
    prev = curr;
    CHECK(rate >= 60.0);
    CHECK(rate <= 300.0);
  }
  CHECK_THROWS_AS(adaptive_polling_step(100.0, -1.0, 3.0, cfg), std::invalid_argument);
}
