#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ace/baselines.hpp"
#include "ace/exact.hpp"
#include "ace/instance.hpp"

namespace ace {

// Per-flow offered rate over fixed-length ticks.
struct TrafficSchedule {
  std::vector<std::vector<double>> rate;  // flows x ticks, pps
  int horizon = 0;
  double tick_seconds = 1.0;
};

// Every flow starts at `initial` pps and doubles each `period` ticks.
TrafficSchedule doubling_schedule(int n_flows, double initial, int period, int horizon);

TrafficSchedule constant_schedule(int n_flows, double rate, int horizon);

enum class SimMode {
  Expectation,  // replaces every random draw with its mean; identity tests
  Stochastic,   // seeded draws
};

struct SimOptions {
  SimMode mode = SimMode::Stochastic;
  // When set, each flow's sampling rate is re-decided every tick from its
  // measured counts (threshold controller, bounds [recommended, offered]).
  std::optional<AdaptiveCfg> adaptive;
};

struct ScenarioResult {
  std::vector<Link> links;                    // column order for the series
  std::vector<std::vector<double>> actual;    // ticks x links, pps delivered
  std::vector<std::vector<double>> measured;  // ticks x links, estimated pps
  double accuracy = 0.0;
  double cost = 0.0;
  std::string scheme;
  uint64_t seed = 0;
};

/**
 * Replays the schedule against the plan. Per tick and flow: packets enter
 * at the path head, every link drops them independently with loss_prob,
 * each sampling switch observes its post-loss arrivals and estimates the
 * flow rate as sampled_count / sampling_fraction with sampling_fraction =
 * min(1, y_f / arriving_rate). A flow's estimate (averaged over its
 * sampling switches) is attributed to every link on its path; actual link
 * utilization counts packets delivered across the link.
 *
 * Deterministic given the seed, and the traffic realization depends on the
 * seed alone (separate draw streams), so different plans simulated with
 * one seed see identical packet arrivals. cost is the tick-averaged sum
 * over flows of sampling_rate x assignment_count, which for a static plan
 * equals cost_metric(plan).
 */
ScenarioResult simulate(const ProblemInstance& inst, const SamplingPlan& plan,
                        const TrafficSchedule& schedule, double loss_prob, uint64_t seed,
                        const SimOptions& options = {});

// 1 - mean relative utilization error over ticks and active links,
// clamped to [0, 1]; denominators are guarded at 1 pps.
double accuracy_metric(const ScenarioResult& result);

// Total sampled pps across monitoring switches: sum over assignments of
// the flow's sampling rate.
double cost_metric(const SamplingPlan& plan);

struct SweepRow {
  double accuracy_weight = 0.0;
  double cost_weight = 0.0;
  double accuracy = 0.0;   // accuracy_term of the solved plan
  double cost = 0.0;       // cost_term of the solved plan
  double objective = 0.0;
};

/**
 * Solves the instance once per (accuracy, cost) weight pair — exactly when
 * a rate grid is present and the search fits the limit, greedily otherwise
 * — and reports the plan terms. Rows come back ordered by ascending
 * accuracy/cost ratio.
 */
std::vector<SweepRow> sweep_ab(const ProblemInstance& inst,
                               const std::vector<std::pair<double, double>>& ratios,
                               const ExactOptions& exact_options = {});

// n distinct ordered (src, dst) pairs, uniform without replacement.
std::vector<std::pair<SwitchId, SwitchId>> random_pairs(const Topology& topo, int n,
                                                        uint64_t seed);

}  // namespace ace
