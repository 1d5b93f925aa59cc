#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ace/topology.hpp"

namespace ace {

using FlowId = int;

// Slack tolerance for capacity / minimum-rate comparisons on doubles.
inline constexpr double kFeasEps = 1e-9;

// Rates are packets/second throughout; Mbps inputs convert here.
inline constexpr double mbps_to_pps(double mbps, double packet_bytes = 1500.0) {
  return mbps * 1e6 / (8.0 * packet_bytes);
}

struct FlowSpec {
  FlowId id = 0;
  SwitchId src = 0;
  SwitchId dst = 0;
  Path path;                    // routed src..dst, inclusive
  double offered_rate = 0.0;    // traffic the flow actually carries, pps
  double recommended_rate = 0.0;  // minimum acceptable sampling rate, pps
};

// Scalarization weights and the per-assignment computation cost. Instances
// loaded from files keep accuracy_weight + cost_weight == 1; the solvers
// only require both weights nonnegative, so joint rescaling stays testable.
struct ModelParams {
  double accuracy_weight = 0.5;
  double cost_weight = 0.5;
  double per_assignment_cost = 0.0;

  bool normalized() const {
    return std::abs(accuracy_weight + cost_weight - 1.0) <= 1e-9;
  }
};

/**
 * One planning problem: who samples which flow at what rate.
 *
 * rate_grid, when present, is a shared ascending list of sampling rates a
 * switch can be configured with; the rates admissible for a flow are the
 * grid values inside [recommended_rate, offered_rate]. Solvers restrict
 * every rate to the grid when it is present, which is what makes the
 * brute-force solver exact.
 */
struct ProblemInstance {
  Topology topology;
  std::vector<FlowSpec> flows;
  ModelParams params;
  std::optional<std::vector<double>> rate_grid;

  int flow_count() const { return static_cast<int>(flows.size()); }
  int switch_count() const { return topology.switch_count(); }

  // Grid values usable for flow f (ascending); empty when no grid is set,
  // meaning the rate is continuous in [recommended_rate, offered_rate].
  std::vector<double> admissible_rates(FlowId f) const;

  // Copy with one more flow appended; the flow gets the next dense id and
  // its path is routed if empty.
  ProblemInstance with_flow(FlowSpec flow) const;
};

// Structural validation: paths match the topology, rates are sane, grid is
// ascending and leaves every flow at least one admissible rate. Throws
// std::invalid_argument on the first problem found.
void validate_instance(const ProblemInstance& inst);

struct SamplingPlan {
  std::vector<std::vector<uint8_t>> assignment;  // flows x switches
  std::vector<double> rate;                      // per flow, pps

  static SamplingPlan zeros(int flow_count, int switch_count);
  bool operator==(const SamplingPlan&) const = default;
};

enum class ConstraintFamily { Capacity, Coverage, MinRate, Traversal };

std::string to_string(ConstraintFamily family);

// One broken constraint instance. slack is the amount by which the
// constraint fails (negative for capacity/min-rate shortfalls, -1 for the
// binary coverage/traversal families).
struct Violation {
  ConstraintFamily family;
  std::optional<FlowId> flow;
  std::optional<SwitchId> sw;
  double slack = 0.0;
};

std::string describe(const Violation& v);

// Empty result means the plan is feasible. Throws on dimension mismatch;
// violations themselves are data, not errors.
std::vector<Violation> check_feasibility(const SamplingPlan& plan, const ProblemInstance& inst);

// Total sampled pps over all assignments (sum of x * y).
double accuracy_term(const SamplingPlan& plan, const ProblemInstance& inst);
// Total per-assignment cost (sum of C * x).
double cost_term(const SamplingPlan& plan, const ProblemInstance& inst);
// accuracy_weight * accuracy_term - cost_weight * cost_term.
double objective_value(const SamplingPlan& plan, const ProblemInstance& inst);

// Thrown when a solver proves no feasible placement exists; names the flow
// that could not be covered.
class InfeasibleError : public std::runtime_error {
 public:
  InfeasibleError(FlowId flow, const std::string& what)
      : std::runtime_error(what), flow_(flow) {}
  FlowId flow() const { return flow_; }

 private:
  FlowId flow_;
};

// Thrown when the exact solver's candidate space exceeds its limit.
class SearchLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ace
