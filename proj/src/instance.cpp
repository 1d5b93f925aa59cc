#include "ace/instance.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace ace {

std::vector<double> ProblemInstance::admissible_rates(FlowId f) const {
  std::vector<double> out;
  if (!rate_grid) return out;
  const FlowSpec& flow = flows.at(f);
  for (double rate : *rate_grid)
    if (rate >= flow.recommended_rate && rate <= flow.offered_rate) out.push_back(rate);
  return out;
}

ProblemInstance ProblemInstance::with_flow(FlowSpec flow) const {
  ProblemInstance out = *this;
  flow.id = static_cast<FlowId>(out.flows.size());
  if (flow.path.empty()) flow.path = shortest_path(topology, flow.src, flow.dst);
  out.flows.push_back(std::move(flow));
  return out;
}

namespace {

[[noreturn]] void invalid(const std::string& what) { throw std::invalid_argument("instance: " + what); }

void check_dims(const SamplingPlan& plan, const ProblemInstance& inst, const char* who) {
  if (static_cast<int>(plan.assignment.size()) != inst.flow_count() ||
      static_cast<int>(plan.rate.size()) != inst.flow_count())
    throw std::invalid_argument(std::string(who) + ": plan/instance flow dimensions differ");
  for (const auto& row : plan.assignment)
    if (static_cast<int>(row.size()) != inst.switch_count())
      throw std::invalid_argument(std::string(who) + ": plan/instance switch dimensions differ");
}

}  // namespace

void validate_instance(const ProblemInstance& inst) {
  if (inst.topology.switch_count() == 0) invalid("empty topology");
  if (inst.params.accuracy_weight < 0.0) invalid("accuracy_weight must be >= 0");
  if (inst.params.cost_weight < 0.0) invalid("cost_weight must be >= 0");
  if (inst.params.per_assignment_cost < 0.0) invalid("per_assignment_cost must be >= 0");

  for (int f = 0; f < inst.flow_count(); ++f) {
    const FlowSpec& flow = inst.flows[f];
    std::string tag = "flow " + std::to_string(f);
    if (flow.id != f) invalid(tag + ": id must equal its position");
    if (!inst.topology.has_switch(flow.src) || !inst.topology.has_switch(flow.dst))
      invalid(tag + ": endpoint not in topology");
    if (flow.src == flow.dst) invalid(tag + ": src and dst must differ");
    if (flow.path.empty() || flow.path.front() != flow.src || flow.path.back() != flow.dst)
      invalid(tag + ": path must run src..dst");
    std::vector<char> seen(inst.topology.switch_count(), 0);
    for (size_t i = 0; i < flow.path.size(); ++i) {
      SwitchId s = flow.path[i];
      if (!inst.topology.has_switch(s)) invalid(tag + ": path references unknown switch");
      if (seen[s]) invalid(tag + ": path repeats switch " + std::to_string(s));
      seen[s] = 1;
      if (i > 0 && !inst.topology.has_link(flow.path[i - 1], s))
        invalid(tag + ": consecutive path switches are not linked");
    }
    if (!(flow.recommended_rate > 0.0)) invalid(tag + ": recommended_rate must be > 0");
    if (flow.recommended_rate > flow.offered_rate)
      invalid(tag + ": recommended_rate exceeds offered_rate");
  }

  if (inst.rate_grid) {
    const auto& grid = *inst.rate_grid;
    if (grid.empty()) invalid("rate_grid present but empty");
    for (size_t i = 0; i < grid.size(); ++i) {
      if (!(grid[i] > 0.0)) invalid("rate_grid values must be > 0");
      if (i > 0 && grid[i] <= grid[i - 1]) invalid("rate_grid must be strictly ascending");
    }
    for (int f = 0; f < inst.flow_count(); ++f)
      if (inst.admissible_rates(f).empty())
        invalid("flow " + std::to_string(f) +
                ": rate_grid leaves no rate in [recommended_rate, offered_rate]");
  }
}

SamplingPlan SamplingPlan::zeros(int flow_count, int switch_count) {
  SamplingPlan plan;
  plan.assignment.assign(flow_count, std::vector<uint8_t>(switch_count, 0));
  plan.rate.assign(flow_count, 0.0);
  return plan;
}

std::string to_string(ConstraintFamily family) {
  switch (family) {
    case ConstraintFamily::Capacity: return "capacity";
    case ConstraintFamily::Coverage: return "coverage";
    case ConstraintFamily::MinRate: return "min-rate";
    case ConstraintFamily::Traversal: return "traversal";
  }
  return "?";
}

std::string describe(const Violation& v) {
  std::ostringstream out;
  out << to_string(v.family) << " violation";
  if (v.flow) out << " flow=" << *v.flow;
  if (v.sw) out << " switch=" << *v.sw;
  out << " slack=" << v.slack;
  return out.str();
}

std::vector<Violation> check_feasibility(const SamplingPlan& plan, const ProblemInstance& inst) {
  check_dims(plan, inst, "check_feasibility");
  std::vector<Violation> out;

  auto matrix = traversal_matrix(inst.topology, [&] {
    std::vector<Path> paths;
    paths.reserve(inst.flows.size());
    for (const auto& flow : inst.flows) paths.push_back(flow.path);
    return paths;
  }());

  // Capacity: per-switch sampled load within c_s.
  for (int s = 0; s < inst.switch_count(); ++s) {
    double load = 0.0;
    for (int f = 0; f < inst.flow_count(); ++f)
      if (plan.assignment[f][s]) load += plan.rate[f];
    double slack = inst.topology.capacity(s) - load;
    if (slack < -kFeasEps)
      out.push_back({ConstraintFamily::Capacity, std::nullopt, s, slack});
  }

  for (int f = 0; f < inst.flow_count(); ++f) {
    // Coverage: sampled at least somewhere.
    int assigned = 0;
    for (int s = 0; s < inst.switch_count(); ++s) assigned += plan.assignment[f][s];
    if (assigned < 1)
      out.push_back({ConstraintFamily::Coverage, f, std::nullopt, static_cast<double>(assigned - 1)});

    // Minimum sampling rate.
    double slack = plan.rate[f] - inst.flows[f].recommended_rate;
    if (slack < -kFeasEps) out.push_back({ConstraintFamily::MinRate, f, std::nullopt, slack});

    // Traversal: only on-path switches may sample the flow.
    for (int s = 0; s < inst.switch_count(); ++s)
      if (plan.assignment[f][s] && !matrix[f][s])
        out.push_back({ConstraintFamily::Traversal, f, s, -1.0});
  }
  return out;
}

double accuracy_term(const SamplingPlan& plan, const ProblemInstance& inst) {
  check_dims(plan, inst, "accuracy_term");
  double total = 0.0;
  for (int f = 0; f < inst.flow_count(); ++f)
    for (int s = 0; s < inst.switch_count(); ++s)
      if (plan.assignment[f][s]) total += plan.rate[f];
  return total;
}

double cost_term(const SamplingPlan& plan, const ProblemInstance& inst) {
  check_dims(plan, inst, "cost_term");
  long assignments = 0;
  for (const auto& row : plan.assignment)
    for (uint8_t x : row) assignments += x;
  return inst.params.per_assignment_cost * static_cast<double>(assignments);
}

double objective_value(const SamplingPlan& plan, const ProblemInstance& inst) {
  return inst.params.accuracy_weight * accuracy_term(plan, inst) -
         inst.params.cost_weight * cost_term(plan, inst);
}

}  // namespace ace
