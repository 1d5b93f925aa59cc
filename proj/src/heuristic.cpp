#include "ace/heuristic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace ace {

namespace {

bool on_path(const FlowSpec& flow, SwitchId sw) {
  return std::find(flow.path.begin(), flow.path.end(), sw) != flow.path.end();
}

// Minimum legal sampling rate for the flow: smallest admissible grid value,
// or the recommended rate when rates are continuous.
double tentative_rate(const ProblemInstance& inst, FlowId f) {
  if (!inst.rate_grid) return inst.flows[f].recommended_rate;
  return inst.admissible_rates(f).front();
}

// Largest rate reachable for the flow given a pps budget; snaps down to the
// grid when one is present. Returns `floor` if nothing better fits.
double best_rate_within(const ProblemInstance& inst, FlowId f, double budget, double floor) {
  double target = std::min(inst.flows[f].offered_rate, budget);
  if (!inst.rate_grid) return std::max(floor, target);
  double best = floor;
  for (double rate : inst.admissible_rates(f))
    if (rate <= target + kFeasEps && rate > best) best = rate;
  return best;
}

}  // namespace

SwitchScore switch_score(const ProblemInstance& inst, SwitchId sw,
                         const std::vector<FlowId>& uncovered, double residual_capacity,
                         const ModelParams& params) {
  SwitchScore result;
  result.sw = sw;
  double load = 0.0;
  for (FlowId f : uncovered) {
    if (!on_path(inst.flows[f], sw)) continue;
    double rate = tentative_rate(inst, f);
    double gain = params.accuracy_weight * rate - params.cost_weight * params.per_assignment_cost;
    if (gain < 0.0) continue;  // covered by the final feasibility sweep
    if (load + rate > residual_capacity + kFeasEps) continue;
    load += rate;
    result.candidates.push_back(f);
    result.rates.push_back(rate);
    result.score += gain;
  }
  return result;
}

SamplingPlan aps_offline(const ProblemInstance& inst, ApsStats* stats) {
  validate_instance(inst);
  const auto& params = inst.params;
  const int flows = inst.flow_count();
  const int switches = inst.switch_count();

  SamplingPlan plan = SamplingPlan::zeros(flows, switches);
  std::vector<double> residual = inst.topology.capacities();
  std::vector<SwitchId> assigned_at(flows, -1);
  ApsStats local;

  std::vector<FlowId> uncovered;
  std::vector<FlowId> negative;
  for (FlowId f = 0; f < flows; ++f) {
    double gain =
        params.accuracy_weight * tentative_rate(inst, f) - params.cost_weight * params.per_assignment_cost;
    (gain >= 0.0 ? uncovered : negative).push_back(f);
  }

  while (!uncovered.empty()) {
    SwitchScore best;
    for (SwitchId s = 0; s < switches; ++s) {
      SwitchScore sc = switch_score(inst, s, uncovered, residual[s], params);
      ++local.score_evaluations;
      if (sc.candidates.empty()) continue;
      if (best.sw < 0 || sc.score > best.score) best = std::move(sc);  // ties keep smaller id
    }
    if (best.sw < 0)
      throw InfeasibleError(uncovered.front(),
                            "aps_offline: flow " + std::to_string(uncovered.front()) +
                                " has no on-path switch with residual capacity for its rate");
    for (size_t i = 0; i < best.candidates.size(); ++i) {
      FlowId f = best.candidates[i];
      plan.assignment[f][best.sw] = 1;
      plan.rate[f] = best.rates[i];
      residual[best.sw] -= best.rates[i];
      assigned_at[f] = best.sw;
    }
    std::erase_if(uncovered, [&](FlowId f) { return assigned_at[f] >= 0; });
  }

  // Coverage is a hard constraint: flows whose every assignment scores
  // negative still get their cheapest placement, smallest switch id first.
  for (FlowId f : negative) {
    double rate = tentative_rate(inst, f);
    SwitchId chosen = -1;
    for (SwitchId s : [&] {
           auto sorted = inst.flows[f].path;
           std::sort(sorted.begin(), sorted.end());
           return sorted;
         }()) {
      if (rate <= residual[s] + kFeasEps) {
        chosen = s;
        break;
      }
    }
    if (chosen < 0)
      throw InfeasibleError(f, "aps_offline: flow " + std::to_string(f) +
                                   " has no on-path switch with residual capacity for its rate");
    plan.assignment[f][chosen] = 1;
    plan.rate[f] = rate;
    residual[chosen] -= rate;
    assigned_at[f] = chosen;
  }

  // Accuracy-leaning runs spend leftover capacity on higher rates.
  if (params.accuracy_weight > params.cost_weight) {
    for (FlowId f = 0; f < flows; ++f) {
      SwitchId s = assigned_at[f];
      double boosted = best_rate_within(inst, f, plan.rate[f] + residual[s], plan.rate[f]);
      residual[s] -= boosted - plan.rate[f];
      plan.rate[f] = boosted;
    }
  }

  if (stats) *stats = local;
  return plan;
}

SamplingPlan aps_online(const ProblemInstance& inst, const SamplingPlan& base_plan,
                        const FlowSpec& new_flow) {
  ProblemInstance extended = inst.with_flow(new_flow);
  validate_instance(extended);
  const auto& params = extended.params;
  const FlowId nf = extended.flow_count() - 1;

  std::vector<double> residual(inst.switch_count());
  for (int s = 0; s < inst.switch_count(); ++s) {
    double load = 0.0;
    for (int f = 0; f < inst.flow_count(); ++f)
      if (base_plan.assignment.at(f).at(s)) load += base_plan.rate.at(f);
    residual[s] = inst.topology.capacity(s) - load;
  }

  const double min_rate = tentative_rate(extended, nf);
  std::vector<SwitchId> pool = extended.flows[nf].path;
  std::sort(pool.begin(), pool.end());

  SwitchId chosen = -1;
  double chosen_rate = 0.0, chosen_score = 0.0;
  for (SwitchId s : pool) {
    if (min_rate > residual[s] + kFeasEps) continue;
    double rate = params.accuracy_weight > params.cost_weight
                      ? best_rate_within(extended, nf, residual[s], min_rate)
                      : min_rate;
    double score = params.accuracy_weight * rate - params.cost_weight * params.per_assignment_cost;
    if (chosen < 0 || score > chosen_score) {  // ties keep smaller id
      chosen = s;
      chosen_rate = rate;
      chosen_score = score;
    }
  }
  if (chosen < 0)
    throw InfeasibleError(nf, "aps_online: no on-path switch has residual capacity " +
                                  std::to_string(extended.flows[nf].recommended_rate) +
                                  " pps for the new flow");

  SamplingPlan plan = SamplingPlan::zeros(extended.flow_count(), extended.switch_count());
  for (int f = 0; f < inst.flow_count(); ++f) {
    plan.assignment[f] = base_plan.assignment[f];
    plan.rate[f] = base_plan.rate[f];
  }
  plan.assignment[nf][chosen] = 1;
  plan.rate[nf] = chosen_rate;
  return plan;
}

}  // namespace ace
