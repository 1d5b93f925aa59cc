#include "ace/baselines.hpp"

#include <algorithm>
#include <cmath>

#include "ace/heuristic.hpp"

namespace ace {

FixedRateResult fixed_rate_plan(const ProblemInstance& inst, double rate) {
  if (!(rate > 0.0)) throw std::invalid_argument("fixed_rate_plan: rate must be > 0");
  validate_instance(inst);

  FixedRateResult result;
  result.plan = SamplingPlan::zeros(inst.flow_count(), inst.switch_count());
  for (int f = 0; f < inst.flow_count(); ++f) {
    for (SwitchId s : inst.flows[f].path) result.plan.assignment[f][s] = 1;
    result.plan.rate[f] = std::min(rate, inst.flows[f].offered_rate);
  }
  result.violations = check_feasibility(result.plan, inst);
  return result;
}

SamplingPlan accuracy_only_plan(const ProblemInstance& inst) {
  ProblemInstance forced = inst;
  forced.params.accuracy_weight = 1.0;
  forced.params.cost_weight = 0.0;
  return aps_offline(forced);
}

double adaptive_polling_step(double prev_rate, double prev_count, double curr_count,
                             const AdaptiveCfg& cfg) {
  if (prev_count < 0.0 || curr_count < 0.0)
    throw std::invalid_argument("adaptive_polling_step: counts must be >= 0");
  double threshold = cfg.change_threshold * prev_count;
  double next = std::abs(curr_count - prev_count) > threshold ? prev_rate * cfg.growth
                                                              : prev_rate * cfg.decay;
  return std::clamp(next, cfg.min_rate, cfg.max_rate);
}

}  // namespace ace
