#pragma once

#include <limits>

#include "ace/instance.hpp"

namespace ace {

struct FixedRateResult {
  SamplingPlan plan;
  std::vector<Violation> violations;  // capacity overruns are reported, never clipped
};

// Every on-path switch samples every flow at min(rate, offered_rate).
FixedRateResult fixed_rate_plan(const ProblemInstance& inst, double rate);

// Accuracy-only allocation: aps_offline with weights forced to (1, 0).
SamplingPlan accuracy_only_plan(const ProblemInstance& inst);

// Threshold-and-multiply rate controller; the rate grows by `growth` when
// the observed count moved more than change_threshold * prev_count between
// polls and decays by `decay` otherwise, clamped to [min_rate, max_rate].
struct AdaptiveCfg {
  double change_threshold = 0.1;
  double growth = 2.0;
  double decay = 0.5;
  double min_rate = 0.0;
  double max_rate = std::numeric_limits<double>::max();
};

double adaptive_polling_step(double prev_rate, double prev_count, double curr_count,
                             const AdaptiveCfg& cfg);

}  // namespace ace
