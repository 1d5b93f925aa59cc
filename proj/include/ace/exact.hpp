#pragma once

#include "ace/instance.hpp"

namespace ace {

struct ExactOptions {
  // Ceiling on the enumerated candidate space, product over flows of
  // (#switch subsets x #grid rates).
  double candidate_limit = 1e7;
};

struct ExactResult {
  SamplingPlan plan;
  double objective = 0.0;
};

/**
 * Exhaustive search over switch subsets and grid rates per flow, with
 * branch-and-bound pruning on per-flow optimistic bounds and incremental
 * per-switch load tracking. Requires inst.rate_grid.
 *
 * Ties are broken toward the lexicographically smallest encoding, where a
 * plan is encoded flow by flow as (ascending list of assigned switch ids,
 * rate). Throws InfeasibleError naming a flow that cannot be covered and
 * SearchLimitError when the candidate space exceeds the configured limit.
 */
ExactResult solve_offline_exact(const ProblemInstance& inst, const ExactOptions& options = {});

/**
 * Optimal placement for one new flow on top of an existing plan: existing
 * rows are copied unchanged, the new flow's switches and grid rate are
 * enumerated against the residual capacities. Returns the extended plan
 * (one extra row); the caller grows the instance via with_flow().
 */
SamplingPlan solve_online_exact(const ProblemInstance& inst, const SamplingPlan& base_plan,
                                const FlowSpec& new_flow, const ExactOptions& options = {});

}  // namespace ace
