#pragma once

#include "ace/instance.hpp"

namespace ace {

// Outcome of scoring one switch against the currently uncovered flows.
struct SwitchScore {
  SwitchId sw = -1;
  std::vector<FlowId> candidates;  // ascending flow id
  std::vector<double> rates;       // tentative rate per candidate
  double score = 0.0;              // sum of a*rate - b*C over candidates
};

/**
 * Greedy score of switch `sw`: walks the uncovered flows in ascending id
 * order, admits each flow that traverses the switch at its tentative rate
 * (minimum admissible grid rate, or recommended_rate without a grid) while
 * the running load fits the residual capacity. Flows whose tentative score
 * contribution is negative are skipped here; they are placed by the
 * feasibility sweep at the end of aps_offline.
 */
SwitchScore switch_score(const ProblemInstance& inst, SwitchId sw,
                         const std::vector<FlowId>& uncovered, double residual_capacity,
                         const ModelParams& params);

struct ApsStats {
  int score_evaluations = 0;  // switch_score calls during the main loop
};

/**
 * Greedy offline planner: repeatedly commits the maximum-score switch
 * (ties toward the smallest switch id) until every flow with nonnegative
 * score is covered, then places negative-score flows at their smallest-id
 * feasible on-path switch, and finally — only when the accuracy weight
 * exceeds the cost weight — raises committed rates toward each flow's
 * offered rate in ascending flow id order with the leftover capacity at
 * its assigned switch. Rates stay on the grid when the instance has one.
 */
SamplingPlan aps_offline(const ProblemInstance& inst, ApsStats* stats = nullptr);

/**
 * Greedy placement of one new flow: scores every on-path switch with
 * enough residual capacity (rate = what the boost policy would pick there)
 * and takes the maximum, ties toward the smallest switch id. Existing
 * assignments and rates are copied bit-identically. Returns the extended
 * plan; the caller grows the instance via with_flow().
 */
SamplingPlan aps_online(const ProblemInstance& inst, const SamplingPlan& base_plan,
                        const FlowSpec& new_flow);

}  // namespace ace
