#pragma once

#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "ace/instance.hpp"
#include "ace/simulator.hpp"

namespace ace::io {

/**
 * Instance file schema (JSON):
 *   {
 *     "topology": "<path, resolved relative to the instance file>",
 *     "params": {"accuracy_weight": a, "cost_weight": b, "per_assignment_cost": C},
 *     "flows": [{"src": i, "dst": j, "offered_rate": pps, "recommended_rate": pps}, ...],
 *     "rate_grid": [pps, ...]              // optional, strictly ascending
 *   }
 * Flows are routed on load; weights must satisfy a + b = 1.
 */
ProblemInstance load_instance(const std::string& path);
ProblemInstance instance_from_json(const nlohmann::json& j, const Topology& topology);
nlohmann::json instance_to_json(const ProblemInstance& inst, const std::string& topology_ref);

// Plan schema: {"switch_count": m, "flows": [{"assigned": [ids...], "rate": pps}, ...]}
nlohmann::json plan_to_json(const SamplingPlan& plan);
SamplingPlan plan_from_json(const nlohmann::json& j);
SamplingPlan load_plan(const std::string& path);

nlohmann::json feasibility_to_json(const std::vector<Violation>& violations);

// CSV bodies; column orders are part of the output contract.
// tick,link,actual_pps,measured_pps — one row per tick per link.
std::string scenario_to_csv(const ScenarioResult& result);
// accuracy_weight,cost_weight,accuracy_term,cost_term,objective
std::string sweep_to_csv(const std::vector<SweepRow>& rows);

// Writes via a temp file + rename so readers never see partial output.
void write_text_atomic(const std::string& path, const std::string& content);

std::string read_text(const std::string& path);

}  // namespace ace::io
