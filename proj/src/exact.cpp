#include "ace/exact.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace ace {

namespace {

struct Candidate {
  std::vector<SwitchId> switches;  // ascending
  double rate = 0.0;
  double value = 0.0;  // (a*y - b*C) * |switches|
};

// Non-empty subsets of `pool` in lexicographic order of their ascending id
// lists ([s0] < [s0,s1] < [s0,s2] < [s1] ...), each subset paired with every
// admissible rate in ascending order. That enumeration order doubles as the
// tie-break order: the first-found optimum is the lexicographically
// smallest (x, y) encoding.
std::vector<Candidate> flow_candidates(const std::vector<SwitchId>& pool,
                                       const std::vector<double>& rates,
                                       const ModelParams& params) {
  std::vector<Candidate> out;
  std::vector<SwitchId> current;
  auto emit = [&] {
    for (double rate : rates) {
      Candidate c;
      c.switches = current;
      c.rate = rate;
      c.value = (params.accuracy_weight * rate - params.cost_weight * params.per_assignment_cost) *
                static_cast<double>(current.size());
      out.push_back(std::move(c));
    }
  };
  auto recurse = [&](auto&& self, size_t start) -> void {
    for (size_t i = start; i < pool.size(); ++i) {
      current.push_back(pool[i]);
      emit();
      self(self, i + 1);
      current.pop_back();
    }
  };
  recurse(recurse, 0);
  return out;
}

std::vector<SwitchId> sorted_path_switches(const Path& path) {
  std::vector<SwitchId> out(path.begin(), path.end());
  std::sort(out.begin(), out.end());
  return out;
}

struct Search {
  const ProblemInstance& inst;
  std::vector<std::vector<Candidate>> candidates;  // per flow
  std::vector<double> suffix_bound;                // optimistic value of flows i..end
  std::vector<double> load;                        // per switch, committed so far
  std::vector<int> choice;                         // candidate index per flow
  std::vector<int> best_choice;
  double best_value = -std::numeric_limits<double>::infinity();
  bool found = false;
  int deepest = 0;

  explicit Search(const ProblemInstance& instance) : inst(instance) {}

  bool fits(const Candidate& c) const {
    for (SwitchId s : c.switches)
      if (load[s] + c.rate > inst.topology.capacity(s) + kFeasEps) return false;
    return true;
  }

  void dfs(int f, double value) {
    deepest = std::max(deepest, f);
    if (f == inst.flow_count()) {
      if (value > best_value) {  // strict: keeps the first (lex-smallest) optimum
        best_value = value;
        best_choice = choice;
        found = true;
      }
      return;
    }
    if (found && value + suffix_bound[f] <= best_value) return;
    const auto& pool = candidates[f];
    for (int i = 0; i < static_cast<int>(pool.size()); ++i) {
      const Candidate& c = pool[i];
      if (!fits(c)) continue;
      for (SwitchId s : c.switches) load[s] += c.rate;
      choice[f] = i;
      dfs(f + 1, value + c.value);
      for (SwitchId s : c.switches) load[s] -= c.rate;
    }
  }
};

}  // namespace

ExactResult solve_offline_exact(const ProblemInstance& inst, const ExactOptions& options) {
  validate_instance(inst);
  if (!inst.rate_grid)
    throw std::invalid_argument("solve_offline_exact: instance needs a rate_grid");

  Search search(inst);
  search.candidates.resize(inst.flow_count());
  double space = 1.0;
  for (int f = 0; f < inst.flow_count(); ++f) {
    auto rates = inst.admissible_rates(f);
    auto pool = sorted_path_switches(inst.flows[f].path);
    space *= std::ldexp(static_cast<double>(rates.size()), static_cast<int>(pool.size()));
    if (space > options.candidate_limit)
      throw SearchLimitError("solve_offline_exact: candidate space exceeds limit of " +
                             std::to_string(static_cast<long long>(options.candidate_limit)));
    search.candidates[f] = flow_candidates(pool, rates, inst.params);

    // Flow that cannot be hosted anywhere even on an empty network.
    bool alone_ok = false;
    for (const Candidate& c : search.candidates[f]) {
      bool fits = true;
      for (SwitchId s : c.switches)
        if (c.rate > inst.topology.capacity(s) + kFeasEps) fits = false;
      if (fits) {
        alone_ok = true;
        break;
      }
    }
    if (!alone_ok)
      throw InfeasibleError(f, "solve_offline_exact: flow " + std::to_string(f) +
                                   " cannot meet its recommended rate on any on-path switch");
  }

  search.suffix_bound.assign(inst.flow_count() + 1, 0.0);
  for (int f = inst.flow_count() - 1; f >= 0; --f) {
    double best = -std::numeric_limits<double>::infinity();
    for (const Candidate& c : search.candidates[f]) best = std::max(best, c.value);
    search.suffix_bound[f] = search.suffix_bound[f + 1] + best;
  }

  search.load.assign(inst.switch_count(), 0.0);
  search.choice.assign(inst.flow_count(), -1);
  search.dfs(0, 0.0);

  if (!search.found) {
    int f = std::min(search.deepest, inst.flow_count() - 1);
    throw InfeasibleError(f, "solve_offline_exact: no joint feasible assignment; flow " +
                                 std::to_string(f) + " blocked by residual capacities");
  }

  SamplingPlan plan = SamplingPlan::zeros(inst.flow_count(), inst.switch_count());
  for (int f = 0; f < inst.flow_count(); ++f) {
    const Candidate& c = search.candidates[f][search.best_choice[f]];
    for (SwitchId s : c.switches) plan.assignment[f][s] = 1;
    plan.rate[f] = c.rate;
  }
  return {plan, objective_value(plan, inst)};
}

SamplingPlan solve_online_exact(const ProblemInstance& inst, const SamplingPlan& base_plan,
                                const FlowSpec& new_flow, const ExactOptions& options) {
  ProblemInstance extended = inst.with_flow(new_flow);
  validate_instance(extended);
  if (!extended.rate_grid)
    throw std::invalid_argument("solve_online_exact: instance needs a rate_grid");
  const FlowId nf = extended.flow_count() - 1;

  std::vector<double> residual(inst.switch_count());
  for (int s = 0; s < inst.switch_count(); ++s) {
    double load = 0.0;
    for (int f = 0; f < inst.flow_count(); ++f)
      if (base_plan.assignment.at(f).at(s)) load += base_plan.rate.at(f);
    residual[s] = inst.topology.capacity(s) - load;
  }

  auto rates = extended.admissible_rates(nf);
  auto pool = sorted_path_switches(extended.flows[nf].path);
  double space = std::ldexp(static_cast<double>(rates.size()), static_cast<int>(pool.size()));
  if (space > options.candidate_limit)
    throw SearchLimitError("solve_online_exact: candidate space exceeds limit");

  const auto candidates = flow_candidates(pool, rates, extended.params);
  const Candidate* best = nullptr;
  for (const Candidate& c : candidates) {
    bool fits = true;
    for (SwitchId s : c.switches)
      if (c.rate > residual[s] + kFeasEps) fits = false;
    if (!fits) continue;
    if (!best || c.value > best->value) best = &c;  // first-found wins ties
  }
  if (!best)
    throw InfeasibleError(nf, "solve_online_exact: no on-path switch has residual capacity " +
                                  std::to_string(extended.flows[nf].recommended_rate) +
                                  " pps for the new flow");

  SamplingPlan plan = SamplingPlan::zeros(extended.flow_count(), extended.switch_count());
  for (int f = 0; f < inst.flow_count(); ++f) {
    plan.assignment[f] = base_plan.assignment[f];
    plan.rate[f] = base_plan.rate[f];
  }
  for (SwitchId s : best->switches) plan.assignment[nf][s] = 1;
  plan.rate[nf] = best->rate;
  return plan;
}

}  // namespace ace
