#include "ace/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "ace/heuristic.hpp"
#include "ace/rng.hpp"

namespace ace {

TrafficSchedule doubling_schedule(int n_flows, double initial, int period, int horizon) {
  if (n_flows <= 0 || !(initial > 0.0) || period <= 0 || horizon <= 0)
    throw std::invalid_argument("doubling_schedule: all arguments must be > 0");
  TrafficSchedule schedule;
  schedule.horizon = horizon;
  schedule.rate.assign(n_flows, std::vector<double>(horizon));
  for (auto& row : schedule.rate)
    for (int t = 0; t < horizon; ++t) row[t] = std::ldexp(initial, t / period);
  return schedule;
}

TrafficSchedule constant_schedule(int n_flows, double rate, int horizon) {
  if (n_flows <= 0 || rate < 0.0 || horizon <= 0)
    throw std::invalid_argument("constant_schedule: bad arguments");
  TrafficSchedule schedule;
  schedule.horizon = horizon;
  schedule.rate.assign(n_flows, std::vector<double>(horizon, rate));
  return schedule;
}

namespace {

int link_index(const std::vector<Link>& links, SwitchId a, SwitchId b) {
  Link key{std::min(a, b), std::max(a, b)};
  auto it = std::lower_bound(links.begin(), links.end(), key);
  if (it == links.end() || !(*it == key))
    throw std::invalid_argument("simulate: path uses a link missing from the topology");
  return static_cast<int>(it - links.begin());
}

}  // namespace

ScenarioResult simulate(const ProblemInstance& inst, const SamplingPlan& plan,
                        const TrafficSchedule& schedule, double loss_prob, uint64_t seed,
                        const SimOptions& options) {
  validate_instance(inst);
  if (!(loss_prob >= 0.0 && loss_prob < 1.0))
    throw std::invalid_argument("simulate: loss_prob must be in [0, 1)");
  if (schedule.horizon <= 0 || static_cast<int>(schedule.rate.size()) != inst.flow_count())
    throw std::invalid_argument("simulate: schedule does not match the instance");
  for (const auto& row : schedule.rate)
    if (static_cast<int>(row.size()) < schedule.horizon)
      throw std::invalid_argument("simulate: schedule row shorter than the horizon");
  if (auto violations = check_feasibility(plan, inst); !violations.empty())
    throw std::invalid_argument("simulate: plan infeasible: " + describe(violations.front()));

  const int flows = inst.flow_count();
  const int ticks = schedule.horizon;
  const double tick = schedule.tick_seconds;
  const bool stochastic = options.mode == SimMode::Stochastic;

  ScenarioResult result;
  result.seed = seed;
  result.links = inst.topology.links();
  const int n_links = static_cast<int>(result.links.size());
  result.actual.assign(ticks, std::vector<double>(n_links, 0.0));
  result.measured.assign(ticks, std::vector<double>(n_links, 0.0));

  // Per flow: link column per hop and the path positions that sample it.
  std::vector<std::vector<int>> hop_links(flows);
  std::vector<std::vector<int>> sampling_pos(flows);
  for (int f = 0; f < flows; ++f) {
    const Path& path = inst.flows[f].path;
    for (size_t i = 0; i + 1 < path.size(); ++i)
      hop_links[f].push_back(link_index(result.links, path[i], path[i + 1]));
    for (size_t i = 0; i < path.size(); ++i)
      if (plan.assignment[f][path[i]]) sampling_pos[f].push_back(static_cast<int>(i));
  }

  // Separate streams so the traffic realization depends only on the seed:
  // plans with different sampling layouts then see identical packet losses.
  rng::Stream traffic_stream(seed);
  rng::Stream sampling_stream(seed ^ 0x9e3779b97f4a7c15ULL);
  std::vector<double> rate = plan.rate;       // mutated only in adaptive runs
  std::vector<double> prev_estimate(flows, 0.0);
  double cost_sum = 0.0;

  for (int t = 0; t < ticks; ++t) {
    for (int f = 0; f < flows; ++f)
      cost_sum += rate[f] * static_cast<double>(sampling_pos[f].size());

    for (int f = 0; f < flows; ++f) {
      const Path& path = inst.flows[f].path;
      const int hops = static_cast<int>(hop_links[f].size());

      // Packet counts arriving at each path position this tick.
      std::vector<double> arrivals(path.size());
      double offered = schedule.rate[f][t] * tick;
      arrivals[0] = stochastic ? static_cast<double>(std::llround(offered)) : offered;
      for (int i = 0; i < hops; ++i) {
        double in = arrivals[i];
        double out = stochastic ? static_cast<double>(rng::binomial(
                                      traffic_stream, static_cast<int64_t>(in), 1.0 - loss_prob))
                                : in * (1.0 - loss_prob);
        arrivals[i + 1] = out;
        result.actual[t][hop_links[f][i]] += out / tick;
      }

      // Rate estimate from each sampling switch, then averaged.
      double estimate_sum = 0.0;
      for (int pos : sampling_pos[f]) {
        double arriving = arrivals[pos];
        double arriving_pps = arriving / tick;
        if (arriving <= 0.0 || rate[f] <= 0.0) continue;  // zero measurement, no division
        double fraction = std::min(1.0, rate[f] / arriving_pps);
        if (stochastic) {
          double sampled = static_cast<double>(
              rng::binomial(sampling_stream, static_cast<int64_t>(arriving), fraction));
          estimate_sum += sampled / fraction / tick;
        } else {
          estimate_sum += arriving_pps;  // mean of sampled/fraction
        }
      }
      double estimate =
          sampling_pos[f].empty() ? 0.0 : estimate_sum / static_cast<double>(sampling_pos[f].size());
      for (int link : hop_links[f]) result.measured[t][link] += estimate;

      if (options.adaptive) {
        if (t == 0) {
          prev_estimate[f] = estimate;
        } else {
          AdaptiveCfg cfg = *options.adaptive;
          cfg.min_rate = inst.flows[f].recommended_rate;
          cfg.max_rate = inst.flows[f].offered_rate;
          rate[f] = adaptive_polling_step(rate[f], prev_estimate[f], estimate, cfg);
          prev_estimate[f] = estimate;
        }
      }
    }
  }

  result.cost = cost_sum / static_cast<double>(ticks);
  result.accuracy = accuracy_metric(result);
  return result;
}

double accuracy_metric(const ScenarioResult& result) {
  double error_sum = 0.0;
  long active = 0;
  for (size_t t = 0; t < result.actual.size(); ++t) {
    for (size_t l = 0; l < result.actual[t].size(); ++l) {
      double actual = result.actual[t][l];
      double measured = result.measured[t][l];
      if (actual <= 0.0 && measured <= 0.0) continue;
      error_sum += std::abs(measured - actual) / std::max(actual, 1.0);
      ++active;
    }
  }
  if (active == 0) return 1.0;
  return std::clamp(1.0 - error_sum / static_cast<double>(active), 0.0, 1.0);
}

double cost_metric(const SamplingPlan& plan) {
  double total = 0.0;
  for (size_t f = 0; f < plan.assignment.size(); ++f)
    for (uint8_t x : plan.assignment[f])
      if (x) total += plan.rate[f];
  return total;
}

std::vector<SweepRow> sweep_ab(const ProblemInstance& inst,
                               const std::vector<std::pair<double, double>>& ratios,
                               const ExactOptions& exact_options) {
  if (ratios.empty()) throw std::invalid_argument("sweep_ab: no ratios given");
  for (auto [a, b] : ratios)
    if (a < 0.0 || b < 0.0 || std::abs(a + b - 1.0) > 1e-9)
      throw std::invalid_argument("sweep_ab: each ratio must have a, b >= 0 and a + b = 1");

  std::vector<SweepRow> rows;
  for (auto [a, b] : ratios) {
    ProblemInstance scoped = inst;
    scoped.params.accuracy_weight = a;
    scoped.params.cost_weight = b;
    SamplingPlan plan;
    if (scoped.rate_grid) {
      try {
        plan = solve_offline_exact(scoped, exact_options).plan;
      } catch (const SearchLimitError&) {
        plan = aps_offline(scoped);
      }
    } else {
      plan = aps_offline(scoped);
    }
    rows.push_back({a, b, accuracy_term(plan, scoped), cost_term(plan, scoped),
                    objective_value(plan, scoped)});
  }
  std::stable_sort(rows.begin(), rows.end(), [](const SweepRow& x, const SweepRow& y) {
    return x.accuracy_weight * y.cost_weight < y.accuracy_weight * x.cost_weight;
  });
  return rows;
}

std::vector<std::pair<SwitchId, SwitchId>> random_pairs(const Topology& topo, int n,
                                                        uint64_t seed) {
  const long long max_pairs =
      static_cast<long long>(topo.switch_count()) * (topo.switch_count() - 1);
  if (n < 0 || n > max_pairs)
    throw std::invalid_argument("random_pairs: requested more pairs than src/dst combinations");

  rng::Stream stream(seed);
  std::set<std::pair<SwitchId, SwitchId>> seen;
  std::vector<std::pair<SwitchId, SwitchId>> out;
  while (static_cast<int>(out.size()) < n) {
    auto src = static_cast<SwitchId>(stream.below(topo.switch_count()));
    auto dst = static_cast<SwitchId>(stream.below(topo.switch_count()));
    if (src == dst) continue;
    if (!seen.insert({src, dst}).second) continue;
    out.push_back({src, dst});
  }
  return out;
}

}  // namespace ace
