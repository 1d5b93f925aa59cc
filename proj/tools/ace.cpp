// Scenario runner: wires topologies, instance generation, the solvers and
// the simulator into reproducible experiments emitting CSV/JSON.
//
// Exit codes: 0 success, 1 usage/IO/limit errors, 2 model infeasibility.

#include <filesystem>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include <nlohmann/json.hpp>

#include "ace/baselines.hpp"
#include "ace/exact.hpp"
#include "ace/heuristic.hpp"
#include "ace/io.hpp"
#include "ace/simulator.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::vector<std::pair<double, double>> parse_ratios(const std::string& text) {
  std::vector<std::pair<double, double>> out;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    auto colon = item.find(':');
    if (colon == std::string::npos)
      throw std::invalid_argument("ratio '" + item + "' must look like a:b");
    double a = 0.0, b = 0.0;
    try {
      a = std::stod(item.substr(0, colon));
      b = std::stod(item.substr(colon + 1));
    } catch (const std::exception&) {
      throw std::invalid_argument("ratio '" + item + "' must look like a:b");
    }
    if (a < 0.0 || b < 0.0 || std::abs(a + b - 1.0) > 1e-9)
      throw std::invalid_argument("ratio '" + item + "' must have a, b >= 0 and a + b = 1");
    out.push_back({a, b});
  }
  if (out.empty()) throw std::invalid_argument("no ratios given");
  return out;
}

// Flags for commands that synthesize an instance from a topology.
struct ScenarioFlags {
  std::string topology;
  int pairs = 5;
  uint64_t seed = 1;
  double rate_pps = ace::mbps_to_pps(1.0);
  double rec_fraction = 0.1;
  double cost = 1.0;
  double capacity = 0.0;  // 0 keeps the file capacities
  std::string grid;       // comma-separated pps values, optional
};

void add_scenario_flags(CLI::App* cmd, ScenarioFlags* flags) {
  cmd->add_option("--topology", flags->topology, "topology file");
  cmd->add_option("--pairs", flags->pairs, "number of random src-dst pairs")->capture_default_str();
  cmd->add_option("--seed", flags->seed, "seed for pair selection and simulation")->capture_default_str();
  cmd->add_option("--rate-pps", flags->rate_pps, "offered rate per flow, pps")->capture_default_str();
  cmd->add_option("--rec-fraction", flags->rec_fraction,
                  "recommended sampling rate as a fraction of the offered rate")->capture_default_str();
  cmd->add_option("--cost", flags->cost, "per-assignment cost")->capture_default_str();
  cmd->add_option("--capacity", flags->capacity,
                  "override every switch capacity with this value (0 keeps the file values)");
  cmd->add_option("--grid", flags->grid, "comma-separated sampling-rate grid, pps");
}

ace::ProblemInstance build_instance(const ScenarioFlags& flags, double a, double b) {
  if (flags.topology.empty())
    throw std::invalid_argument("either --instance or --topology is required");
  ace::Topology topo = ace::Topology::from_file(flags.topology);
  if (flags.capacity > 0.0) topo = topo.with_uniform_capacity(flags.capacity);

  ace::ProblemInstance inst;
  inst.topology = std::move(topo);
  inst.params = {a, b, flags.cost};
  for (auto [src, dst] : ace::random_pairs(inst.topology, flags.pairs, flags.seed)) {
    ace::FlowSpec flow;
    flow.id = static_cast<ace::FlowId>(inst.flows.size());
    flow.src = src;
    flow.dst = dst;
    flow.path = ace::shortest_path(inst.topology, src, dst);
    flow.offered_rate = flags.rate_pps;
    flow.recommended_rate = flags.rec_fraction * flags.rate_pps;
    inst.flows.push_back(std::move(flow));
  }
  if (!flags.grid.empty()) {
    std::vector<double> grid;
    std::istringstream in(flags.grid);
    std::string item;
    while (std::getline(in, item, ',')) grid.push_back(std::stod(item));
    inst.rate_grid = std::move(grid);
  }
  ace::validate_instance(inst);
  return inst;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

int run_solve(const std::string& instance_path, const std::string& solver, double fixed_rate,
              const std::string& out_dir) {
  ace::ProblemInstance inst = ace::io::load_instance(instance_path);

  ace::SamplingPlan plan;
  std::vector<ace::Violation> violations;
  try {
    if (solver == "exact") {
      plan = ace::solve_offline_exact(inst).plan;
    } else if (solver == "aps") {
      plan = ace::aps_offline(inst);
    } else if (solver == "accuracy-only") {
      plan = ace::accuracy_only_plan(inst);
    } else if (solver == "fixed") {
      double rate = fixed_rate;
      if (rate <= 0.0)
        for (const auto& flow : inst.flows) rate = std::max(rate, flow.offered_rate);
      if (rate <= 0.0) throw std::invalid_argument("--fixed-rate must be > 0");
      auto result = ace::fixed_rate_plan(inst, rate);
      plan = std::move(result.plan);
      violations = std::move(result.violations);
    } else {
      throw std::invalid_argument("unknown solver '" + solver + "'");
    }
  } catch (const ace::InfeasibleError& e) {
    json report;
    report["feasible"] = false;
    report["flow"] = e.flow();
    report["error"] = e.what();
    ace::io::write_text_atomic((fs::path(out_dir) / "feasibility.json").string(), dump(report));
    std::cerr << e.what() << "\n";
    return 2;
  }

  if (solver != "fixed") violations = ace::check_feasibility(plan, inst);
  ace::io::write_text_atomic((fs::path(out_dir) / "plan.json").string(),
                             dump(ace::io::plan_to_json(plan)));
  ace::io::write_text_atomic((fs::path(out_dir) / "feasibility.json").string(),
                             dump(ace::io::feasibility_to_json(violations)));

  std::cout << "solver=" << solver << " objective=" << ace::objective_value(plan, inst)
            << " accuracy_term=" << ace::accuracy_term(plan, inst)
            << " cost_term=" << ace::cost_term(plan, inst)
            << " feasible=" << (violations.empty() ? "yes" : "no") << "\n";
  return violations.empty() ? 0 : 2;
}

int run_sweep(const std::string& instance_path, const ScenarioFlags& flags,
              const std::string& ratios_text, const std::string& out_dir) {
  auto ratios = parse_ratios(ratios_text);
  ace::ProblemInstance inst = instance_path.empty() ? build_instance(flags, 0.5, 0.5)
                                                    : ace::io::load_instance(instance_path);
  auto rows = ace::sweep_ab(inst, ratios);
  std::string csv = ace::io::sweep_to_csv(rows);
  std::cout << csv;
  if (!out_dir.empty())
    ace::io::write_text_atomic((fs::path(out_dir) / "sweep.csv").string(), csv);
  return 0;
}

int run_compare(const ScenarioFlags& flags, const std::string& ratio_text, double loss,
                int horizon, int period, double fixed_rate, const ace::AdaptiveCfg& adaptive,
                const std::string& out_dir) {
  auto ratio = parse_ratios(ratio_text);
  if (ratio.size() != 1) throw std::invalid_argument("--ratio takes a single a:b pair");
  auto [a, b] = ratio.front();

  ace::ProblemInstance inst = build_instance(flags, a, b);
  ace::TrafficSchedule schedule =
      ace::doubling_schedule(inst.flow_count(), flags.rate_pps, period, horizon);

  double fixed = fixed_rate;
  if (fixed <= 0.0)
    for (const auto& flow : inst.flows) fixed = std::max(fixed, flow.offered_rate);

  // Plan per scheme; every scheme then replays the identical seeded traffic.
  std::map<std::string, ace::SamplingPlan> plans;
  plans["aps"] = ace::aps_offline(inst);
  plans["sod"] = ace::accuracy_only_plan(inst);
  auto fixed_result = ace::fixed_rate_plan(inst, fixed);
  if (!fixed_result.violations.empty())
    throw ace::InfeasibleError(-1,
                               "fixed baseline violates switch capacities; raise --capacity "
                               "(first: " +
                                   ace::describe(fixed_result.violations.front()) + ")");
  plans["fixed"] = std::move(fixed_result.plan);

  ace::SamplingPlan payless = ace::SamplingPlan::zeros(inst.flow_count(), inst.switch_count());
  for (int f = 0; f < inst.flow_count(); ++f) {
    payless.assignment[f][inst.flows[f].path.front()] = 1;  // poll at the ingress switch
    payless.rate[f] = inst.flows[f].recommended_rate;
  }
  plans["payless"] = std::move(payless);

  json summary;
  summary["seed"] = flags.seed;
  summary["loss"] = loss;
  summary["horizon"] = horizon;
  summary["pairs"] = flags.pairs;
  summary["ratio"] = {{"accuracy_weight", a}, {"cost_weight", b}};
  summary["schemes"] = json::object();

  for (const auto& [name, plan] : plans) {
    ace::SimOptions options;
    if (name == "payless") options.adaptive = adaptive;
    ace::ScenarioResult result = ace::simulate(inst, plan, schedule, loss, flags.seed, options);
    result.scheme = name;
    summary["schemes"][name] = {{"accuracy", result.accuracy}, {"cost", result.cost}};
    ace::io::write_text_atomic((fs::path(out_dir) / ("result_" + name + ".csv")).string(),
                               ace::io::scenario_to_csv(result));
    std::cout << name << " accuracy=" << result.accuracy << " cost=" << result.cost << "\n";
  }
  ace::io::write_text_atomic((fs::path(out_dir) / "summary.json").string(), dump(summary));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"flow sampling planner and link-utilization measurement simulator"};
  app.set_config("--config", "", "read defaults from a config file");
  app.require_subcommand(1);

  // solve
  auto* solve = app.add_subcommand("solve", "solve one instance file and write the plan");
  std::string solve_instance, solve_solver = "aps", solve_out = ".";
  double solve_fixed_rate = 0.0;
  solve->add_option("--instance", solve_instance, "instance JSON file")->required();
  solve->add_option("--solver", solve_solver, "exact | aps | fixed | accuracy-only")->capture_default_str();
  solve->add_option("--fixed-rate", solve_fixed_rate,
                    "sampling rate for --solver fixed (default: max offered rate)");
  solve->add_option("--out", solve_out, "output directory")->capture_default_str();

  // sweep
  auto* sweep = app.add_subcommand("sweep", "solve per weight ratio and emit the trend table");
  std::string sweep_instance, sweep_ratios, sweep_out;
  ScenarioFlags sweep_flags;
  sweep->add_option("--instance", sweep_instance, "instance JSON file (overrides --topology)");
  sweep->add_option("--ratios", sweep_ratios, "comma-separated a:b list")->required();
  sweep->add_option("--out", sweep_out, "also write sweep.csv into this directory");
  add_scenario_flags(sweep, &sweep_flags);

  // compare
  auto* compare = app.add_subcommand("compare", "run every scheme on one seeded scenario");
  ScenarioFlags compare_flags;
  std::string compare_ratio = "0.2:0.8", compare_out = ".";
  double compare_loss = 0.01, compare_fixed_rate = 0.0;
  int compare_horizon = 60, compare_period = 10;
  ace::AdaptiveCfg adaptive;
  add_scenario_flags(compare, &compare_flags);
  compare->add_option("--ratio", compare_ratio, "a:b weights for the greedy scheme")->capture_default_str();
  compare->add_option("--loss", compare_loss, "per-link packet loss probability")->capture_default_str();
  compare->add_option("--horizon", compare_horizon, "ticks to simulate")->capture_default_str();
  compare->add_option("--period", compare_period, "ticks between traffic doublings")->capture_default_str();
  compare->add_option("--fixed-rate", compare_fixed_rate,
                      "rate for the fixed baseline (default: max offered rate)");
  compare->add_option("--payless-threshold", adaptive.change_threshold,
                      "relative count change that triggers growth")->capture_default_str();
  compare->add_option("--payless-growth", adaptive.growth, "rate multiplier on change")->capture_default_str();
  compare->add_option("--payless-decay", adaptive.decay, "rate multiplier when quiet")->capture_default_str();
  compare->add_option("--out", compare_out, "output directory")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;  // --help is a success, everything else is usage
  }

  try {
    if (solve->parsed())
      return run_solve(solve_instance, solve_solver, solve_fixed_rate, solve_out);
    if (sweep->parsed()) return run_sweep(sweep_instance, sweep_flags, sweep_ratios, sweep_out);
    return run_compare(compare_flags, compare_ratio, compare_loss, compare_horizon,
                       compare_period, compare_fixed_rate, adaptive, compare_out);
  } catch (const ace::InfeasibleError& e) {
    std::cerr << "infeasible: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
