#include "ace/io.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace ace::io {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::string fmt(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", value);
  return buf;
}

[[noreturn]] void bad(const std::string& what) { throw ParseError("instance: " + what); }

double number_field(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number()) bad(std::string("missing numeric field '") + key + "'");
  return j[key].get<double>();
}

}  // namespace

ProblemInstance instance_from_json(const json& j, const Topology& topology) {
  if (!j.is_object()) bad("top level must be an object");
  ProblemInstance inst;
  inst.topology = topology;

  if (!j.contains("params") || !j["params"].is_object()) bad("missing 'params' object");
  const json& params = j["params"];
  inst.params.accuracy_weight = number_field(params, "accuracy_weight");
  inst.params.cost_weight = number_field(params, "cost_weight");
  inst.params.per_assignment_cost = number_field(params, "per_assignment_cost");
  if (!inst.params.normalized()) bad("accuracy_weight + cost_weight must equal 1");

  if (!j.contains("flows") || !j["flows"].is_array()) bad("missing 'flows' array");
  for (const json& jf : j["flows"]) {
    FlowSpec flow;
    flow.id = static_cast<FlowId>(inst.flows.size());
    flow.src = static_cast<SwitchId>(number_field(jf, "src"));
    flow.dst = static_cast<SwitchId>(number_field(jf, "dst"));
    flow.offered_rate = number_field(jf, "offered_rate");
    flow.recommended_rate = number_field(jf, "recommended_rate");
    if (!topology.has_switch(flow.src) || !topology.has_switch(flow.dst))
      bad("flow " + std::to_string(flow.id) + ": endpoint not in topology");
    if (flow.src == flow.dst) bad("flow " + std::to_string(flow.id) + ": src == dst");
    flow.path = shortest_path(topology, flow.src, flow.dst);
    inst.flows.push_back(std::move(flow));
  }

  if (j.contains("rate_grid")) {
    if (!j["rate_grid"].is_array()) bad("'rate_grid' must be an array");
    std::vector<double> grid;
    for (const json& v : j["rate_grid"]) {
      if (!v.is_number()) bad("'rate_grid' entries must be numbers");
      grid.push_back(v.get<double>());
    }
    inst.rate_grid = std::move(grid);
  }

  validate_instance(inst);
  return inst;
}

ProblemInstance load_instance(const std::string& path) {
  json j;
  try {
    j = json::parse(read_text(path));
  } catch (const json::parse_error& e) {
    throw ParseError("instance: " + path + ": " + e.what());
  }
  if (!j.contains("topology") || !j["topology"].is_string())
    bad(path + ": missing 'topology' reference");
  fs::path topo_path = j["topology"].get<std::string>();
  if (topo_path.is_relative()) topo_path = fs::path(path).parent_path() / topo_path;
  Topology topology = Topology::from_file(topo_path.string());
  try {
    return instance_from_json(j, topology);
  } catch (const std::invalid_argument& e) {
    throw ParseError(path + ": " + e.what());
  }
}

json instance_to_json(const ProblemInstance& inst, const std::string& topology_ref) {
  json j;
  j["topology"] = topology_ref;
  j["params"] = {{"accuracy_weight", inst.params.accuracy_weight},
                 {"cost_weight", inst.params.cost_weight},
                 {"per_assignment_cost", inst.params.per_assignment_cost}};
  j["flows"] = json::array();
  for (const FlowSpec& flow : inst.flows)
    j["flows"].push_back({{"src", flow.src},
                          {"dst", flow.dst},
                          {"offered_rate", flow.offered_rate},
                          {"recommended_rate", flow.recommended_rate}});
  if (inst.rate_grid) j["rate_grid"] = *inst.rate_grid;
  return j;
}

json plan_to_json(const SamplingPlan& plan) {
  json j;
  int switches = plan.assignment.empty() ? 0 : static_cast<int>(plan.assignment.front().size());
  j["switch_count"] = switches;
  j["flows"] = json::array();
  for (size_t f = 0; f < plan.assignment.size(); ++f) {
    json row;
    row["assigned"] = json::array();
    for (int s = 0; s < static_cast<int>(plan.assignment[f].size()); ++s)
      if (plan.assignment[f][s]) row["assigned"].push_back(s);
    row["rate"] = plan.rate[f];
    j["flows"].push_back(std::move(row));
  }
  return j;
}

SamplingPlan plan_from_json(const json& j) {
  if (!j.is_object() || !j.contains("switch_count") || !j.contains("flows"))
    throw ParseError("plan: expected 'switch_count' and 'flows'");
  int switches = j["switch_count"].get<int>();
  SamplingPlan plan = SamplingPlan::zeros(static_cast<int>(j["flows"].size()), switches);
  int f = 0;
  for (const json& row : j["flows"]) {
    for (const json& s : row.at("assigned")) {
      int sw = s.get<int>();
      if (sw < 0 || sw >= switches) throw ParseError("plan: assigned switch out of range");
      plan.assignment[f][sw] = 1;
    }
    plan.rate[f] = row.at("rate").get<double>();
    ++f;
  }
  return plan;
}

SamplingPlan load_plan(const std::string& path) {
  try {
    return plan_from_json(json::parse(read_text(path)));
  } catch (const json::exception& e) {
    throw ParseError("plan: " + path + ": " + e.what());
  }
}

json feasibility_to_json(const std::vector<Violation>& violations) {
  json j;
  j["feasible"] = violations.empty();
  j["violations"] = json::array();
  for (const Violation& v : violations) {
    json jv;
    jv["family"] = to_string(v.family);
    if (v.flow) jv["flow"] = *v.flow;
    if (v.sw) jv["switch"] = *v.sw;
    jv["slack"] = v.slack;
    j["violations"].push_back(std::move(jv));
  }
  return j;
}

std::string scenario_to_csv(const ScenarioResult& result) {
  std::ostringstream out;
  out << "tick,link,actual_pps,measured_pps\n";
  for (size_t t = 0; t < result.actual.size(); ++t)
    for (size_t l = 0; l < result.links.size(); ++l)
      out << t << ',' << result.links[l].a << '-' << result.links[l].b << ','
          << fmt(result.actual[t][l]) << ',' << fmt(result.measured[t][l]) << '\n';
  return out.str();
}

std::string sweep_to_csv(const std::vector<SweepRow>& rows) {
  std::ostringstream out;
  out << "accuracy_weight,cost_weight,accuracy_term,cost_term,objective\n";
  for (const SweepRow& row : rows)
    out << fmt(row.accuracy_weight) << ',' << fmt(row.cost_weight) << ',' << fmt(row.accuracy)
        << ',' << fmt(row.cost) << ',' << fmt(row.objective) << '\n';
  return out.str();
}

void write_text_atomic(const std::string& path, const std::string& content) {
  fs::path target(path);
  if (target.has_parent_path()) fs::create_directories(target.parent_path());
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out << content;
  }
  fs::rename(tmp, target);
}

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace ace::io
