#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <filesystem>
#include <unistd.h>

#include <nlohmann/json.hpp>

#include "ace/io.hpp"
#include "helpers.hpp"

using namespace ace;
namespace fs = std::filesystem;

namespace {

std::string data_path(const char* name) { return std::string(ACE_DATA_DIR) + "/" + name; }

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("ace_io_test_" + std::to_string(::getpid()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

}  // namespace

TEST_CASE("bundled instance file loads, routes and validates") {
  auto inst = io::load_instance(data_path("fig2.json"));
  CHECK(inst.flow_count() == 3);
  CHECK(inst.topology.switch_count() == 5);
  CHECK(inst.flows[0].path == Path{2, 0, 3});
  CHECK(inst.flows[1].path == Path{3, 0, 1});
  CHECK(inst.flows[2].path == Path{4, 1});
  REQUIRE(inst.rate_grid.has_value());
  CHECK(inst.rate_grid->size() == 1);
  CHECK(inst.params.per_assignment_cost == 100.0);
}

TEST_CASE("instance json round-trips through text") {
  auto inst = io::load_instance(data_path("sweep.json"));
  auto j = io::instance_to_json(inst, "line4.topo");
  auto again = io::instance_from_json(j, inst.topology);
  CHECK(again.flow_count() == inst.flow_count());
  CHECK(again.params.accuracy_weight == inst.params.accuracy_weight);
  CHECK(again.rate_grid == inst.rate_grid);
  for (int f = 0; f < inst.flow_count(); ++f) {
    CHECK(again.flows[f].path == inst.flows[f].path);
    CHECK(again.flows[f].offered_rate == inst.flows[f].offered_rate);
  }
}

TEST_CASE("instance loader rejects malformed files") {
  TempDir tmp;
  auto write = [&](const char* name, const std::string& body) {
    io::write_text_atomic((tmp.path / name).string(), body);
    return (tmp.path / name).string();
  };
  CHECK_THROWS_AS(io::load_instance(write("nojson.json", "not json")), ParseError);
  CHECK_THROWS_AS(io::load_instance(write("notopo.json", R"({"flows": []})")), ParseError);
  io::write_text_atomic((tmp.path / "t.topo").string(), "switch 0\nswitch 1\nlink 0 1\n");
  CHECK_THROWS_AS(io::load_instance(write("badweights.json", R"({
    "topology": "t.topo",
    "params": {"accuracy_weight": 0.9, "cost_weight": 0.9, "per_assignment_cost": 1.0},
    "flows": [{"src": 0, "dst": 1, "offered_rate": 100.0, "recommended_rate": 10.0}]
  })")),
                  ParseError);
  CHECK_THROWS_AS(io::load_instance(write("selfflow.json", R"({
    "topology": "t.topo",
    "params": {"accuracy_weight": 0.5, "cost_weight": 0.5, "per_assignment_cost": 1.0},
    "flows": [{"src": 0, "dst": 0, "offered_rate": 100.0, "recommended_rate": 10.0}]
  })")),
                  ParseError);
}

TEST_CASE("plan json round-trips exactly") {
  auto plan = SamplingPlan::zeros(2, 4);
  plan.assignment[0][1] = plan.assignment[0][3] = 1;
  plan.assignment[1][0] = 1;
  plan.rate = {125.5, 80.0};
  auto j = io::plan_to_json(plan);
  CHECK(io::plan_from_json(j) == plan);
  CHECK(j["switch_count"] == 4);
  CHECK(j["flows"][0]["assigned"] == nlohmann::json::array({1, 3}));
  CHECK_THROWS_AS(io::plan_from_json(nlohmann::json::object()), ParseError);
}

TEST_CASE("feasibility report carries families and slacks") {
  std::vector<Violation> violations = {
      {ConstraintFamily::Capacity, std::nullopt, 3, -200.0},
      {ConstraintFamily::Coverage, 1, std::nullopt, -1.0},
  };
  auto j = io::feasibility_to_json(violations);
  CHECK(j["feasible"] == false);
  CHECK(j["violations"][0]["family"] == "capacity");
  CHECK(j["violations"][0]["switch"] == 3);
  CHECK(j["violations"][0]["slack"] == -200.0);
  CHECK(j["violations"][1]["family"] == "coverage");
  CHECK(j["violations"][1]["flow"] == 1);
  CHECK(io::feasibility_to_json({})["feasible"] == true);
}

TEST_CASE("scenario csv has the documented column order") {
  ScenarioResult result;
  result.links = {{0, 1}, {1, 2}};
  result.actual = {{100.0, 50.25}};
  result.measured = {{99.0, 50.25}};
  std::string csv = io::scenario_to_csv(result);
  CHECK(csv ==
        "tick,link,actual_pps,measured_pps\n"
        "0,0-1,100,99\n"
        "0,1-2,50.25,50.25\n");
}

TEST_CASE("sweep csv has the documented column order") {
  std::vector<SweepRow> rows = {{0.2, 0.8, 1400.0, 800.0, -360.0}};
  CHECK(io::sweep_to_csv(rows) ==
        "accuracy_weight,cost_weight,accuracy_term,cost_term,objective\n"
        "0.2,0.8,1400,800,-360\n");
}

TEST_CASE("atomic writes leave no temp files behind") {
  TempDir tmp;
  auto target = (tmp.path / "nested" / "out.txt").string();
  io::write_text_atomic(target, "payload");
  CHECK(io::read_text(target) == "payload");
  CHECK(!fs::exists(target + ".tmp"));
  io::write_text_atomic(target, "changed");
  CHECK(io::read_text(target) == "changed");
}
