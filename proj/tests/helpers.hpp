#pragma once

#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "ace/instance.hpp"
#include "ace/topology.hpp"

namespace test_util {

inline std::string line_topology_text(int n, double capacity = 1000.0) {
  std::ostringstream out;
  for (int i = 0; i < n; ++i) out << "switch " << i << " capacity=" << capacity << "\n";
  for (int i = 0; i + 1 < n; ++i) out << "link " << i << " " << i + 1 << "\n";
  return out.str();
}

inline ace::Topology line_topology(int n, double capacity = 1000.0) {
  return ace::Topology::from_text(line_topology_text(n, capacity));
}

inline ace::FlowSpec make_flow(const ace::Topology& topo, int id, ace::SwitchId src,
                               ace::SwitchId dst, double offered, double recommended) {
  ace::FlowSpec flow;
  flow.id = id;
  flow.src = src;
  flow.dst = dst;
  flow.path = ace::shortest_path(topo, src, dst);
  flow.offered_rate = offered;
  flow.recommended_rate = recommended;
  return flow;
}

// Random connected topology with n switches (random tree plus extra edges).
inline ace::Topology random_topology(std::mt19937_64& rng, int n, double capacity = 1000.0) {
  std::ostringstream out;
  for (int i = 0; i < n; ++i) out << "switch " << i << " capacity=" << capacity << "\n";
  std::set<std::pair<int, int>> edges;
  for (int i = 1; i < n; ++i) {
    int parent = static_cast<int>(rng() % i);
    edges.insert({std::min(i, parent), std::max(i, parent)});
  }
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (rng() % 10 < 3) edges.insert({a, b});
  for (auto [a, b] : edges) out << "link " << a << " " << b << "\n";
  return ace::Topology::from_text(out.str());
}

// Small grid-restricted instance for oracle-vs-heuristic property tests.
// Capacities land in [sum r_f, 3 sum r_f], so every flow always fits at its
// minimum rate while higher rates still contend for capacity.
inline ace::ProblemInstance random_grid_instance(uint64_t seed) {
  std::mt19937_64 rng(seed);
  const int n = 2 + static_cast<int>(rng() % 4);  // 2..5 switches
  ace::ProblemInstance inst;
  inst.topology = random_topology(rng, n);

  static const double kGridPool[] = {25.0, 50.0, 100.0, 200.0, 400.0};
  std::set<double> grid;
  const int grid_size = 1 + static_cast<int>(rng() % 3);
  while (static_cast<int>(grid.size()) < grid_size) grid.insert(kGridPool[rng() % 5]);
  inst.rate_grid = std::vector<double>(grid.begin(), grid.end());

  const int flows = 1 + static_cast<int>(rng() % 4);  // 1..4
  double total_min_rate = 0.0;
  for (int f = 0; f < flows; ++f) {
    int src = static_cast<int>(rng() % n);
    int dst = static_cast<int>(rng() % n);
    if (src == dst) dst = (dst + 1) % n;
    double recommended = inst.rate_grid->front();
    double offered = (*inst.rate_grid)[rng() % inst.rate_grid->size()];
    if (rng() % 3 == 0) offered = inst.rate_grid->back() * 2.0;
    inst.flows.push_back(make_flow(inst.topology, f, src, dst, offered, recommended));
    total_min_rate += recommended;
  }

  static const double kCosts[] = {0.0, 5.0, 50.0, 200.0, 400.0};
  static const double kWeights[] = {0.0, 0.2, 0.5, 0.8, 1.0};
  double a = kWeights[rng() % 5];
  inst.params = {a, 1.0 - a, kCosts[rng() % 5]};

  std::ostringstream topo_text;
  double low = total_min_rate, high = 3.0 * total_min_rate;
  for (int s = 0; s < n; ++s) {
    double cap = low + (high - low) * static_cast<double>(rng() % 1000) / 1000.0;
    topo_text << "switch " << s << " capacity=" << cap << "\n";
  }
  for (const auto& link : inst.topology.links())
    topo_text << "link " << link.a << " " << link.b << "\n";
  inst.topology = ace::Topology::from_text(topo_text.str());

  ace::validate_instance(inst);
  return inst;
}

}  // namespace test_util
