#pragma once

#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ace {

using SwitchId = int;

// Undirected link between two switches, stored with a < b.
struct Link {
  SwitchId a = 0;
  SwitchId b = 0;

  friend bool operator==(const Link&, const Link&) = default;
  friend auto operator<=>(const Link&, const Link&) = default;
};

// Hop-by-hop route across the topology, endpoints inclusive.
using Path = std::vector<SwitchId>;

// Raised on malformed topology/instance input; message carries the line
// number where applicable.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Capacity assumed when a switch line omits capacity=<pps>.
inline constexpr double kDefaultCapacityPps = 1000.0;

/**
 * Immutable graph of the monitored network: switches with dense ids
 * 0..N-1, bidirectional links, and a per-switch sampling capacity in
 * packets per second. Safe to share across threads once built.
 *
 * Text format (one directive per line, '#' starts a comment):
 *
 *   switch <id> [capacity=<pps>] [name=<string>]
 *   link <id> <id>
 *
 * Switch ids must form 0..N-1, links must reference declared switches
 * (declaration order does not matter), and the graph must be connected.
 */
class Topology {
 public:
  Topology() = default;  // empty; meaningful instances come from the factories

  static Topology from_text(std::string_view text);
  static Topology from_file(const std::string& path);

  int switch_count() const { return static_cast<int>(capacity_.size()); }
  int link_count() const { return static_cast<int>(links_.size()); }

  double capacity(SwitchId s) const { return capacity_.at(s); }
  const std::vector<double>& capacities() const { return capacity_; }

  // Empty string when the switch was declared without a name.
  const std::string& name(SwitchId s) const { return names_.at(s); }
  std::optional<SwitchId> switch_by_name(std::string_view name) const;

  bool has_switch(SwitchId s) const { return s >= 0 && s < switch_count(); }
  bool has_link(SwitchId a, SwitchId b) const;

  // Links sorted ascending by (a, b); neighbor lists sorted ascending.
  const std::vector<Link>& links() const { return links_; }
  const std::vector<SwitchId>& neighbors(SwitchId s) const { return adjacency_.at(s); }

  // Replaces every capacity with the given uniform value (> 0). Used by
  // scenario runners that override file capacities.
  Topology with_uniform_capacity(double pps) const;

 private:
  std::vector<double> capacity_;
  std::vector<std::string> names_;
  std::vector<Link> links_;
  std::vector<std::vector<SwitchId>> adjacency_;
};

/**
 * Minimum-hop path from src to dst. Among equal-length paths returns the
 * lexicographically smallest node sequence, so repeated calls and
 * different platforms agree on the route.
 */
Path shortest_path(const Topology& topo, SwitchId src, SwitchId dst);

// Row per path, column per switch: 1 iff the switch lies on the path.
std::vector<std::vector<uint8_t>> traversal_matrix(const Topology& topo,
                                                   const std::vector<Path>& paths);

}  // namespace ace
