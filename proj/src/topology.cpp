#include "ace/topology.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace ace {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

[[noreturn]] void fail(int line_no, const std::string& what) {
  throw ParseError("topology: line " + std::to_string(line_no) + ": " + what);
}

int parse_switch_id(const std::string& tok, int line_no) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size() || value < 0)
    fail(line_no, "expected a nonnegative switch id, got '" + tok + "'");
  return value;
}

struct SwitchDecl {
  double capacity = kDefaultCapacityPps;
  std::string name;
  int line_no = 0;
};

}  // namespace

Topology Topology::from_text(std::string_view text) {
  std::map<int, SwitchDecl> switches;
  std::set<std::pair<int, int>> link_set;
  std::vector<std::pair<std::pair<int, int>, int>> raw_links;  // endpoints + line

  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    auto toks = tokenize(line);
    if (toks.empty()) continue;

    if (toks[0] == "switch") {
      if (toks.size() < 2) fail(line_no, "switch directive needs an id");
      int id = parse_switch_id(toks[1], line_no);
      if (switches.count(id)) fail(line_no, "duplicate switch " + std::to_string(id));
      SwitchDecl decl;
      decl.line_no = line_no;
      bool saw_capacity = false, saw_name = false;
      for (size_t i = 2; i < toks.size(); ++i) {
        const std::string& attr = toks[i];
        auto eq = attr.find('=');
        if (eq == std::string::npos) fail(line_no, "expected key=value attribute, got '" + attr + "'");
        std::string key = attr.substr(0, eq);
        std::string value = attr.substr(eq + 1);
        if (key == "capacity") {
          if (saw_capacity) fail(line_no, "duplicate capacity attribute");
          saw_capacity = true;
          try {
            size_t used = 0;
            decl.capacity = std::stod(value, &used);
            if (used != value.size()) throw std::invalid_argument(value);
          } catch (const std::exception&) {
            fail(line_no, "bad capacity value '" + value + "'");
          }
          if (!(decl.capacity > 0.0)) fail(line_no, "capacity must be > 0");
        } else if (key == "name") {
          if (saw_name) fail(line_no, "duplicate name attribute");
          if (value.empty()) fail(line_no, "empty switch name");
          saw_name = true;
          decl.name = value;
        } else {
          fail(line_no, "unknown switch attribute '" + key + "'");
        }
      }
      switches.emplace(id, std::move(decl));
    } else if (toks[0] == "link") {
      if (toks.size() != 3) fail(line_no, "link directive needs exactly two switch ids");
      int a = parse_switch_id(toks[1], line_no);
      int b = parse_switch_id(toks[2], line_no);
      if (a == b) fail(line_no, "self-loop link at switch " + std::to_string(a));
      auto key = std::minmax(a, b);
      if (!link_set.insert(key).second)
        fail(line_no, "duplicate link " + std::to_string(key.first) + "-" + std::to_string(key.second));
      raw_links.push_back({key, line_no});
    } else {
      fail(line_no, "unknown directive '" + toks[0] + "'");
    }
  }

  if (switches.empty()) throw ParseError("topology: no switches declared");

  const int count = static_cast<int>(switches.size());
  for (int expect = 0; const auto& [id, decl] : switches) {
    if (id != expect)
      fail(decl.line_no, "switch ids must form a dense range 0.." + std::to_string(count - 1) +
                             " (found " + std::to_string(id) + ")");
    ++expect;
  }

  Topology topo;
  topo.capacity_.resize(count);
  topo.names_.resize(count);
  std::set<std::string> seen_names;
  for (const auto& [id, decl] : switches) {
    topo.capacity_[id] = decl.capacity;
    topo.names_[id] = decl.name;
    if (!decl.name.empty() && !seen_names.insert(decl.name).second)
      fail(decl.line_no, "duplicate switch name '" + decl.name + "'");
  }

  topo.adjacency_.resize(count);
  for (const auto& [ends, ln] : raw_links) {
    auto [a, b] = ends;
    if (a >= count || b >= count)
      fail(ln, "link references undeclared switch " + std::to_string(std::max(a, b)));
    topo.links_.push_back({a, b});
    topo.adjacency_[a].push_back(b);
    topo.adjacency_[b].push_back(a);
  }
  std::sort(topo.links_.begin(), topo.links_.end());
  for (auto& nbrs : topo.adjacency_) std::sort(nbrs.begin(), nbrs.end());

  // Connectivity: every src-dst pair must route.
  std::vector<char> seen(count, 0);
  std::deque<int> queue{0};
  seen[0] = 1;
  int reached = 1;
  while (!queue.empty()) {
    int cur = queue.front();
    queue.pop_front();
    for (int nbr : topo.adjacency_[cur]) {
      if (!seen[nbr]) {
        seen[nbr] = 1;
        ++reached;
        queue.push_back(nbr);
      }
    }
  }
  if (reached != count) {
    int missing = static_cast<int>(std::find(seen.begin(), seen.end(), 0) - seen.begin());
    throw ParseError("topology: graph is disconnected (switch " + std::to_string(missing) +
                     " unreachable from switch 0)");
  }
  return topo;
}

Topology Topology::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("topology: cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return from_text(buf.str());
}

std::optional<SwitchId> Topology::switch_by_name(std::string_view name) const {
  for (int s = 0; s < switch_count(); ++s)
    if (names_[s] == name) return s;
  return std::nullopt;
}

bool Topology::has_link(SwitchId a, SwitchId b) const {
  if (!has_switch(a) || !has_switch(b) || a == b) return false;
  const auto& nbrs = adjacency_[a];
  return std::binary_search(nbrs.begin(), nbrs.end(), b);
}

Topology Topology::with_uniform_capacity(double pps) const {
  if (!(pps > 0.0)) throw std::invalid_argument("capacity must be > 0");
  Topology copy = *this;
  std::fill(copy.capacity_.begin(), copy.capacity_.end(), pps);
  return copy;
}

Path shortest_path(const Topology& topo, SwitchId src, SwitchId dst) {
  if (!topo.has_switch(src) || !topo.has_switch(dst))
    throw std::invalid_argument("shortest_path: switch id out of range");
  if (src == dst) throw std::invalid_argument("shortest_path: src and dst must differ");

  // BFS distances toward dst, then walk from src always taking the
  // smallest neighbor id that still shrinks the distance. The walk yields
  // the lexicographically smallest minimum-hop node sequence.
  const int count = topo.switch_count();
  std::vector<int> dist(count, -1);
  std::deque<int> queue{dst};
  dist[dst] = 0;
  while (!queue.empty()) {
    int cur = queue.front();
    queue.pop_front();
    for (int nbr : topo.neighbors(cur)) {
      if (dist[nbr] < 0) {
        dist[nbr] = dist[cur] + 1;
        queue.push_back(nbr);
      }
    }
  }
  if (dist[src] < 0)
    throw std::runtime_error("shortest_path: destination unreachable");

  Path path{src};
  int cur = src;
  while (cur != dst) {
    int next = -1;
    for (int nbr : topo.neighbors(cur)) {  // ascending, first hit is smallest
      if (dist[nbr] == dist[cur] - 1) {
        next = nbr;
        break;
      }
    }
    if (next < 0) throw std::runtime_error("shortest_path: internal walk error");
    path.push_back(next);
    cur = next;
  }
  return path;
}

std::vector<std::vector<uint8_t>> traversal_matrix(const Topology& topo,
                                                   const std::vector<Path>& paths) {
  std::vector<std::vector<uint8_t>> matrix(paths.size(),
                                           std::vector<uint8_t>(topo.switch_count(), 0));
  for (size_t i = 0; i < paths.size(); ++i) {
    for (SwitchId s : paths[i]) {
      if (!topo.has_switch(s))
        throw std::invalid_argument("traversal_matrix: path references unknown switch " +
                                    std::to_string(s));
      matrix[i][s] = 1;
    }
  }
  return matrix;
}

}  // namespace ace
