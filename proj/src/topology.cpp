#include "qcprof/topology.hpp"

#include <algorithm>
#include <fstream>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace qcprof {

namespace {

void validate_edges(int n, std::vector<std::pair<int, int>>& edges, const std::string& what) {
  std::set<std::pair<int, int>> seen;
  for (auto& [a, b] : edges) {
    if (a == b) throw std::runtime_error(what + ": self-loop on node " + std::to_string(a));
    if (a < 0 || b < 0 || a >= n || b >= n)
      throw std::runtime_error(what + ": edge (" + std::to_string(a) + "," + std::to_string(b) +
                               ") out of range");
    if (a > b) std::swap(a, b);
    if (!seen.insert({a, b}).second)
      throw std::runtime_error(what + ": duplicate edge (" + std::to_string(a) + "," +
                               std::to_string(b) + ")");
  }
  std::sort(edges.begin(), edges.end());
}

bool connected(int n, const std::vector<std::pair<int, int>>& edges) {
  if (n <= 1) return true;
  std::vector<std::vector<int>> adj(n);
  for (auto [a, b] : edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<char> seen(n, 0);
  std::queue<int> q;
  q.push(0);
  seen[0] = 1;
  int visited = 1;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int w : adj[v])
      if (!seen[w]) {
        seen[w] = 1;
        ++visited;
        q.push(w);
      }
  }
  return visited == n;
}

// "prefix:args" split; returns false when `spec` has no such prefix.
bool parse_builtin(const std::string& spec, const std::string& prefix, std::string& args) {
  if (spec.rfind(prefix + ":", 0) != 0) return false;
  args = spec.substr(prefix.size() + 1);
  return true;
}

int parse_int(const std::string& s, const std::string& what) {
  try {
    std::size_t used = 0;
    int v = std::stoi(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw std::runtime_error("invalid " + what + " '" + s + "'");
  }
}

std::pair<int, int> parse_dims(const std::string& s) {
  auto x = s.find('x');
  if (x == std::string::npos) throw std::runtime_error("grid spec needs RxC dimensions, got '" + s + "'");
  return {parse_int(s.substr(0, x), "grid rows"), parse_int(s.substr(x + 1), "grid cols")};
}

nlohmann::json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open topology file '" + path + "'");
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error("malformed topology file '" + path + "': " + e.what());
  }
}

std::vector<std::pair<int, int>> edges_from_json(const nlohmann::json& j, const std::string& key,
                                                 const std::string& path) {
  std::vector<std::pair<int, int>> edges;
  if (!j.contains(key) || !j[key].is_array())
    throw std::runtime_error("malformed topology file '" + path + "': missing '" + key + "' array");
  for (const auto& e : j[key]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
      throw std::runtime_error("malformed topology file '" + path + "': bad edge entry");
    edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  return edges;
}

}  // namespace

bool CouplingTopology::are_coupled(int a, int b) const {
  if (a > b) std::swap(a, b);
  return std::binary_search(edges.begin(), edges.end(), std::make_pair(a, b));
}

std::vector<int> CouplingTopology::neighbors(int v) const {
  std::vector<int> out;
  for (auto [a, b] : edges) {
    if (a == v) out.push_back(b);
    if (b == v) out.push_back(a);
  }
  std::sort(out.begin(), out.end());
  return out;
}

CouplingTopology linear_topology(int n) {
  if (n < 1) throw std::runtime_error("linear topology needs at least 1 qubit");
  CouplingTopology t;
  t.n_physical = n;
  t.name = "linear:" + std::to_string(n);
  for (int i = 0; i + 1 < n; ++i) t.edges.emplace_back(i, i + 1);
  return t;
}

CouplingTopology grid_topology(int rows, int cols) {
  if (rows < 1 || cols < 1) throw std::runtime_error("grid topology needs positive dimensions");
  CouplingTopology t;
  t.n_physical = rows * cols;
  t.name = "grid:" + std::to_string(rows) + "x" + std::to_string(cols);
  auto id = [cols](int r, int c) { return r * cols + c; };
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      if (c + 1 < cols) t.edges.emplace_back(id(r, c), id(r, c + 1));
      if (r + 1 < rows) t.edges.emplace_back(id(r, c), id(r + 1, c));
    }
  std::sort(t.edges.begin(), t.edges.end());
  return t;
}

CouplingTopology all_to_all_topology(int n) {
  if (n < 1) throw std::runtime_error("all_to_all topology needs at least 1 qubit");
  CouplingTopology t;
  t.n_physical = n;
  t.name = "all_to_all:" + std::to_string(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) t.edges.emplace_back(i, j);
  return t;
}

CouplingTopology load_topology(const std::string& spec) {
  std::string args;
  CouplingTopology t;
  if (parse_builtin(spec, "linear", args)) {
    t = linear_topology(parse_int(args, "linear size"));
  } else if (parse_builtin(spec, "grid", args)) {
    auto [r, c] = parse_dims(args);
    t = grid_topology(r, c);
  } else if (parse_builtin(spec, "all_to_all", args)) {
    t = all_to_all_topology(parse_int(args, "all_to_all size"));
  } else {
    auto j = load_json_file(spec);
    if (!j.contains("n") || !j["n"].is_number_integer())
      throw std::runtime_error("malformed topology file '" + spec + "': missing integer 'n'");
    t.n_physical = j["n"].get<int>();
    t.edges = edges_from_json(j, "edges", spec);
    t.name = j.value("name", spec);
  }
  if (t.n_physical < 1) throw std::runtime_error("topology '" + spec + "' has no qubits");
  validate_edges(t.n_physical, t.edges, "topology '" + spec + "'");
  if (!connected(t.n_physical, t.edges))
    throw std::runtime_error("topology '" + spec + "' is disconnected");
  return t;
}

int MultiCoreTopology::core_distance(int a, int b) const {
  if (a == b) return 0;
  std::vector<std::vector<int>> adj(n_cores);
  for (auto [u, v] : core_edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  std::vector<int> dist(n_cores, -1);
  std::queue<int> q;
  dist[a] = 0;
  q.push(a);
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    if (v == b) return dist[v];
    for (int w : adj[v])
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        q.push(w);
      }
  }
  return -1;
}

MultiCoreTopology load_multicore_topology(const std::string& spec, int capacity) {
  MultiCoreTopology t;
  std::string args;
  if (parse_builtin(spec, "all_to_all", args)) {
    t.n_cores = parse_int(args, "core count");
    for (int i = 0; i < t.n_cores; ++i)
      for (int j = i + 1; j < t.n_cores; ++j) t.core_edges.emplace_back(i, j);
    t.capacity = capacity;
    t.name = "cores_all_to_all:" + args;
  } else if (parse_builtin(spec, "grid", args)) {
    auto [r, c] = parse_dims(args);
    auto grid = grid_topology(r, c);
    t.n_cores = grid.n_physical;
    t.core_edges = grid.edges;
    t.capacity = capacity;
    t.name = "cores_grid:" + args;
  } else {
    auto j = load_json_file(spec);
    if (!j.contains("cores") || !j["cores"].is_number_integer())
      throw std::runtime_error("malformed topology file '" + spec + "': missing integer 'cores'");
    if (!j.contains("capacity") || !j["capacity"].is_number_integer())
      throw std::runtime_error("malformed topology file '" + spec + "': missing integer 'capacity'");
    t.n_cores = j["cores"].get<int>();
    t.capacity = j["capacity"].get<int>();
    t.core_edges = edges_from_json(j, "core_edges", spec);
    t.name = j.value("name", spec);
  }
  if (t.n_cores < 1) throw std::runtime_error("multi-core topology '" + spec + "' has no cores");
  if (t.capacity < 1)
    throw std::runtime_error("multi-core topology '" + spec + "' needs a positive capacity");
  validate_edges(t.n_cores, t.core_edges, "multi-core topology '" + spec + "'");
  if (t.n_cores > 1 && !connected(t.n_cores, t.core_edges))
    throw std::runtime_error("multi-core topology '" + spec + "' core graph is disconnected");
  return t;
}

}  // namespace qcprof
