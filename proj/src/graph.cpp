#include "qcprof/graph.hpp"

#include <algorithm>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace qcprof {

std::vector<std::tuple<int, int, std::int64_t>> InteractionGraph::edges() const {
  std::vector<std::tuple<int, int, std::int64_t>> out;
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j)
      if (weight_[i][j] > 0) out.emplace_back(i, j, weight_[i][j]);
  return out;
}

std::int64_t InteractionGraph::total_edge_weight() const {
  std::int64_t total = 0;
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j) total += weight_[i][j];
  return total;
}

std::int64_t InteractionGraph::degree(int i) const {
  std::int64_t d = 0;
  for (int j = 0; j < n_; ++j) d += weight_[i][j];
  return d;
}

int InteractionGraph::skeleton_degree(int i) const {
  int d = 0;
  for (int j = 0; j < n_; ++j) d += weight_[i][j] > 0 ? 1 : 0;
  return d;
}

std::vector<int> InteractionGraph::neighbors(int i) const {
  std::vector<int> out;
  for (int j = 0; j < n_; ++j)
    if (weight_[i][j] > 0) out.push_back(j);
  return out;
}

std::vector<std::vector<int>> InteractionGraph::components() const {
  std::vector<int> comp(n_, -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < n_; ++s) {
    if (comp[s] >= 0) continue;
    int id = static_cast<int>(out.size());
    std::queue<int> q;
    q.push(s);
    comp[s] = id;
    std::vector<int> members{s};
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int w = 0; w < n_; ++w) {
        if (weight_[v][w] > 0 && comp[w] < 0) {
          comp[w] = id;
          members.push_back(w);
          q.push(w);
        }
      }
    }
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

bool InteractionGraph::is_connected() const {
  return n_ <= 1 || components().size() == 1;
}

InteractionGraph build_interaction_graph(const Circuit& c) {
  InteractionGraph ig(c.n_qubits);
  for (const auto& g : c.gates)
    if (g.is_two_qubit()) ig.add_edge(g.qubits[0], g.qubits[1]);
  return ig;
}

GateDependencyGraph build_gdg(const Circuit& c) {
  GateDependencyGraph g;
  const int m = c.n_gates();
  g.n_gates_ = m;
  g.two_qubit_.resize(m);
  g.children_.assign(m + 2, {});
  g.parents_.assign(m + 2, {});

  // last[q] = last gate node operating on qubit q, or source.
  std::vector<int> last(c.n_qubits, g.source());
  auto link = [&](int from, int to) {
    // Two qubits sharing the same predecessor collapse to one edge.
    auto& ch = g.children_[from];
    if (!ch.empty() && ch.back() == to) return;
    ch.push_back(to);
    g.parents_[to].push_back(from);
  };
  for (int w = 0; w < m; ++w) {
    g.two_qubit_[w] = c.gates[w].is_two_qubit() ? 1 : 0;
    for (int q : c.gates[w].qubits) {
      link(last[q], w);
      last[q] = w;
    }
  }
  for (int w = 0; w < m; ++w)
    if (g.children_[w].empty()) link(w, g.sink());
  if (g.children_[g.source()].empty()) link(g.source(), g.sink());

  // Program order extended with the sentinels is a valid topological order.
  g.topo_.reserve(m + 2);
  g.topo_.push_back(g.source());
  for (int w = 0; w < m; ++w) g.topo_.push_back(w);
  g.topo_.push_back(g.sink());
  topological_order(g);  // acyclicity check on every build
  return g;
}

std::int64_t GateDependencyGraph::n_edges() const {
  std::int64_t total = 0;
  for (const auto& ch : children_) total += static_cast<std::int64_t>(ch.size());
  return total;
}

std::vector<int> topological_order(const GateDependencyGraph& g) {
  const int n = g.n_nodes();
  std::vector<int> indeg(n, 0);
  for (int v = 0; v < n; ++v)
    for (int w : g.children(v)) ++indeg[w];
  // Kahn with a min-queue keeps the ordering deterministic.
  std::priority_queue<int, std::vector<int>, std::greater<>> ready;
  // Source goes first regardless of its numeric id.
  std::vector<int> order;
  order.reserve(n);
  if (indeg[g.source()] != 0) throw std::logic_error("GDG source has incoming edges");
  for (int v = 0; v < n; ++v)
    if (indeg[v] == 0) ready.push(v);
  while (!ready.empty()) {
    int v = ready.top();
    ready.pop();
    order.push_back(v);
    for (int w : g.children(v)) {
      if (--indeg[w] == 0) ready.push(w);
    }
  }
  if (static_cast<int>(order.size()) != n)
    throw std::logic_error("cycle detected in gate dependency graph");
  return order;
}

std::string to_edge_list(const InteractionGraph& ig) {
  std::ostringstream out;
  for (const auto& [i, j, w] : ig.edges()) out << i << ' ' << j << ' ' << w << '\n';
  return out.str();
}

std::string to_edge_list(const GateDependencyGraph& g) {
  std::ostringstream out;
  auto label = [&](int v) -> std::string {
    if (v == g.source()) return "source";
    if (v == g.sink()) return "sink";
    return std::to_string(v);
  };
  for (int v : g.topological_order())
    for (int w : g.children(v)) out << label(v) << ' ' << label(w) << '\n';
  return out.str();
}

std::string to_dot(const InteractionGraph& ig, const std::string& name) {
  std::ostringstream out;
  out << "graph " << name << " {\n";
  for (int i = 0; i < ig.n_nodes(); ++i) out << "  q" << i << ";\n";
  for (const auto& [i, j, w] : ig.edges())
    out << "  q" << i << " -- q" << j << " [label=\"" << w << "\"];\n";
  out << "}\n";
  return out.str();
}

std::string to_dot(const GateDependencyGraph& g, const std::string& name) {
  std::ostringstream out;
  out << "digraph " << name << " {\n";
  auto label = [&](int v) -> std::string {
    if (v == g.source()) return "source";
    if (v == g.sink()) return "sink";
    return "g" + std::to_string(v);
  };
  for (int v : g.topological_order())
    for (int w : g.children(v)) out << "  " << label(v) << " -> " << label(w) << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace qcprof
