#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "qcprof/circuit.hpp"

namespace qcprof {

/// Weighted undirected graph over qubits. Edge weight counts the two-qubit
/// gates acting on that pair. Qubits touched only by one-qubit gates (or not
/// at all) remain as isolated nodes.
class InteractionGraph {
 public:
  explicit InteractionGraph(int n_nodes) : n_(n_nodes), weight_(n_nodes, std::vector<std::int64_t>(n_nodes, 0)) {}

  int n_nodes() const { return n_; }

  std::int64_t weight(int i, int j) const { return weight_[i][j]; }

  void add_edge(int i, int j, std::int64_t w = 1) {
    weight_[i][j] += w;
    weight_[j][i] += w;
  }

  /// Sorted (i < j) list of weighted edges.
  std::vector<std::tuple<int, int, std::int64_t>> edges() const;

  std::int64_t total_edge_weight() const;

  /// Weighted degree of node i: sum_j a_ij.
  std::int64_t degree(int i) const;

  /// Unweighted (skeleton) degree of node i.
  int skeleton_degree(int i) const;

  /// Neighbors of i in the unweighted skeleton, ascending.
  std::vector<int> neighbors(int i) const;

  bool is_isolated(int i) const { return skeleton_degree(i) == 0; }

  /// Connected components of the skeleton, each sorted ascending; components
  /// ordered by smallest member.
  std::vector<std::vector<int>> components() const;

  bool is_connected() const;

 private:
  int n_;
  std::vector<std::vector<std::int64_t>> weight_;
};

InteractionGraph build_interaction_graph(const Circuit& c);

/// DAG over gate nodes with source/sink sentinels. Node ids 0..n_gates-1 are
/// the gates in program order; source() and sink() are the sentinels. When
/// both qubits of a gate depend on the same predecessor, the two incoming
/// edges collapse to one, so path counts are over distinct node sequences.
class GateDependencyGraph {
 public:
  int n_gate_nodes() const { return n_gates_; }
  int n_nodes() const { return n_gates_ + 2; }
  int source() const { return n_gates_; }
  int sink() const { return n_gates_ + 1; }

  bool is_two_qubit(int node) const { return node < n_gates_ && two_qubit_[node]; }

  const std::vector<int>& children(int node) const { return children_[node]; }
  const std::vector<int>& parents(int node) const { return parents_[node]; }

  /// Stored topological ordering (source first, sink last).
  const std::vector<int>& topological_order() const { return topo_; }

  std::int64_t n_edges() const;

  friend GateDependencyGraph build_gdg(const Circuit& c);

 private:
  int n_gates_ = 0;
  std::vector<char> two_qubit_;
  std::vector<std::vector<int>> children_;
  std::vector<std::vector<int>> parents_;
  std::vector<int> topo_;
};

GateDependencyGraph build_gdg(const Circuit& c);

/// Recompute a topological ordering with Kahn's algorithm and verify
/// acyclicity. Throws std::logic_error if a cycle is found (internal
/// invariant violation).
std::vector<int> topological_order(const GateDependencyGraph& g);

/// Plain-text edge list exports ("u v [w]" per line) and DOT format.
std::string to_edge_list(const InteractionGraph& ig);
std::string to_edge_list(const GateDependencyGraph& g);
std::string to_dot(const InteractionGraph& ig, const std::string& name = "ig");
std::string to_dot(const GateDependencyGraph& g, const std::string& name = "gdg");

}  // namespace qcprof
