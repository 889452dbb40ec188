#pragma once

#include <string>
#include <utility>
#include <vector>

namespace qcprof {

/// Physical qubit connectivity of a single-core device.
struct CouplingTopology {
  int n_physical = 0;
  std::vector<std::pair<int, int>> edges;  // i < j, sorted, no duplicates
  std::string name;

  bool are_coupled(int a, int b) const;
  std::vector<int> neighbors(int v) const;
};

/// Parse a topology spec: builtin "linear:N", "grid:MxN", "all_to_all:N", or
/// a path to a JSON file {"n": int, "edges": [[i,j],...]}. The result is
/// validated: connected, no self-loops, no duplicate edges.
CouplingTopology load_topology(const std::string& spec);

CouplingTopology linear_topology(int n);
CouplingTopology grid_topology(int rows, int cols);
CouplingTopology all_to_all_topology(int n);

/// Multi-core device: cores of fixed capacity with all-to-all intra-core
/// connectivity, linked by an undirected core graph.
struct MultiCoreTopology {
  int n_cores = 0;
  int capacity = 0;
  std::vector<std::pair<int, int>> core_edges;
  std::string name;

  /// Hop distance between cores (BFS over the core graph).
  int core_distance(int a, int b) const;
};

/// Builtin core graphs: "all_to_all:N" or "grid:RxC"; or a path to a JSON
/// file {"cores": int, "capacity": int, "core_edges": [[i,j],...]}. For
/// builtins the capacity argument applies; a file carries its own.
MultiCoreTopology load_multicore_topology(const std::string& spec, int capacity = 0);

}  // namespace qcprof
