#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "qcprof/circuit.hpp"
#include "qcprof/graph.hpp"
#include "qcprof/mapping_result.hpp"
#include "qcprof/topology.hpp"

namespace qcprof {

struct RouteOptions {
  /// Elementary two-qubit gates charged per inserted SWAP in gate counts;
  /// a SWAP still occupies a single layer for depth.
  int swap_cost = 3;
  ErrorModel error_model;
  /// Reserved for stochastic router variants; the baseline is deterministic.
  std::uint64_t seed = 0;
};

struct RouteResult {
  MappingResult result;
  /// Output circuit over physical qubits; inserted SWAPs appear as "swap"
  /// gates. Every two-qubit gate acts on a coupled pair.
  Circuit mapped;
  /// logical qubit -> physical qubit, before and after routing.
  std::vector<int> initial_placement;
  std::vector<int> final_placement;
  int n_swaps = 0;
};

/// SWAP-insertion baseline router. Initial placement is the identity onto a
/// BFS-ordered subgraph of the device; each two-qubit gate on non-adjacent
/// physical qubits moves its first operand along a shortest path (ties by
/// lowest physical index) until the pair is coupled. The output satisfies
/// the coupling constraints and equals the input up to the tracked output
/// permutation. Throws std::invalid_argument when the circuit does not fit.
RouteResult route_single_core(const Circuit& c, const CouplingTopology& topo,
                              const RouteOptions& opts = {});

/// True iff every two-qubit gate of `mapped` acts on a coupled pair.
bool check_coupling_constraints(const Circuit& mapped, const CouplingTopology& topo);

/// One slice per ASAP layer, carrying the layer's two-qubit pairs in program
/// order.
struct Slice {
  std::vector<std::pair<int, int>> pairs;
};

std::vector<Slice> slice_circuit(const Circuit& c, const Layering& l);

struct PartitionOptions {
  ErrorModel error_model;
  std::uint64_t seed = 0;
};

struct Relocation {
  int slice = 0;
  int qubit = 0;
  int from_core = 0;
  int to_core = 0;
};

struct PartitionResult {
  MappingResult result;
  /// logical qubit -> core, after each slice (index 0 = initial assignment).
  std::vector<std::vector<int>> assignment_history;
  /// Every relocation in order; replaying them reproduces the history and
  /// recounts the moves.
  std::vector<Relocation> relocations;
  int moves = 0;
};

/// Time-sliced greedy qubit-to-core partitioner. Initial assignment places
/// qubits in descending order of their heaviest interaction-graph edge, each
/// joining the open core of its strongest assigned neighbor. Per slice,
/// split pairs are fixed by relocating the endpoint with fewer future-slice
/// interactions to its partner's core, evicting a minimal-interaction
/// occupant when full. Relocations between non-adjacent cores cost their
/// hop distance in moves; an eviction is an additional move.
/// Throws std::invalid_argument when total qubits exceed device capacity.
PartitionResult partition_multicore(const std::vector<Slice>& slices, int n_qubits,
                                    const MultiCoreTopology& topo,
                                    const PartitionOptions& opts = {});

/// Convenience wrapper: slice, partition and fill in circuit stats.
PartitionResult map_multicore(const Circuit& c, const MultiCoreTopology& topo,
                              const PartitionOptions& opts = {});

}  // namespace qcprof
