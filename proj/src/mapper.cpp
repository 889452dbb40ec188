#include "qcprof/mapper.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <set>
#include <stdexcept>

namespace qcprof {

namespace {

// BFS over physical qubits from node 0, neighbors in ascending index order.
std::vector<int> bfs_order(const CouplingTopology& topo) {
  std::vector<int> order;
  std::vector<char> seen(topo.n_physical, 0);
  std::queue<int> q;
  q.push(0);
  seen[0] = 1;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    order.push_back(v);
    for (int w : topo.neighbors(v))
      if (!seen[w]) {
        seen[w] = 1;
        q.push(w);
      }
  }
  return order;
}

std::vector<std::vector<int>> all_pairs_distances(const CouplingTopology& topo) {
  const int n = topo.n_physical;
  std::vector<std::vector<int>> adj(n);
  for (auto [a, b] : topo.edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  for (auto& nb : adj) std::sort(nb.begin(), nb.end());
  std::vector<std::vector<int>> dist(n, std::vector<int>(n, -1));
  for (int s = 0; s < n; ++s) {
    std::queue<int> q;
    dist[s][s] = 0;
    q.push(s);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int w : adj[v])
        if (dist[s][w] < 0) {
          dist[s][w] = dist[s][v] + 1;
          q.push(w);
        }
    }
  }
  return dist;
}

}  // namespace

bool check_coupling_constraints(const Circuit& mapped, const CouplingTopology& topo) {
  for (const auto& g : mapped.gates)
    if (g.is_two_qubit() && !topo.are_coupled(g.qubits[0], g.qubits[1])) return false;
  return true;
}

RouteResult route_single_core(const Circuit& c, const CouplingTopology& topo,
                              const RouteOptions& opts) {
  if (c.n_qubits > topo.n_physical)
    throw std::invalid_argument("topology '" + topo.name + "' too small for " +
                                std::to_string(c.n_qubits) + " qubits");

  RouteResult out;
  const auto order = bfs_order(topo);
  out.initial_placement.assign(c.n_qubits, -1);
  std::vector<int> phys_of(c.n_qubits);                 // logical -> physical
  std::vector<int> logical_at(topo.n_physical, -1);     // physical -> logical
  for (int q = 0; q < c.n_qubits; ++q) {
    phys_of[q] = order[q];
    logical_at[order[q]] = q;
    out.initial_placement[q] = order[q];
  }

  const auto dist = all_pairs_distances(topo);
  const auto adj = [&](int v) { return topo.neighbors(v); };

  out.mapped.n_qubits = topo.n_physical;
  out.mapped.name = c.name;
  out.mapped.origin_label = c.origin_label;

  auto do_swap = [&](int p, int nb) {
    out.mapped.gates.push_back({"swap", {p, nb}, {}});
    std::swap(logical_at[p], logical_at[nb]);
    if (logical_at[p] >= 0) phys_of[logical_at[p]] = p;
    if (logical_at[nb] >= 0) phys_of[logical_at[nb]] = nb;
    ++out.n_swaps;
  };

  for (const auto& g : c.gates) {
    if (!g.is_two_qubit()) {
      out.mapped.gates.push_back({g.name, {phys_of[g.qubits[0]]}, g.params});
      continue;
    }
    // Move the first operand toward the second along a shortest path,
    // choosing the lowest-index neighbor on distance ties.
    int p = phys_of[g.qubits[0]];
    const int target = phys_of[g.qubits[1]];
    while (dist[p][target] > 1) {
      int step = -1;
      for (int nb : adj(p)) {
        if (dist[nb][target] == dist[p][target] - 1) {
          step = nb;
          break;  // neighbors ascend, so the first hit is the lowest index
        }
      }
      do_swap(p, step);
      p = step;
    }
    out.mapped.gates.push_back({g.name, {p, target}, g.params});
  }
  out.final_placement = phys_of;

  if (!check_coupling_constraints(out.mapped, topo))
    throw std::logic_error("router produced a gate on an uncoupled pair");

  CircuitStats before{c.n_gates(), asap_layering(c).depth, c.n_single_qubit_gates(),
                      c.n_two_qubit_gates()};
  // A SWAP costs swap_cost elementary two-qubit gates but one layer.
  CircuitStats after{before.n_gates + out.n_swaps * opts.swap_cost,
                     asap_layering(out.mapped).depth, before.n_1q,
                     before.n_2q + out.n_swaps * opts.swap_cost};
  out.result = performance_metrics(before, after, opts.error_model);
  return out;
}

std::vector<Slice> slice_circuit(const Circuit& c, const Layering& l) {
  std::vector<Slice> slices(l.depth);
  for (std::size_t i = 0; i < c.gates.size(); ++i)
    if (c.gates[i].is_two_qubit())
      slices[l.layer_of_gate[i]].pairs.emplace_back(c.gates[i].qubits[0], c.gates[i].qubits[1]);
  return slices;
}

namespace {

// Mutable state of the greedy partitioner.
struct PartitionState {
  const MultiCoreTopology& topo;
  std::vector<int> core_of;         // logical qubit -> core
  std::vector<int> load;            // core -> occupancy
  std::vector<std::int64_t> future; // interactions in strictly later slices
  std::vector<char> pinned;         // fixed within the current slice
  std::vector<int> partner;         // pair partner within the current slice
  std::vector<Relocation> log;
  int slice_index = 0;
  int moves = 0;

  void relocate(int q, int target) {
    moves += topo.core_distance(core_of[q], target);
    log.push_back({slice_index, q, core_of[q], target});
    --load[core_of[q]];
    core_of[q] = target;
    ++load[target];
  }

  std::vector<int> occupants(int core) const {
    std::vector<int> out;
    for (std::size_t q = 0; q < core_of.size(); ++q)
      if (core_of[q] == static_cast<int>(core)) out.push_back(static_cast<int>(q));
    return out;
  }

  // Occupant of `core` with the fewest future interactions, skipping the
  // given pair and anything pinned. -1 when no candidate exists.
  int evictee(int core, int a, int b) const {
    int best = -1;
    for (int q : occupants(core)) {
      if (q == a || q == b || pinned[q]) continue;
      if (best < 0 || future[q] < future[best]) best = q;
    }
    return best;
  }

  bool try_move(int mover, int stayer, int a, int b) {
    const int target = core_of[stayer];
    if (load[target] < topo.capacity) {
      relocate(mover, target);
      return true;
    }
    const int victim = evictee(target, a, b);
    if (victim < 0) return false;
    const int origin = core_of[mover];
    relocate(mover, target);
    relocate(victim, origin);  // eviction is an additional move
    return true;
  }

  // Last resort when both target cores are packed with pinned pairs: swap
  // the mover plus an unpinned companion against one whole pinned pair,
  // which keeps that pair co-located.
  bool try_pair_swap(int mover, int stayer, int a, int b) {
    const int target = core_of[stayer];
    const int origin = core_of[mover];
    int companion = -1;
    for (int q : occupants(origin)) {
      if (q == a || q == b || pinned[q]) continue;
      if (companion < 0 || future[q] < future[companion]) companion = q;
    }
    if (companion < 0) return false;
    int y1 = -1, y2 = -1;
    std::int64_t best_cost = 0;
    for (int q : occupants(target)) {
      if (q == a || q == b || !pinned[q]) continue;
      const int r = partner[q];
      if (r <= q || r == a || r == b || core_of[r] != target) continue;
      const std::int64_t cost = future[q] + future[r];
      if (y1 < 0 || cost < best_cost) {
        best_cost = cost;
        y1 = q;
        y2 = r;
      }
    }
    if (y1 < 0) return false;
    relocate(y1, origin);
    relocate(y2, origin);
    relocate(mover, target);
    relocate(companion, target);
    return true;
  }
};

}  // namespace

PartitionResult partition_multicore(const std::vector<Slice>& slices, int n_qubits,
                                    const MultiCoreTopology& topo, const PartitionOptions&) {
  const std::int64_t slots = static_cast<std::int64_t>(topo.n_cores) * topo.capacity;
  if (n_qubits > slots)
    throw std::invalid_argument("multi-core topology '" + topo.name + "' holds " +
                                std::to_string(slots) + " qubits, circuit needs " +
                                std::to_string(n_qubits));

  // Whole-run interaction weights and per-qubit totals.
  std::vector<std::vector<std::int64_t>> weight(n_qubits, std::vector<std::int64_t>(n_qubits, 0));
  std::vector<std::int64_t> total(n_qubits, 0);
  for (const auto& s : slices)
    for (auto [a, b] : s.pairs) {
      ++weight[a][b];
      ++weight[b][a];
      ++total[a];
      ++total[b];
    }

  PartitionState st{topo};
  st.core_of.assign(n_qubits, -1);
  st.load.assign(topo.n_cores, 0);
  st.future = total;
  st.pinned.assign(n_qubits, 0);
  st.partner.assign(n_qubits, -1);

  // Initial packing: repeatedly place the unassigned qubit whose heaviest
  // interaction is largest, next to its strongest assigned neighbor when
  // that core is open, else into the lowest-index open core.
  for (int step = 0; step < n_qubits; ++step) {
    int pick = -1;
    std::int64_t pick_key = -1;
    for (int q = 0; q < n_qubits; ++q) {
      if (st.core_of[q] >= 0) continue;
      std::int64_t key = 0;
      for (int r = 0; r < n_qubits; ++r) key = std::max(key, weight[q][r]);
      if (key > pick_key) {
        pick_key = key;
        pick = q;
      }
    }
    int core = -1;
    std::int64_t best_w = 0;
    for (int r = 0; r < n_qubits; ++r) {
      if (st.core_of[r] < 0 || weight[pick][r] <= best_w) continue;
      if (st.load[st.core_of[r]] < topo.capacity) {
        best_w = weight[pick][r];
        core = st.core_of[r];
      }
    }
    if (core < 0) {
      for (int c = 0; c < topo.n_cores; ++c)
        if (st.load[c] < topo.capacity) {
          core = c;
          break;
        }
    }
    st.core_of[pick] = core;
    ++st.load[core];
  }

  PartitionResult out;
  out.assignment_history.push_back(st.core_of);

  for (const auto& slice : slices) {
    st.slice_index = static_cast<int>(out.assignment_history.size()) - 1;
    std::fill(st.pinned.begin(), st.pinned.end(), 0);
    std::fill(st.partner.begin(), st.partner.end(), -1);
    for (auto [a, b] : slice.pairs) {
      st.future[a] -= 1;
      st.future[b] -= 1;
      st.partner[a] = b;
      st.partner[b] = a;
    }
    for (auto [a, b] : slice.pairs) {
      if (st.core_of[a] != st.core_of[b]) {
        // The endpoint with fewer future interactions is cheaper to move.
        int mover = a, stayer = b;
        if (st.future[b] < st.future[a]) {
          mover = b;
          stayer = a;
        }
        if (!st.try_move(mover, stayer, a, b) && !st.try_move(stayer, mover, a, b) &&
            !st.try_pair_swap(mover, stayer, a, b) && !st.try_pair_swap(stayer, mover, a, b))
          throw std::logic_error("partitioner could not co-locate a pair");
      }
      st.pinned[a] = 1;
      st.pinned[b] = 1;
    }
    for (auto [a, b] : slice.pairs)
      if (st.core_of[a] != st.core_of[b])
        throw std::logic_error("slice left a pair split across cores");
    for (int c = 0; c < topo.n_cores; ++c)
      if (st.load[c] > topo.capacity) throw std::logic_error("core capacity exceeded");
    out.assignment_history.push_back(st.core_of);
  }

  out.moves = st.moves;
  out.relocations = std::move(st.log);
  out.result.inter_core_moves = st.moves;
  return out;
}

PartitionResult map_multicore(const Circuit& c, const MultiCoreTopology& topo,
                              const PartitionOptions& opts) {
  const auto layering = asap_layering(c);
  auto res = partition_multicore(slice_circuit(c, layering), c.n_qubits, topo, opts);
  CircuitStats stats{c.n_gates(), layering.depth, c.n_single_qubit_gates(),
                     c.n_two_qubit_gates()};
  const int moves = res.result.inter_core_moves;
  res.result = performance_metrics(stats, stats, opts.error_model);
  res.result.inter_core_moves = moves;
  return res;
}

}  // namespace qcprof
