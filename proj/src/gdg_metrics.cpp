#include "qcprof/gdg_metrics.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <cmath>
#include <vector>

namespace qcprof {

namespace {

using BigFloat = boost::multiprecision::cpp_bin_float_50;

double big_ratio(const BigInt& num, const BigInt& den) {
  return (BigFloat(num) / BigFloat(den)).convert_to<double>();
}

}  // namespace

double log10_big(const BigInt& x) {
  return boost::multiprecision::log10(BigFloat(x)).convert_to<double>();
}

GdgFeatureSet gdg_path_features(const GateDependencyGraph& g) {
  const int n_nodes = g.n_nodes();
  std::vector<std::int64_t> len(n_nodes, 0);   // L
  std::vector<BigInt> paths(n_nodes, 0);       // n
  std::vector<BigInt> crit(n_nodes, 0);        // N
  std::vector<std::int64_t> max2q(n_nodes, 0); // M
  std::vector<BigInt> crit2q(n_nodes, 0);      // K
  std::vector<double> mean(n_nodes, 0.0);      // m
  std::vector<double> var(n_nodes, 0.0);       // v

  paths[g.sink()] = 1;
  crit[g.sink()] = 1;
  crit2q[g.sink()] = 1;

  // Bottom-up: iterate gates in reversed topological order, sink first.
  auto topo = g.topological_order();
  for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
    const int w = *it;
    if (w == g.sink()) continue;
    // Sentinels contribute no gates to a path.
    const std::int64_t gate_inc = w == g.source() ? 0 : 1;
    const std::int64_t two_inc = g.is_two_qubit(w) ? 1 : 0;

    std::int64_t best = 0;
    for (int v : g.children(w)) best = std::max(best, len[v]);
    len[w] = gate_inc + best;

    BigInt n_w = 0, n_crit = 0;
    std::int64_t m_w = 0;
    for (int v : g.children(w)) {
      n_w += paths[v];
      if (len[v] == best) {
        n_crit += crit[v];
        m_w = std::max(m_w, max2q[v]);
      }
    }
    paths[w] = n_w;
    crit[w] = n_crit;
    max2q[w] = two_inc + m_w;

    BigInt k_w = 0;
    for (int v : g.children(w))
      if (len[v] == best && max2q[v] == m_w) k_w += crit2q[v];
    crit2q[w] = k_w;

    double mu = 0.0;
    for (int v : g.children(w))
      mu += big_ratio(paths[v], n_w) * (mean[v] + static_cast<double>(gate_inc));
    mean[w] = mu;
    double vr = 0.0;
    for (int v : g.children(w)) {
      const double d = mean[v] + static_cast<double>(gate_inc) - mu;
      vr += big_ratio(paths[v], n_w) * (var[v] + d * d);
    }
    var[w] = vr;
  }

  GdgFeatureSet f;
  const int src = g.source();
  f.critical_path_length = len[src];
  f.n_paths = paths[src];
  f.n_critical_paths = crit[src];
  f.path_length_mean = mean[src];
  f.path_length_std = std::sqrt(std::max(0.0, var[src]));
  f.max_2q_in_critical = max2q[src];
  f.n_critical_with_max_2q = crit2q[src];
  if (g.n_gate_nodes() > 0) f.pct_gates_in_critical_path = pct_gates_in_critical_path(g);
  return f;
}

double pct_gates_in_critical_path(const GateDependencyGraph& g) {
  const int n_nodes = g.n_nodes();
  auto topo = g.topological_order();

  // Backward longest gate count from each node to sink, node included.
  std::vector<std::int64_t> back(n_nodes, 0);
  for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
    const int w = *it;
    if (w == g.sink()) continue;
    std::int64_t best = 0;
    for (int v : g.children(w)) best = std::max(best, back[v]);
    back[w] = (w == g.source() ? 0 : 1) + best;
  }
  // Forward longest gate count from source, node excluded.
  std::vector<std::int64_t> fwd(n_nodes, 0);
  for (int w : topo) {
    if (w == g.source()) continue;
    std::int64_t best = 0;
    for (int p : g.parents(w))
      best = std::max(best, fwd[p] + (p == g.source() ? 0 : 1));
    fwd[w] = best;
  }

  const std::int64_t critical_len = back[g.source()];
  std::int64_t on_critical = 0;
  for (int w = 0; w < g.n_gate_nodes(); ++w)
    if (fwd[w] + back[w] == critical_len) ++on_critical;
  return static_cast<double>(on_critical) / static_cast<double>(g.n_gate_nodes());
}

}  // namespace qcprof
