#include "qcprof/ig_metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <stack>
#include <stdexcept>

namespace qcprof {

namespace {

// BFS hopcounts from s on the unweighted skeleton; -1 where unreachable.
std::vector<int> bfs_distances(const InteractionGraph& ig, int s) {
  std::vector<int> dist(ig.n_nodes(), -1);
  std::queue<int> q;
  dist[s] = 0;
  q.push(s);
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int w = 0; w < ig.n_nodes(); ++w) {
      if (ig.weight(v, w) > 0 && dist[w] < 0) {
        dist[w] = dist[v] + 1;
        q.push(w);
      }
    }
  }
  return dist;
}

double population_std(const std::vector<double>& xs) {
  if (xs.empty()) return 0.0;
  double mean = 0.0;
  for (double x : xs) mean += x;
  mean /= static_cast<double>(xs.size());
  double var = 0.0;
  for (double x : xs) var += (x - mean) * (x - mean);
  var /= static_cast<double>(xs.size());
  return std::sqrt(var);
}

// Dinic max-flow on a small directed graph with integer capacities.
class MaxFlow {
 public:
  explicit MaxFlow(int n) : head_(n, -1), level_(n), it_(n) {}

  void add_edge(int u, int v, int cap) {
    edges_.push_back({v, head_[u], cap});
    head_[u] = static_cast<int>(edges_.size()) - 1;
    edges_.push_back({u, head_[v], 0});
    head_[v] = static_cast<int>(edges_.size()) - 1;
  }

  int run(int s, int t) {
    int flow = 0;
    while (bfs(s, t)) {
      it_ = head_;
      while (int pushed = dfs(s, t, std::numeric_limits<int>::max())) flow += pushed;
    }
    return flow;
  }

 private:
  struct Edge {
    int to, next, cap;
  };

  bool bfs(int s, int t) {
    std::fill(level_.begin(), level_.end(), -1);
    std::queue<int> q;
    level_[s] = 0;
    q.push(s);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int e = head_[v]; e >= 0; e = edges_[e].next) {
        if (edges_[e].cap > 0 && level_[edges_[e].to] < 0) {
          level_[edges_[e].to] = level_[v] + 1;
          q.push(edges_[e].to);
        }
      }
    }
    return level_[t] >= 0;
  }

  int dfs(int v, int t, int limit) {
    if (v == t || limit == 0) return limit;
    for (int& e = it_[v]; e >= 0; e = edges_[e].next) {
      int w = edges_[e].to;
      if (edges_[e].cap > 0 && level_[w] == level_[v] + 1) {
        int pushed = dfs(w, t, std::min(limit, edges_[e].cap));
        if (pushed > 0) {
          edges_[e].cap -= pushed;
          edges_[e ^ 1].cap += pushed;
          return pushed;
        }
      }
    }
    return 0;
  }

  std::vector<int> head_, level_, it_;
  std::vector<Edge> edges_;
};

}  // namespace

DistanceMetrics distance_metrics(const InteractionGraph& ig) {
  DistanceMetrics out;
  const int n = ig.n_nodes();
  bool any_edge = false;
  for (int i = 0; i < n && !any_edge; ++i) any_edge = !ig.is_isolated(i);
  if (!any_edge) return out;  // all nodes isolated: both metrics undefined

  // Average over all unordered reachable pairs (every ordered pair counted
  // once each way, so halve both sums).
  std::int64_t pair_count2 = 0;
  std::int64_t dist_sum2 = 0;
  for (int s = 0; s < n; ++s) {
    if (ig.is_isolated(s)) continue;
    auto dist = bfs_distances(ig, s);
    for (int t = 0; t < n; ++t) {
      if (t != s && dist[t] > 0) {
        ++pair_count2;
        dist_sum2 += dist[t];
      }
    }
  }
  out.avg_shortest_path = static_cast<double>(dist_sum2) / static_cast<double>(pair_count2);

  auto comps = ig.components();
  const auto& largest = *std::max_element(
      comps.begin(), comps.end(),
      [](const auto& a, const auto& b) { return a.size() < b.size(); });
  int diameter = 0;
  for (int s : largest) {
    auto dist = bfs_distances(ig, s);
    for (int t : largest) diameter = std::max(diameter, dist[t]);
  }
  out.diameter = diameter;
  return out;
}

DegreeMetrics degree_metrics(const InteractionGraph& ig) {
  DegreeMetrics out;
  const int n = ig.n_nodes();
  if (n >= 1)
    out.avg_degree = 2.0 * static_cast<double>(ig.total_edge_weight()) / n;
  if (n >= 2) {
    std::vector<double> entries;
    entries.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) entries.push_back(static_cast<double>(ig.weight(i, j)));
    out.adjacency_std = population_std(entries);
  }
  return out;
}

std::vector<double> betweenness(const InteractionGraph& ig) {
  // Brandes on the unweighted skeleton. Each unordered pair contributes
  // once (accumulation counts both directions, halved at the end).
  const int n = ig.n_nodes();
  std::vector<double> bc(n, 0.0);
  std::vector<std::vector<int>> adj(n);
  for (int i = 0; i < n; ++i) adj[i] = ig.neighbors(i);
  for (int s = 0; s < n; ++s) {
    std::vector<int> dist(n, -1);
    std::vector<double> sigma(n, 0.0);
    std::vector<std::vector<int>> preds(n);
    std::stack<int> order;
    std::queue<int> q;
    dist[s] = 0;
    sigma[s] = 1.0;
    q.push(s);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      order.push(v);
      for (int w : adj[v]) {
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          q.push(w);
        }
        if (dist[w] == dist[v] + 1) {
          sigma[w] += sigma[v];
          preds[w].push_back(v);
        }
      }
    }
    std::vector<double> delta(n, 0.0);
    while (!order.empty()) {
      int w = order.top();
      order.pop();
      for (int v : preds[w]) delta[v] += sigma[v] / sigma[w] * (1.0 + delta[w]);
      if (w != s) bc[w] += delta[w];
    }
  }
  for (double& b : bc) b /= 2.0;
  return bc;
}

std::vector<double> pagerank(const InteractionGraph& ig, double damping, double tol,
                             int max_iter) {
  const int n = ig.n_nodes();
  if (n == 0) return {};
  std::vector<double> strength(n);
  for (int i = 0; i < n; ++i) strength[i] = static_cast<double>(ig.degree(i));
  std::vector<double> pr(n, 1.0 / n), next(n);
  double residual = 0.0;
  for (int iter = 0; iter < max_iter; ++iter) {
    double dangling = 0.0;
    for (int i = 0; i < n; ++i)
      if (strength[i] == 0.0) dangling += pr[i];
    double base = (1.0 - damping) / n + damping * dangling / n;
    for (int i = 0; i < n; ++i) {
      double in = 0.0;
      for (int j : ig.neighbors(i)) in += pr[j] * static_cast<double>(ig.weight(i, j)) / strength[j];
      next[i] = base + damping * in;
    }
    residual = 0.0;
    for (int i = 0; i < n; ++i) residual += std::abs(next[i] - pr[i]);
    pr.swap(next);
    if (residual < tol) return pr;
  }
  throw std::runtime_error("pagerank did not converge: residual " + std::to_string(residual));
}

CentralityMetrics centrality_metrics(const InteractionGraph& ig) {
  CentralityMetrics out;
  const int n = ig.n_nodes();
  if (n == 0) return out;

  auto comps = ig.components();
  const auto& largest = *std::max_element(
      comps.begin(), comps.end(),
      [](const auto& a, const auto& b) { return a.size() < b.size(); });
  if (largest.size() >= 3) {
    auto bc = betweenness(ig);
    const double m = static_cast<double>(largest.size());
    const double norm = (m - 1.0) * (m - 2.0) / 2.0;
    double best = 0.0;
    for (int v : largest) best = std::max(best, bc[v] / norm);
    out.central_point_of_dominance = best;
  }

  auto pr = pagerank(ig);
  out.pagerank_std = population_std(pr);
  return out;
}

namespace {

struct BronKerbosch {
  const InteractionGraph& ig;
  std::int64_t budget;
  std::int64_t n_cliques = 0;
  int max_size = 0;
  bool capped = false;

  void run() {
    const int n = ig.n_nodes();
    std::vector<int> p(n), r, x;
    for (int i = 0; i < n; ++i) p[i] = i;
    expand(r, p, x);
  }

  void expand(std::vector<int>& r, std::vector<int> p, std::vector<int> x) {
    if (capped) return;
    if (--budget < 0) {
      capped = true;
      return;
    }
    if (p.empty() && x.empty()) {
      ++n_cliques;
      max_size = std::max(max_size, static_cast<int>(r.size()));
      return;
    }
    // Pivot with the most neighbors in P.
    int pivot = -1, best = -1;
    for (int u : p) {
      int cnt = count_neighbors_in(u, p);
      if (cnt > best) {
        best = cnt;
        pivot = u;
      }
    }
    for (int u : x) {
      int cnt = count_neighbors_in(u, p);
      if (cnt > best) {
        best = cnt;
        pivot = u;
      }
    }
    std::vector<int> candidates;
    for (int v : p)
      if (ig.weight(pivot, v) == 0) candidates.push_back(v);
    for (int v : candidates) {
      std::vector<int> p2, x2;
      for (int w : p)
        if (ig.weight(v, w) > 0) p2.push_back(w);
      for (int w : x)
        if (ig.weight(v, w) > 0) x2.push_back(w);
      r.push_back(v);
      expand(r, std::move(p2), std::move(x2));
      r.pop_back();
      p.erase(std::find(p.begin(), p.end(), v));
      x.push_back(v);
      if (capped) return;
    }
  }

  int count_neighbors_in(int u, const std::vector<int>& set) const {
    int cnt = 0;
    for (int v : set) cnt += ig.weight(u, v) > 0 ? 1 : 0;
    return cnt;
  }
};

}  // namespace

std::vector<int> coreness(const InteractionGraph& ig) {
  const int n = ig.n_nodes();
  std::vector<int> core(n, 0), deg(n);
  std::vector<char> removed(n, 0);
  for (int i = 0; i < n; ++i) deg[i] = ig.skeleton_degree(i);
  int k = 0;
  for (int step = 0; step < n; ++step) {
    int v = -1;
    for (int i = 0; i < n; ++i)
      if (!removed[i] && (v < 0 || deg[i] < deg[v])) v = i;
    k = std::max(k, deg[v]);
    core[v] = k;
    removed[v] = 1;
    for (int w : ig.neighbors(v))
      if (!removed[w]) --deg[w];
  }
  return core;
}

CohesionMetrics cohesion_metrics(const InteractionGraph& ig, std::int64_t budget) {
  CohesionMetrics out;
  const int n = ig.n_nodes();
  if (n == 0) return out;

  BronKerbosch bk{ig, budget};
  bk.run();
  out.n_maximal_cliques = bk.n_cliques;
  out.max_clique_size = bk.max_size;
  out.cliques_capped = bk.capped;

  double cc_sum = 0.0;
  for (int i = 0; i < n; ++i) {
    auto nbrs = ig.neighbors(i);
    const int d = static_cast<int>(nbrs.size());
    if (d < 2) continue;
    int links = 0;
    for (std::size_t a = 0; a < nbrs.size(); ++a)
      for (std::size_t b = a + 1; b < nbrs.size(); ++b)
        links += ig.weight(nbrs[a], nbrs[b]) > 0 ? 1 : 0;
    cc_sum += 2.0 * links / (static_cast<double>(d) * (d - 1));
  }
  out.clustering_coefficient = cc_sum / n;

  auto core = coreness(ig);
  out.coreness_max = *std::max_element(core.begin(), core.end());
  double mean = 0.0;
  for (int c : core) mean += c;
  out.coreness_mean = mean / n;
  return out;
}

ConnectivityMetrics connectivity_metrics(const InteractionGraph& ig) {
  ConnectivityMetrics out;
  const int n = ig.n_nodes();
  if (n < 2 || !ig.is_connected()) return out;  // 0 by definition

  auto edges = ig.edges();

  // Edge connectivity: global min cut separates node 0 from some other node.
  int lambda = std::numeric_limits<int>::max();
  for (int t = 1; t < n; ++t) {
    MaxFlow mf(n);
    for (const auto& [i, j, w] : edges) {
      mf.add_edge(i, j, 1);
      mf.add_edge(j, i, 1);
    }
    lambda = std::min(lambda, mf.run(0, t));
  }
  out.edge_connectivity = lambda;

  // Vertex connectivity via node splitting, minimized over all non-adjacent
  // source/sink choices (Menger). Complete graphs have no such pair.
  const int big = n + 1;
  int kappa = n - 1;
  bool found_pair = false;
  for (int s = 0; s < n; ++s) {
    for (int t = s + 1; t < n; ++t) {
      if (ig.weight(s, t) > 0) continue;
      found_pair = true;
      MaxFlow mf(2 * n);
      for (int v = 0; v < n; ++v) mf.add_edge(2 * v, 2 * v + 1, 1);  // v_in -> v_out
      for (const auto& [i, j, w] : edges) {
        mf.add_edge(2 * i + 1, 2 * j, big);
        mf.add_edge(2 * j + 1, 2 * i, big);
      }
      kappa = std::min(kappa, mf.run(2 * s + 1, 2 * t));
    }
  }
  out.vertex_connectivity = found_pair ? kappa : n - 1;
  return out;
}

IgFeatureSet ig_features(const InteractionGraph& ig) {
  IgFeatureSet f;
  auto dist = distance_metrics(ig);
  f.avg_shortest_path = dist.avg_shortest_path;
  f.diameter = dist.diameter;

  auto deg = degree_metrics(ig);
  f.avg_degree = deg.avg_degree;
  f.adjacency_std = deg.adjacency_std;

  try {
    auto cen = centrality_metrics(ig);
    f.central_point_of_dominance = cen.central_point_of_dominance;
    f.pagerank_std = cen.pagerank_std;
  } catch (const std::runtime_error&) {
    // non-convergent pagerank: recorded as a missing feature
  }

  auto coh = cohesion_metrics(ig);
  f.n_maximal_cliques = coh.n_maximal_cliques;
  f.max_clique_size = coh.max_clique_size;
  f.clustering_coefficient = coh.clustering_coefficient;
  f.coreness_max = coh.coreness_max;
  f.coreness_mean = coh.coreness_mean;
  f.cliques_capped = coh.cliques_capped;

  auto con = connectivity_metrics(ig);
  f.vertex_connectivity = con.vertex_connectivity;
  f.edge_connectivity = con.edge_connectivity;

  f.disconnected = !ig.is_connected();
  return f;
}

}  // namespace qcprof
