#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "qcprof/graph.hpp"

namespace qcprof {

/// Interaction-graph feature set. Distance metrics use the unweighted
/// skeleton (hopcounts); degree and adjacency metrics use edge weights.
/// Metrics that are undefined on the given graph are left empty and surface
/// as missing features. All standard deviations are population deviations.
struct IgFeatureSet {
  std::optional<double> avg_shortest_path;
  std::optional<double> adjacency_std;
  std::optional<int> diameter;
  double central_point_of_dominance = 0.0;
  double avg_degree = 0.0;
  std::int64_t n_maximal_cliques = 0;
  int max_clique_size = 0;
  double clustering_coefficient = 0.0;
  int vertex_connectivity = 0;
  int edge_connectivity = 0;
  int coreness_max = 0;
  double coreness_mean = 0.0;
  std::optional<double> pagerank_std;
  bool disconnected = false;
  /// Set when clique enumeration hit its budget; counts are lower bounds.
  bool cliques_capped = false;
};

struct DistanceMetrics {
  std::optional<double> avg_shortest_path;
  std::optional<int> diameter;
};

/// Hopcounts averaged over all unordered reachable pairs; diameter is the
/// maximum eccentricity over the largest connected component. Both are empty
/// when every node is isolated.
DistanceMetrics distance_metrics(const InteractionGraph& ig);

struct DegreeMetrics {
  double avg_degree = 0.0;
  /// Population std over the n(n-1)/2 upper-triangle adjacency entries,
  /// zeros included. Empty when n < 2.
  std::optional<double> adjacency_std;
};

DegreeMetrics degree_metrics(const InteractionGraph& ig);

struct CentralityMetrics {
  /// Maximum pair-normalized betweenness over the largest component:
  /// 0 for complete graphs, 1 for stars. 0 by convention when the largest
  /// component has fewer than 3 nodes.
  double central_point_of_dominance = 0.0;
  std::optional<double> pagerank_std;
};

CentralityMetrics centrality_metrics(const InteractionGraph& ig);

/// Weighted pagerank scores (damping 0.85 by default), power iteration to
/// the given L1 tolerance. Throws std::runtime_error with the residual if
/// the iteration cap is hit.
std::vector<double> pagerank(const InteractionGraph& ig, double damping = 0.85,
                             double tol = 1e-9, int max_iter = 100000);

/// Per-node betweenness centrality on the unweighted skeleton (Brandes),
/// unnormalized, over the whole graph.
std::vector<double> betweenness(const InteractionGraph& ig);

struct CohesionMetrics {
  std::int64_t n_maximal_cliques = 0;
  int max_clique_size = 0;
  double clustering_coefficient = 0.0;
  int coreness_max = 0;
  double coreness_mean = 0.0;
  bool cliques_capped = false;
};

/// Maximal cliques via Bron-Kerbosch with pivoting on the unweighted
/// skeleton; local clustering coefficients (degree < 2 contributes 0);
/// coreness by minimum-degree peeling.
CohesionMetrics cohesion_metrics(const InteractionGraph& ig,
                                 std::int64_t budget = 5000000);

/// Coreness of every node (iterative minimum-degree peeling).
std::vector<int> coreness(const InteractionGraph& ig);

struct ConnectivityMetrics {
  int vertex_connectivity = 0;
  int edge_connectivity = 0;
};

/// Menger-style connectivity via max-flow over source/sink choices on the
/// unweighted skeleton. Both 0 by definition on disconnected input.
ConnectivityMetrics connectivity_metrics(const InteractionGraph& ig);

/// All IG features in one pass.
IgFeatureSet ig_features(const InteractionGraph& ig);

}  // namespace qcprof
