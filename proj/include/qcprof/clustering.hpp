#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qcprof/features.hpp"

namespace qcprof {

using Matrix = std::vector<std::vector<double>>;

/// Z-score every column in place (population std); constant columns map
/// to 0.
void standardize(Matrix& points);

struct KMeansResult {
  std::vector<int> labels;
  Matrix centroids;
  double wcss = 0.0;
  /// WCSS after each Lloyd iteration of the winning restart; never
  /// increasing.
  std::vector<double> wcss_history;
};

/// Lloyd's algorithm with k-means++ seeding, best of `restarts` runs by
/// within-cluster sum of squares (ties by restart index). Deterministic for
/// a fixed seed. Labels are renumbered by first appearance in point order.
/// Throws std::invalid_argument when k < 1 or k > points.
KMeansResult kmeans(const Matrix& points, int k, std::uint64_t seed,
                    int restarts = 10);

/// Mean silhouette coefficient with Euclidean distances. Points in singleton
/// clusters score 0; coincident clusters (a = b = 0) score 0. Throws
/// std::invalid_argument on fewer than 2 non-empty clusters.
double silhouette(const Matrix& points, const std::vector<int>& labels);

struct TwoLevelConfig {
  Profile profile = Profile::single_core;
  int k_size = 5;
  /// Size clusters with at most this many circuits are kept unsplit.
  int k_min_split = 2;
  int k_range_lo = 2;
  int k_range_hi = 10;
  std::uint64_t seed = 1;
  int restarts = 10;
};

struct SubClusterInfo {
  int k = 1;
  /// Empty when the cluster was left unsplit (recorded as "-").
  std::optional<double> silhouette;
  Matrix centroids;
};

struct ClusterAssignment {
  std::vector<std::string> names;
  std::vector<int> size_cluster;
  std::vector<int> sub_cluster;
  std::optional<double> size_silhouette;
  Matrix size_centroids;
  std::vector<SubClusterInfo> sub_info;  // indexed by size cluster id
  std::vector<std::string> imputed_columns;
  TwoLevelConfig config;
};

/// Two-step clustering: k-means on standardized size columns (log-transformed
/// gate count and depth), then per-size-cluster k-means on standardized
/// structure columns with silhouette-selected k over the configured range.
/// Missing features are imputed with the column median before either level.
ClusterAssignment two_level_cluster(const FeatureTable& t,
                                    const TwoLevelConfig& config);

std::string cluster_assignment_to_csv(const ClusterAssignment& a);
std::string cluster_assignment_to_json(const ClusterAssignment& a);

}  // namespace qcprof
