#include "qcprof/clustering.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace qcprof {

namespace {

// mt19937_64 output mapped to [0,1); all sampling goes through these two
// helpers so results are identical across standard libraries.
double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::size_t uniform_index(std::mt19937_64& rng, std::size_t n) {
  return std::min(n - 1, static_cast<std::size_t>(uniform01(rng) * static_cast<double>(n)));
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + (stream + 1) * 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

double sq_dist(const std::vector<double>& a, const std::vector<double>& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double t = a[i] - b[i];
    d += t * t;
  }
  return d;
}

int nearest_centroid(const std::vector<double>& p, const Matrix& centroids) {
  int best = 0;
  double best_d = sq_dist(p, centroids[0]);
  for (std::size_t c = 1; c < centroids.size(); ++c) {
    const double d = sq_dist(p, centroids[c]);
    if (d < best_d) {
      best_d = d;
      best = static_cast<int>(c);
    }
  }
  return best;
}

Matrix kmeanspp_init(const Matrix& points, int k, std::mt19937_64& rng) {
  Matrix centroids;
  centroids.push_back(points[uniform_index(rng, points.size())]);
  std::vector<double> d2(points.size());
  while (static_cast<int>(centroids.size()) < k) {
    double total = 0.0;
    for (std::size_t i = 0; i < points.size(); ++i) {
      double best = sq_dist(points[i], centroids[0]);
      for (std::size_t c = 1; c < centroids.size(); ++c)
        best = std::min(best, sq_dist(points[i], centroids[c]));
      d2[i] = best;
      total += best;
    }
    std::size_t pick = 0;
    if (total > 0.0) {
      const double target = uniform01(rng) * total;
      double acc = 0.0;
      pick = points.size() - 1;
      for (std::size_t i = 0; i < points.size(); ++i) {
        acc += d2[i];
        if (acc >= target) {
          pick = i;
          break;
        }
      }
    } else {
      // all remaining points coincide with a centroid
      pick = uniform_index(rng, points.size());
    }
    centroids.push_back(points[pick]);
  }
  return centroids;
}

struct LloydOutcome {
  std::vector<int> labels;
  Matrix centroids;
  double wcss = 0.0;
  std::vector<double> history;
};

LloydOutcome lloyd(const Matrix& points, int k, std::mt19937_64& rng) {
  const std::size_t n = points.size();
  const std::size_t dim = points[0].size();
  LloydOutcome out;
  out.centroids = kmeanspp_init(points, k, rng);
  out.labels.assign(n, -1);

  for (int iter = 0; iter < 500; ++iter) {
    bool changed = false;
    for (std::size_t i = 0; i < n; ++i) {
      const int c = nearest_centroid(points[i], out.centroids);
      if (c != out.labels[i]) {
        out.labels[i] = c;
        changed = true;
      }
    }
    // Re-seed any emptied cluster with the point farthest from its centroid.
    std::vector<int> count(k, 0);
    for (int l : out.labels) ++count[l];
    for (int c = 0; c < k; ++c) {
      if (count[c] > 0) continue;
      std::size_t far = 0;
      double far_d = -1.0;
      for (std::size_t i = 0; i < n; ++i) {
        if (count[out.labels[i]] <= 1) continue;
        const double d = sq_dist(points[i], out.centroids[out.labels[i]]);
        if (d > far_d) {
          far_d = d;
          far = i;
        }
      }
      --count[out.labels[far]];
      out.labels[far] = c;
      ++count[c];
      changed = true;
    }
    for (int c = 0; c < k; ++c) std::fill(out.centroids[c].begin(), out.centroids[c].end(), 0.0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t d = 0; d < dim; ++d) out.centroids[out.labels[i]][d] += points[i][d];
    for (int c = 0; c < k; ++c)
      for (std::size_t d = 0; d < dim; ++d) out.centroids[c][d] /= count[c];

    double wcss = 0.0;
    for (std::size_t i = 0; i < n; ++i) wcss += sq_dist(points[i], out.centroids[out.labels[i]]);
    out.history.push_back(wcss);
    if (!changed) break;
  }
  out.wcss = out.history.back();
  return out;
}

}  // namespace

void standardize(Matrix& points) {
  if (points.empty()) return;
  const std::size_t dim = points[0].size();
  const double n = static_cast<double>(points.size());
  for (std::size_t d = 0; d < dim; ++d) {
    double mean = 0.0;
    for (const auto& p : points) mean += p[d];
    mean /= n;
    double var = 0.0;
    for (const auto& p : points) var += (p[d] - mean) * (p[d] - mean);
    const double std_dev = std::sqrt(var / n);
    for (auto& p : points) p[d] = std_dev > 0.0 ? (p[d] - mean) / std_dev : 0.0;
  }
}

KMeansResult kmeans(const Matrix& points, int k, std::uint64_t seed, int restarts) {
  if (k < 1) throw std::invalid_argument("kmeans: k must be >= 1");
  if (points.empty() || k > static_cast<int>(points.size()))
    throw std::invalid_argument("kmeans: k exceeds the number of points");
  restarts = std::max(1, restarts);

  LloydOutcome best;
  best.wcss = std::numeric_limits<double>::infinity();
  for (int r = 0; r < restarts; ++r) {
    std::mt19937_64 rng(mix_seed(seed, static_cast<std::uint64_t>(r)));
    auto run = lloyd(points, k, rng);
    if (run.wcss < best.wcss) best = std::move(run);  // ties keep earlier restart
  }

  // Stable label ids: renumber by first appearance.
  std::vector<int> remap(k, -1);
  int next = 0;
  for (int& l : best.labels) {
    if (remap[l] < 0) remap[l] = next++;
    l = remap[l];
  }
  Matrix centroids(k);
  for (int c = 0; c < k; ++c)
    for (int old = 0; old < k; ++old)
      if (remap[old] == c) centroids[c] = best.centroids[old];

  KMeansResult out;
  out.labels = std::move(best.labels);
  out.centroids = std::move(centroids);
  out.wcss = best.wcss;
  out.wcss_history = std::move(best.history);
  return out;
}

double silhouette(const Matrix& points, const std::vector<int>& labels) {
  const std::size_t n = points.size();
  int k = 0;
  for (int l : labels) k = std::max(k, l + 1);
  std::vector<int> count(k, 0);
  for (int l : labels) ++count[l];
  int non_empty = 0;
  for (int c : count) non_empty += c > 0 ? 1 : 0;
  if (non_empty < 2) throw std::invalid_argument("silhouette: needs at least 2 clusters");

  double total = 0.0;
  std::vector<double> mean_to(k);
  for (std::size_t i = 0; i < n; ++i) {
    std::fill(mean_to.begin(), mean_to.end(), 0.0);
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      mean_to[labels[j]] += std::sqrt(sq_dist(points[i], points[j]));
    }
    const int own = labels[i];
    if (count[own] <= 1) continue;  // singleton scores 0
    const double a = mean_to[own] / (count[own] - 1);
    double b = std::numeric_limits<double>::infinity();
    for (int c = 0; c < k; ++c)
      if (c != own && count[c] > 0) b = std::min(b, mean_to[c] / count[c]);
    const double denom = std::max(a, b);
    total += denom > 0.0 ? (b - a) / denom : 0.0;
  }
  return total / static_cast<double>(n);
}

namespace {

// Column median over rows where the feature is present; 0 when absent
// everywhere.
double column_median(const FeatureTable& t, const std::string& col) {
  std::vector<double> vals;
  for (const auto& row : t.rows)
    if (auto v = row.try_get(col); v && std::isfinite(*v)) vals.push_back(*v);
  if (vals.empty()) return 0.0;
  std::sort(vals.begin(), vals.end());
  const std::size_t m = vals.size();
  return m % 2 == 1 ? vals[m / 2] : 0.5 * (vals[m / 2 - 1] + vals[m / 2]);
}

// Extract columns as a dense matrix, imputing missing cells with the column
// median and log-transforming the heavy-tailed count columns.
Matrix extract(const FeatureTable& t, const std::vector<std::string>& cols,
               std::vector<std::string>* imputed) {
  Matrix m(t.rows.size(), std::vector<double>(cols.size(), 0.0));
  for (std::size_t c = 0; c < cols.size(); ++c) {
    const bool log_col = cols[c] == "n_gates" || cols[c] == "depth";
    const double median = column_median(t, cols[c]);
    bool any_missing = false;
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
      auto v = t.rows[i].try_get(cols[c]);
      double x;
      if (v && std::isfinite(*v)) {
        x = *v;
      } else {
        x = median;
        any_missing = true;
      }
      m[i][c] = log_col ? std::log10(1.0 + x) : x;
    }
    if (any_missing && imputed) imputed->push_back(cols[c]);
  }
  return m;
}

}  // namespace

ClusterAssignment two_level_cluster(const FeatureTable& t, const TwoLevelConfig& config) {
  if (t.rows.empty()) throw std::invalid_argument("two_level_cluster: empty feature table");
  const std::size_t n = t.rows.size();

  ClusterAssignment a;
  a.names = t.names;
  a.config = config;
  a.size_cluster.assign(n, 0);
  a.sub_cluster.assign(n, 0);

  // Level 1: size columns.
  Matrix size_m = extract(t, size_columns(), &a.imputed_columns);
  standardize(size_m);
  const int k_size = std::min<int>(config.k_size, static_cast<int>(n));
  auto level1 = kmeans(size_m, k_size, config.seed, config.restarts);
  a.size_cluster = level1.labels;
  a.size_centroids = level1.centroids;
  if (k_size >= 2) a.size_silhouette = silhouette(size_m, level1.labels);

  // Level 2: structure columns, standardized over the whole table.
  Matrix struct_m = extract(t, structure_columns(config.profile), &a.imputed_columns);
  standardize(struct_m);

  a.sub_info.resize(k_size);
  for (int c = 0; c < k_size; ++c) {
    std::vector<std::size_t> members;
    for (std::size_t i = 0; i < n; ++i)
      if (a.size_cluster[i] == c) members.push_back(i);
    SubClusterInfo& info = a.sub_info[c];
    const int sz = static_cast<int>(members.size());
    const int k_hi = std::min(config.k_range_hi, sz);
    if (sz <= config.k_min_split || config.k_range_lo > k_hi) {
      info.k = 1;  // kept unsplit, silhouette recorded as "-"
      continue;
    }
    Matrix pts(members.size());
    for (std::size_t i = 0; i < members.size(); ++i) pts[i] = struct_m[members[i]];

    int best_k = -1;
    double best_sil = -std::numeric_limits<double>::infinity();
    KMeansResult best_run;
    for (int k = config.k_range_lo; k <= k_hi; ++k) {
      auto run = kmeans(pts, k, config.seed, config.restarts);
      const double sil = silhouette(pts, run.labels);
      if (sil > best_sil) {  // ties keep the smaller k
        best_sil = sil;
        best_k = k;
        best_run = std::move(run);
      }
    }
    info.k = best_k;
    info.silhouette = best_sil;
    info.centroids = best_run.centroids;
    for (std::size_t i = 0; i < members.size(); ++i)
      a.sub_cluster[members[i]] = best_run.labels[i];
  }

  std::sort(a.imputed_columns.begin(), a.imputed_columns.end());
  a.imputed_columns.erase(std::unique(a.imputed_columns.begin(), a.imputed_columns.end()),
                          a.imputed_columns.end());
  return a;
}

std::string cluster_assignment_to_csv(const ClusterAssignment& a) {
  std::ostringstream out;
  out << "name,size_cluster,sub_cluster\n";
  for (std::size_t i = 0; i < a.names.size(); ++i)
    out << a.names[i] << ',' << a.size_cluster[i] << ',' << a.sub_cluster[i] << '\n';
  return out.str();
}

std::string cluster_assignment_to_json(const ClusterAssignment& a) {
  nlohmann::json j;
  j["config"] = {
      {"profile", to_string(a.config.profile)},
      {"k_size", a.config.k_size},
      {"k_min_split", a.config.k_min_split},
      {"k_range", {a.config.k_range_lo, a.config.k_range_hi}},
      {"seed", a.config.seed},
      {"restarts", a.config.restarts},
  };
  j["size_silhouette"] =
      a.size_silhouette ? nlohmann::json(*a.size_silhouette) : nlohmann::json(nullptr);
  j["size_centroids"] = a.size_centroids;
  j["imputed_columns"] = a.imputed_columns;
  nlohmann::json subs = nlohmann::json::array();
  for (const auto& info : a.sub_info) {
    nlohmann::json s;
    s["k"] = info.k;
    s["silhouette"] = info.silhouette ? nlohmann::json(*info.silhouette) : nlohmann::json(nullptr);
    s["centroids"] = info.centroids;
    subs.push_back(std::move(s));
  }
  j["sub_clusters"] = std::move(subs);
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < a.names.size(); ++i)
    rows.push_back({{"name", a.names[i]},
                    {"size_cluster", a.size_cluster[i]},
                    {"sub_cluster", a.sub_cluster[i]}});
  j["assignments"] = std::move(rows);
  return j.dump(2) + "\n";
}

}  // namespace qcprof
