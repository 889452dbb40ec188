#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qcprof/features.hpp"
#include "qcprof/mapping_result.hpp"

namespace qcprof {

/// Sample Pearson correlation. Empty when the series are shorter than 2 or
/// either has zero variance.
std::optional<double> pearson(const std::vector<double>& x,
                              const std::vector<double>& y);

/// Performance rows keyed by circuit name: metric name -> value. Missing
/// metrics (e.g. inter_core_moves on a single-core run) are simply absent.
struct ResultTable {
  std::vector<std::string> names;
  std::vector<std::string> metrics;
  std::vector<std::map<std::string, double>> rows;
};

struct CorrelationEntry {
  std::string feature;
  std::string metric;
  std::optional<double> r;
  int n_samples = 0;
};

/// Pearson r for every (feature, metric) pair with pairwise deletion of
/// missing values, plus a per-metric feature ranking sorted descending in r.
struct CorrelationReport {
  std::vector<std::string> features;
  std::vector<std::string> metrics;
  std::vector<std::vector<CorrelationEntry>> cells;  // [feature][metric]
  /// Per metric: feature names with defined r, most positive first.
  std::map<std::string, std::vector<std::string>> ranking;
};

/// Throws std::runtime_error when the tables share no circuit keys.
CorrelationReport correlation_table(const FeatureTable& features,
                                    const ResultTable& results);

std::string correlation_report_to_csv(const CorrelationReport& r);

/// Heatmap with one rect per (feature, metric) cell, red for +1 through
/// white at 0 to blue for -1. Rows ordered from the most positively to the
/// most negatively correlated (mean r across metrics).
std::string correlation_report_to_svg(const CorrelationReport& r);

std::string result_table_to_csv(const ResultTable& t);
ResultTable result_table_from_csv(const std::string& csv);

}  // namespace qcprof
