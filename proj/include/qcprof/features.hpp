#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qcprof/circuit.hpp"
#include "qcprof/gdg_metrics.hpp"
#include "qcprof/ig_metrics.hpp"

namespace qcprof {

/// Named map of scalar circuit features. Missing entries stand for metrics
/// that are undefined on the circuit (e.g. distance metrics on an edgeless
/// interaction graph).
class FeatureVector {
 public:
  void set(const std::string& name, double value) { values_[name] = value; }
  bool has(const std::string& name) const { return values_.count(name) != 0; }
  double get(const std::string& name) const { return values_.at(name); }
  std::optional<double> try_get(const std::string& name) const {
    auto it = values_.find(name);
    if (it == values_.end()) return std::nullopt;
    return it->second;
  }

  const std::map<std::string, double>& values() const { return values_; }

 private:
  std::map<std::string, double> values_;
};

enum class Profile { single_core, multi_core };

Profile profile_from_string(const std::string& s);
std::string to_string(Profile p);

/// Canonical feature column order (all features, both profiles).
const std::vector<std::string>& canonical_columns();

/// Columns for one profile, in canonical order. Size columns first.
std::vector<std::string> profile_columns(Profile p);

/// The four size columns used by clustering level 1.
const std::vector<std::string>& size_columns();

/// Structure columns for clustering level 2 under a profile: the profile
/// columns minus size columns and minus the raw exponential counts (their
/// log10 companions stay in).
std::vector<std::string> structure_columns(Profile p);

/// Feature rows keyed by circuit name, with a fixed column set.
struct FeatureTable {
  std::vector<std::string> names;
  std::vector<std::string> columns;
  std::vector<FeatureVector> rows;

  std::size_t n_rows() const { return rows.size(); }
};

/// Full per-circuit profile: the feature vector plus exact values that do
/// not fit a double column.
struct CircuitProfile {
  FeatureVector features;
  BigInt n_paths_exact = 0;
  BigInt n_critical_paths_exact = 0;
  BigInt n_critical_with_max_2q_exact = 0;
  bool ig_disconnected = false;
  bool cliques_capped = false;
};

/// Extract every feature of the catalogue from a circuit.
CircuitProfile profile_circuit(const Circuit& c);

/// CSV I/O. Cells for missing features are empty. Numbers are printed with
/// round-trip precision so identical inputs give byte-identical files.
std::string feature_table_to_csv(const FeatureTable& t);
FeatureTable feature_table_from_csv(const std::string& csv);

std::string format_double(double v);

}  // namespace qcprof
