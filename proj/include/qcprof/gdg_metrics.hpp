#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <optional>

#include "qcprof/graph.hpp"

namespace qcprof {

/// Path counts grow exponentially with circuit size, so they are kept exact
/// in arbitrary precision; means and variances are floating point.
using BigInt = boost::multiprecision::cpp_int;

/// log10 of a positive big integer, exact to double precision.
double log10_big(const BigInt& x);

/// GDG path statistics. Path lengths are measured in gate nodes between
/// source and sink; sentinels are never counted.
struct GdgFeatureSet {
  std::int64_t critical_path_length = 0;
  BigInt n_paths = 0;
  BigInt n_critical_paths = 0;
  double path_length_mean = 0.0;
  double path_length_std = 0.0;
  /// Fraction of gate nodes lying on at least one critical path. Empty for
  /// the degenerate zero-gate graph.
  std::optional<double> pct_gates_in_critical_path;
  std::int64_t max_2q_in_critical = 0;
  BigInt n_critical_with_max_2q = 0;
};

/// Evaluate the path recurrences bottom-up in reversed topological order:
/// longest path L, path count n, critical path count N, max two-qubit gates
/// on a critical path M, count of critical paths attaining M (K), and the
/// pooled mean/variance of the source-to-sink path length distribution.
GdgFeatureSet gdg_path_features(const GateDependencyGraph& g);

/// Fraction of gates on at least one critical path: gate w qualifies iff
/// forwardL(w) + L(w) = L(source), forwardL being the longest gate-count
/// distance from source excluding w itself.
double pct_gates_in_critical_path(const GateDependencyGraph& g);

}  // namespace qcprof
