#pragma once

#include <optional>

namespace qcprof {

/// Uniform gate success model: per-gate error rates for one- and two-qubit
/// gates. Circuit fidelity is the product of per-gate success probabilities
/// (1 - eps_1)^n1q * (1 - eps_2)^n2q.
struct ErrorModel {
  double eps1 = 0.001;
  double eps2 = 0.01;
};

double circuit_fidelity(int n_1q, int n_2q, const ErrorModel& em);

/// Gate/depth/fidelity bookkeeping of one mapping run. Overheads are
/// relative: (after - before)/before, empty when the denominator is zero.
struct MappingResult {
  int gates_before = 0;
  int gates_after = 0;
  int depth_before = 0;
  int depth_after = 0;
  int n_1q_added = 0;
  int n_2q_added = 0;
  double fidelity_before = 1.0;
  double fidelity_after = 1.0;
  int inter_core_moves = 0;

  std::optional<double> gate_overhead() const;
  std::optional<double> depth_overhead() const;
  std::optional<double> fidelity_decrease() const;
};

/// Per-circuit gate statistics feeding the ratios.
struct CircuitStats {
  int n_gates = 0;
  int depth = 0;
  int n_1q = 0;
  int n_2q = 0;
};

MappingResult performance_metrics(const CircuitStats& before,
                                  const CircuitStats& after,
                                  const ErrorModel& em);

}  // namespace qcprof
