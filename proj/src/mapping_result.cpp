#include "qcprof/mapping_result.hpp"

#include <cmath>

namespace qcprof {

double circuit_fidelity(int n_1q, int n_2q, const ErrorModel& em) {
  return std::pow(1.0 - em.eps1, n_1q) * std::pow(1.0 - em.eps2, n_2q);
}

std::optional<double> MappingResult::gate_overhead() const {
  if (gates_before == 0) return std::nullopt;
  return static_cast<double>(gates_after - gates_before) / gates_before;
}

std::optional<double> MappingResult::depth_overhead() const {
  if (depth_before == 0) return std::nullopt;
  return static_cast<double>(depth_after - depth_before) / depth_before;
}

std::optional<double> MappingResult::fidelity_decrease() const {
  if (fidelity_before <= 0.0) return std::nullopt;
  return (fidelity_before - fidelity_after) / fidelity_before;
}

MappingResult performance_metrics(const CircuitStats& before, const CircuitStats& after,
                                  const ErrorModel& em) {
  MappingResult r;
  r.gates_before = before.n_gates;
  r.gates_after = after.n_gates;
  r.depth_before = before.depth;
  r.depth_after = after.depth;
  r.n_1q_added = after.n_1q - before.n_1q;
  r.n_2q_added = after.n_2q - before.n_2q;
  r.fidelity_before = circuit_fidelity(before.n_1q, before.n_2q, em);
  r.fidelity_after = circuit_fidelity(after.n_1q, after.n_2q, em);
  return r;
}

}  // namespace qcprof
