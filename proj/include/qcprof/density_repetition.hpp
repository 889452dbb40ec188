#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qcprof/circuit.hpp"

namespace qcprof {

/// Parallelization level in [0,1]: D = ((2*n_2qg + n_1qg)/d - 1)/(n_q - 1).
/// Empty when n_q < 2 or the circuit has no layers.
std::optional<double> density_score(const Circuit& c, const Layering& l);

/// Average qubit idling in [0,1]: I = sum_i (d - q_i) / (n_q * d), where q_i
/// counts the layers in which qubit i hosts a gate. Empty when d = 0.
std::optional<double> idling_score(const Circuit& c, const Layering& l);

/// Longest token substring occurring at least twice (occurrences may
/// overlap) and its occurrence count. Ties between equal-length repeats are
/// broken by the earliest-starting substring.
struct RepetitionFeatureSet {
  int largest_repeat_len = 0;
  std::int64_t largest_repeat_count = 0;
};

/// Computed with a suffix automaton over the token sequence, linear in the
/// number of tokens.
RepetitionFeatureSet longest_repeated_subcircuit(const std::vector<std::string>& tokens);

}  // namespace qcprof
