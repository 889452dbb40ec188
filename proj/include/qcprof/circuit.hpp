#pragma once

#include <optional>
#include <string>
#include <vector>

namespace qcprof {

/// A single gate application. Qubit indices are global (flattened over all
/// declared registers) and distinct within one gate. After ingestion the
/// arity is always 1 or 2; wider gates are decomposed or rejected by the
/// parser.
struct Gate {
  std::string name;
  std::vector<int> qubits;
  std::vector<double> params;

  bool is_two_qubit() const { return qubits.size() == 2; }

  friend bool operator==(const Gate&, const Gate&) = default;
};

/// Gate-list intermediate representation of a quantum circuit.
/// Gates are stored in program order. Immutable by convention once built.
struct Circuit {
  int n_qubits = 0;
  std::vector<Gate> gates;
  std::string name;
  /// Optional origin tag: one of "real", "random", "queko", "other".
  std::string origin_label = "other";

  int n_gates() const { return static_cast<int>(gates.size()); }

  int n_two_qubit_gates() const {
    int n = 0;
    for (const auto& g : gates) n += g.is_two_qubit() ? 1 : 0;
    return n;
  }

  int n_single_qubit_gates() const { return n_gates() - n_two_qubit_gates(); }
};

/// ASAP layering of a circuit: each gate is scheduled in the earliest layer
/// after all gates that precede it on any of its qubits. All gates take one
/// time step.
struct Layering {
  std::vector<int> layer_of_gate;
  int depth = 0;
};

Layering asap_layering(const Circuit& c);

/// Size feature slice: {n_qubits, n_gates, two_qubit_gate_pct, depth}.
/// The percentage is 0 by convention on empty circuits.
struct SizeFeatures {
  int n_qubits = 0;
  int n_gates = 0;
  double two_qubit_gate_pct = 0.0;
  int depth = 0;
};

SizeFeatures size_features(const Circuit& c);

/// One token per gate, encoding (name, qubit tuple) in program order, e.g.
/// "cx:0,1". Identical sub-circuits yield identical token runs.
std::vector<std::string> gate_token_sequence(const Circuit& c);

}  // namespace qcprof
