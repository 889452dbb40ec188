#include "qcprof/circuit.hpp"

#include <algorithm>
#include <string>

namespace qcprof {

Layering asap_layering(const Circuit& c) {
  Layering l;
  l.layer_of_gate.resize(c.gates.size());
  // next_free[q] = earliest layer still open on qubit q
  std::vector<int> next_free(c.n_qubits, 0);
  int depth = 0;
  for (std::size_t i = 0; i < c.gates.size(); ++i) {
    int layer = 0;
    for (int q : c.gates[i].qubits) layer = std::max(layer, next_free[q]);
    l.layer_of_gate[i] = layer;
    for (int q : c.gates[i].qubits) next_free[q] = layer + 1;
    depth = std::max(depth, layer + 1);
  }
  l.depth = depth;
  return l;
}

SizeFeatures size_features(const Circuit& c) {
  SizeFeatures f;
  f.n_qubits = c.n_qubits;
  f.n_gates = c.n_gates();
  f.two_qubit_gate_pct =
      f.n_gates > 0 ? static_cast<double>(c.n_two_qubit_gates()) / f.n_gates : 0.0;
  f.depth = asap_layering(c).depth;
  return f;
}

std::vector<std::string> gate_token_sequence(const Circuit& c) {
  std::vector<std::string> tokens;
  tokens.reserve(c.gates.size());
  for (const auto& g : c.gates) {
    std::string t = g.name + ":";
    for (std::size_t i = 0; i < g.qubits.size(); ++i) {
      if (i > 0) t += ',';
      t += std::to_string(g.qubits[i]);
    }
    tokens.push_back(std::move(t));
  }
  return tokens;
}

}  // namespace qcprof
