#pragma once

#include <string>

#include "qcprof/circuit.hpp"

namespace fixtures {

inline qcprof::Circuit ghz(int n) {
  qcprof::Circuit c;
  c.n_qubits = n;
  c.name = "ghz" + std::to_string(n);
  c.gates.push_back({"h", {0}, {}});
  for (int i = 0; i + 1 < n; ++i) c.gates.push_back({"cx", {i, i + 1}, {}});
  return c;
}

// Six qubits, eight two-qubit gates: the structural shape of the worked
// example circuit (IG of total weight 8, GDG of 8 gate nodes).
inline qcprof::Circuit six_qubit_eight_cx() {
  qcprof::Circuit c;
  c.n_qubits = 6;
  c.name = "example6q8g";
  const int pairs[8][2] = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 2}, {1, 3}, {2, 4}};
  for (const auto& p : pairs) c.gates.push_back({"cx", {p[0], p[1]}, {}});
  return c;
}

inline std::string six_qubit_eight_cx_qasm() {
  return "OPENQASM 2.0;\ninclude \"qelib1.inc\";\nqreg q[6];\n"
         "cx q[0],q[1];\ncx q[1],q[2];\ncx q[2],q[3];\ncx q[3],q[4];\n"
         "cx q[4],q[5];\ncx q[0],q[2];\ncx q[1],q[3];\ncx q[2],q[4];\n";
}

}  // namespace fixtures
