#include <random>

#include "doctest.h"
#include "qcprof/circuit.hpp"
#include "qcprof/qasm.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace qcprof;

TEST_CASE("parse: two-gate program") {
  auto r = parse_qasm("qreg q[2]; h q[0]; cx q[0],q[1];");
  CHECK(r.circuit.n_qubits == 2);
  REQUIRE(r.circuit.gates.size() == 2);
  CHECK(r.circuit.gates[0] == Gate{"h", {0}, {}});
  CHECK(r.circuit.gates[1] == Gate{"cx", {0, 1}, {}});
}

TEST_CASE("parse: empty program keeps the register") {
  auto r = parse_qasm("qreg q[1];");
  CHECK(r.circuit.n_qubits == 1);
  CHECK(r.circuit.gates.empty());
}

TEST_CASE("parse: header, include, creg, measure and barrier are metadata") {
  const std::string text =
      "OPENQASM 2.0;\ninclude \"qelib1.inc\";\nqreg q[2];\ncreg c[2];\n"
      "h q[0];\nbarrier q[0],q[1];\ncx q[0],q[1];\nmeasure q[0] -> c[0];\n"
      "measure q[1] -> c[1];\n";
  auto r = parse_qasm(text);
  CHECK(r.circuit.gates.size() == 2);
  CHECK(r.metadata.barriers_stripped == 1);
  CHECK(r.metadata.measurements_stripped == 2);
}

TEST_CASE("parse: one-qubit gates broadcast over bare registers") {
  auto r = parse_qasm("qreg q[3]; creg c[3]; h q; measure q -> c;");
  REQUIRE(r.circuit.gates.size() == 3);
  for (int i = 0; i < 3; ++i) CHECK(r.circuit.gates[i].qubits == std::vector<int>{i});
}

TEST_CASE("parse: parameter expressions") {
  auto r = parse_qasm("qreg q[1]; rz(pi/2) q[0]; u3(-pi/4, 0.5, 2*pi) q[0];");
  CHECK(r.circuit.gates[0].params[0] == doctest::Approx(1.5707963267948966));
  CHECK(r.circuit.gates[1].params[0] == doctest::Approx(-0.7853981633974483));
  CHECK(r.circuit.gates[1].params[1] == doctest::Approx(0.5));
  CHECK(r.circuit.gates[1].params[2] == doctest::Approx(6.283185307179586));
}

TEST_CASE("parse: errors carry line and column") {
  CHECK_THROWS_AS(parse_qasm("qreg q[2]; h q[5];"), ParseError);
  CHECK_THROWS_AS(parse_qasm("qreg q[2]; cx q[0],q[0];"), ParseError);
  CHECK_THROWS_AS(parse_qasm("h q[0];"), ParseError);  // undeclared register
  CHECK_THROWS_AS(parse_qasm("qreg q[2]; cx q[0] q[1];"), ParseError);
  CHECK_THROWS_AS(parse_qasm("qreg q[0];"), ParseError);
  try {
    parse_qasm("qreg q[2];\nh q[3];");
  } catch (const ParseError& e) {
    CHECK(e.line == 2);
    CHECK(e.col > 0);
  }
}

TEST_CASE("parse: unsupported statements and arities") {
  CHECK_THROWS_AS(parse_qasm("qreg q[2]; if (c==1) x q[0];"), ParseError);
  CHECK_THROWS_AS(parse_qasm("qreg q[4]; cswap q[0],q[1],q[2];"), ParseError);
  ParseOptions no_decomp;
  no_decomp.decompose_multi_qubit = false;
  CHECK_THROWS_AS(parse_qasm("qreg q[3]; ccx q[0],q[1],q[2];", no_decomp), ParseError);
}

TEST_CASE("parse: ccx decomposes to the 15-gate Toffoli expansion") {
  auto r = parse_qasm("qreg q[3]; ccx q[0],q[1],q[2];");
  REQUIRE(r.circuit.gates.size() == 15);
  REQUIRE(r.metadata.decompositions.size() == 1);

  // 8x8 matrix product oracle: the expansion must equal the Toffoli unitary.
  auto u = oracle::circuit_unitary(r.circuit);
  auto toffoli = oracle::identity_matrix(8);
  for (int i = 0; i < 8; ++i) {
    toffoli[i][i] = 0;
    const bool c0 = i & 1, c1 = i & 2;
    const int j = (c0 && c1) ? (i ^ 4) : i;
    toffoli[j][i] = 1;
  }
  CHECK(oracle::matrices_close(u, toffoli, 1e-12));
}

TEST_CASE("asap layering") {
  Circuit c;
  c.n_qubits = 2;
  c.gates = {{"h", {0}, {}}, {"cx", {0, 1}, {}}, {"x", {1}, {}}};
  auto l = asap_layering(c);
  CHECK(l.layer_of_gate == std::vector<int>{0, 1, 2});
  CHECK(l.depth == 3);

  Circuit par;
  par.n_qubits = 2;
  par.gates = {{"x", {0}, {}}, {"x", {1}, {}}};
  auto lp = asap_layering(par);
  CHECK(lp.layer_of_gate == std::vector<int>{0, 0});
  CHECK(lp.depth == 1);

  CHECK(asap_layering(fixtures::ghz(5)).depth == 5);
  CHECK(asap_layering(Circuit{1, {}, "empty"}).depth == 0);
}

namespace {

// Minimum depth over every layering that respects per-qubit gate order,
// by branch-and-bound enumeration.
int min_depth_exhaustive(const Circuit& c) {
  const int m = c.n_gates();
  std::vector<int> layer(m, -1);
  int best = m == 0 ? 0 : m + 1;
  auto rec = [&](auto&& self, int g) -> void {
    if (g == m) {
      int depth = 0;
      for (int l : layer) depth = std::max(depth, l + 1);
      best = std::min(best, depth);
      return;
    }
    int lower = 0;
    for (int h = 0; h < g; ++h) {
      bool shares = false;
      for (int q : c.gates[g].qubits)
        for (int p : c.gates[h].qubits) shares |= p == q;
      if (shares) lower = std::max(lower, layer[h] + 1);
    }
    for (int l = lower; l < best - 1 && l < m; ++l) {
      bool free = true;
      for (int h = 0; h < g && free; ++h) {
        if (layer[h] != l) continue;
        for (int q : c.gates[g].qubits)
          for (int p : c.gates[h].qubits) free &= p != q;
      }
      if (!free) continue;
      layer[g] = l;
      self(self, g + 1);
      layer[g] = -1;
    }
  };
  rec(rec, 0);
  return best;
}

}  // namespace

TEST_CASE("asap depth is minimal among order-respecting layerings") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    auto c = oracle::random_circuit(rng, 2 + static_cast<int>(rng() % 3),
                                    1 + static_cast<int>(rng() % 8), 0.5);
    CAPTURE(trial);
    CHECK(asap_layering(c).depth == min_depth_exhaustive(c));
  }
}

TEST_CASE("size features") {
  auto s = size_features(fixtures::ghz(3));
  CHECK(s.n_qubits == 3);
  CHECK(s.n_gates == 3);
  CHECK(s.two_qubit_gate_pct == doctest::Approx(2.0 / 3.0));
  CHECK(s.depth == 3);

  Circuit single;
  single.n_qubits = 1;
  single.gates = {{"x", {0}, {}}};
  auto s1 = size_features(single);
  CHECK(s1.n_qubits == 1);
  CHECK(s1.n_gates == 1);
  CHECK(s1.two_qubit_gate_pct == 0.0);
  CHECK(s1.depth == 1);

  auto fig = fixtures::six_qubit_eight_cx();
  CHECK(fig.n_qubits == 6);
  CHECK(fig.n_two_qubit_gates() == 8);
}

TEST_CASE("gate tokens") {
  Circuit c;
  c.n_qubits = 2;
  c.gates = {{"h", {0}, {}}, {"cx", {0, 1}, {}}};
  CHECK(gate_token_sequence(c) == std::vector<std::string>{"h:0", "cx:0,1"});

  Circuit rep;
  rep.n_qubits = 1;
  rep.gates = {{"h", {0}, {}}, {"h", {0}, {}}};
  auto toks = gate_token_sequence(rep);
  CHECK(toks[0] == toks[1]);
}

TEST_CASE("identical blocks produce identical token runs") {
  // Two copies of the same QFT-style block, back to back.
  Circuit c;
  c.n_qubits = 3;
  auto block = [&]() {
    c.gates.push_back({"h", {0}, {}});
    c.gates.push_back({"cp", {1, 0}, {0.5}});
    c.gates.push_back({"h", {1}, {}});
    c.gates.push_back({"cp", {2, 1}, {0.25}});
    c.gates.push_back({"h", {2}, {}});
  };
  block();
  block();
  auto toks = gate_token_sequence(c);
  REQUIRE(toks.size() == 10);
  for (int i = 0; i < 5; ++i) CHECK(toks[i] == toks[i + 5]);
}

TEST_CASE("round trip: parse, serialize, parse") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 25; ++trial) {
    auto c = oracle::random_circuit(rng, 3, 12, 0.4);
    // sprinkle in parametrized gates
    c.gates.push_back({"rz", {1}, {0.12345678901234567}});
    c.gates.push_back({"u3", {0}, {1.0, -2.5, 3.75}});
    auto first = parse_qasm(serialize_qasm(c)).circuit;
    auto second = parse_qasm(serialize_qasm(first)).circuit;
    CHECK(first.n_qubits == second.n_qubits);
    CHECK(first.gates == second.gates);
  }
}
