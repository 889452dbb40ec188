#include <random>

#include "doctest.h"
#include "qcprof/gdg_metrics.hpp"
#include "qcprof/graph.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace qcprof;

TEST_CASE("chain of 3 gates") {
  Circuit c;
  c.n_qubits = 1;
  c.gates = {{"x", {0}, {}}, {"x", {0}, {}}, {"x", {0}, {}}};
  auto f = gdg_path_features(build_gdg(c));
  CHECK(f.critical_path_length == 3);
  CHECK(f.n_paths == 1);
  CHECK(f.n_critical_paths == 1);
  CHECK(f.path_length_mean == doctest::Approx(3.0));
  CHECK(f.path_length_std == doctest::Approx(0.0));
  CHECK(*f.pct_gates_in_critical_path == doctest::Approx(1.0));
}

TEST_CASE("h-cx-x: two paths of lengths 3 and 2") {
  Circuit c;
  c.n_qubits = 2;
  c.gates = {{"h", {0}, {}}, {"cx", {0, 1}, {}}, {"x", {1}, {}}};
  auto f = gdg_path_features(build_gdg(c));
  CHECK(f.critical_path_length == 3);
  CHECK(f.n_paths == 2);
  CHECK(f.n_critical_paths == 1);
  CHECK(f.path_length_mean == doctest::Approx(2.5).epsilon(1e-12));
  CHECK(f.path_length_std == doctest::Approx(0.5).epsilon(1e-12));  // variance 0.25
  CHECK(f.max_2q_in_critical == 1);
  CHECK(f.n_critical_with_max_2q == 1);
}

TEST_CASE("empty circuit: the single sentinel path") {
  Circuit c;
  c.n_qubits = 1;
  auto f = gdg_path_features(build_gdg(c));
  CHECK(f.critical_path_length == 0);
  CHECK(f.n_paths == 1);
  CHECK(f.n_critical_paths == 1);
  CHECK(f.path_length_mean == doctest::Approx(0.0));
  CHECK_FALSE(f.pct_gates_in_critical_path.has_value());
}

TEST_CASE("all eight quantities match the exhaustive path enumerator") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 80; ++trial) {
    auto c = oracle::random_circuit(rng, 2 + static_cast<int>(rng() % 4),
                                    1 + static_cast<int>(rng() % 12), 0.5);
    auto g = build_gdg(c);
    auto got = gdg_path_features(g);
    auto want = oracle::enumerate_paths(g);
    CAPTURE(trial);
    CHECK(got.critical_path_length == want.critical_len);
    CHECK(got.n_paths == BigInt(want.n_paths));
    CHECK(got.n_critical_paths == BigInt(want.n_critical));
    CHECK(got.max_2q_in_critical == want.max_2q);
    CHECK(got.n_critical_with_max_2q == BigInt(want.n_critical_max_2q));
    CHECK(got.path_length_mean == doctest::Approx(want.mean).epsilon(1e-9));
    CHECK(got.path_length_std * got.path_length_std ==
          doctest::Approx(want.variance).epsilon(1e-9));
    const double want_pct =
        static_cast<double>(want.critical_gates.size()) / c.n_gates();
    CHECK(*got.pct_gates_in_critical_path == doctest::Approx(want_pct).epsilon(1e-12));
  }
}

TEST_CASE("critical-gate fraction below 1 on a branch off the spine") {
  // h(1) is a short branch; the q0 chain plus the cx is the spine.
  Circuit c;
  c.n_qubits = 2;
  c.gates = {{"h", {1}, {}},
             {"x", {0}, {}},
             {"x", {0}, {}},
             {"x", {0}, {}},
             {"cx", {0, 1}, {}}};
  auto g = build_gdg(c);
  auto got = pct_gates_in_critical_path(g);
  auto want = oracle::enumerate_paths(g);
  CHECK(got == doctest::Approx(static_cast<double>(want.critical_gates.size()) / 5.0));
  CHECK(got < 1.0);
  CHECK(got == doctest::Approx(0.8));
}

TEST_CASE("two equal-length chains are both critical") {
  Circuit c;
  c.n_qubits = 2;
  c.gates = {{"x", {0}, {}}, {"x", {1}, {}}, {"x", {0}, {}},
             {"x", {1}, {}}, {"x", {0}, {}}, {"x", {1}, {}}};
  auto f = gdg_path_features(build_gdg(c));
  CHECK(f.critical_path_length == 3);
  CHECK(f.n_critical_paths == 2);
  CHECK(*f.pct_gates_in_critical_path == doctest::Approx(1.0));
}

TEST_CASE("critical path length equals the asap depth") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 40; ++trial) {
    auto c = oracle::random_circuit(rng, 2 + static_cast<int>(rng() % 5),
                                    static_cast<int>(rng() % 30), 0.5);
    CHECK(gdg_path_features(build_gdg(c)).critical_path_length == asap_layering(c).depth);
  }
}

TEST_CASE("appending a gate never decreases the critical path length") {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 30; ++trial) {
    auto c = oracle::random_circuit(rng, 3, 1 + static_cast<int>(rng() % 15), 0.5);
    auto before = gdg_path_features(build_gdg(c)).critical_path_length;
    c.gates.push_back({"x", {static_cast<int>(rng() % 3)}, {}});
    auto after = gdg_path_features(build_gdg(c)).critical_path_length;
    CHECK(after >= before);
  }
}

TEST_CASE("path counts stay exact far beyond double precision") {
  // k blocks of [cx(0,1), x(0), x(1)]: each block doubles the path count.
  const int k = 100;
  Circuit c;
  c.n_qubits = 2;
  for (int i = 0; i < k; ++i) {
    c.gates.push_back({"cx", {0, 1}, {}});
    c.gates.push_back({"x", {0}, {}});
    c.gates.push_back({"x", {1}, {}});
  }
  auto f = gdg_path_features(build_gdg(c));
  CHECK(f.n_paths == BigInt(1) << k);
  CHECK(log10_big(f.n_paths) == doctest::Approx(k * 0.30102999566398120).epsilon(1e-12));

  // sanity-check the construction against the enumerator at small k
  Circuit small;
  small.n_qubits = 2;
  for (int i = 0; i < 3; ++i) {
    small.gates.push_back({"cx", {0, 1}, {}});
    small.gates.push_back({"x", {0}, {}});
    small.gates.push_back({"x", {1}, {}});
  }
  auto g = build_gdg(small);
  CHECK(gdg_path_features(g).n_paths == BigInt(oracle::enumerate_paths(g).n_paths));
  CHECK(oracle::enumerate_paths(g).n_paths == 8);
}
