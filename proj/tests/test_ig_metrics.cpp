#include <algorithm>
#include <cmath>
#include <random>

#include "doctest.h"
#include "qcprof/graph.hpp"
#include "qcprof/ig_metrics.hpp"
#include "support/oracles.hpp"

using namespace qcprof;

namespace {

InteractionGraph path_graph(int n) {
  InteractionGraph ig(n);
  for (int i = 0; i + 1 < n; ++i) ig.add_edge(i, i + 1);
  return ig;
}

InteractionGraph complete_graph(int n) {
  InteractionGraph ig(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) ig.add_edge(i, j);
  return ig;
}

InteractionGraph star_graph(int leaves) {
  InteractionGraph ig(leaves + 1);
  for (int i = 1; i <= leaves; ++i) ig.add_edge(0, i);
  return ig;
}

}  // namespace

TEST_CASE("distance metrics: P3 and K3") {
  auto p3 = distance_metrics(path_graph(3));
  CHECK(*p3.avg_shortest_path == doctest::Approx(4.0 / 3.0));
  CHECK(*p3.diameter == 2);

  auto k3 = distance_metrics(complete_graph(3));
  CHECK(*k3.avg_shortest_path == doctest::Approx(1.0));
  CHECK(*k3.diameter == 1);
}

TEST_CASE("distance metrics: undefined when every node is isolated") {
  InteractionGraph ig(4);
  auto d = distance_metrics(ig);
  CHECK_FALSE(d.avg_shortest_path.has_value());
  CHECK_FALSE(d.diameter.has_value());
}

TEST_CASE("distance metrics match the all-pairs BFS oracle") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    auto ig = oracle::random_graph(rng, 10, 0.25);
    auto want = oracle::distances_by_bfs(ig);
    auto got = distance_metrics(ig);
    CAPTURE(trial);
    CHECK(got.avg_shortest_path.has_value() == want.defined);
    if (want.defined) {
      CHECK(*got.avg_shortest_path == doctest::Approx(want.avg_shortest_path).epsilon(1e-12));
      CHECK(*got.diameter == want.diameter);
    }
  }
}

TEST_CASE("degree metrics") {
  auto k3 = degree_metrics(complete_graph(3));
  CHECK(k3.avg_degree == doctest::Approx(2.0));
  CHECK(*k3.adjacency_std == doctest::Approx(0.0));

  InteractionGraph two(2);
  two.add_edge(0, 1, 2);
  auto d2 = degree_metrics(two);
  CHECK(d2.avg_degree == doctest::Approx(2.0));
  CHECK(*d2.adjacency_std == doctest::Approx(0.0));

  // cx(0,1) x3 and cx(1,2) x1: upper triangle {3,1,0}
  InteractionGraph g(3);
  g.add_edge(0, 1, 3);
  g.add_edge(1, 2, 1);
  auto dm = degree_metrics(g);
  CHECK(*dm.adjacency_std == doctest::Approx(std::sqrt(14.0 / 9.0)).epsilon(1e-12));
  CHECK(dm.avg_degree == doctest::Approx(8.0 / 3.0));
}

TEST_CASE("central point of dominance anchors") {
  CHECK(centrality_metrics(star_graph(3)).central_point_of_dominance == doctest::Approx(1.0));
  CHECK(centrality_metrics(complete_graph(4)).central_point_of_dominance ==
        doctest::Approx(0.0));
  // below 3 nodes the convention is 0
  CHECK(centrality_metrics(path_graph(2)).central_point_of_dominance == doctest::Approx(0.0));
}

TEST_CASE("pagerank: symmetric graph gives uniform scores") {
  auto pr = pagerank(complete_graph(3));
  for (double v : pr) CHECK(v == doctest::Approx(1.0 / 3.0).epsilon(1e-7));
  CHECK(*centrality_metrics(complete_graph(3)).pagerank_std == doctest::Approx(0.0).epsilon(1e-7));

  // scores always sum to 1, including with isolated (dangling) nodes
  InteractionGraph ig(5);
  ig.add_edge(0, 1, 3);
  ig.add_edge(1, 2, 1);
  auto pr2 = pagerank(ig);
  double sum = 0.0;
  for (double v : pr2) sum += v;
  CHECK(sum == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("cohesion: K3 and the star") {
  auto k3 = cohesion_metrics(complete_graph(3));
  CHECK(k3.n_maximal_cliques == 1);
  CHECK(k3.max_clique_size == 3);
  CHECK(k3.clustering_coefficient == doctest::Approx(1.0));
  CHECK(k3.coreness_max == 2);
  CHECK(k3.coreness_mean == doctest::Approx(2.0));

  auto s3 = cohesion_metrics(star_graph(3));
  CHECK(s3.n_maximal_cliques == 3);
  CHECK(s3.max_clique_size == 2);
  CHECK(s3.clustering_coefficient == doctest::Approx(0.0));
  CHECK(s3.coreness_max == 1);
  CHECK(s3.coreness_mean == doctest::Approx(1.0));
}

TEST_CASE("cliques match the subset-enumeration oracle") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 60; ++trial) {
    auto ig = oracle::random_graph(rng, 9, 0.4);
    auto want = oracle::cliques_by_subsets(ig);
    auto got = cohesion_metrics(ig);
    CAPTURE(trial);
    CHECK_FALSE(got.cliques_capped);
    CHECK(got.n_maximal_cliques == want.n_maximal);
    CHECK(got.max_clique_size == want.max_size);
  }
}

TEST_CASE("clique enumeration budget reports a capped lower bound") {
  auto got = cohesion_metrics(complete_graph(12), 5);
  CHECK(got.cliques_capped);
}

TEST_CASE("connectivity: K3 and P3") {
  auto k3 = connectivity_metrics(complete_graph(3));
  CHECK(k3.vertex_connectivity == 2);
  CHECK(k3.edge_connectivity == 2);

  auto p3 = connectivity_metrics(path_graph(3));
  CHECK(p3.vertex_connectivity == 1);
  CHECK(p3.edge_connectivity == 1);

  InteractionGraph disc(4);
  disc.add_edge(0, 1);
  disc.add_edge(2, 3);
  auto d = connectivity_metrics(disc);
  CHECK(d.vertex_connectivity == 0);
  CHECK(d.edge_connectivity == 0);
}

TEST_CASE("connectivity matches the removal-enumeration oracle") {
  std::mt19937_64 rng(29);
  int done = 0;
  while (done < 40) {
    auto ig = oracle::random_graph(rng, 8, 0.4);
    if (!ig.is_connected()) continue;
    ++done;
    auto got = connectivity_metrics(ig);
    CAPTURE(done);
    CHECK(got.vertex_connectivity == oracle::vertex_connectivity_by_removal(ig));
    CHECK(got.edge_connectivity == oracle::edge_connectivity_by_removal(ig));
  }
}

TEST_CASE("whitney inequality and coreness-clique bound") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    auto ig = oracle::random_graph(rng, 8, 0.45);
    auto con = connectivity_metrics(ig);
    auto coh = cohesion_metrics(ig);
    int min_deg = ig.n_nodes();
    for (int v = 0; v < ig.n_nodes(); ++v) min_deg = std::min(min_deg, ig.skeleton_degree(v));
    if (ig.is_connected()) {
      CHECK(con.vertex_connectivity <= con.edge_connectivity);
      CHECK(con.edge_connectivity <= min_deg);
    }
    CHECK(coh.coreness_max >= coh.max_clique_size - 1);
  }
}

TEST_CASE("complete graphs K3..K8: CPD 0, clustering 1, diameter 1") {
  for (int n = 3; n <= 8; ++n) {
    auto ig = complete_graph(n);
    CHECK(centrality_metrics(ig).central_point_of_dominance == doctest::Approx(0.0));
    CHECK(cohesion_metrics(ig).clustering_coefficient == doctest::Approx(1.0));
    CHECK(*distance_metrics(ig).diameter == 1);
  }
}

TEST_CASE("all IG features are invariant under node relabeling") {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 15; ++trial) {
    auto ig = oracle::random_graph(rng, 8, 0.35);
    std::vector<int> perm(8);
    for (int i = 0; i < 8; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    InteractionGraph relabeled(8);
    for (const auto& [i, j, w] : ig.edges()) relabeled.add_edge(perm[i], perm[j], w);

    auto a = ig_features(ig);
    auto b = ig_features(relabeled);
    CAPTURE(trial);
    CHECK(a.avg_shortest_path.has_value() == b.avg_shortest_path.has_value());
    if (a.avg_shortest_path)
      CHECK(*a.avg_shortest_path == doctest::Approx(*b.avg_shortest_path).epsilon(1e-12));
    if (a.diameter) CHECK(*a.diameter == *b.diameter);
    CHECK(*a.adjacency_std == doctest::Approx(*b.adjacency_std).epsilon(1e-12));
    CHECK(a.central_point_of_dominance ==
          doctest::Approx(b.central_point_of_dominance).epsilon(1e-9));
    CHECK(a.avg_degree == doctest::Approx(b.avg_degree).epsilon(1e-12));
    CHECK(a.n_maximal_cliques == b.n_maximal_cliques);
    CHECK(a.max_clique_size == b.max_clique_size);
    CHECK(a.clustering_coefficient == doctest::Approx(b.clustering_coefficient).epsilon(1e-12));
    CHECK(a.vertex_connectivity == b.vertex_connectivity);
    CHECK(a.edge_connectivity == b.edge_connectivity);
    CHECK(a.coreness_max == b.coreness_max);
    CHECK(a.coreness_mean == doctest::Approx(b.coreness_mean).epsilon(1e-12));
    CHECK(*a.pagerank_std == doctest::Approx(*b.pagerank_std).epsilon(1e-7));
    CHECK(a.disconnected == b.disconnected);
  }
}
