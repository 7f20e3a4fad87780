#include <algorithm>
#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "tf2m/generators.hpp"
#include "tf2m/oracle.hpp"
#include "tf2m/tf2m.hpp"

using namespace tf2m;

namespace {

TwoMatching all_ones(const Graph& g) {
  TwoMatching x;
  for (const Edge& e : g.edges()) x.set(e.id, 1);
  return x;
}

}  // namespace

TEST_SUITE("tf2m") {
  TEST_CASE("validate fixtures") {
    Graph k3 = make_graph(3, {{0, 1}, {1, 2}, {0, 2}});
    TwoMatching x;
    x.set(0, 2);
    CHECK(validate_tf2m(k3, x).ok());

    CHECK_FALSE(validate_tf2m(k3, all_ones(k3)).triangle_free);

    TwoMatching bad;
    bad.set(0, 2);
    bad.set(1, 2);  // edges 01 and 12 share node 1
    CHECK_FALSE(validate_tf2m(k3, bad).degree_ok);
  }

  TEST_CASE("make_basic") {
    Graph c4 = gen_cycle(4);
    TwoMatching x = make_basic(c4, all_ones(c4));
    CHECK(x.size() == 4);
    CHECK(validate_tf2m(c4, x).basic);

    Graph two_par(2);
    two_par.add_edge(0, 1);
    two_par.add_edge(0, 1);
    x = make_basic(two_par, all_ones(two_par));
    CHECK(x.size() == 2);
    CHECK(x.values().size() == 1);  // a single doubled edge

    Graph c5 = gen_cycle(5);
    CHECK(make_basic(c5, all_ones(c5)) == all_ones(c5));

    Graph p4 = make_graph(4, {{0, 1}, {1, 2}, {2, 3}});
    x = make_basic(p4, all_ones(p4));
    CHECK(x.size() == 4);
    CHECK(validate_tf2m(p4, x).ok());
  }

  TEST_CASE("triangle clusters") {
    Graph tri = make_graph(3, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(is_triangle_cluster(tri, NodeSubset::of({0, 1, 2})));

    Graph bowtie = make_graph(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}});
    CHECK(is_triangle_cluster(bowtie, NodeSubset::of({0, 1, 2, 3, 4})));

    Graph c5 = gen_cycle(5);
    CHECK_FALSE(is_triangle_cluster(c5, NodeSubset::of({0, 1, 2, 3, 4})));

    Graph one(1);
    CHECK(is_triangle_cluster(one, NodeSubset::of({0})));

    // agrees with the definition-based search
    for (int k = 0; k <= 5; ++k) {
      Graph cl = gen_triangle_cluster(k);
      NodeSubset all;
      for (int v = 0; v < cl.node_count(); ++v) all.nodes.push_back(v);
      CHECK(is_triangle_cluster(cl, all));
      CHECK(brute_is_cluster(cl));
    }
  }

  TEST_CASE("classify_factor_critical") {
    Graph k3 = make_graph(3, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(classify_factor_critical(k3).is_cluster);

    Graph c5 = gen_cycle(5);
    auto fc = classify_factor_critical(c5);
    REQUIRE_FALSE(fc.is_cluster);
    CHECK(fc.perfect == all_ones(c5));

    Graph c7chord = gen_cycle(7);
    c7chord.add_edge(0, 3);
    fc = classify_factor_critical(c7chord);
    REQUIRE_FALSE(fc.is_cluster);
    CHECK(fc.perfect.size() == 7);
    CHECK(validate_tf2m(c7chord, fc.perfect).ok());
  }

  TEST_CASE("classify on random factor-critical non-clusters") {
    // odd cycles with random chords are factor-critical
    for (int it = 0; it < 30; ++it) {
      int n = 5 + 2 * (it % 4);
      Graph g = gen_cycle(n);
      Graph extra = gen_random(n, 0.25, 500 + it);
      for (const Edge& e : extra.edges())
        if (g.lowest_edge_id_between(e.u, e.v) == -1) g.add_edge(e.u, e.v);
      NodeSubset all;
      for (int v = 0; v < n; ++v) all.nodes.push_back(v);
      if (is_triangle_cluster(g, all)) continue;
      CHECK(brute_max_tf2m(g).size == n);  // non-cluster: a perfect one exists
      auto fc = classify_factor_critical(g);
      REQUIRE_FALSE(fc.is_cluster);
      CHECK(fc.perfect.size() == n);
      CHECK(validate_tf2m(g, fc.perfect).ok());
    }
  }

  TEST_CASE("evaluate_certificate") {
    Graph k3 = make_graph(3, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(evaluate_certificate(k3, {}) == 2);

    Graph c5 = gen_cycle(5);
    CHECK(evaluate_certificate(c5, {}) == 5);

    Graph bowtie = make_graph(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}});
    // removing the center leaves two single-edge components, not clusters
    CHECK(evaluate_certificate(bowtie, NodeSubset::of({2})) == 6);
    CHECK(evaluate_certificate(bowtie, {}) == 4);
    auto brute = brute_min_certificate(bowtie);
    CHECK(brute.value == 4);
    CHECK(brute.u.empty());
  }

  TEST_CASE("solve fixtures") {
    auto solved = [](const Graph& g) {
      auto res = solve_max_tf2m(g);
      CHECK(validate_tf2m(g, res.x).ok());
      CHECK(res.cert.bound == res.x.size());
      CHECK(certificate_for(g, res.cert.u).bound == res.cert.bound);
      return res;
    };

    CHECK(solved(make_graph(3, {{0, 1}, {1, 2}, {0, 2}})).x.size() == 2);
    CHECK(solved(gen_cycle(5)).x.size() == 5);
    CHECK(solved(make_graph(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}}))
              .x.size() == 4);
    CHECK(solved(gen_petersen()).x.size() == 10);

    // two triangles, each hooked to a middle node
    Graph g = make_graph(7, {{0, 1}, {1, 2}, {0, 2},    // triangle
                             {4, 5}, {5, 6}, {4, 6},    // triangle
                             {3, 0}, {3, 4}});          // middle node 3
    auto res = solved(g);
    CHECK(res.x.size() == 6);
    CHECK(res.cert.u == NodeSubset::of({3}));
    CHECK(res.cert.cluster_count == 2);
  }

  TEST_CASE("solve vs oracle on random graphs") {
    for (int it = 0; it < 150; ++it) {
      int n = 3 + it % 8;
      Graph g = gen_random(n, 0.2 + 0.06 * (it % 10), 7000 + it);
      auto res = solve_max_tf2m(g);
      CHECK(validate_tf2m(g, res.x).ok());
      CHECK(res.cert.bound == res.x.size());
      CHECK(res.x.size() == brute_max_tf2m(g).size);
    }
  }

  TEST_CASE("weak duality on random pairs") {
    std::mt19937_64 rng(42);
    for (int it = 0; it < 100; ++it) {
      int n = 3 + it % 8;
      Graph g = gen_random(n, 0.35, 9000 + it);
      std::vector<int> u;
      for (int v = 0; v < n; ++v)
        if (rng() % 3 == 0) u.push_back(v);
      CHECK(brute_max_tf2m(g).size <=
            evaluate_certificate(g, NodeSubset::of(std::move(u))));
    }
  }
}
