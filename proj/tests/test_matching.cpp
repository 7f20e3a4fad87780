#include <algorithm>

#include "doctest.h"
#include "helpers.hpp"
#include "tf2m/generators.hpp"
#include "tf2m/matching.hpp"
#include "tf2m/oracle.hpp"

using namespace tf2m;

TEST_SUITE("matching") {
  TEST_CASE("max matching fixtures") {
    CHECK(max_matching(make_graph(3, {{0, 1}, {1, 2}, {0, 2}})).size() == 1);
    CHECK(max_matching(gen_petersen()).size() == 5);
    CHECK(max_matching(make_graph(3, {{0, 1}, {1, 2}})).size() == 1);
  }

  TEST_CASE("max matching vs oracle on random graphs") {
    for (int it = 0; it < 60; ++it) {
      Graph g = gen_random(4 + it % 7, 0.45, 1000 + it);
      if (g.edge_count() > 20) continue;
      CHECK(max_matching(g).size() == brute_max_matching(g));
    }
  }

  TEST_CASE("edmonds-gallai fixtures") {
    Graph single = make_graph(2, {{0, 1}});
    auto eg = edmonds_gallai(single, max_matching(single));
    CHECK(eg.d.empty());
    CHECK(eg.a.empty());
    CHECK(eg.c.size() == 2);

    Graph path = make_graph(3, {{0, 1}, {1, 2}});
    eg = edmonds_gallai(path, max_matching(path));
    CHECK(eg.d == NodeSubset::of({0, 2}));
    CHECK(eg.a == NodeSubset::of({1}));
    CHECK(eg.c.empty());

    Graph k3 = make_graph(3, {{0, 1}, {1, 2}, {0, 2}});
    eg = edmonds_gallai(k3, max_matching(k3));
    CHECK(eg.d.size() == 3);
    CHECK(eg.components_of_d.size() == 1);
  }

  TEST_CASE("edmonds-gallai vs oracle, with factor-critical components") {
    for (int it = 0; it < 40; ++it) {
      Graph g = gen_random(5 + it % 6, 0.35, 2000 + it);
      if (g.edge_count() > 20) continue;
      Matching m = max_matching(g);
      auto eg = edmonds_gallai(g, m);
      CHECK(eg.d == brute_eg_D(g));
      // size identity
      CHECK(2 * m.size() ==
            g.node_count() + eg.a.size() -
                static_cast<int>(eg.components_of_d.size()));
      for (const auto& comp : eg.components_of_d) {
        CHECK(valid_odd_ear_decomposition(comp.graph, comp.ears));
        // factor-critical: deleting any node leaves a perfect matching
        int nc = comp.graph.node_count();
        for (int v = 0; v < nc; ++v) {
          Matching mv = matching_missing_node(comp.graph, comp.ears, v);
          auto mates = mv.mates(comp.graph);
          for (int w = 0; w < nc; ++w) CHECK((mates[w] == -1) == (w == v));
        }
      }
    }
  }

  TEST_CASE("matching_missing_node fixtures") {
    Graph one(1);
    EarDecomposition ed;
    ed.root = 0;
    CHECK(matching_missing_node(one, ed, 0).size() == 0);

    Graph k3 = make_graph(3, {{0, 1}, {1, 2}, {0, 2}});
    auto ears = odd_ear_decomposition(k3);
    Matching m = matching_missing_node(k3, ears, 0);
    REQUIRE(m.size() == 1);
    const Edge& e = k3.edge_by_id(m.edge_ids[0]);
    CHECK(std::min(e.u, e.v) == 1);
    CHECK(std::max(e.u, e.v) == 2);

    Graph c5 = gen_cycle(5);
    ears = odd_ear_decomposition(c5);
    CHECK(valid_odd_ear_decomposition(c5, ears));
    for (int v = 0; v < 5; ++v) {
      m = matching_missing_node(c5, ears, v);
      CHECK(m.size() == 2);
      CHECK(m.mates(c5)[v] == -1);
    }
  }

  TEST_CASE("bipartite matching") {
    BipartiteGraph h;
    h.n_upper = h.n_lower = 2;
    h.edges = {{0, 0, 0}, {0, 1, 1}, {1, 0, 2}, {1, 1, 3}};
    CHECK(max_matching_bipartite(h, {}).size() == 2);

    BipartiteGraph star;
    star.n_upper = 1;
    star.n_lower = 3;
    star.edges = {{0, 0, 0}, {0, 1, 1}, {0, 2, 2}};
    CHECK(max_matching_bipartite(star, {}).size() == 1);

    BipartiteGraph c6;  // 6-cycle: uppers 0,1,2 lowers 0,1,2
    c6.n_upper = c6.n_lower = 3;
    c6.edges = {{0, 0, 0}, {1, 0, 1}, {1, 1, 2}, {2, 1, 3}, {2, 2, 4}, {0, 2, 5}};
    CHECK(max_matching_bipartite(c6, {}).size() == 3);

    // matched nodes of `initial` stay matched
    BipartiteMatching init;
    init.bedges = {1};  // upper 0 -- lower 1
    auto m = max_matching_bipartite(c6, init);
    CHECK(m.size() == 3);
    std::vector<int> mu, ml;
    m.mates(c6, &mu, &ml);
    CHECK(mu[0] != -1);
    CHECK(ml[1] != -1);
  }

  TEST_CASE("koenig cover") {
    BipartiteGraph single;
    single.n_upper = single.n_lower = 1;
    single.edges = {{0, 0, 0}};
    auto m = max_matching_bipartite(single, {});
    auto cover = koenig_vertex_cover(single, m);
    CHECK(cover.size() == 1);

    BipartiteGraph star;
    star.n_upper = 1;
    star.n_lower = 3;
    star.edges = {{0, 0, 0}, {0, 1, 1}, {0, 2, 2}};
    m = max_matching_bipartite(star, {});
    cover = koenig_vertex_cover(star, m);
    CHECK(cover.size() == 1);
    CHECK(cover.upper == NodeSubset::of({0}));

    BipartiteGraph k22;
    k22.n_upper = k22.n_lower = 2;
    k22.edges = {{0, 0, 0}, {0, 1, 1}, {1, 0, 2}, {1, 1, 3}};
    m = max_matching_bipartite(k22, {});
    cover = koenig_vertex_cover(k22, m);
    CHECK(cover.size() == 2);
  }
}
