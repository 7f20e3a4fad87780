#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "tf2m/generators.hpp"
#include "tf2m/oracle.hpp"
#include "tf2m/regular.hpp"

using namespace tf2m;

namespace {

void check_perfect_tf2m(const Graph& g, const TwoMatching& x) {
  auto v = validate_tf2m(g, x);
  CHECK(v.ok());
  CHECK(x.size() == g.node_count());
}

}  // namespace

TEST_SUITE("regular") {
  TEST_CASE("perfect 2-matching via node splitting") {
    Graph c5 = gen_cycle(5);
    TwoMatching x = perfect_2matching_regular(c5);
    CHECK(x.size() == 5);
    CHECK(validate_tf2m(c5, x).basic);

    Graph k4 = gen_complete(4);
    x = perfect_2matching_regular(k4);
    CHECK(x.size() == 4);
    CHECK(validate_tf2m(k4, x).basic);

    // 3-regular multigraph: no 2-circuit of two distinct parallel edges
    Graph mg(4);
    mg.add_edge(0, 1);
    mg.add_edge(0, 1);
    mg.add_edge(2, 3);
    mg.add_edge(2, 3);
    mg.add_edge(0, 2);
    mg.add_edge(1, 3);
    x = perfect_2matching_regular(mg);
    CHECK(x.size() == 4);
    auto dec = decompose_support(mg, x);
    CHECK(dec.paths.empty());
    for (const auto& c : dec.circuits) CHECK(c.nodes.size() != 2);
  }

  TEST_CASE("solve_cubic fixtures") {
    for (const Graph& g : {gen_complete(4), gen_petersen(), gen_prism()}) {
      TwoMatching x = solve_cubic(g);
      check_perfect_tf2m(g, x);
      for (const auto& c : decompose_support(g, x).circuits) {
        CHECK(c.nodes.size() >= 5);
        CHECK(c.nodes.size() % 2 == 1);
      }
    }
  }

  TEST_CASE("solve_cubic on random cubic graphs") {
    for (int it = 0; it < 40; ++it) {
      Graph g = gen_random_regular(8 + 2 * (it % 8), 3, 300 + it);
      check_perfect_tf2m(g, solve_cubic(g));
    }
  }

  TEST_CASE("two_regular_spanning") {
    Graph c5 = gen_cycle(5);
    CHECK(two_regular_spanning(c5).size() == 5);

    Graph k5 = gen_complete(5);
    auto f = two_regular_spanning(k5);
    CHECK(f.size() == 5);
    Graph sub = k5.edge_subgraph(f);
    CHECK(sub.regular_degree() == 2);

    // two disjoint 4-regular components
    Graph two(10);
    for (int off : {0, 5})
      for (int u = 0; u < 5; ++u)
        for (int v = u + 1; v < 5; ++v) two.add_edge(off + u, off + v);
    f = two_regular_spanning(two);
    CHECK(two.edge_subgraph(f).regular_degree() == 2);
  }

  TEST_CASE("solve_even fixtures") {
    Graph k5 = gen_complete(5);
    check_perfect_tf2m(k5, solve_even(k5));

    Graph k44(8);  // complete bipartite, 4-regular
    for (int u = 0; u < 4; ++u)
      for (int v = 4; v < 8; ++v) k44.add_edge(u, v);
    check_perfect_tf2m(k44, solve_even(k44));

    Graph circ = circulant(12, {1, 2, 3});
    REQUIRE(circ.regular_degree() == 6);
    check_perfect_tf2m(circ, solve_even(circ));
  }

  TEST_CASE("near_34_subgraph structure") {
    for (auto [n, d, seed] : {std::tuple{16, 5, 1}, {24, 7, 2}, {40, 9, 3}}) {
      Graph g = gen_random_regular(n, d, seed);
      auto [h, prof] = near_34_subgraph(g, 17);
      CHECK(h.node_count() == n);
      for (int deg : prof.degrees) CHECK((deg == 3 || deg == 4));
      CHECK(prof.degree3 + prof.degree4 == n);
      for (const Edge& e : h.edges()) CHECK(g.has_edge_id(e.id));
    }
  }

  TEST_CASE("solve_odd fixtures") {
    Graph g = gen_random_regular(20, 5, 4);
    check_perfect_tf2m(g, solve_odd(g));

    Graph circ = circulant(24, {1, 2, 3, 12});
    REQUIRE(circ.regular_degree() == 7);
    check_perfect_tf2m(circ, solve_odd(circ));

    // triangle-rich 5-regular graphs
    Graph tri_rich = circulant(12, {1, 2, 6});
    REQUIRE(tri_rich.regular_degree() == 5);
    check_perfect_tf2m(tri_rich, solve_odd(tri_rich));
    Graph k6 = gen_complete(6);
    check_perfect_tf2m(k6, solve_odd(k6));
  }

  TEST_CASE("dispatcher") {
    check_perfect_tf2m(gen_petersen(), solve_regular(gen_petersen()));
    Graph circ6 = circulant(12, {1, 2, 3});
    check_perfect_tf2m(circ6, solve_regular(circ6));
    Graph r5 = gen_random_regular(14, 5, 9);
    check_perfect_tf2m(r5, solve_regular(r5));
    CHECK_THROWS(solve_regular(make_graph(3, {{0, 1}, {1, 2}})));
  }

  TEST_CASE("almost-regular bound") {
    Graph g = gen_random_regular(30, 7, 12);
    auto [h, prof] = near_34_subgraph(g, 5);
    auto res = solve_max_tf2m(h);
    auto verdict = check_almost_regular_bound(h, res.x);
    CHECK(verdict.d == 4);
    CHECK(verdict.q == prof.degree3);
    CHECK(verdict.bound == h.node_count() - prof.degree3 / 4);
    CHECK(verdict.ok);

    // q = 0: the bound is perfectness itself
    Graph k5 = gen_complete(5);
    auto v2 = check_almost_regular_bound(k5, solve_even(k5));
    CHECK(v2.bound == 5);
    CHECK(v2.ok);
  }

  TEST_CASE("greedy triangle packing is maximal and disjoint") {
    for (int it = 0; it < 20; ++it) {
      Graph g = gen_random(10, 0.4, 600 + it);
      auto tris = greedy_triangle_packing(g);
      std::set<int> used;
      for (auto& t : tris)
        for (int v : t) CHECK(used.insert(v).second);
      // maximality: every triangle of g touches a packed node
      int n = g.node_count();
      for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
          for (int c = b + 1; c < n; ++c)
            if (g.lowest_edge_id_between(a, b) != -1 &&
                g.lowest_edge_id_between(b, c) != -1 &&
                g.lowest_edge_id_between(a, c) != -1)
              CHECK((used.count(a) || used.count(b) || used.count(c)));
    }
  }
}
