#include <algorithm>

#include "doctest.h"
#include "helpers.hpp"
#include "tf2m/generators.hpp"
#include "tf2m/graph.hpp"

using namespace tf2m;

TEST_SUITE("graph") {
  TEST_CASE("connected components") {
    Graph empty3(3);
    CHECK(connected_components(empty3).size() == 3);

    Graph c5 = gen_cycle(5);
    auto comps = connected_components(c5);
    REQUIRE(comps.size() == 1);
    CHECK(comps[0].size() == 5);

    // K3 plus a separate edge
    Graph g = make_graph(5, {{0, 1}, {1, 2}, {0, 2}, {3, 4}});
    comps = connected_components(g);
    REQUIRE(comps.size() == 2);
    CHECK(comps[0].size() == 3);
    CHECK(comps[1].size() == 2);
  }

  TEST_CASE("blocks and articulation points") {
    Graph tri = make_graph(3, {{0, 1}, {1, 2}, {0, 2}});
    auto bd = biconnected_blocks(tri);
    REQUIRE(bd.blocks.size() == 1);
    CHECK(bd.blocks[0].edge_ids.size() == 3);
    CHECK(bd.articulation_points.empty());

    Graph bowtie = make_graph(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}});
    bd = biconnected_blocks(bowtie);
    CHECK(bd.blocks.size() == 2);
    CHECK(bd.articulation_points == NodeSubset::of({2}));

    Graph path = make_graph(4, {{0, 1}, {1, 2}, {2, 3}});
    bd = biconnected_blocks(path);
    CHECK(bd.blocks.size() == 3);
    CHECK(bd.articulation_points.size() == 2);

    // block edge sets partition EG
    int total = 0;
    for (const auto& b : bd.blocks) total += b.edge_ids.size();
    CHECK(total == path.edge_count());
  }

  TEST_CASE("euler tours") {
    Graph c5 = gen_cycle(5);
    NodeSubset all = NodeSubset::of({0, 1, 2, 3, 4});
    auto tour = euler_tour(c5, all);
    CHECK(tour.size() == 5);

    Graph bowtie = make_graph(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}});
    tour = euler_tour(bowtie, all);
    REQUIRE(tour.size() == 6);
    std::vector<int> sorted = tour;
    std::sort(sorted.begin(), sorted.end());
    CHECK(sorted == std::vector<int>{0, 1, 2, 3, 4, 5});
    // consecutive edges share a node and the walk closes
    auto shared = [&](int a, int b) {
      const Edge& x = bowtie.edge_by_id(a);
      const Edge& y = bowtie.edge_by_id(b);
      return x.u == y.u || x.u == y.v || x.v == y.u || x.v == y.v;
    };
    for (size_t i = 0; i + 1 < tour.size(); ++i) CHECK(shared(tour[i], tour[i + 1]));
    CHECK(shared(tour.back(), tour.front()));

    Graph k5 = gen_complete(5);
    CHECK(euler_tour(k5, all).size() == 10);

    Graph p3 = make_graph(3, {{0, 1}, {1, 2}});
    CHECK_THROWS(euler_tour(p3, NodeSubset::of({0, 1, 2})));
  }

  TEST_CASE("contraction") {
    Graph bowtie = make_graph(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}});
    auto cr = contract_node_sets(bowtie, {NodeSubset::of({0, 1, 2})});
    CHECK(cr.graph.node_count() == 3);
    CHECK(cr.graph.edge_count() == 3);
    // surviving edges keep their ids and original endpoints are recoverable
    for (const Edge& e : cr.graph.edges()) {
      const Edge& orig = bowtie.edge_by_id(e.id);
      CHECK(cr.node_map[orig.u] == e.u);
      CHECK(cr.node_map[orig.v] == e.v);
    }

    auto identity = contract_node_sets(bowtie, {});
    CHECK(identity.graph.node_count() == 5);
    CHECK(identity.graph.edge_count() == 6);

    // cubic graph, contract a triangle with 3 outgoing edges -> degree 3
    Graph prism = gen_prism();
    auto pc = contract_node_sets(prism, {NodeSubset::of({0, 1, 2})});
    CHECK(pc.graph.regular_degree() == 3);

    CHECK_THROWS(contract_node_sets(
        bowtie, {NodeSubset::of({0, 1}), NodeSubset::of({1, 2})}));
  }

  TEST_CASE("virtual pairing") {
    Graph two(2);
    auto vp = add_virtual_pairing(two, 7);
    CHECK(vp.virtual_edge_ids.size() == 1);
    CHECK(vp.graph.edge_count() == 1);

    auto k4 = gen_complete(4);
    vp = add_virtual_pairing(k4, 3);
    CHECK(vp.virtual_edge_ids.size() == 2);
    CHECK(vp.graph.regular_degree() == 4);

    auto pet = gen_petersen();
    vp = add_virtual_pairing(pet, 11);
    CHECK(vp.graph.regular_degree() == 4);

    Graph odd(3);
    CHECK_THROWS(add_virtual_pairing(odd, 1));

    // deterministic in the seed
    auto a = add_virtual_pairing(pet, 5);
    auto b = add_virtual_pairing(pet, 5);
    for (int id : a.virtual_edge_ids) {
      const Edge& ea = a.graph.edge_by_id(id);
      const Edge& eb = b.graph.edge_by_id(id);
      CHECK(ea.u == eb.u);
      CHECK(ea.v == eb.v);
    }
  }

  TEST_CASE("consistency of derived graphs") {
    Graph g = gen_random(12, 0.4, 99);
    g.check_consistent();
    auto comps = connected_components(g);
    for (const auto& c : comps) g.induced(c.nodes).check_consistent();
    std::vector<int> half;
    for (const Edge& e : g.edges())
      if (e.id % 2 == 0) half.push_back(e.id);
    g.edge_subgraph(half).check_consistent();
    g.without_edges(half).check_consistent();
  }
}
