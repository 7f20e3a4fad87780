#include <string>

#include "doctest.h"
#include "helpers.hpp"
#include "tf2m/generators.hpp"
#include "tf2m/io.hpp"
#include "tf2m/oracle.hpp"

using namespace tf2m;

TEST_SUITE("io") {
  TEST_CASE("parse_graph") {
    Graph k3 = parse_graph("p edge 3 3\ne 1 2\ne 2 3\ne 1 3\n");
    CHECK(k3.node_count() == 3);
    CHECK(k3.edge_count() == 3);

    Graph with_comments =
        parse_graph("c a comment\n\np edge 2 1\nc another\ne 1 2\n");
    CHECK(with_comments.edge_count() == 1);

    CHECK_THROWS(parse_graph("p edge 2 1\ne 1 1\n"));          // loop
    CHECK_THROWS(parse_graph("p edge 2 1\ne 1 3\n"));          // out of range
    CHECK_THROWS(parse_graph("e 1 2\n"));                      // no header
    CHECK_THROWS(parse_graph("p edge 2 2\ne 1 2\n"));          // count mismatch
    CHECK_THROWS(parse_graph("p vertex 2 1\ne 1 2\n"));        // bad kind

    // duplicate e lines create parallel edges
    Graph par = parse_graph("p edge 2 2\ne 1 2\ne 1 2\n");
    CHECK(par.edge_count() == 2);
    CHECK_FALSE(par.is_simple());
  }

  TEST_CASE("graph format round trip") {
    for (const Graph& g : {gen_petersen(), gen_cycle(5), gen_random(9, 0.4, 5)}) {
      Graph back = parse_graph(format_graph(g));
      CHECK(back.node_count() == g.node_count());
      CHECK(back.edge_count() == g.edge_count());
      for (const Edge& e : g.edges()) {
        const Edge& f = back.edge_by_id(e.id);
        CHECK(f.u == e.u);
        CHECK(f.v == e.v);
      }
    }
  }

  TEST_CASE("report round trip") {
    for (const Graph& g :
         {make_graph(3, {{0, 1}, {1, 2}, {0, 2}}), gen_cycle(5), gen_petersen()}) {
      auto res = solve_max_tf2m(g);
      SolveReport r;
      r.n = g.node_count();
      r.m = g.edge_count();
      r.d = g.regular_degree();
      r.x = res.x;
      r.u = res.cert.u;
      r.bound = res.cert.bound;
      r.cluster_count = res.cert.cluster_count;
      std::string text = emit_report(g, r);
      SolveReport back = parse_report(g, text);
      CHECK(back.x == r.x);
      CHECK(back.u == r.u);
      CHECK(back.bound == r.bound);
      CHECK(back.cluster_count == r.cluster_count);
      CHECK(verify_report(g, text).ok);
      // emitting again is byte-identical
      SolveReport again = back;
      again.d = r.d;
      CHECK(emit_report(g, again) == text);
    }
  }

  TEST_CASE("tampered reports fail verification") {
    Graph g = gen_cycle(5);
    auto res = solve_max_tf2m(g);
    SolveReport r;
    r.n = 5;
    r.m = 5;
    r.d = 2;
    r.x = res.x;
    r.u = res.cert.u;
    r.bound = res.cert.bound;
    r.cluster_count = res.cert.cluster_count;
    std::string text = emit_report(g, r);
    REQUIRE(verify_report(g, text).ok);

    size_t xpos = text.find("\nx ");
    REQUIRE(xpos != std::string::npos);
    for (size_t off = 1; off < 8; ++off) {
      std::string mutated = text;
      char& c = mutated[xpos + off];
      c = c == '1' ? '2' : '1';
      if (mutated == text) continue;
      CHECK_FALSE(verify_report(g, mutated).ok);
    }
  }

  TEST_CASE("generators") {
    CHECK(gen_cycle(5).edge_count() == 5);
    CHECK(gen_complete(6).edge_count() == 15);
    CHECK(gen_petersen().regular_degree() == 3);
    CHECK(gen_prism().regular_degree() == 3);

    Graph cl = gen_triangle_cluster(3);
    CHECK(cl.node_count() == 7);
    CHECK(cl.edge_count() == 9);
    CHECK(brute_is_cluster(cl));

    Graph rr = gen_random_regular(20, 5, 1);
    CHECK(rr.is_simple());
    CHECK(rr.regular_degree() == 5);

    // determinism
    CHECK(format_graph(gen_random_regular(20, 5, 1)) == format_graph(rr));
    CHECK(format_graph(gen_random(10, 0.3, 2)) ==
          format_graph(gen_random(10, 0.3, 2)));

    CHECK_THROWS(gen_random_regular(5, 3, 1));  // nd odd
    CHECK_THROWS(generate("nosuch", {}, 1));
  }
}
