#pragma once

#include <array>
#include <cstdint>

#include "tf2m/graph.hpp"
#include "tf2m/tf2m.hpp"

namespace tf2m {

struct RegularityInfo {
  int d = -1;
  enum class Kind { cubic, even, odd } kind = Kind::cubic;
};

// Throws unless g is d-regular with d >= 3.
RegularityInfo regularity_info(const Graph& g);

struct DegreeProfile {
  std::vector<int> degrees;
  int degree3 = 0;  // q
  int degree4 = 0;
};

// Perfect basic 2-matching of a regular multigraph, d >= 2. Not necessarily
// triangle-free: node splitting -> d-regular bipartite perfect matching ->
// cycle cover -> make_basic.
TwoMatching perfect_2matching_regular(const Graph& g);

// Maximal node-disjoint triangle collection, scanning nodes in id order and
// taking the lexicographically first triangle at each node.
std::vector<std::array<int, 3>> greedy_triangle_packing(const Graph& g);

// Perfect triangle-free basic 2-matching of a simple 3-regular graph.
TwoMatching solve_cubic(const Graph& g);

// 2-regular spanning subgraph of a 2k-regular multigraph, as edge ids.
std::vector<int> two_regular_spanning(const Graph& g);

// Perfect triangle-free basic 2-matching of a simple 2k-regular graph, k >= 2.
TwoMatching solve_even(const Graph& g);

// Spanning subgraph with all degrees 3 or 4 and few degree-3 nodes, for a
// simple d-regular graph with d odd, d >= 5.
std::pair<Graph, DegreeProfile> near_34_subgraph(const Graph& g,
                                                 std::uint64_t seed);

// Perfect triangle-free basic 2-matching of a simple d-regular graph,
// d odd >= 5.
TwoMatching solve_odd(const Graph& g, std::uint64_t seed = 1);

// Dispatcher over the three degree classes (simple d-regular, d >= 3).
TwoMatching solve_regular(const Graph& g);

struct BoundVerdict {
  int d = 0;
  int q = 0;      // nodes of degree d-1
  int bound = 0;  // smallest integer >= n - q/d
  int size = 0;
  bool ok = false;
};

// Checks size(x) >= n - q/d for a graph with degrees in {d-1, d}. Throws if
// the degree profile is out of shape.
BoundVerdict check_almost_regular_bound(const Graph& g, const TwoMatching& x);

}  // namespace tf2m
