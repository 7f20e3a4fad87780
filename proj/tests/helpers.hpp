#pragma once

#include <initializer_list>
#include <utility>

#include "tf2m/graph.hpp"

inline tf2m::Graph make_graph(int n,
                              std::initializer_list<std::pair<int, int>> es) {
  tf2m::Graph g(n);
  for (auto [u, v] : es) g.add_edge(u, v);
  return g;
}

// Circulant graph: v adjacent to v +- o for each offset o (1 <= o <= n/2).
inline tf2m::Graph circulant(int n, std::initializer_list<int> offsets) {
  tf2m::Graph g(n);
  for (int o : offsets) {
    int count = 2 * o == n ? n / 2 : n;
    for (int v = 0; v < count; ++v) g.add_edge(v, (v + o) % n);
  }
  return g;
}
