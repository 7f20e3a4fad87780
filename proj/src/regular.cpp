#include "tf2m/regular.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "tf2m/matching.hpp"

namespace tf2m {

RegularityInfo regularity_info(const Graph& g) {
  int d = g.regular_degree();
  if (d < 3)
    throw std::invalid_argument("regularity_info: graph is not d-regular, d >= 3");
  RegularityInfo info;
  info.d = d;
  info.kind = d == 3 ? RegularityInfo::Kind::cubic
              : d % 2 == 0 ? RegularityInfo::Kind::even
                           : RegularityInfo::Kind::odd;
  return info;
}

TwoMatching perfect_2matching_regular(const Graph& g) {
  int d = g.regular_degree();
  if (d < 2)
    throw std::invalid_argument("perfect_2matching_regular: need d-regular, d >= 2");
  int n = g.node_count();
  // Split every node into an upper and a lower copy; each edge appears in
  // both directions. A perfect matching picks a successor per node, i.e. a
  // cycle cover of g.
  BipartiteGraph h;
  h.n_upper = h.n_lower = n;
  for (const Edge& e : g.edges()) {
    h.edges.push_back({e.u, e.v, e.id});
    h.edges.push_back({e.v, e.u, e.id});
  }
  BipartiteMatching m = max_matching_bipartite(h, {});
  if (m.size() != n)
    throw std::logic_error("perfect_2matching_regular: bipartite matching not perfect");
  TwoMatching x;
  for (int b : m.bedges) {
    int id = h.edges[b].payload;
    x.set(id, x.value(id) + 1);
  }
  if (x.size() != n)
    throw std::logic_error("perfect_2matching_regular: not a perfect 2-matching");
  return make_basic(g, x);
}

std::vector<std::array<int, 3>> greedy_triangle_packing(const Graph& g) {
  int n = g.node_count();
  std::vector<char> used(n, 0);
  std::vector<std::array<int, 3>> tris;
  std::vector<std::vector<int>> nb(n);
  for (int v = 0; v < n; ++v) {
    for (int pos : g.incident(v)) nb[v].push_back(g.other_end(pos, v));
    std::sort(nb[v].begin(), nb[v].end());
    nb[v].erase(std::unique(nb[v].begin(), nb[v].end()), nb[v].end());
  }
  for (int v = 0; v < n; ++v) {
    if (used[v]) continue;
    bool found = false;
    for (size_t i = 0; i < nb[v].size() && !found; ++i) {
      int a = nb[v][i];
      if (a < v || used[a]) continue;
      for (size_t j = i + 1; j < nb[v].size() && !found; ++j) {
        int b = nb[v][j];
        if (used[b]) continue;
        if (std::binary_search(nb[a].begin(), nb[a].end(), b)) {
          tris.push_back({v, a, b});
          used[v] = used[a] = used[b] = 1;
          found = true;
        }
      }
    }
  }
  return tris;
}

std::vector<int> two_regular_spanning(const Graph& g) {
  int d = g.regular_degree();
  if (d < 2 || d % 2 != 0)
    throw std::invalid_argument("two_regular_spanning: need 2k-regular input");
  if (d == 2) {
    std::vector<int> all;
    for (const Edge& e : g.edges()) all.push_back(e.id);
    return all;
  }
  // Orient each component along an Euler tour; the in/out bipartite graph is
  // d/2-regular, and a perfect matching in it selects one out-arc and one
  // in-arc per node.
  BipartiteGraph h;
  h.n_upper = h.n_lower = g.node_count();
  for (const NodeSubset& comp : connected_components(g)) {
    std::vector<int> tour = euler_tour(g, comp);
    // Orient the closed walk: pick the first edge's direction so that it
    // meets the second edge.
    const Edge& e0 = g.edge_by_id(tour[0]);
    int cur = e0.u;
    if (tour.size() > 1) {
      const Edge& e1 = g.edge_by_id(tour[1]);
      if (e0.v != e1.u && e0.v != e1.v) cur = e0.v;
    }
    for (int id : tour) {
      const Edge& e = g.edge_by_id(id);
      int nxt = e.u == cur ? e.v : e.u;
      if (e.u != cur && e.v != cur)
        throw std::logic_error("two_regular_spanning: broken euler walk");
      h.edges.push_back({cur, nxt, id});
      cur = nxt;
    }
  }
  BipartiteMatching m = max_matching_bipartite(h, {});
  if (m.size() != g.node_count())
    throw std::logic_error("two_regular_spanning: no perfect matching in arc graph");
  std::vector<int> out;
  for (int b : m.bedges) out.push_back(h.edges[b].payload);
  std::sort(out.begin(), out.end());
  return out;
}

TwoMatching solve_cubic(const Graph& g) {
  if (!g.is_simple())
    throw std::invalid_argument("solve_cubic: graph must be simple");
  if (g.regular_degree() != 3)
    throw std::invalid_argument("solve_cubic: graph must be 3-regular");
  int n = g.node_count();

  std::vector<std::array<int, 3>> tris = greedy_triangle_packing(g);
  std::vector<int> tri_of(n, -1);
  std::vector<NodeSubset> sets;
  for (int i = 0; i < static_cast<int>(tris.size()); ++i) {
    for (int v : tris[i]) tri_of[v] = i;
    sets.push_back(NodeSubset::of({tris[i][0], tris[i][1], tris[i][2]}));
  }
  // Maximality: no triangle on three unpacked nodes may remain.
  for (const Edge& e : g.edges()) {
    if (tri_of[e.u] != -1 || tri_of[e.v] != -1) continue;
    for (int pos : g.incident(e.u)) {
      int w = g.other_end(pos, e.u);
      if (tri_of[w] == -1 && w != e.v && g.lowest_edge_id_between(w, e.v) != -1)
        throw std::logic_error("solve_cubic: triangle packing not maximal");
    }
  }

  ContractionResult cr = contract_node_sets(g, sets);
  TwoMatching xp = perfect_2matching_regular(cr.graph);
  SupportDecomposition dec = decompose_support(cr.graph, xp);
  if (!dec.paths.empty())
    throw std::logic_error("solve_cubic: contracted solution not perfect");

  // Which contracted node hosts which triangle, and the unique attachment
  // node of a surviving edge inside a triangle.
  auto attach = [&](int edge_id, int z) {
    const Edge& e = g.edge_by_id(edge_id);
    int v = cr.node_map[e.u] == z ? e.u : e.v;
    if (cr.node_map[v] != z)
      throw std::logic_error("solve_cubic: edge does not touch composite node");
    return v;
  };
  std::vector<int> tri_at(cr.graph.node_count(), -1);
  for (int i = 0; i < static_cast<int>(tris.size()); ++i)
    tri_at[cr.node_map[tris[i][0]]] = i;
  auto opposite_edge = [&](int i, int v) {
    // Triangle edge not touching v.
    std::vector<int> others;
    for (int w : tris[i])
      if (w != v) others.push_back(w);
    return g.lowest_edge_id_between(others[0], others[1]);
  };
  auto third_node = [&](int i, int a, int b) {
    for (int w : tris[i])
      if (w != a && w != b) return w;
    throw std::logic_error("solve_cubic: degenerate triangle");
  };

  TwoMatching x;
  for (int id : dec.double_edges) {
    x.set(id, 2);
    const Edge& e = g.edge_by_id(id);
    for (int v : {e.u, e.v})
      if (tri_of[v] != -1) x.set(opposite_edge(tri_of[v], v), 2);
  }
  for (const SupportCircuit& c : dec.circuits) {
    int len = static_cast<int>(c.nodes.size());
    bool has_composite = false;
    for (int z : c.nodes) has_composite |= tri_at[z] != -1;
    if (!has_composite && len == 3)
      throw std::logic_error("solve_cubic: triangle left outside the packing");
    for (int id : c.edge_ids) x.set(id, 1);
    for (int j = 0; j < len; ++j) {
      int z = c.nodes[j];
      int i = tri_at[z];
      if (i == -1) continue;
      int in_id = c.edge_ids[(j + len - 1) % len];
      int out_id = c.edge_ids[j];
      int a = attach(in_id, z), b = attach(out_id, z);
      if (a == b)
        throw std::logic_error("solve_cubic: circuit reuses a triangle node");
      int cnode = third_node(i, a, b);
      x.set(g.lowest_edge_id_between(a, cnode), 1);
      x.set(g.lowest_edge_id_between(cnode, b), 1);
    }
  }

  Tf2mVerdict v = validate_tf2m(g, x);
  if (!v.ok() || x.size() != n)
    throw std::logic_error("solve_cubic: expansion produced an invalid solution");
  return x;
}

TwoMatching solve_even(const Graph& g) {
  if (!g.is_simple())
    throw std::invalid_argument("solve_even: graph must be simple");
  int d = g.regular_degree();
  if (d < 4 || d % 2 != 0)
    throw std::invalid_argument("solve_even: graph must be 2k-regular, k >= 2");
  std::vector<int> h1 = two_regular_spanning(g);
  Graph rest = g.without_edges(h1);
  std::vector<int> h2 = two_regular_spanning(rest);
  std::vector<int> both = h1;
  both.insert(both.end(), h2.begin(), h2.end());
  Graph h = g.edge_subgraph(both);
  if (h.regular_degree() != 4)
    throw std::logic_error("solve_even: union of 2-factors not 4-regular");
  SolveResult res = solve_max_tf2m(h);
  if (res.x.size() != g.node_count())
    throw std::logic_error("solve_even: 4-regular subgraph solution not perfect");
  return res.x;
}

std::pair<Graph, DegreeProfile> near_34_subgraph(const Graph& g,
                                                 std::uint64_t seed) {
  if (!g.is_simple())
    throw std::invalid_argument("near_34_subgraph: graph must be simple");
  int d = g.regular_degree();
  if (d < 5 || d % 2 == 0)
    throw std::invalid_argument("near_34_subgraph: graph must be d-regular, d odd >= 5");
  VirtualPairing vp = add_virtual_pairing(g, seed);
  Graph w = std::move(vp.graph);
  std::set<int> virt(vp.virtual_edge_ids.begin(), vp.virtual_edge_ids.end());

  int dcur = d + 1;
  while (dcur > 4) {
    if (dcur % 4 == 0) {
      // Large step: split each component's Euler tour into alternating
      // halves; both halves are dcur/2-regular since tours have even length.
      std::vector<int> red, blue;
      for (const NodeSubset& comp : connected_components(w)) {
        std::vector<int> tour = euler_tour(w, comp);
        if (tour.size() % 2 != 0)
          throw std::logic_error("near_34_subgraph: odd euler tour in large step");
        for (size_t i = 0; i < tour.size(); ++i)
          (i % 2 == 0 ? red : blue).push_back(tour[i]);
      }
      int vr = 0, vb = 0;
      for (int id : red) vr += virt.count(id);
      for (int id : blue) vb += virt.count(id);
      Graph next = w.edge_subgraph(vr <= vb ? red : blue);
      if (next.regular_degree() != dcur / 2)
        throw std::logic_error("near_34_subgraph: color class not regular");
      w = std::move(next);
      dcur /= 2;
    } else {
      std::vector<int> f = two_regular_spanning(w);
      w = w.without_edges(f);
      dcur -= 2;
    }
  }

  std::vector<int> leftover;
  for (const Edge& e : w.edges())
    if (virt.count(e.id)) leftover.push_back(e.id);
  w = w.without_edges(leftover);

  DegreeProfile prof;
  for (int v = 0; v < w.node_count(); ++v) {
    int deg = w.degree(v);
    prof.degrees.push_back(deg);
    if (deg == 3)
      ++prof.degree3;
    else if (deg == 4)
      ++prof.degree4;
    else
      throw std::logic_error("near_34_subgraph: degree outside {3,4}");
  }
  for (const Edge& e : w.edges())
    if (!g.has_edge_id(e.id))
      throw std::logic_error("near_34_subgraph: virtual edge survived");
  return {std::move(w), std::move(prof)};
}

TwoMatching solve_odd(const Graph& g, std::uint64_t seed) {
  if (!g.is_simple())
    throw std::invalid_argument("solve_odd: graph must be simple");
  int d = g.regular_degree();
  if (d < 5 || d % 2 == 0)
    throw std::invalid_argument("solve_odd: graph must be d-regular, d odd >= 5");
  auto [h, prof] = near_34_subgraph(g, seed);
  SolveResult res = solve_max_tf2m(h);
  if (res.x.size() < g.node_count() - prof.degree3 / 4)
    throw std::logic_error("solve_odd: deficiency bound violated on {3,4}-subgraph");
  if (res.x.size() == g.node_count()) return res.x;
  // Slow path: the {3,4}-subgraph can fall short of perfect; the full graph
  // never does.
  SolveResult full = solve_max_tf2m(g);
  if (full.x.size() != g.node_count())
    throw std::logic_error("solve_odd: no perfect solution in a regular graph");
  return full.x;
}

TwoMatching solve_regular(const Graph& g) {
  if (!g.is_simple())
    throw std::invalid_argument("solve_regular: graph must be simple");
  RegularityInfo info = regularity_info(g);
  switch (info.kind) {
    case RegularityInfo::Kind::cubic:
      return solve_cubic(g);
    case RegularityInfo::Kind::even:
      return solve_even(g);
    default:
      return solve_odd(g);
  }
}

BoundVerdict check_almost_regular_bound(const Graph& g, const TwoMatching& x) {
  int n = g.node_count();
  int d = 0;
  for (int v = 0; v < n; ++v) d = std::max(d, g.degree(v));
  if (d < 3)
    throw std::invalid_argument("check_almost_regular_bound: need max degree >= 3");
  BoundVerdict out;
  out.d = d;
  for (int v = 0; v < n; ++v) {
    if (g.degree(v) == d - 1)
      ++out.q;
    else if (g.degree(v) != d)
      throw std::invalid_argument(
          "check_almost_regular_bound: degrees must lie in {d-1, d}");
  }
  out.bound = n - out.q / d;
  out.size = x.size();
  out.ok = out.size >= out.bound;
  return out;
}

}  // namespace tf2m
