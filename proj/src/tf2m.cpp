#include "tf2m/tf2m.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>

namespace tf2m {

void TwoMatching::set(int edge_id, int value) {
  if (value < 0 || value > 2)
    throw std::invalid_argument("two_matching: value must be 0, 1 or 2");
  auto it = values_.find(edge_id);
  if (it != values_.end()) {
    size_ -= it->second;
    values_.erase(it);
  }
  if (value != 0) {
    values_[edge_id] = value;
    size_ += value;
  }
}

int TwoMatching::value(int edge_id) const {
  auto it = values_.find(edge_id);
  return it == values_.end() ? 0 : it->second;
}

SupportDecomposition decompose_support(const Graph& g, const TwoMatching& x) {
  std::vector<int> load(g.node_count(), 0);
  // value-1 incidence: node -> (other node, edge id)
  std::vector<std::vector<std::pair<int, int>>> ones(g.node_count());
  SupportDecomposition out;
  for (auto [id, val] : x.values()) {
    if (!g.has_edge_id(id))
      throw std::invalid_argument("two_matching: unknown edge id");
    const Edge& e = g.edge_by_id(id);
    load[e.u] += val;
    load[e.v] += val;
    if (val == 2) {
      out.double_edges.push_back(id);
    } else {
      ones[e.u].emplace_back(e.v, id);
      ones[e.v].emplace_back(e.u, id);
    }
  }
  for (int v = 0; v < g.node_count(); ++v)
    if (load[v] > 2)
      throw std::invalid_argument("two_matching: node degree cap exceeded");

  std::set<int> done;  // value-1 edge ids already placed
  auto walk = [&](int start, int first_other, int first_id) {
    std::vector<int> nodes{start};
    std::vector<int> eids;
    int prev_id = -1, cur = start;
    int nxt = first_other, nid = first_id;
    for (;;) {
      eids.push_back(nid);
      done.insert(nid);
      cur = nxt;
      prev_id = nid;
      if (cur == start) break;  // circuit closed
      nodes.push_back(cur);
      bool advanced = false;
      for (auto [w, id] : ones[cur]) {
        if (id == prev_id || done.count(id)) continue;
        nxt = w;
        nid = id;
        advanced = true;
        break;
      }
      if (!advanced) break;  // path end
    }
    return std::make_pair(nodes, eids);
  };

  // Paths first (walks from degree-1 endpoints)...
  for (int v = 0; v < g.node_count(); ++v) {
    if (ones[v].size() != 1) continue;
    auto [w, id] = ones[v][0];
    if (done.count(id)) continue;
    auto [nodes, eids] = walk(v, w, id);
    out.paths.push_back({std::move(nodes), std::move(eids)});
  }
  // ...then circuits.
  for (int v = 0; v < g.node_count(); ++v) {
    for (auto [w, id] : ones[v]) {
      if (done.count(id)) continue;
      auto [nodes, eids] = walk(v, w, id);
      if (nodes.size() != eids.size())
        throw std::logic_error("decompose_support: open circuit walk");
      out.circuits.push_back({std::move(nodes), std::move(eids)});
    }
  }
  return out;
}

namespace {

// Nodes of a triangle in the support of x, if any.
std::optional<std::array<int, 3>> support_triangle(const Graph& g,
                                                   const TwoMatching& x) {
  std::vector<std::vector<int>> nb(g.node_count());
  for (auto [id, val] : x.values()) {
    const Edge& e = g.edge_by_id(id);
    nb[e.u].push_back(e.v);
    nb[e.v].push_back(e.u);
  }
  for (auto& v : nb) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  }
  for (auto [id, val] : x.values()) {
    const Edge& e = g.edge_by_id(id);
    for (int w : nb[e.u]) {
      if (w == e.v) continue;
      if (std::binary_search(nb[e.v].begin(), nb[e.v].end(), w))
        return std::array<int, 3>{e.u, e.v, w};
    }
  }
  return std::nullopt;
}

}  // namespace

Tf2mVerdict validate_tf2m(const Graph& g, const TwoMatching& x) {
  Tf2mVerdict v;
  for (auto [id, val] : x.values()) {
    if (!g.has_edge_id(id)) {
      v.edges_ok = false;
      v.violations.push_back("unknown edge id " + std::to_string(id));
    }
  }
  if (!v.edges_ok) {
    v.degree_ok = v.triangle_free = v.basic = false;
    return v;
  }
  std::vector<int> load(g.node_count(), 0);
  for (auto [id, val] : x.values()) {
    const Edge& e = g.edge_by_id(id);
    load[e.u] += val;
    load[e.v] += val;
  }
  for (int u = 0; u < g.node_count(); ++u) {
    if (load[u] > 2) {
      v.degree_ok = false;
      v.violations.push_back("degree cap exceeded at node " + std::to_string(u));
    }
  }
  if (!v.degree_ok) {
    v.triangle_free = v.basic = false;
    return v;
  }
  if (auto tri = support_triangle(g, x)) {
    v.triangle_free = false;
    v.violations.push_back("triangle in support at nodes " +
                           std::to_string((*tri)[0]) + "," +
                           std::to_string((*tri)[1]) + "," +
                           std::to_string((*tri)[2]));
  }
  SupportDecomposition dec = decompose_support(g, x);
  if (!dec.paths.empty()) {
    v.basic = false;
    v.violations.push_back("value-1 edges contain an open path");
  }
  for (const auto& c : dec.circuits) {
    if (c.nodes.size() % 2 == 0) {
      v.basic = false;
      v.violations.push_back("even circuit of length " +
                             std::to_string(c.nodes.size()));
    }
  }
  return v;
}

bool is_triangle_cluster(const Graph& g, const NodeSubset& component) {
  if (component.empty())
    throw std::invalid_argument("is_triangle_cluster: empty component");
  Graph sub = g.induced(component.nodes);
  if (connected_components(sub).size() != 1)
    throw std::invalid_argument("is_triangle_cluster: disconnected component");
  if (sub.node_count() == 1) return true;
  BlockDecomposition bd = biconnected_blocks(sub);
  for (const Block& b : bd.blocks)
    if (b.nodes.size() != 3 || b.edge_ids.size() != 3) return false;
  return true;
}

TwoMatching make_basic(const Graph& g, const TwoMatching& x) {
  TwoMatching out;
  SupportDecomposition dec = decompose_support(g, x);  // throws on invalid x
  for (int id : dec.double_edges) out.set(id, 2);
  for (const auto& c : dec.circuits) {
    if (c.nodes.size() % 2 == 1) {
      for (int id : c.edge_ids) out.set(id, 1);
    } else {
      for (size_t t = 0; t < c.edge_ids.size(); t += 2) out.set(c.edge_ids[t], 2);
    }
  }
  for (const auto& p : dec.paths) {
    for (size_t t = 0; t < p.edge_ids.size(); t += 2) out.set(p.edge_ids[t], 2);
  }
  return out;
}

namespace {

// Perfect TF 2-matching from an alternating tree: an odd cycle through the
// exposed node v of length >= 5 plus the doubled rest of the near-perfect
// matching. Tries each v; no blossom contraction, so this can miss -- callers
// fall back to the search routes below.
std::optional<TwoMatching> classify_route_tree(const Graph& comp) {
  int n = comp.node_count();
  for (int v = 0; v < n; ++v) {
    // Perfect matching of comp - v.
    std::vector<int> rest;
    for (int w = 0; w < n; ++w)
      if (w != v) rest.push_back(w);
    std::vector<int> orig;
    Graph sub = comp.induced(rest, &orig);
    Matching mv = max_matching(sub);
    if (2 * mv.size() != n - 1)
      throw std::invalid_argument(
          "classify_factor_critical: component is not factor-critical");
    std::vector<int> mate(n, -1), medge(n, -1);
    {
      std::vector<int> ml = mv.mates(sub), me = mv.matched_edge_at(sub);
      for (int i = 0; i < static_cast<int>(rest.size()); ++i) {
        if (ml[i] != -1) {
          mate[orig[i]] = orig[ml[i]];
          medge[orig[i]] = me[i];
        }
      }
    }
    // Alternating tree from v (no contraction). label: 0 none, 1 even, 2 odd.
    std::vector<int> label(n, 0), par(n, -1), par_edge(n, -1);
    label[v] = 1;
    std::vector<int> queue{v};
    auto path_to_root = [&](int even_node) {
      std::vector<int> nodes{even_node}, eids;
      int cur = even_node;
      while (cur != v) {
        int o = mate[cur];
        nodes.push_back(o);
        eids.push_back(medge[cur]);
        nodes.push_back(par[o]);
        eids.push_back(par_edge[o]);
        cur = par[o];
      }
      return std::make_pair(nodes, eids);
    };
    for (size_t qi = 0; qi < queue.size(); ++qi) {
      int u = queue[qi];
      for (int pos : comp.incident(u)) {
        int w = comp.other_end(pos, u);
        if (w == mate[u]) continue;
        if (label[w] == 0) {
          label[w] = 2;
          par[w] = u;
          par_edge[w] = comp.edge_at(pos).id;
          int z = mate[w];
          if (z == -1) throw std::logic_error("classify: second exposed node");
          if (label[z] == 0) {
            label[z] = 1;
            queue.push_back(z);
          }
        } else if (label[w] == 1) {
          auto [nu, eu] = path_to_root(u);
          auto [nw, ew] = path_to_root(w);
          // Disjoint except at v -> odd cycle through v.
          std::vector<char> on(n, 0);
          bool disjoint = true;
          for (int a : nu) on[a] = 1;
          for (int a : nw)
            if (a != v && on[a]) disjoint = false;
          if (!disjoint) continue;
          size_t len = nu.size() + nw.size() - 1;
          if (len < 5) continue;
          TwoMatching x;
          for (int id : eu) x.set(id, 1);
          for (int id : ew) x.set(id, 1);
          x.set(comp.edge_at(pos).id, 1);
          for (int a : nw) on[a] = 1;
          for (int a = 0; a < n; ++a)
            if (!on[a] && mate[a] > a) x.set(medge[a], 2);
          if (x.size() != n)
            throw std::logic_error("classify: tree route built non-perfect x");
          return x;
        }
      }
    }
  }
  return std::nullopt;
}

// Enumerate simple odd cycles of length >= 5 (lowest node first) and test
// whether the complement has a perfect matching.
std::optional<TwoMatching> classify_route_cycles(const Graph& comp) {
  int n = comp.node_count();
  long long steps_left = 4'000'000;
  int tests_left = n > 100 ? 100 : 2000;
  std::vector<std::vector<int>> nb(n);
  for (int v = 0; v < n; ++v) {
    for (int pos : comp.incident(v)) nb[v].push_back(comp.other_end(pos, v));
    std::sort(nb[v].begin(), nb[v].end());
    nb[v].erase(std::unique(nb[v].begin(), nb[v].end()), nb[v].end());
  }
  std::vector<char> on_path(n, 0);
  std::vector<int> path;
  std::optional<TwoMatching> found;

  auto try_cycle = [&](const std::vector<int>& cyc) -> bool {
    if (tests_left <= 0) return false;
    --tests_left;
    std::vector<char> on(n, 0);
    for (int a : cyc) on[a] = 1;
    std::vector<int> rest;
    for (int a = 0; a < n; ++a)
      if (!on[a]) rest.push_back(a);
    std::vector<int> orig;
    Graph sub = comp.induced(rest, &orig);
    Matching m = max_matching(sub);
    if (2 * m.size() != static_cast<int>(rest.size())) return false;
    TwoMatching x;
    int l = static_cast<int>(cyc.size());
    for (int i = 0; i < l; ++i)
      x.set(comp.lowest_edge_id_between(cyc[i], cyc[(i + 1) % l]), 1);
    std::vector<int> me = m.matched_edge_at(sub), ml = m.mates(sub);
    for (int i = 0; i < static_cast<int>(rest.size()); ++i)
      if (ml[i] > i) x.set(me[i], 2);
    if (x.size() != n)
      throw std::logic_error("classify: cycle route built non-perfect x");
    found = std::move(x);
    return true;
  };

  for (int cap : {7, 13, n}) {
    if (cap < 5) continue;
    for (int s = 0; s < n && !found; ++s) {
      // DFS over paths with all nodes > s, closing back to s.
      std::function<bool(int)> dfs = [&](int u) -> bool {
        if (--steps_left < 0) return true;  // budget exhausted: abort round
        for (int w : nb[u]) {
          if (w == s && path.size() >= 5 && path.size() % 2 == 1) {
            if (try_cycle(path)) return true;
            if (tests_left <= 0) return true;
          }
          if (w <= s || on_path[w]) continue;
          if (static_cast<int>(path.size()) >= cap) continue;
          on_path[w] = 1;
          path.push_back(w);
          bool stop = dfs(w);
          path.pop_back();
          on_path[w] = 0;
          if (stop) return true;
        }
        return false;
      };
      on_path[s] = 1;
      path = {s};
      dfs(s);
      on_path[s] = 0;
      if (steps_left < 0 || tests_left <= 0) break;
    }
    if (found) return found;
    steps_left = 4'000'000;
    tests_left = n > 100 ? 100 : 2000;
  }
  return found;
}

// Exhaustive exact-cover search for small components: partition all nodes
// into adjacent pairs (double edges) and odd >= 5 cycles.
std::optional<TwoMatching> classify_route_exhaustive(const Graph& comp) {
  int n = comp.node_count();
  if (n > 15) return std::nullopt;
  int full = (1 << n) - 1;
  std::vector<int> adj(n, 0);
  for (const Edge& e : comp.edges()) {
    adj[e.u] |= 1 << e.v;
    adj[e.v] |= 1 << e.u;
  }
  // ham[mask]: G[mask] has a hamiltonian cycle; dp[mask] bitset over last
  // node of a path starting at lowest bit of mask.
  std::vector<int> dp(full + 1, 0), ham_last(full + 1, -1);
  for (int v = 0; v < n; ++v) dp[1 << v] = 1 << v;
  for (int mask = 1; mask <= full; ++mask) {
    if (!dp[mask]) continue;
    int start = std::countr_zero(static_cast<unsigned>(mask));
    for (int last = 0; last < n; ++last) {
      if (!(dp[mask] >> last & 1)) continue;
      int ext = adj[last] & ~mask;
      while (ext) {
        int w = std::countr_zero(static_cast<unsigned>(ext));
        ext &= ext - 1;
        if (w < start) continue;
        dp[mask | 1 << w] |= 1 << w;
      }
      if (ham_last[mask] == -1 && (adj[last] >> start & 1) &&
          std::popcount(static_cast<unsigned>(mask)) >= 3)
        ham_last[mask] = last;
    }
  }
  std::vector<signed char> cover(full + 1, -1);  // -1 unknown, 0 no, 1 yes
  cover[0] = 1;
  std::function<bool(int)> can_cover = [&](int mask) -> bool {
    if (cover[mask] != -1) return cover[mask] == 1;
    cover[mask] = 0;
    int v = std::countr_zero(static_cast<unsigned>(mask));
    int partners = adj[v] & mask;
    int pp = partners;
    while (pp) {
      int u = std::countr_zero(static_cast<unsigned>(pp));
      pp &= pp - 1;
      if (can_cover(mask & ~(1 << v) & ~(1 << u))) {
        cover[mask] = 1;
        return true;
      }
    }
    // Odd cycles >= 5 through v: submasks of mask containing v.
    int rest = mask & ~(1 << v);
    for (int sub = rest;; sub = (sub - 1) & rest) {
      int cyc = sub | 1 << v;
      int pc = std::popcount(static_cast<unsigned>(cyc));
      if (pc >= 5 && pc % 2 == 1 && ham_last[cyc] != -1 &&
          std::countr_zero(static_cast<unsigned>(cyc)) == v) {
        if (can_cover(mask & ~cyc)) {
          cover[mask] = 1;
          return true;
        }
      }
      if (sub == 0) break;
    }
    return false;
  };
  if (!can_cover(full)) return std::nullopt;

  auto cycle_nodes = [&](int mask) {
    // Reconstruct a hamiltonian cycle of G[mask] from dp.
    int start = std::countr_zero(static_cast<unsigned>(mask));
    std::vector<int> order;
    int last = ham_last[mask];
    int cur = mask;
    while (cur != (1 << start)) {
      order.push_back(last);
      int prevmask = cur & ~(1 << last);
      int prev = -1;
      int cands = dp[prevmask] & adj[last];
      if (prevmask == (1 << start)) cands = dp[prevmask];
      if (!cands) throw std::logic_error("classify: cycle reconstruction failed");
      prev = std::countr_zero(static_cast<unsigned>(cands));
      cur = prevmask;
      last = prev;
    }
    order.push_back(start);
    return order;
  };

  TwoMatching x;
  int mask = full;
  while (mask) {
    int v = std::countr_zero(static_cast<unsigned>(mask));
    int done = 0;
    int partners = adj[v] & mask;
    while (partners && !done) {
      int u = std::countr_zero(static_cast<unsigned>(partners));
      partners &= partners - 1;
      int next_mask = mask & ~(1 << v) & ~(1 << u);
      if (can_cover(next_mask)) {
        x.set(comp.lowest_edge_id_between(v, u), 2);
        mask = next_mask;
        done = 1;
      }
    }
    if (done) continue;
    int rest = mask & ~(1 << v);
    for (int sub = rest;; sub = (sub - 1) & rest) {
      int cyc = sub | 1 << v;
      int pc = std::popcount(static_cast<unsigned>(cyc));
      if (pc >= 5 && pc % 2 == 1 && ham_last[cyc] != -1 &&
          std::countr_zero(static_cast<unsigned>(cyc)) == v &&
          can_cover(mask & ~cyc)) {
        std::vector<int> cn = cycle_nodes(cyc);
        int l = static_cast<int>(cn.size());
        for (int i = 0; i < l; ++i)
          x.set(comp.lowest_edge_id_between(cn[i], cn[(i + 1) % l]), 1);
        mask &= ~cyc;
        done = 1;
        break;
      }
      if (sub == 0) break;
    }
    if (!done) throw std::logic_error("classify: cover reconstruction failed");
  }
  if (x.size() != n)
    throw std::logic_error("classify: exhaustive route built non-perfect x");
  return x;
}

}  // namespace

FCClass classify_factor_critical(const Graph& comp,
                                 const EarDecomposition* ears) {
  int n = comp.node_count();
  if (n == 0 || n % 2 == 0)
    throw std::invalid_argument("classify_factor_critical: even or empty graph");
  if (ears && !valid_odd_ear_decomposition(comp, *ears))
    throw std::invalid_argument("classify_factor_critical: invalid ears");
  NodeSubset all;
  for (int v = 0; v < n; ++v) all.nodes.push_back(v);
  if (is_triangle_cluster(comp, all)) return {true, {}};

  if (auto x = classify_route_tree(comp)) return {false, std::move(*x)};
  if (auto x = classify_route_exhaustive(comp)) return {false, std::move(*x)};
  if (auto x = classify_route_cycles(comp)) return {false, std::move(*x)};
  throw std::runtime_error(
      "classify_factor_critical: no perfect triangle-free 2-matching found for "
      "a non-cluster component with " +
      std::to_string(n) + " nodes (search budget exhausted)");
}

int evaluate_certificate(const Graph& g, const NodeSubset& u) {
  return certificate_for(g, u).bound;
}

Certificate certificate_for(const Graph& g, NodeSubset u) {
  std::vector<int> keep;
  for (int v = 0; v < g.node_count(); ++v)
    if (!u.contains(v)) keep.push_back(v);
  Graph rest = g.induced(keep);
  int clusters = 0;
  for (const NodeSubset& comp : connected_components(rest))
    if (is_triangle_cluster(rest, comp)) ++clusters;
  Certificate cert;
  cert.cluster_count = clusters;
  cert.bound = g.node_count() + u.size() - clusters;
  cert.u = std::move(u);
  return cert;
}

SolveResult solve_max_tf2m(const Graph& g) {
  if (!g.is_simple())
    throw std::invalid_argument("solve_max_tf2m: graph must be simple");
  int n = g.node_count();
  TwoMatching x;

  Matching m = max_matching(g);
  EGDecomposition eg = edmonds_gallai_core(g, m, false);

  // Double the matching edges inside C.
  std::vector<char> in_c(n, 0);
  for (int v : eg.c.nodes) in_c[v] = 1;
  for (int id : m.edge_ids) {
    const Edge& e = g.edge_by_id(id);
    if (in_c[e.u] && in_c[e.v]) x.set(id, 2);
  }

  int nc = static_cast<int>(eg.components_of_d.size());
  std::vector<char> bad(nc, 0);
  std::vector<int> comp_of(n, -1);
  for (int i = 0; i < nc; ++i) {
    for (int v : eg.components_of_d[i].nodes.nodes) comp_of[v] = i;
    bad[i] = is_triangle_cluster(g, eg.components_of_d[i].nodes);
  }
  std::vector<int> a_index(n, -1);
  for (int l = 0; l < eg.a.size(); ++l) a_index[eg.a.nodes[l]] = l;

  // Bipartite graph H: D-components vs A; one edge per adjacent pair,
  // payload = lowest connecting edge id of G.
  std::map<std::pair<int, int>, int> pair_edge;
  for (const Edge& e : g.edges()) {
    int ci = -1, av = -1;
    if (comp_of[e.u] != -1 && a_index[e.v] != -1) {
      ci = comp_of[e.u];
      av = a_index[e.v];
    } else if (comp_of[e.v] != -1 && a_index[e.u] != -1) {
      ci = comp_of[e.v];
      av = a_index[e.u];
    } else {
      continue;
    }
    auto [it, fresh] = pair_edge.try_emplace({ci, av}, e.id);
    if (!fresh) it->second = std::min(it->second, e.id);
  }
  BipartiteGraph h, h_bad;
  h.n_upper = h_bad.n_upper = nc;
  h.n_lower = h_bad.n_lower = eg.a.size();
  std::map<std::pair<int, int>, int> h_index;
  for (auto& [key, eid] : pair_edge) {
    h_index[key] = static_cast<int>(h.edges.size());
    h.edges.push_back({key.first, key.second, eid});
    if (bad[key.first]) h_bad.edges.push_back({key.first, key.second, eid});
  }

  BipartiteMatching m_bad = max_matching_bipartite(h_bad, {});
  BipartiteMatching init;
  for (int b : m_bad.bedges) {
    const auto& e = h_bad.edges[b];
    init.bedges.push_back(h_index.at({e.upper, e.lower}));
  }
  BipartiteMatching m_h = max_matching_bipartite(h, init);

  std::vector<int> mate_u, mate_l;
  m_h.mates(h, &mate_u, &mate_l);
  for (int l = 0; l < h.n_lower; ++l)
    if (mate_l[l] == -1 && h.n_upper > 0)
      throw std::logic_error("solve_max_tf2m: A node left unmatched in H");

  for (int b : m_h.bedges) x.set(h.edges[b].payload, 2);

  for (int i = 0; i < nc; ++i) {
    DComponent& comp = eg.components_of_d[i];
    auto local_of = [&](int global) {
      auto it = std::lower_bound(comp.orig_nodes.begin(), comp.orig_nodes.end(),
                                 global);
      return static_cast<int>(it - comp.orig_nodes.begin());
    };
    if (mate_u[i] != -1) {
      const Edge& e = g.edge_by_id(h.edges[mate_u[i]].payload);
      int covered = comp_of[e.u] == i ? e.u : e.v;
      EarDecomposition ears = odd_ear_decomposition(comp.graph);
      Matching mi = matching_missing_node(comp.graph, ears, local_of(covered));
      for (int id : mi.edge_ids) x.set(id, 2);
    } else if (!bad[i]) {
      FCClass fc = classify_factor_critical(comp.graph);
      if (fc.is_cluster)
        throw std::logic_error("solve_max_tf2m: good component classified bad");
      for (auto [id, val] : fc.perfect.values()) x.set(id, val);
    } else {
      EarDecomposition ears = odd_ear_decomposition(comp.graph);
      Matching mi = matching_missing_node(comp.graph, ears, 0);
      for (int id : mi.edge_ids) x.set(id, 2);
    }
  }

  VertexCover cover = koenig_vertex_cover(h_bad, m_bad);
  std::vector<int> u_nodes;
  for (int l : cover.lower.nodes) u_nodes.push_back(eg.a.nodes[l]);
  Certificate cert = certificate_for(g, NodeSubset::of(std::move(u_nodes)));
  if (cert.bound != x.size())
    throw std::logic_error("solve_max_tf2m: certificate does not match size");
  return {std::move(x), std::move(cert)};
}

}  // namespace tf2m
