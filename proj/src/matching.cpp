#include "tf2m/matching.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <stdexcept>

namespace tf2m {

std::vector<int> Matching::mates(const Graph& g) const {
  std::vector<int> mate(g.node_count(), -1);
  for (int id : edge_ids) {
    const Edge& e = g.edge_by_id(id);
    if (mate[e.u] != -1 || mate[e.v] != -1)
      throw std::invalid_argument("matching: two edges share a node");
    mate[e.u] = e.v;
    mate[e.v] = e.u;
  }
  return mate;
}

std::vector<int> Matching::matched_edge_at(const Graph& g) const {
  std::vector<int> at(g.node_count(), -1);
  for (int id : edge_ids) {
    const Edge& e = g.edge_by_id(id);
    if (at[e.u] != -1 || at[e.v] != -1)
      throw std::invalid_argument("matching: two edges share a node");
    at[e.u] = id;
    at[e.v] = id;
  }
  return at;
}

namespace {

// Blossom-shrinking maximum matching (O(n * m) per augmentation search).
class BlossomSolver {
 public:
  explicit BlossomSolver(const Graph& g)
      : g_(g),
        n_(g.node_count()),
        match_(n_, -1),
        p_(n_, -1),
        base_(n_),
        used_(n_, 0),
        blossom_(n_, 0) {
    adj_.resize(n_);
    for (int v = 0; v < n_; ++v) {
      std::vector<std::pair<int, int>> nb;  // (neighbor, position)
      for (int pos : g.incident(v)) nb.emplace_back(g.other_end(pos, v), pos);
      std::sort(nb.begin(), nb.end(), [&](auto& a, auto& b) {
        if (a.first != b.first) return a.first < b.first;
        return g_.edge_at(a.second).id < g_.edge_at(b.second).id;
      });
      for (auto& [w, pos] : nb) adj_[v].push_back(pos);
    }
  }

  void seed(const std::vector<int>& mate) { match_ = mate; }

  void greedy_init() {
    for (int v = 0; v < n_; ++v) {
      if (match_[v] != -1) continue;
      for (int pos : adj_[v]) {
        int w = g_.other_end(pos, v);
        if (match_[w] == -1) {
          match_[v] = w;
          match_[w] = v;
          break;
        }
      }
    }
  }

  // Alternating search from root. Returns the exposed node closing an
  // augmenting path, or -1. Marks even (outer) nodes in used_.
  int find_path(int root) {
    std::fill(used_.begin(), used_.end(), 0);
    std::fill(p_.begin(), p_.end(), -1);
    for (int i = 0; i < n_; ++i) base_[i] = i;
    used_[root] = 1;
    std::vector<int> queue{root};
    for (size_t qi = 0; qi < queue.size(); ++qi) {
      int v = queue[qi];
      for (int pos : adj_[v]) {
        int to = g_.other_end(pos, v);
        if (base_[v] == base_[to] || match_[v] == to) continue;
        if (to == root || (match_[to] != -1 && p_[match_[to]] != -1)) {
          int curbase = lca(v, to);
          std::fill(blossom_.begin(), blossom_.end(), 0);
          mark_path(v, curbase, to);
          mark_path(to, curbase, v);
          for (int i = 0; i < n_; ++i) {
            if (blossom_[base_[i]]) {
              base_[i] = curbase;
              if (!used_[i]) {
                used_[i] = 1;
                queue.push_back(i);
              }
            }
          }
        } else if (p_[to] == -1) {
          p_[to] = v;
          if (match_[to] == -1) return to;
          used_[match_[to]] = 1;
          queue.push_back(match_[to]);
        }
      }
    }
    return -1;
  }

  void augment(int finish) {
    int v = finish;
    while (v != -1) {
      int pv = p_[v], ppv = match_[pv];
      match_[v] = pv;
      match_[pv] = v;
      v = ppv;
    }
  }

  // Runs augmenting searches from every exposed node, ascending.
  void maximize() {
    for (int v = 0; v < n_; ++v) {
      if (match_[v] != -1) continue;
      int fin = find_path(v);
      if (fin != -1) augment(fin);
    }
  }

  // With the current matching maximum, D = nodes reachable as even from some
  // exposed node. Throws if an augmenting path exists.
  NodeSubset even_reachable() {
    std::vector<char> in_d(n_, 0);
    for (int v = 0; v < n_; ++v) {
      if (match_[v] != -1) continue;
      if (find_path(v) != -1)
        throw std::invalid_argument("edmonds_gallai: matching is not maximum");
      for (int i = 0; i < n_; ++i)
        if (used_[i]) in_d[i] = 1;
    }
    std::vector<int> d;
    for (int i = 0; i < n_; ++i)
      if (in_d[i]) d.push_back(i);
    return NodeSubset{std::move(d)};
  }

  const std::vector<int>& mate() const { return match_; }

 private:
  int lca(int a, int b) {
    std::vector<char> seen(n_, 0);
    int x = a;
    for (;;) {
      x = base_[x];
      seen[x] = 1;
      if (match_[x] == -1) break;
      x = p_[match_[x]];
    }
    int y = b;
    for (;;) {
      y = base_[y];
      if (seen[y]) return y;
      y = p_[match_[y]];
    }
  }

  void mark_path(int v, int b, int child) {
    while (base_[v] != b) {
      blossom_[base_[v]] = 1;
      blossom_[base_[match_[v]]] = 1;
      p_[v] = child;
      child = match_[v];
      v = p_[match_[v]];
    }
  }

  const Graph& g_;
  int n_;
  std::vector<std::vector<int>> adj_;  // positions, neighbor-ascending
  std::vector<int> match_, p_, base_;
  std::vector<char> used_, blossom_;
};

Matching mates_to_matching(const Graph& g, const std::vector<int>& mate) {
  Matching m;
  for (int v = 0; v < g.node_count(); ++v) {
    if (mate[v] > v) {
      int id = g.lowest_edge_id_between(v, mate[v]);
      if (id == -1) throw std::logic_error("matching: mate pair not adjacent");
      m.edge_ids.push_back(id);
    }
  }
  std::sort(m.edge_ids.begin(), m.edge_ids.end());
  return m;
}

}  // namespace

Matching max_matching(const Graph& g) {
  BlossomSolver bs(g);
  bs.greedy_init();
  bs.maximize();
  return mates_to_matching(g, bs.mate());
}

EarDecomposition odd_ear_decomposition(const Graph& comp) {
  int n = comp.node_count();
  if (n == 0)
    throw std::invalid_argument("odd_ear_decomposition: empty graph");
  if (n % 2 == 0)
    throw std::invalid_argument("odd_ear_decomposition: not factor-critical");
  Matching near = max_matching(comp);
  std::vector<int> mate = near.mates(comp);
  std::vector<int> medge = near.matched_edge_at(comp);
  int root = -1;
  for (int v = 0; v < n; ++v) {
    if (mate[v] == -1) {
      if (root != -1)
        throw std::invalid_argument("odd_ear_decomposition: not factor-critical");
      root = v;
    }
  }
  EarDecomposition ed;
  ed.root = root;
  std::vector<char> in_s(n, 0);
  in_s[root] = 1;
  int covered = 1;
  std::vector<char> edge_used(comp.edge_count(), 0);

  while (covered < n) {
    // Lowest frontier edge (u in S, v outside).
    int eu = -1, ev = -1, epos = -1;
    for (int u = 0; u < n && eu == -1; ++u) {
      if (!in_s[u]) continue;
      int best = -1, bestv = -1;
      for (int pos : comp.incident(u)) {
        int w = comp.other_end(pos, u);
        if (in_s[w]) continue;
        if (bestv == -1 || w < bestv ||
            (w == bestv && comp.edge_at(pos).id < comp.edge_at(best).id)) {
          best = pos;
          bestv = w;
        }
      }
      if (best != -1) {
        eu = u;
        ev = bestv;
        epos = best;
      }
    }
    if (eu == -1)
      throw std::invalid_argument("odd_ear_decomposition: disconnected graph");

    // Perfect matching of comp - ev.
    std::vector<int> rest;
    for (int w = 0; w < n; ++w)
      if (w != ev) rest.push_back(w);
    std::vector<int> orig;
    Graph sub = comp.induced(rest, &orig);
    Matching mv = max_matching(sub);
    if (2 * mv.size() != n - 1)
      throw std::invalid_argument("odd_ear_decomposition: not factor-critical");
    std::vector<int> mv_mate_local = mv.mates(sub);
    std::vector<int> mv_edge_local = mv.matched_edge_at(sub);
    std::vector<int> mv_mate(n, -1),mv_edge(n, -1);
    for (int i = 0; i < static_cast<int>(rest.size()); ++i) {
      if (mv_mate_local[i] != -1) {
        mv_mate[orig[i]] = orig[mv_mate_local[i]];
        mv_edge[orig[i]] = mv_edge_local[i];
      }
    }

    // Alternating walk along the symmetric difference of the two matchings,
    // starting at ev with its near-matching edge, until S is hit.
    Ear ear;
    ear.nodes.push_back(eu);
    ear.edge_ids.push_back(comp.edge_at(epos).id);
    ear.nodes.push_back(ev);
    int cur = ev;
    bool use_near = true;
    while (!in_s[cur]) {
      int nxt = use_near ? mate[cur] : mv_mate[cur];
      int eid = use_near ? medge[cur] : mv_edge[cur];
      if (nxt == -1)
        throw std::logic_error("odd_ear_decomposition: walk broke");
      ear.edge_ids.push_back(eid);
      ear.nodes.push_back(nxt);
      cur = nxt;
      use_near = !use_near;
    }
    for (size_t i = 1; i + 1 < ear.nodes.size(); ++i) {
      in_s[ear.nodes[i]] = 1;
      ++covered;
    }
    for (int id : ear.edge_ids) edge_used[comp.position_of_id(id)] = 1;
    ed.ears.push_back(std::move(ear));
  }

  // Remaining edges become single-edge ears, ascending by id.
  std::vector<std::pair<int, int>> rest_edges;  // (id, pos)
  for (int pos = 0; pos < comp.edge_count(); ++pos)
    if (!edge_used[pos]) rest_edges.emplace_back(comp.edge_at(pos).id, pos);
  std::sort(rest_edges.begin(), rest_edges.end());
  for (auto& [id, pos] : rest_edges) {
    const Edge& e = comp.edge_at(pos);
    Ear ear;
    ear.nodes = {std::min(e.u, e.v), std::max(e.u, e.v)};
    ear.edge_ids = {id};
    ed.ears.push_back(std::move(ear));
  }
  return ed;
}

bool valid_odd_ear_decomposition(const Graph& comp, const EarDecomposition& ed) {
  int n = comp.node_count();
  if (ed.root < 0 || ed.root >= n) return false;
  std::vector<char> seen(n, 0);
  std::vector<char> edge_used(comp.edge_count(), 0);
  seen[ed.root] = 1;
  for (const Ear& ear : ed.ears) {
    size_t k = ear.edge_ids.size();
    if (k == 0 || k % 2 == 0) return false;
    if (ear.nodes.size() != k + 1) return false;
    if (!seen[ear.nodes.front()] || !seen[ear.nodes.back()]) return false;
    for (size_t i = 1; i + 1 < ear.nodes.size(); ++i) {
      if (seen[ear.nodes[i]]) return false;
    }
    for (size_t i = 1; i + 1 < ear.nodes.size(); ++i) seen[ear.nodes[i]] = 1;
    for (size_t t = 0; t < k; ++t) {
      if (!comp.has_edge_id(ear.edge_ids[t])) return false;
      int pos = comp.position_of_id(ear.edge_ids[t]);
      if (edge_used[pos]) return false;
      edge_used[pos] = 1;
      const Edge& e = comp.edge_at(pos);
      int a = ear.nodes[t], b = ear.nodes[t + 1];
      if (!((e.u == a && e.v == b) || (e.u == b && e.v == a))) return false;
    }
  }
  for (int v = 0; v < n; ++v)
    if (!seen[v]) return false;
  for (int pos = 0; pos < comp.edge_count(); ++pos)
    if (!edge_used[pos]) return false;
  return true;
}

Matching matching_missing_node(const Graph& comp, const EarDecomposition& ears,
                               int v) {
  if (v < 0 || v >= comp.node_count())
    throw std::invalid_argument("matching_missing_node: node out of range");
  if (!valid_odd_ear_decomposition(comp, ears))
    throw std::invalid_argument("matching_missing_node: invalid ear decomposition");
  int target = v;
  Matching m;
  for (auto it = ears.ears.rbegin(); it != ears.ears.rend(); ++it) {
    const Ear& ear = *it;
    int k = static_cast<int>(ear.edge_ids.size());
    int j = -1;
    for (int i = 1; i < k; ++i) {
      if (ear.nodes[i] == target) {
        j = i;
        break;
      }
    }
    if (j == -1) {
      // Match the interior nodes pairwise, endpoints untouched.
      for (int t = 1; t + 1 < k; t += 2) m.edge_ids.push_back(ear.edge_ids[t]);
      continue;
    }
    if (j % 2 == 0) {
      // Left segment (including endpoint n0) pairs up; target moves to n0.
      for (int t = 0; t < j; t += 2) m.edge_ids.push_back(ear.edge_ids[t]);
      for (int t = j + 1; t + 1 < k; t += 2) m.edge_ids.push_back(ear.edge_ids[t]);
      target = ear.nodes.front();
    } else {
      // Right segment (including endpoint nk) pairs up; target moves to nk.
      for (int t = 1; t + 1 < j; t += 2) m.edge_ids.push_back(ear.edge_ids[t]);
      for (int t = j + 1; t < k; t += 2) m.edge_ids.push_back(ear.edge_ids[t]);
      target = ear.nodes.back();
    }
  }
  if (target != ears.root)
    throw std::logic_error("matching_missing_node: recursion missed the root");
  std::sort(m.edge_ids.begin(), m.edge_ids.end());
  return m;
}

EGDecomposition edmonds_gallai_core(const Graph& g, const Matching& m,
                                    bool with_ears) {
  int n = g.node_count();
  std::vector<int> mate = m.mates(g);
  BlossomSolver bs(g);
  bs.seed(mate);
  NodeSubset d = bs.even_reachable();

  std::vector<char> in_d(n, 0);
  for (int v : d.nodes) in_d[v] = 1;
  std::vector<int> a_nodes, c_nodes;
  for (int v = 0; v < n; ++v) {
    if (in_d[v]) continue;
    bool next_to_d = false;
    for (int pos : g.incident(v))
      if (in_d[g.other_end(pos, v)]) next_to_d = true;
    (next_to_d ? a_nodes : c_nodes).push_back(v);
  }

  EGDecomposition eg;
  eg.d = d;
  eg.a = NodeSubset{std::move(a_nodes)};
  eg.c = NodeSubset{std::move(c_nodes)};

  // Connected components of G[D].
  std::vector<int> comp_of(n, -1);
  std::vector<int> stack;
  for (int s : d.nodes) {
    if (comp_of[s] != -1) continue;
    int c = static_cast<int>(eg.components_of_d.size());
    eg.components_of_d.emplace_back();
    stack.push_back(s);
    comp_of[s] = c;
    std::vector<int> members;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      members.push_back(v);
      for (int pos : g.incident(v)) {
        int w = g.other_end(pos, v);
        if (in_d[w] && comp_of[w] == -1) {
          comp_of[w] = c;
          stack.push_back(w);
        }
      }
    }
    std::sort(members.begin(), members.end());
    DComponent& dc = eg.components_of_d[c];
    dc.nodes = NodeSubset{members};
    dc.graph = g.induced(members, &dc.orig_nodes);
    if (dc.nodes.size() % 2 == 0)
      throw std::logic_error("edmonds_gallai: even D-component");
    if (with_ears) dc.ears = odd_ear_decomposition(dc.graph);
  }

  // |M| = (|V| + |A| - #components of D) / 2 for a maximum matching.
  long long expect =
      (static_cast<long long>(n) + eg.a.size() -
       static_cast<long long>(eg.components_of_d.size()));
  if (expect % 2 != 0 || m.size() != expect / 2)
    throw std::logic_error("edmonds_gallai: size identity violated");
  return eg;
}

EGDecomposition edmonds_gallai(const Graph& g, const Matching& m) {
  return edmonds_gallai_core(g, m, true);
}

void BipartiteMatching::mates(const BipartiteGraph& h,
                              std::vector<int>* mate_upper,
                              std::vector<int>* mate_lower) const {
  std::vector<int> mu(h.n_upper, -1), ml(h.n_lower, -1);
  for (int b : bedges) {
    if (b < 0 || b >= static_cast<int>(h.edges.size()))
      throw std::invalid_argument("bipartite matching: bad edge index");
    const auto& e = h.edges[b];
    if (mu[e.upper] != -1 || ml[e.lower] != -1)
      throw std::invalid_argument("bipartite matching: two edges share a node");
    mu[e.upper] = b;
    ml[e.lower] = b;
  }
  if (mate_upper) *mate_upper = std::move(mu);
  if (mate_lower) *mate_lower = std::move(ml);
}

BipartiteMatching max_matching_bipartite(const BipartiteGraph& h,
                                         const BipartiteMatching& initial) {
  constexpr int kInf = std::numeric_limits<int>::max();
  std::vector<int> mate_u, mate_l;
  initial.mates(h, &mate_u, &mate_l);

  std::vector<std::vector<int>> adj(h.n_upper);
  std::vector<int> order(h.edges.size());
  for (size_t i = 0; i < h.edges.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    const auto& ea = h.edges[a];
    const auto& eb = h.edges[b];
    if (ea.upper != eb.upper) return ea.upper < eb.upper;
    if (ea.lower != eb.lower) return ea.lower < eb.lower;
    return a < b;
  });
  for (int i : order) adj[h.edges[i].upper].push_back(i);

  std::vector<int> dist(h.n_upper);
  std::vector<int> queue;
  auto bfs = [&]() {
    queue.clear();
    bool found = false;
    for (int u = 0; u < h.n_upper; ++u) {
      if (mate_u[u] == -1) {
        dist[u] = 0;
        queue.push_back(u);
      } else {
        dist[u] = kInf;
      }
    }
    for (size_t qi = 0; qi < queue.size(); ++qi) {
      int u = queue[qi];
      for (int b : adj[u]) {
        int l = h.edges[b].lower;
        int mb = mate_l[l];
        if (mb == -1) {
          found = true;
        } else {
          int w = h.edges[mb].upper;
          if (dist[w] == kInf) {
            dist[w] = dist[u] + 1;
            queue.push_back(w);
          }
        }
      }
    }
    return found;
  };
  std::function<bool(int)> dfs = [&](int u) {
    for (int b : adj[u]) {
      int l = h.edges[b].lower;
      int mb = mate_l[l];
      if (mb == -1 || (dist[h.edges[mb].upper] == dist[u] + 1 &&
                       dfs(h.edges[mb].upper))) {
        mate_u[u] = b;
        mate_l[l] = b;
        return true;
      }
    }
    dist[u] = kInf;
    return false;
  };
  while (bfs()) {
    for (int u = 0; u < h.n_upper; ++u)
      if (mate_u[u] == -1) dfs(u);
  }

  BipartiteMatching out;
  for (int u = 0; u < h.n_upper; ++u)
    if (mate_u[u] != -1) out.bedges.push_back(mate_u[u]);
  std::sort(out.bedges.begin(), out.bedges.end());
  return out;
}

VertexCover koenig_vertex_cover(const BipartiteGraph& h,
                                const BipartiteMatching& m) {
  std::vector<int> mate_u, mate_l;
  m.mates(h, &mate_u, &mate_l);
  std::vector<std::vector<int>> adj(h.n_upper);
  for (size_t i = 0; i < h.edges.size(); ++i)
    adj[h.edges[i].upper].push_back(static_cast<int>(i));

  std::vector<char> vis_u(h.n_upper, 0), vis_l(h.n_lower, 0);
  std::vector<int> queue;
  for (int u = 0; u < h.n_upper; ++u) {
    if (mate_u[u] == -1) {
      vis_u[u] = 1;
      queue.push_back(u);
    }
  }
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    int u = queue[qi];
    for (int b : adj[u]) {
      if (b == mate_u[u]) continue;
      int l = h.edges[b].lower;
      if (vis_l[l]) continue;
      vis_l[l] = 1;
      int mb = mate_l[l];
      if (mb == -1)
        throw std::invalid_argument("koenig_vertex_cover: matching not maximum");
      int w = h.edges[mb].upper;
      if (!vis_u[w]) {
        vis_u[w] = 1;
        queue.push_back(w);
      }
    }
  }
  VertexCover cover;
  for (int u = 0; u < h.n_upper; ++u)
    if (!vis_u[u] && mate_u[u] != -1) cover.upper.nodes.push_back(u);
  for (int l = 0; l < h.n_lower; ++l)
    if (vis_l[l]) cover.lower.nodes.push_back(l);
  if (cover.size() != m.size())
    throw std::logic_error("koenig_vertex_cover: cover size mismatch");
  for (const auto& e : h.edges) {
    if (!cover.upper.contains(e.upper) && !cover.lower.contains(e.lower))
      throw std::logic_error("koenig_vertex_cover: edge left uncovered");
  }
  return cover;
}

}  // namespace tf2m
