#include "tf2m/oracle.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <stdexcept>

namespace tf2m {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(std::string("oracle: ") + what);
}

std::vector<int> adjacency_masks(const Graph& g) {
  std::vector<int> adj(g.node_count(), 0);
  for (const Edge& e : g.edges()) {
    adj[e.u] |= 1 << e.v;
    adj[e.v] |= 1 << e.u;
  }
  return adj;
}

}  // namespace

BruteTf2m brute_max_tf2m(const Graph& g, const OracleLimits& limits) {
  require(g.is_simple(), "brute_max_tf2m needs a simple graph");
  int n = g.node_count();
  require(n <= limits.max_nodes && n <= 20, "node limit exceeded");
  int full = (1 << n) - 1;
  std::vector<int> adj = adjacency_masks(g);

  // dp[mask]: bitset of possible last nodes of a simple path covering mask
  // and starting at the lowest node of mask. ham_last[mask]: a last node
  // closing a hamiltonian cycle on mask, or -1.
  std::vector<int> dp(full + 1, 0);
  std::vector<signed char> ham_last(full + 1, -1);
  for (int v = 0; v < n; ++v) dp[1 << v] = 1 << v;
  for (int mask = 1; mask <= full; ++mask) {
    if (!dp[mask]) continue;
    int start = std::countr_zero(static_cast<unsigned>(mask));
    int lasts = dp[mask];
    while (lasts) {
      int last = std::countr_zero(static_cast<unsigned>(lasts));
      lasts &= lasts - 1;
      int ext = adj[last] & ~mask & ~((1 << start) - 1);
      while (ext) {
        int w = std::countr_zero(static_cast<unsigned>(ext));
        ext &= ext - 1;
        dp[mask | 1 << w] |= 1 << w;
      }
      if (ham_last[mask] == -1 && (adj[last] >> start & 1) &&
          std::popcount(static_cast<unsigned>(mask)) >= 3)
        ham_last[mask] = static_cast<signed char>(last);
    }
  }

  // f[mask]: mask partitions exactly into adjacent pairs and odd >= 5
  // cycles. The best such mask gives the optimum: a maximum triangle-free
  // 2-matching can be chosen basic, and a basic one is exactly such a cover.
  std::vector<signed char> f(full + 1, 0);
  f[0] = 1;
  for (int mask = 1; mask <= full; ++mask) {
    int v = std::countr_zero(static_cast<unsigned>(mask));
    int partners = adj[v] & mask;
    while (partners && !f[mask]) {
      int u = std::countr_zero(static_cast<unsigned>(partners));
      partners &= partners - 1;
      f[mask] = f[mask ^ (1 << v) ^ (1 << u)];
    }
    if (f[mask]) continue;
    int rest = mask ^ (1 << v);
    for (int sub = rest;; sub = (sub - 1) & rest) {
      int cyc = sub | 1 << v;
      int pc = std::popcount(static_cast<unsigned>(cyc));
      if (pc >= 5 && pc % 2 == 1 && ham_last[cyc] != -1 && f[mask ^ cyc]) {
        f[mask] = 1;
        break;
      }
      if (sub == 0) break;
    }
  }

  int best = 0;
  for (int mask = 0; mask <= full; ++mask)
    if (f[mask] &&
        std::popcount(static_cast<unsigned>(mask)) >
            std::popcount(static_cast<unsigned>(best)))
      best = mask;

  auto cycle_nodes = [&](int mask) {
    int start = std::countr_zero(static_cast<unsigned>(mask));
    std::vector<int> order;
    int last = ham_last[mask];
    int cur = mask;
    while (cur != (1 << start)) {
      order.push_back(last);
      int prevmask = cur & ~(1 << last);
      int cands = dp[prevmask] & adj[last];
      if (!cands) throw std::logic_error("oracle: cycle reconstruction failed");
      last = std::countr_zero(static_cast<unsigned>(cands));
      cur = prevmask;
    }
    order.push_back(start);
    return order;
  };

  BruteTf2m out;
  out.size = std::popcount(static_cast<unsigned>(best));
  int mask = best;
  while (mask) {
    int v = std::countr_zero(static_cast<unsigned>(mask));
    bool done = false;
    int partners = adj[v] & mask;
    while (partners && !done) {
      int u = std::countr_zero(static_cast<unsigned>(partners));
      partners &= partners - 1;
      int next = mask ^ (1 << v) ^ (1 << u);
      if (f[next]) {
        out.x.set(g.lowest_edge_id_between(v, u), 2);
        mask = next;
        done = true;
      }
    }
    if (done) continue;
    int rest = mask ^ (1 << v);
    for (int sub = rest;; sub = (sub - 1) & rest) {
      int cyc = sub | 1 << v;
      int pc = std::popcount(static_cast<unsigned>(cyc));
      if (pc >= 5 && pc % 2 == 1 && ham_last[cyc] != -1 && f[mask ^ cyc]) {
        std::vector<int> cn = cycle_nodes(cyc);
        int l = static_cast<int>(cn.size());
        for (int i = 0; i < l; ++i)
          out.x.set(g.lowest_edge_id_between(cn[i], cn[(i + 1) % l]), 1);
        mask ^= cyc;
        done = true;
        break;
      }
      if (sub == 0) break;
    }
    if (!done) throw std::logic_error("oracle: cover reconstruction failed");
  }
  if (out.x.size() != out.size)
    throw std::logic_error("oracle: reconstructed solution has wrong size");
  return out;
}

int brute_max_tf2m_enum(const Graph& g, const OracleLimits& limits) {
  require(g.node_count() <= 30, "node limit exceeded");
  require(g.edge_count() <= limits.max_edges, "edge limit exceeded");
  int m = g.edge_count();
  std::vector<int> load(g.node_count(), 0);
  // Support adjacency as node bitmasks for incremental triangle detection.
  std::vector<long long> supp(g.node_count(), 0);
  int best = 0;

  std::function<void(int, int)> rec = [&](int pos, int val) {
    if (pos == m) {
      best = std::max(best, val);
      return;
    }
    const Edge& e = g.edge_at(pos);
    rec(pos + 1, val);  // value 0
    if (load[e.u] > 1 || load[e.v] > 1) return;
    bool closes_triangle = (supp[e.u] & supp[e.v]) != 0;
    bool fresh = (supp[e.u] >> e.v & 1) == 0;  // parallel edge already chosen?
    if (closes_triangle) return;
    supp[e.u] |= 1LL << e.v;
    supp[e.v] |= 1LL << e.u;
    for (int x = 1; x <= 2; ++x) {
      load[e.u] += 1;
      load[e.v] += 1;
      if (load[e.u] <= 2 && load[e.v] <= 2) rec(pos + 1, val + x);
    }
    load[e.u] -= 2;
    load[e.v] -= 2;
    if (fresh) {
      supp[e.u] &= ~(1LL << e.v);
      supp[e.v] &= ~(1LL << e.u);
    }
  };
  rec(0, 0);
  return best;
}

namespace {

// Is v a cut node of a connected graph?
bool disconnects(const Graph& g, int v) {
  int n = g.node_count();
  if (n <= 2) return false;
  int start = v == 0 ? 1 : 0;
  std::vector<char> seen(n, 0);
  seen[start] = seen[v] = 1;
  std::vector<int> stack{start};
  int reached = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int pos : g.incident(u)) {
      int w = g.other_end(pos, u);
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached != n - 1;
}

struct ClusterSearch {
  const Graph& g;
  std::vector<char> edge_used;
  std::vector<std::array<int, 3>> placed;  // node triples

  explicit ClusterSearch(const Graph& gr)
      : g(gr), edge_used(gr.edge_count(), 0) {}

  bool shares_too_much(const std::array<int, 3>& t) const {
    for (const auto& p : placed) {
      int common = 0;
      for (int a : t)
        for (int b : p) common += a == b;
      if (common > 1) return true;
    }
    return false;
  }

  bool run(int from) {
    int pos = from;
    while (pos < g.edge_count() && edge_used[pos]) ++pos;
    if (pos == g.edge_count()) return check_articulation();
    const Edge& e = g.edge_at(pos);
    // Complete edge `pos` to a triangle using two further unused edges.
    for (int p2 : g.incident(e.u)) {
      if (edge_used[p2] || p2 == pos) continue;
      int w = g.other_end(p2, e.u);
      if (w == e.v) continue;
      for (int p3 : g.incident(e.v)) {
        if (edge_used[p3] || p3 == pos || p3 == p2) continue;
        if (g.other_end(p3, e.v) != w) continue;
        std::array<int, 3> t{e.u, e.v, w};
        std::sort(t.begin(), t.end());
        if (shares_too_much(t)) continue;
        edge_used[pos] = edge_used[p2] = edge_used[p3] = 1;
        placed.push_back(t);
        if (run(pos + 1)) return true;
        placed.pop_back();
        edge_used[pos] = edge_used[p2] = edge_used[p3] = 0;
      }
    }
    return false;
  }

  bool check_articulation() const {
    std::vector<int> count(g.node_count(), 0);
    for (const auto& t : placed)
      for (int v : t) ++count[v];
    for (int v = 0; v < g.node_count(); ++v)
      if (count[v] >= 2 && !disconnects(g, v)) return false;
    return true;
  }
};

}  // namespace

bool brute_is_cluster(const Graph& g, const OracleLimits& limits) {
  require(g.edge_count() <= limits.max_edges, "edge limit exceeded");
  if (connected_components(g).size() != 1)
    throw std::invalid_argument("oracle: brute_is_cluster needs a connected graph");
  if (g.node_count() == 1) return true;
  if (g.edge_count() % 3 != 0 || g.edge_count() == 0) return false;
  ClusterSearch cs(g);
  return cs.run(0);
}

int brute_max_matching(const Graph& g, const OracleLimits& limits) {
  require(g.edge_count() <= limits.max_edges, "edge limit exceeded");
  int n = g.node_count(), m = g.edge_count();
  std::vector<char> used(n, 0);
  int best = 0;
  std::function<void(int, int)> rec = [&](int pos, int have) {
    best = std::max(best, have);
    if (pos == m || have + (m - pos) <= best) return;
    const Edge& e = g.edge_at(pos);
    if (!used[e.u] && !used[e.v]) {
      used[e.u] = used[e.v] = 1;
      rec(pos + 1, have + 1);
      used[e.u] = used[e.v] = 0;
    }
    rec(pos + 1, have);
  };
  rec(0, 0);

  if (n <= 14) {
    // Tutte-Berge: max matching = min over U of (n + |U| - odd(G - U)) / 2.
    int tb = n;
    for (int mask = 0; mask < (1 << n); ++mask) {
      std::vector<int> keep;
      for (int v = 0; v < n; ++v)
        if (!(mask >> v & 1)) keep.push_back(v);
      Graph rest = g.induced(keep);
      int odd = 0;
      for (const NodeSubset& c : connected_components(rest))
        odd += c.size() % 2;
      tb = std::min(tb, (n + std::popcount(static_cast<unsigned>(mask)) - odd) / 2);
    }
    if (tb != best)
      throw std::logic_error("oracle: Tutte-Berge mismatch");
  }
  return best;
}

NodeSubset brute_eg_D(const Graph& g, const OracleLimits& limits) {
  require(g.edge_count() <= limits.max_edges, "edge limit exceeded");
  int nu = brute_max_matching(g, limits);
  std::vector<int> d;
  for (int v = 0; v < g.node_count(); ++v) {
    std::vector<int> rest;
    for (int w = 0; w < g.node_count(); ++w)
      if (w != v) rest.push_back(w);
    if (brute_max_matching(g.induced(rest), limits) == nu) d.push_back(v);
  }
  return NodeSubset::of(std::move(d));
}

BruteCertificate brute_min_certificate(const Graph& g,
                                       const OracleLimits& limits) {
  int n = g.node_count();
  require(n <= limits.max_nodes && n <= 20, "node limit exceeded");
  int best_val = -1, best_mask = 0;
  for (int mask = 0; mask < (1 << n); ++mask) {
    std::vector<int> keep;
    for (int v = 0; v < n; ++v)
      if (!(mask >> v & 1)) keep.push_back(v);
    Graph rest = g.induced(keep);
    int clusters = 0;
    for (const NodeSubset& c : connected_components(rest))
      if (brute_is_cluster(rest.induced(c.nodes), limits)) ++clusters;
    int val = n + std::popcount(static_cast<unsigned>(mask)) - clusters;
    bool better =
        best_val == -1 || val < best_val ||
        (val == best_val && std::popcount(static_cast<unsigned>(mask)) <
                                std::popcount(static_cast<unsigned>(best_mask)));
    if (better) {
      best_val = val;
      best_mask = mask;
    }
  }
  BruteCertificate out;
  out.value = best_val;
  std::vector<int> u;
  for (int v = 0; v < n; ++v)
    if (best_mask >> v & 1) u.push_back(v);
  out.u = NodeSubset::of(std::move(u));
  return out;
}

}  // namespace tf2m
