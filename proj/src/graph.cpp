#include "tf2m/graph.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace tf2m {

NodeSubset NodeSubset::of(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return NodeSubset{std::move(v)};
}

bool NodeSubset::contains(int v) const {
  return std::binary_search(nodes.begin(), nodes.end(), v);
}

Graph::Graph(int n) : n_(n), adj_(n) {
  if (n < 0) throw std::invalid_argument("graph: negative node count");
}

int Graph::add_edge(int u, int v) {
  int id = next_id_++;
  add_edge_with_id(id, u, v);
  return id;
}

void Graph::add_edge_with_id(int id, int u, int v) {
  if (u < 0 || u >= n_ || v < 0 || v >= n_)
    throw std::invalid_argument("graph: endpoint out of range");
  if (u == v) throw std::invalid_argument("graph: loop edge");
  if (id_pos_.count(id)) throw std::invalid_argument("graph: duplicate edge id");
  int pos = static_cast<int>(edges_.size());
  edges_.push_back({id, u, v});
  adj_[u].push_back(pos);
  adj_[v].push_back(pos);
  id_pos_[id] = pos;
  next_id_ = std::max(next_id_, id + 1);
}

int Graph::other_end(int pos, int v) const {
  const Edge& e = edges_[pos];
  return e.u == v ? e.v : e.u;
}

int Graph::position_of_id(int id) const {
  auto it = id_pos_.find(id);
  if (it == id_pos_.end()) throw std::invalid_argument("graph: unknown edge id");
  return it->second;
}

int Graph::lowest_edge_id_between(int u, int v) const {
  int best = -1;
  for (int pos : adj_[u]) {
    if (other_end(pos, u) == v) {
      int id = edges_[pos].id;
      if (best == -1 || id < best) best = id;
    }
  }
  return best;
}

bool Graph::is_simple() const {
  std::vector<std::pair<int, int>> seen;
  seen.reserve(edges_.size());
  for (const Edge& e : edges_)
    seen.emplace_back(std::min(e.u, e.v), std::max(e.u, e.v));
  std::sort(seen.begin(), seen.end());
  return std::adjacent_find(seen.begin(), seen.end()) == seen.end();
}

int Graph::regular_degree() const {
  if (n_ == 0) return 0;
  int d = degree(0);
  for (int v = 1; v < n_; ++v)
    if (degree(v) != d) return -1;
  return d;
}

Graph Graph::induced(const std::vector<int>& nodes,
                     std::vector<int>* orig_nodes) const {
  Graph sub(static_cast<int>(nodes.size()));
  std::vector<int> local(n_, -1);
  for (int i = 0; i < static_cast<int>(nodes.size()); ++i) {
    int v = nodes[i];
    if (v < 0 || v >= n_) throw std::invalid_argument("induced: bad node");
    if (local[v] != -1) throw std::invalid_argument("induced: repeated node");
    local[v] = i;
  }
  for (const Edge& e : edges_)
    if (local[e.u] != -1 && local[e.v] != -1)
      sub.add_edge_with_id(e.id, local[e.u], local[e.v]);
  if (orig_nodes) *orig_nodes = nodes;
  return sub;
}

Graph Graph::edge_subgraph(const std::vector<int>& edge_ids) const {
  Graph sub(n_);
  std::vector<int> ids = edge_ids;
  std::sort(ids.begin(), ids.end());
  for (const Edge& e : edges_)
    if (std::binary_search(ids.begin(), ids.end(), e.id))
      sub.add_edge_with_id(e.id, e.u, e.v);
  return sub;
}

Graph Graph::without_edges(const std::vector<int>& edge_ids) const {
  Graph sub(n_);
  std::vector<int> ids = edge_ids;
  std::sort(ids.begin(), ids.end());
  for (const Edge& e : edges_)
    if (!std::binary_search(ids.begin(), ids.end(), e.id))
      sub.add_edge_with_id(e.id, e.u, e.v);
  return sub;
}

void Graph::check_consistent() const {
  std::vector<int> count(edges_.size(), 0);
  for (int v = 0; v < n_; ++v) {
    for (int pos : adj_[v]) {
      if (pos < 0 || pos >= static_cast<int>(edges_.size()))
        throw std::logic_error("graph: adjacency position out of range");
      const Edge& e = edges_[pos];
      if (e.u != v && e.v != v)
        throw std::logic_error("graph: adjacency lists wrong edge");
      ++count[pos];
    }
  }
  for (size_t pos = 0; pos < edges_.size(); ++pos) {
    if (count[pos] != 2)
      throw std::logic_error("graph: edge not listed exactly once per endpoint");
    if (edges_[pos].u == edges_[pos].v)
      throw std::logic_error("graph: loop edge");
  }
}

std::vector<NodeSubset> connected_components(const Graph& g) {
  int n = g.node_count();
  std::vector<int> comp(n, -1);
  std::vector<NodeSubset> out;
  std::vector<int> stack;
  for (int s = 0; s < n; ++s) {
    if (comp[s] != -1) continue;
    int c = static_cast<int>(out.size());
    out.emplace_back();
    stack.push_back(s);
    comp[s] = c;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      out[c].nodes.push_back(v);
      for (int pos : g.incident(v)) {
        int w = g.other_end(pos, v);
        if (comp[w] == -1) {
          comp[w] = c;
          stack.push_back(w);
        }
      }
    }
    std::sort(out[c].nodes.begin(), out[c].nodes.end());
  }
  return out;
}

namespace {

struct BlockBuilder {
  const Graph& g;
  std::vector<int> disc, low;
  std::vector<char> is_art;
  std::vector<int> edge_stack;  // positions
  std::vector<Block> blocks;
  int timer = 0;

  explicit BlockBuilder(const Graph& graph)
      : g(graph),
        disc(graph.node_count(), -1),
        low(graph.node_count(), 0),
        is_art(graph.node_count(), 0) {}

  void emit_block(int until_pos) {
    Block b;
    std::vector<int> ns;
    for (;;) {
      int pos = edge_stack.back();
      edge_stack.pop_back();
      const Edge& e = g.edge_at(pos);
      b.edge_ids.push_back(e.id);
      ns.push_back(e.u);
      ns.push_back(e.v);
      if (pos == until_pos) break;
    }
    std::sort(b.edge_ids.begin(), b.edge_ids.end());
    std::sort(ns.begin(), ns.end());
    ns.erase(std::unique(ns.begin(), ns.end()), ns.end());
    b.nodes = std::move(ns);
    blocks.push_back(std::move(b));
  }

  // Iterative DFS from root.
  void run(int root) {
    struct Frame {
      int v;
      int parent_pos;  // edge position leading here, -1 at root
      size_t idx = 0;
      int children = 0;
    };
    std::vector<Frame> st;
    st.push_back({root, -1});
    disc[root] = low[root] = timer++;
    while (!st.empty()) {
      Frame& f = st.back();
      int v = f.v;
      if (f.idx < g.incident(v).size()) {
        int pos = g.incident(v)[f.idx++];
        if (pos == f.parent_pos) continue;
        int w = g.other_end(pos, v);
        if (disc[w] == -1) {
          edge_stack.push_back(pos);
          disc[w] = low[w] = timer++;
          ++f.children;
          st.push_back({w, pos});
        } else if (disc[w] < disc[v]) {
          edge_stack.push_back(pos);
          low[v] = std::min(low[v], disc[w]);
        }
      } else {
        int child_parent_pos = f.parent_pos;
        st.pop_back();
        if (!st.empty()) {
          Frame& pf = st.back();
          int u = pf.v;
          low[u] = std::min(low[u], low[v]);
          if (low[v] >= disc[u]) {
            // u separates the subtree of v: close a block.
            if (pf.parent_pos != -1 || pf.children > 1) is_art[u] = 1;
            emit_block(child_parent_pos);
          }
        }
      }
    }
  }
};

}  // namespace

BlockDecomposition biconnected_blocks(const Graph& g) {
  BlockBuilder bb(g);
  for (int v = 0; v < g.node_count(); ++v)
    if (bb.disc[v] == -1 && g.degree(v) > 0) bb.run(v);
  BlockDecomposition out;
  out.blocks = std::move(bb.blocks);
  std::vector<int> arts;
  for (int v = 0; v < g.node_count(); ++v)
    if (bb.is_art[v]) arts.push_back(v);
  out.articulation_points = NodeSubset::of(std::move(arts));
  return out;
}

std::vector<int> euler_tour(const Graph& g, const NodeSubset& component) {
  if (component.empty()) return {};
  std::vector<char> in_comp(g.node_count(), 0);
  for (int v : component.nodes) in_comp[v] = 1;
  int edge_total = 0;
  for (int v : component.nodes) {
    if (g.degree(v) % 2 != 0)
      throw std::invalid_argument("euler_tour: odd-degree node");
    for (int pos : g.incident(v)) {
      if (!in_comp[g.other_end(pos, v)])
        throw std::invalid_argument("euler_tour: edge leaves the component");
      ++edge_total;
    }
  }
  edge_total /= 2;
  if (edge_total == 0) {
    if (component.size() > 1)
      throw std::invalid_argument("euler_tour: disconnected component");
    return {};
  }
  // Hierholzer.
  std::vector<char> used(g.edge_count(), 0);
  std::vector<size_t> next(g.node_count(), 0);
  std::vector<int> stack_nodes, stack_edges, tour;
  int start = -1;
  for (int v : component.nodes)
    if (g.degree(v) > 0) { start = v; break; }
  stack_nodes.push_back(start);
  stack_edges.push_back(-1);
  while (!stack_nodes.empty()) {
    int v = stack_nodes.back();
    bool advanced = false;
    while (next[v] < g.incident(v).size()) {
      int pos = g.incident(v)[next[v]];
      if (used[pos]) { ++next[v]; continue; }
      used[pos] = 1;
      stack_nodes.push_back(g.other_end(pos, v));
      stack_edges.push_back(pos);
      advanced = true;
      break;
    }
    if (!advanced) {
      stack_nodes.pop_back();
      int pos = stack_edges.back();
      stack_edges.pop_back();
      if (pos != -1) tour.push_back(g.edge_at(pos).id);
    }
  }
  std::reverse(tour.begin(), tour.end());
  if (static_cast<int>(tour.size()) != edge_total)
    throw std::invalid_argument("euler_tour: disconnected component");
  return tour;
}

ContractionResult contract_node_sets(const Graph& g,
                                     const std::vector<NodeSubset>& sets) {
  int n = g.node_count();
  std::vector<int> set_of(n, -1);
  for (int i = 0; i < static_cast<int>(sets.size()); ++i) {
    for (int v : sets[i].nodes) {
      if (v < 0 || v >= n) throw std::invalid_argument("contract: bad node");
      if (set_of[v] != -1) throw std::invalid_argument("contract: overlapping sets");
      set_of[v] = i;
    }
  }
  std::vector<int> node_map(n, -1);
  std::vector<int> set_new_id(sets.size(), -1);
  int next = 0;
  for (int v = 0; v < n; ++v) {
    if (set_of[v] == -1) {
      node_map[v] = next++;
    } else if (set_new_id[set_of[v]] == -1) {
      set_new_id[set_of[v]] = next++;
    }
  }
  for (int v = 0; v < n; ++v)
    if (set_of[v] != -1) node_map[v] = set_new_id[set_of[v]];
  Graph h(next);
  for (const Edge& e : g.edges()) {
    int nu = node_map[e.u], nv = node_map[e.v];
    if (nu == nv) continue;  // internal to a set
    h.add_edge_with_id(e.id, nu, nv);
  }
  return {std::move(h), std::move(node_map)};
}

VirtualPairing add_virtual_pairing(const Graph& g, std::uint64_t seed) {
  int n = g.node_count();
  if (n % 2 != 0)
    throw std::invalid_argument("add_virtual_pairing: odd node count");
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::mt19937_64 rng(seed);
  for (int i = n - 1; i > 0; --i) {
    int j = static_cast<int>(rng() % static_cast<std::uint64_t>(i + 1));
    std::swap(order[i], order[j]);
  }
  Graph h(n);
  for (const Edge& e : g.edges()) h.add_edge_with_id(e.id, e.u, e.v);
  std::vector<int> virt;
  for (int i = 0; i < n; i += 2)
    virt.push_back(h.add_edge(order[i], order[i + 1]));
  return {std::move(h), std::move(virt)};
}

}  // namespace tf2m
