#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

namespace tf2m {

struct Edge {
  int id = -1;
  int u = -1;
  int v = -1;
};

// Sorted set of node ids.
struct NodeSubset {
  std::vector<int> nodes;  // strictly increasing

  static NodeSubset of(std::vector<int> v);

  int size() const { return static_cast<int>(nodes.size()); }
  bool empty() const { return nodes.empty(); }
  bool contains(int v) const;

  auto begin() const { return nodes.begin(); }
  auto end() const { return nodes.end(); }
  bool operator==(const NodeSubset&) const = default;
};

// Undirected loop-free multigraph with stable edge ids. Edge ids survive
// subgraph extraction and contraction, so 2-matchings computed on a subgraph
// lift to the parent graph by id.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  // Assigns the next free id and returns it.
  int add_edge(int u, int v);
  void add_edge_with_id(int id, int u, int v);
  void add_node() { ++n_; adj_.emplace_back(); }

  int node_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge_at(int pos) const { return edges_[pos]; }

  // Positions into edges() of the edges incident to v.
  const std::vector<int>& incident(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  int other_end(int pos, int v) const;

  bool has_edge_id(int id) const { return id_pos_.count(id) != 0; }
  int position_of_id(int id) const;
  const Edge& edge_by_id(int id) const { return edges_[position_of_id(id)]; }
  // Lowest edge id connecting u and v, or -1.
  int lowest_edge_id_between(int u, int v) const;

  bool is_simple() const;
  // Common degree if regular (empty graph: 0), -1 if not regular.
  int regular_degree() const;

  // Induced subgraph on `nodes`, renumbered 0..k-1 in the given order.
  // Edge ids are preserved; orig_nodes (if non-null) receives local -> parent.
  Graph induced(const std::vector<int>& nodes,
                std::vector<int>* orig_nodes = nullptr) const;
  // Spanning subgraph keeping only the edges whose id is in edge_ids.
  Graph edge_subgraph(const std::vector<int>& edge_ids) const;
  // Spanning subgraph dropping the edges whose id is in edge_ids.
  Graph without_edges(const std::vector<int>& edge_ids) const;

  // Throws std::logic_error if adjacency and edge list disagree.
  void check_consistent() const;

 private:
  int n_ = 0;
  int next_id_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adj_;
  std::unordered_map<int, int> id_pos_;
};

struct Block {
  std::vector<int> edge_ids;
  std::vector<int> nodes;  // sorted
};

struct BlockDecomposition {
  std::vector<Block> blocks;
  NodeSubset articulation_points;
};

std::vector<NodeSubset> connected_components(const Graph& g);

BlockDecomposition biconnected_blocks(const Graph& g);

// Closed walk through every edge of the component exactly once, as edge ids.
// Requires all component degrees even and the component connected in g.
std::vector<int> euler_tour(const Graph& g, const NodeSubset& component);

struct ContractionResult {
  Graph graph;
  std::vector<int> node_map;  // parent node -> contracted node
};

// Contracts each set to a single node. Edges inside a set are deleted; all
// other edges keep their ids, so original endpoints are recoverable from the
// parent graph. Sets must be pairwise disjoint.
ContractionResult contract_node_sets(const Graph& g,
                                     const std::vector<NodeSubset>& sets);

struct VirtualPairing {
  Graph graph;
  std::vector<int> virtual_edge_ids;
};

// Adds a seeded perfect pairing of the nodes as fresh edges. Requires even n.
VirtualPairing add_virtual_pairing(const Graph& g, std::uint64_t seed);

}  // namespace tf2m
