#pragma once

#include <map>
#include <string>

#include "tf2m/graph.hpp"
#include "tf2m/matching.hpp"

namespace tf2m {

// Edge-id -> {0,1,2} assignment; only nonzero values are stored.
class TwoMatching {
 public:
  void set(int edge_id, int value);
  int value(int edge_id) const;
  int size() const { return size_; }
  bool empty() const { return values_.empty(); }
  const std::map<int, int>& values() const { return values_; }

  bool operator==(const TwoMatching&) const = default;

 private:
  std::map<int, int> values_;
  int size_ = 0;
};

struct SupportCircuit {
  std::vector<int> nodes;     // cyclic order, nodes[i] -- nodes[i+1]
  std::vector<int> edge_ids;  // edge_ids[i] connects nodes[i], nodes[i+1 mod L]
};

struct SupportPath {
  std::vector<int> nodes;
  std::vector<int> edge_ids;
};

// Decomposition of the value-1 edges into paths and circuits, plus the
// double edges. Paths are empty iff the 2-matching is basic (together with
// all circuits odd and >= 3 nodes).
struct SupportDecomposition {
  std::vector<int> double_edges;
  std::vector<SupportCircuit> circuits;
  std::vector<SupportPath> paths;
};

// Throws if x violates the per-node degree cap or uses unknown edges.
SupportDecomposition decompose_support(const Graph& g, const TwoMatching& x);

struct Tf2mVerdict {
  bool edges_ok = true;
  bool degree_ok = true;
  bool triangle_free = true;
  bool basic = true;
  std::vector<std::string> violations;
  bool ok() const { return edges_ok && degree_ok && triangle_free && basic; }
};

Tf2mVerdict validate_tf2m(const Graph& g, const TwoMatching& x);

// Block test: a connected component is a triangle cluster iff every block of
// it is a triangle; a single node counts as a cluster.
bool is_triangle_cluster(const Graph& g, const NodeSubset& component);

// Classification of a factor-critical graph: triangle cluster, or a
// perfect triangle-free 2-matching exists (and is produced).
struct FCClass {
  bool is_cluster = false;
  TwoMatching perfect;  // perfect triangle-free basic 2-matching when !is_cluster
};

// `ears`, when given, is validated; the construction itself does not need it.
FCClass classify_factor_critical(const Graph& component,
                                 const EarDecomposition* ears = nullptr);

// Basic 2-matching of at least the same size; triangle-freeness preserved.
TwoMatching make_basic(const Graph& g, const TwoMatching& x);

struct Certificate {
  NodeSubset u;
  int cluster_count = 0;
  int bound = 0;  // |VG| + |U| - cluster_count
};

// The dual bound |VG| + |U| - (cluster components of G - U).
int evaluate_certificate(const Graph& g, const NodeSubset& u);
Certificate certificate_for(const Graph& g, NodeSubset u);

struct SolveResult {
  TwoMatching x;
  Certificate cert;
};

// Maximum triangle-free 2-matching with a matching min-max certificate
// (cert.bound == x.size()). Requires a simple graph.
SolveResult solve_max_tf2m(const Graph& g);

}  // namespace tf2m
