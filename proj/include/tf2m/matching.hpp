#pragma once

#include "tf2m/graph.hpp"

namespace tf2m {

// A matching as a set of edge ids; no two edges share a node.
struct Matching {
  std::vector<int> edge_ids;  // sorted

  int size() const { return static_cast<int>(edge_ids.size()); }
  // mate[v] = matched partner node, or -1. Throws if not a matching.
  std::vector<int> mates(const Graph& g) const;
  // matched_edge[v] = id of the matching edge at v, or -1.
  std::vector<int> matched_edge_at(const Graph& g) const;
};

// Maximum cardinality matching, blossom shrinking. Deterministic: roots and
// neighbors are scanned in ascending node order.
Matching max_matching(const Graph& g);

// One ear of an odd ear decomposition: node path n0..nk with the edges
// between consecutive nodes. Both endpoints lie in the previously built
// graph (they may coincide); interior nodes are new; k is odd.
struct Ear {
  std::vector<int> nodes;
  std::vector<int> edge_ids;
};

struct EarDecomposition {
  int root = -1;
  std::vector<Ear> ears;
};

// Odd ear decomposition of a factor-critical graph. Throws if the graph is
// not factor-critical.
EarDecomposition odd_ear_decomposition(const Graph& component);

// Checks ear-decomposition shape: starts at root, every ear odd, endpoints
// in the already-built graph, interior nodes new, ears cover all edges once.
bool valid_odd_ear_decomposition(const Graph& component,
                                 const EarDecomposition& ed);

// Matching of a factor-critical component covering everything except v.
Matching matching_missing_node(const Graph& component,
                               const EarDecomposition& ears, int v);

// One factor-critical component of G[D], with its induced graph (local node
// ids, global edge ids) and odd ear decomposition in local ids.
struct DComponent {
  NodeSubset nodes;             // global ids
  Graph graph;                  // induced subgraph
  std::vector<int> orig_nodes;  // local -> global
  EarDecomposition ears;        // local ids
};

struct EGDecomposition {
  NodeSubset d, a, c;
  std::vector<DComponent> components_of_d;
};

// Edmonds-Gallai decomposition from a maximum matching. Throws if m is not
// maximum (an augmenting path is found).
EGDecomposition edmonds_gallai(const Graph& g, const Matching& m);

// Same, with ear decompositions skipped (left empty). The solver uses this
// and builds ears only for the components that need them.
EGDecomposition edmonds_gallai_core(const Graph& g, const Matching& m,
                                    bool with_ears);

struct BipartiteGraph {
  struct BEdge {
    int upper;
    int lower;
    int payload;  // caller-defined id carried through matching operations
  };
  int n_upper = 0;
  int n_lower = 0;
  std::vector<BEdge> edges;
};

// Matching in a bipartite graph as a set of edge indices into h.edges.
struct BipartiteMatching {
  std::vector<int> bedges;

  int size() const { return static_cast<int>(bedges.size()); }
  // mate arrays (bedge index or -1); throws if not a matching of h.
  void mates(const BipartiteGraph& h, std::vector<int>* mate_upper,
             std::vector<int>* mate_lower) const;
};

// Hopcroft-Karp starting from `initial`; every node matched by `initial`
// stays matched.
BipartiteMatching max_matching_bipartite(const BipartiteGraph& h,
                                         const BipartiteMatching& initial);

struct VertexCover {
  NodeSubset upper, lower;
  int size() const { return upper.size() + lower.size(); }
};

// Koenig cover of the same cardinality as the maximum matching m.
VertexCover koenig_vertex_cover(const BipartiteGraph& h,
                                const BipartiteMatching& m);

}  // namespace tf2m
