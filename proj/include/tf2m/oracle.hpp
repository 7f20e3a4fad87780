#pragma once

#include "tf2m/graph.hpp"
#include "tf2m/tf2m.hpp"

namespace tf2m {

// Brute-force ground truth, deliberately independent of the structural
// algorithms: no blossom search, no block decompositions. Desk scale only.
struct OracleLimits {
  int max_nodes = 16;
  int max_edges = 20;
};

struct BruteTf2m {
  int size = 0;
  TwoMatching x;
};

// Exact maximum triangle-free 2-matching of a simple graph by exhaustive
// cover search over node subsets (doubled adjacent pairs plus odd cycles of
// length >= 5). Bounded by limits.max_nodes.
BruteTf2m brute_max_tf2m(const Graph& g, const OracleLimits& limits = {});

// Same value by direct enumeration of all edge assignments {0,1,2}^E with
// degree/triangle pruning. Exponential in edges; cross-check for the above.
int brute_max_tf2m_enum(const Graph& g, const OracleLimits& limits = {});

struct BruteCertificate {
  int value = 0;
  NodeSubset u;
};

// Exact minimum of |V| + |U| - cluster(G - U) over all node subsets U, with
// clusters recognized by the definition (edge partition search), not blocks.
BruteCertificate brute_min_certificate(const Graph& g,
                                       const OracleLimits& limits = {});

// Exact maximum matching size; verifies the Tutte-Berge formula by subset
// enumeration when the graph is small enough.
int brute_max_matching(const Graph& g, const OracleLimits& limits = {});

// Nodes missed by some maximum matching, via one matching computation per
// deleted node.
NodeSubset brute_eg_D(const Graph& g, const OracleLimits& limits = {});

// Definition-based triangle-cluster test: connected, edges partition into
// triangles pairwise sharing at most one node, every shared node an
// articulation point. A single node counts as a cluster.
bool brute_is_cluster(const Graph& g, const OracleLimits& limits = {});

}  // namespace tf2m
