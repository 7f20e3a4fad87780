#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tf2m/graph.hpp"

namespace tf2m {

Graph gen_cycle(int n);
Graph gen_complete(int n);
Graph gen_petersen();
Graph gen_prism();
// Chain of k triangles, consecutive ones sharing a node: 2k+1 nodes, 3k edges.
Graph gen_triangle_cluster(int k);
// Each pair independently with probability p.
Graph gen_random(int n, double p, std::uint64_t seed);
// Simple d-regular graph: pairing model repaired by edge switching.
Graph gen_random_regular(int n, int d, std::uint64_t seed);

// CLI dispatcher. kind in {cycle, complete, petersen, prism,
// triangle_cluster, random, random_regular}; params as listed above.
Graph generate(const std::string& kind, const std::vector<double>& params,
               std::uint64_t seed);

}  // namespace tf2m
