#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "tf2m/graph.hpp"
#include "tf2m/tf2m.hpp"

namespace tf2m {

// DIMACS-like: `p edge <n> <m>` header, `e <u> <v>` lines, 1-based ids,
// `c`-prefixed comments and blank lines ignored. Duplicate `e` lines create
// parallel edges; loops are rejected.
Graph parse_graph(const std::string& text);
std::string format_graph(const Graph& g);

struct SolveReport {
  int n = 0;
  int m = 0;
  int d = -1;  // common degree, -1 if not regular
  TwoMatching x;
  NodeSubset u;
  int bound = 0;
  int cluster_count = 0;
  std::vector<std::pair<std::string, long long>> timings_us;  // stderr only
};

// Deterministic key-value text: graph stats, size/bound/cluster lines,
// canonical sorted `x <u> <v> <value>` and `u <v>` lines (1-based), a
// recomputed `ok` verdict and a checksum over everything above it. Timings
// are never part of the text.
std::string emit_report(const Graph& g, const SolveReport& r);

// Inverse of emit_report for the solution fields. Throws std::runtime_error
// on malformed text or x lines naming non-edges.
SolveReport parse_report(const Graph& g, const std::string& text);

struct VerifyResult {
  bool ok = false;
  std::string reason;  // empty when ok
};

// Full re-verification: checksum, 2-matching validity, size and certificate
// arithmetic, and bound == size (optimality).
VerifyResult verify_report(const Graph& g, const std::string& report_text);

std::uint64_t fnv1a(const std::string& data);

}  // namespace tf2m
