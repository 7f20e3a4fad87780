#include "tf2m/generators.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>

namespace tf2m {

Graph gen_cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle: need n >= 3");
  Graph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

Graph gen_complete(int n) {
  if (n < 1) throw std::invalid_argument("complete: need n >= 1");
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph gen_petersen() {
  Graph g(10);
  for (int i = 0; i < 5; ++i) g.add_edge(i, (i + 1) % 5);
  for (int i = 0; i < 5; ++i) g.add_edge(5 + i, 5 + (i + 2) % 5);
  for (int i = 0; i < 5; ++i) g.add_edge(i, 5 + i);
  return g;
}

Graph gen_prism() {
  Graph g(6);
  for (int i = 0; i < 3; ++i) g.add_edge(i, (i + 1) % 3);
  for (int i = 0; i < 3; ++i) g.add_edge(3 + i, 3 + (i + 1) % 3);
  for (int i = 0; i < 3; ++i) g.add_edge(i, 3 + i);
  return g;
}

Graph gen_triangle_cluster(int k) {
  if (k < 0) throw std::invalid_argument("triangle_cluster: need k >= 0");
  Graph g(2 * k + 1);
  for (int i = 0; i < k; ++i) {
    int a = 2 * i, b = 2 * i + 1, c = 2 * i + 2;
    g.add_edge(a, b);
    g.add_edge(b, c);
    g.add_edge(a, c);
  }
  return g;
}

Graph gen_random(int n, double p, std::uint64_t seed) {
  if (n < 0 || p < 0.0 || p > 1.0)
    throw std::invalid_argument("random: bad parameters");
  std::mt19937_64 rng(seed);
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      // raw 53-bit draw: identical across standard libraries
      if ((rng() >> 11) * 0x1.0p-53 < p) g.add_edge(u, v);
  return g;
}

Graph gen_random_regular(int n, int d, std::uint64_t seed) {
  if (n < 1 || d < 0 || d >= n || (n * d) % 2 != 0)
    throw std::invalid_argument("random_regular: infeasible parameters");
  std::mt19937_64 rng(seed);
  int m = n * d / 2;

  for (int attempt = 0; attempt < 64; ++attempt) {
    // Pairing model: nd points, point j on node j/d, shuffled and paired.
    std::vector<int> pts(n * d);
    for (int i = 0; i < n * d; ++i) pts[i] = i;
    for (int i = n * d - 1; i > 0; --i)
      std::swap(pts[i], pts[rng() % (i + 1)]);
    std::vector<std::pair<int, int>> pairs(m);
    std::map<std::pair<int, int>, int> cnt;
    for (int i = 0; i < m; ++i) {
      int u = pts[2 * i] / d, v = pts[2 * i + 1] / d;
      pairs[i] = {std::min(u, v), std::max(u, v)};
      ++cnt[pairs[i]];
    }
    auto bad = [&](int i) {
      return pairs[i].first == pairs[i].second || cnt[pairs[i]] > 1;
    };
    // Switch bad pairs against random partners until the multigraph is simple.
    long long budget = 400LL * m + 4000;
    bool clean = false;
    while (budget > 0) {
      int i = -1;
      for (int t = 0; t < m; ++t)
        if (bad(t)) {
          i = t;
          break;
        }
      if (i == -1) {
        clean = true;
        break;
      }
      int j = static_cast<int>(rng() % m);
      int side = static_cast<int>(rng() % 2);
      --budget;
      if (j == i) continue;
      auto [a, b] = pairs[i];
      auto [c, e] = pairs[j];
      if (side) std::swap(c, e);
      std::pair<int, int> p1{std::min(a, c), std::max(a, c)};
      std::pair<int, int> p2{std::min(b, e), std::max(b, e)};
      if (a == c || b == e) continue;
      --cnt[pairs[i]];
      --cnt[pairs[j]];
      if (cnt[p1] == 0 && cnt[p2] == 0 && p1 != p2) {
        pairs[i] = p1;
        pairs[j] = p2;
        ++cnt[p1];
        ++cnt[p2];
      } else {
        ++cnt[pairs[i]];
        ++cnt[pairs[j]];
      }
    }
    if (!clean) continue;
    std::sort(pairs.begin(), pairs.end());
    Graph g(n);
    for (auto [u, v] : pairs) g.add_edge(u, v);
    if (!g.is_simple() || g.regular_degree() != d)
      throw std::logic_error("random_regular: repair produced a bad graph");
    return g;
  }
  throw std::runtime_error("random_regular: could not reach a simple graph");
}

Graph generate(const std::string& kind, const std::vector<double>& params,
               std::uint64_t seed) {
  auto want = [&](size_t k) {
    if (params.size() != k)
      throw std::invalid_argument("generate: wrong parameter count for " + kind);
  };
  if (kind == "cycle") {
    want(1);
    return gen_cycle(static_cast<int>(params[0]));
  }
  if (kind == "complete") {
    want(1);
    return gen_complete(static_cast<int>(params[0]));
  }
  if (kind == "petersen") {
    want(0);
    return gen_petersen();
  }
  if (kind == "prism") {
    want(0);
    return gen_prism();
  }
  if (kind == "triangle_cluster") {
    want(1);
    return gen_triangle_cluster(static_cast<int>(params[0]));
  }
  if (kind == "random") {
    want(2);
    return gen_random(static_cast<int>(params[0]), params[1], seed);
  }
  if (kind == "random_regular") {
    want(2);
    return gen_random_regular(static_cast<int>(params[0]),
                              static_cast<int>(params[1]), seed);
  }
  throw std::invalid_argument("generate: unknown kind " + kind);
}

}  // namespace tf2m
