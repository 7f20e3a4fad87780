#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "tf2m/generators.hpp"
#include "tf2m/io.hpp"
#include "tf2m/oracle.hpp"
#include "tf2m/regular.hpp"
#include "tf2m/tf2m.hpp"

namespace {

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

long long now_us() {
  return std::chrono::duration_cast<std::chrono::microseconds>(
             std::chrono::steady_clock::now().time_since_epoch())
      .count();
}

int cmd_solve(const std::string& path, bool regular, std::uint64_t seed) {
  tf2m::Graph g = tf2m::parse_graph(slurp(path));
  tf2m::SolveReport rep;
  rep.n = g.node_count();
  rep.m = g.edge_count();
  rep.d = g.regular_degree();

  long long t0 = now_us();
  if (regular) {
    rep.x = tf2m::solve_regular(g);  // throws on non-regular input
    long long t1 = now_us();
    tf2m::Certificate cert = tf2m::certificate_for(g, {});
    rep.u = cert.u;
    rep.bound = cert.bound;
    rep.cluster_count = cert.cluster_count;
    rep.timings_us.emplace_back("solve", t1 - t0);
    rep.timings_us.emplace_back("certificate", now_us() - t1);
  } else {
    tf2m::SolveResult res = tf2m::solve_max_tf2m(g);
    rep.x = std::move(res.x);
    rep.u = res.cert.u;
    rep.bound = res.cert.bound;
    rep.cluster_count = res.cert.cluster_count;
    rep.timings_us.emplace_back("solve", now_us() - t0);
  }
  (void)seed;

  std::string text = tf2m::emit_report(g, rep);
  tf2m::VerifyResult v = tf2m::verify_report(g, text);
  for (const auto& [phase, us] : rep.timings_us)
    std::cerr << "time " << phase << " " << us << "us\n";
  std::cout << text;
  if (!v.ok) {
    std::cerr << "verification failed: " << v.reason << "\n";
    return 2;
  }
  return 0;
}

int cmd_verify(const std::string& graph_path, const std::string& report_path) {
  tf2m::Graph g = tf2m::parse_graph(slurp(graph_path));
  tf2m::VerifyResult v = tf2m::verify_report(g, slurp(report_path));
  if (!v.ok) {
    std::cerr << "verification failed: " << v.reason << "\n";
    return 2;
  }
  std::cout << "verified\n";
  return 0;
}

int cmd_oracle(const std::string& path) {
  tf2m::Graph g = tf2m::parse_graph(slurp(path));
  tf2m::OracleLimits limits;
  tf2m::BruteTf2m best = tf2m::brute_max_tf2m(g, limits);
  std::cout << "size " << best.size << "\n";
  for (auto [id, val] : best.x.values()) {
    const tf2m::Edge& e = g.edge_by_id(id);
    std::cout << "x " << std::min(e.u, e.v) + 1 << " " << std::max(e.u, e.v) + 1
              << " " << val << "\n";
  }
  return 0;
}

int cmd_gen(const std::string& kind, const std::vector<double>& params,
            std::uint64_t seed) {
  std::cout << tf2m::format_graph(tf2m::generate(kind, params, seed));
  return 0;
}

int cmd_bench(const std::string& family, const std::vector<int>& sizes, int d,
              std::uint64_t seed) {
  std::cout << "family,n,m,d,solve_us,size,deficiency\n";
  for (int n : sizes) {
    tf2m::Graph g;
    if (family == "regular") {
      g = tf2m::gen_random_regular(n, d, seed + n);
    } else if (family == "random") {
      g = tf2m::gen_random(n, 3.0 / n, seed + n);
    } else {
      throw std::invalid_argument("bench: unknown family " + family);
    }
    long long t0 = now_us();
    tf2m::TwoMatching x = family == "regular" ? tf2m::solve_regular(g)
                                              : tf2m::solve_max_tf2m(g).x;
    long long us = now_us() - t0;
    std::cout << family << "," << n << "," << g.edge_count() << ","
              << (family == "regular" ? d : -1) << "," << us << "," << x.size()
              << "," << n - x.size() << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"maximum triangle-free 2-matchings with dual certificates"};
  app.require_subcommand(1);

  std::string path, report_path, kind, family;
  bool regular = false;
  std::uint64_t seed = 1;
  std::vector<double> params;
  std::vector<int> sizes;
  int degree = 3;

  auto* solve = app.add_subcommand("solve", "solve and print a report");
  solve->add_option("file", path, "graph file, - for stdin")->required();
  solve->add_flag("--regular", regular, "use the regular-graph pipeline");
  solve->add_option("--seed", seed, "seed for randomized subroutines");

  auto* verify = app.add_subcommand("verify", "re-verify a report");
  verify->add_option("graph", path)->required();
  verify->add_option("report", report_path)->required();

  auto* oracle = app.add_subcommand("oracle", "brute-force optimum (small inputs)");
  oracle->add_option("file", path)->required();

  auto* gen = app.add_subcommand("gen", "emit a generated graph");
  gen->add_option("kind", kind)->required();
  gen->add_option("params", params, "numeric parameters");
  gen->add_option("--seed", seed);

  auto* bench = app.add_subcommand("bench", "timing curves as CSV");
  bench->add_option("family", family)->required();
  bench->add_option("--sizes", sizes)->delimiter(',')->required();
  bench->add_option("--degree", degree);
  bench->add_option("--seed", seed);

  CLI11_PARSE(app, argc, argv);

  try {
    if (solve->parsed()) return cmd_solve(path, regular, seed);
    if (verify->parsed()) return cmd_verify(path, report_path);
    if (oracle->parsed()) return cmd_oracle(path);
    if (gen->parsed()) return cmd_gen(kind, params, seed);
    if (bench->parsed()) return cmd_bench(family, sizes, degree, seed);
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 1;
  }
  return 1;
}
