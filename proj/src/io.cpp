#include "tf2m/io.hpp"

#include <algorithm>
#include <array>
#include <sstream>
#include <stdexcept>

namespace tf2m {

Graph parse_graph(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  bool have_header = false;
  int n = 0, m = 0, seen = 0;
  Graph g;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag) || tag == "c") continue;
    auto fail = [&](const std::string& why) {
      throw std::runtime_error("parse error at line " + std::to_string(lineno) +
                               ": " + why);
    };
    if (tag == "p") {
      std::string kind;
      if (have_header) fail("duplicate header");
      if (!(ls >> kind >> n >> m) || kind != "edge" || n < 0 || m < 0)
        fail("malformed header, expected `p edge <n> <m>`");
      have_header = true;
      g = Graph(n);
    } else if (tag == "e") {
      int u, v;
      if (!have_header) fail("edge before header");
      if (!(ls >> u >> v)) fail("malformed edge line");
      if (u < 1 || u > n || v < 1 || v > n) fail("node id out of range");
      if (u == v) fail("loop edge");
      g.add_edge(u - 1, v - 1);
      ++seen;
    } else {
      fail("unknown line tag `" + tag + "`");
    }
  }
  if (!have_header) throw std::runtime_error("parse error: missing header");
  if (seen != m)
    throw std::runtime_error("parse error: header announces " +
                             std::to_string(m) + " edges, found " +
                             std::to_string(seen));
  return g;
}

std::string format_graph(const Graph& g) {
  std::ostringstream out;
  out << "p edge " << g.node_count() << " " << g.edge_count() << "\n";
  for (const Edge& e : g.edges()) out << "e " << e.u + 1 << " " << e.v + 1 << "\n";
  return out.str();
}

std::uint64_t fnv1a(const std::string& data) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string emit_report(const Graph& g, const SolveReport& r) {
  Tf2mVerdict verdict = validate_tf2m(g, r.x);
  Certificate cert = certificate_for(g, r.u);
  bool ok = verdict.ok() && r.x.size() == r.bound && cert.bound == r.bound &&
            cert.cluster_count == r.cluster_count;

  // Canonical x lines: 1-based endpoints with u < v, sorted.
  std::vector<std::array<int, 3>> xs;
  for (auto [id, val] : r.x.values()) {
    const Edge& e = g.edge_by_id(id);
    xs.push_back({std::min(e.u, e.v) + 1, std::max(e.u, e.v) + 1, val});
  }
  std::sort(xs.begin(), xs.end());

  std::ostringstream body;
  body << "tf2m report\n";
  body << "graph " << r.n << " " << r.m << "\n";
  body << "regular " << r.d << "\n";
  body << "size " << r.x.size() << "\n";
  body << "bound " << r.bound << "\n";
  body << "clusters " << r.cluster_count << "\n";
  for (const auto& t : xs)
    body << "x " << t[0] << " " << t[1] << " " << t[2] << "\n";
  for (int v : r.u.nodes) body << "u " << v + 1 << "\n";
  body << "ok " << (ok ? 1 : 0) << "\n";

  std::ostringstream out;
  out << body.str();
  out << "checksum " << std::hex << fnv1a(body.str()) << "\n";
  return out.str();
}

SolveReport parse_report(const Graph& g, const std::string& text) {
  std::istringstream in(text);
  std::string line;
  SolveReport r;
  std::string region;
  bool saw_checksum = false, header = false;
  std::uint64_t stored = 0;
  std::vector<int> u_nodes;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string tag;
    ls >> tag;
    if (tag == "checksum") {
      if (!(ls >> std::hex >> stored))
        throw std::runtime_error("report: malformed checksum line");
      saw_checksum = true;
      continue;
    }
    if (saw_checksum) throw std::runtime_error("report: trailing content");
    region += line;
    region += "\n";
    if (tag == "tf2m") {
      header = true;
    } else if (tag == "graph") {
      if (!(ls >> r.n >> r.m)) throw std::runtime_error("report: bad graph line");
    } else if (tag == "regular") {
      if (!(ls >> r.d)) throw std::runtime_error("report: bad regular line");
    } else if (tag == "size") {
      int s;
      if (!(ls >> s) || s < 0) throw std::runtime_error("report: bad size line");
      // agreement with the x lines is checked in verify_report
    } else if (tag == "bound") {
      if (!(ls >> r.bound)) throw std::runtime_error("report: bad bound line");
    } else if (tag == "clusters") {
      if (!(ls >> r.cluster_count))
        throw std::runtime_error("report: bad clusters line");
    } else if (tag == "x") {
      int u, v, val;
      if (!(ls >> u >> v >> val) || val < 0 || val > 2)
        throw std::runtime_error("report: bad x line");
      if (u < 1 || u > g.node_count() || v < 1 || v > g.node_count())
        throw std::runtime_error("report: x node out of range");
      int id = g.lowest_edge_id_between(u - 1, v - 1);
      if (id == -1) throw std::runtime_error("report: x line names a non-edge");
      if (r.x.value(id) != 0)
        throw std::runtime_error("report: duplicate x line");
      r.x.set(id, val);
    } else if (tag == "u") {
      int v;
      if (!(ls >> v) || v < 1 || v > g.node_count())
        throw std::runtime_error("report: bad u line");
      u_nodes.push_back(v - 1);
    } else if (tag == "ok") {
      // re-derived during verification
    } else if (!tag.empty()) {
      throw std::runtime_error("report: unknown line tag `" + tag + "`");
    }
  }
  if (!header || !saw_checksum)
    throw std::runtime_error("report: missing header or checksum");
  if (stored != fnv1a(region))
    throw std::runtime_error("report: checksum mismatch");
  r.u = NodeSubset::of(std::move(u_nodes));
  return r;
}

VerifyResult verify_report(const Graph& g, const std::string& report_text) {
  SolveReport r;
  try {
    r = parse_report(g, report_text);
  } catch (const std::exception& ex) {
    return {false, ex.what()};
  }
  if (r.n != g.node_count() || r.m != g.edge_count())
    return {false, "graph dimensions disagree"};
  Tf2mVerdict verdict = validate_tf2m(g, r.x);
  if (!verdict.ok())
    return {false, "invalid 2-matching: " + (verdict.violations.empty()
                                                 ? std::string("unknown")
                                                 : verdict.violations[0])};
  // The reported size line must agree with the x lines; both are inside the
  // checksummed region, so extract it again for the arithmetic check.
  int claimed_size = -1;
  {
    std::istringstream in(report_text);
    std::string line, tag;
    while (std::getline(in, line)) {
      std::istringstream ls(line);
      if (ls >> tag && tag == "size") ls >> claimed_size;
    }
  }
  if (claimed_size != r.x.size()) return {false, "size line disagrees with x"};
  Certificate cert = certificate_for(g, r.u);
  if (cert.cluster_count != r.cluster_count)
    return {false, "cluster count disagrees"};
  if (cert.bound != r.bound) return {false, "bound arithmetic disagrees"};
  if (r.bound != r.x.size()) return {false, "certificate does not match size"};
  return {true, ""};
}

}  // namespace tf2m
