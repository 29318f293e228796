#include "cdsample/graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace cdsample {

Graph Graph::from_edges(int node_count, std::vector<std::pair<int, int>> edges) {
  Graph g;
  g.node_count_ = node_count;
  for (auto& [u, v] : edges) {
    if (u < 0 || u >= node_count || v < 0 || v >= node_count)
      throw std::out_of_range("edge endpoint outside node range");
    if (u > v) std::swap(u, v);
  }
  std::erase_if(edges, [](const auto& e) { return e.first == e.second; });
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  g.edges_ = std::move(edges);
  g.adjacency_.assign(static_cast<std::size_t>(node_count), {});
  for (const auto& [u, v] : g.edges_) {
    g.adjacency_[static_cast<std::size_t>(u)].push_back(v);
    g.adjacency_[static_cast<std::size_t>(v)].push_back(u);
  }
  for (auto& nbrs : g.adjacency_) std::sort(nbrs.begin(), nbrs.end());
  return g;
}

bool Graph::has_edge(int u, int v) const {
  if (u < 0 || v < 0 || u >= node_count_ || v >= node_count_ || u == v) return false;
  const auto& a = adjacency_[static_cast<std::size_t>(degree(u) <= degree(v) ? u : v)];
  int target = degree(u) <= degree(v) ? v : u;
  return std::binary_search(a.begin(), a.end(), target);
}

std::vector<int> Graph::degree_sequence() const {
  std::vector<int> degs(static_cast<std::size_t>(node_count_));
  for (int v = 0; v < node_count_; ++v) degs[static_cast<std::size_t>(v)] = degree(v);
  return degs;
}

namespace {

bool parse_int64(std::string_view tok, std::int64_t& out) {
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
  return ec == std::errc{} && ptr == tok.data() + tok.size();
}

}  // namespace

LoadedGraph load_edge_list(std::istream& in) {
  LoadedGraph result;
  std::vector<std::pair<int, int>> raw;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos) continue;
    if (line[start] == '#') continue;
    std::istringstream fields(line);
    std::string a, b, extra;
    fields >> a >> b;
    if (b.empty()) throw ParseError("expected two tokens", line_no);
    if (fields >> extra) throw ParseError("expected two tokens, got more", line_no);
    std::int64_t ua, ub;
    if (!parse_int64(a, ua) || !parse_int64(b, ub))
      throw ParseError("non-integer token", line_no);
    ++result.report.data_lines;
    ++result.report.raw_edges;
    int iu = result.ids.intern(ua);
    int iv = result.ids.intern(ub);
    if (iu == iv) {
      ++result.report.self_loops_dropped;
      continue;
    }
    raw.emplace_back(iu, iv);
  }
  std::size_t before = raw.size();
  result.graph = Graph::from_edges(static_cast<int>(result.ids.size()), std::move(raw));
  result.report.duplicates_dropped = before - result.graph.edge_count();
  return result;
}

LoadedGraph load_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return load_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g, const NodeIdMap* ids) {
  out << "# nodes: " << g.node_count() << " edges: " << g.edge_count() << "\n";
  for (const auto& [u, v] : g.edges()) {
    if (ids)
      out << ids->external_id(u) << "\t" << ids->external_id(v) << "\n";
    else
      out << u << "\t" << v << "\n";
  }
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& nodes) {
  std::vector<int> sorted(nodes);
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (int v : sorted)
    if (v < 0 || v >= g.node_count()) throw std::domain_error("node index out of range");

  std::vector<int> remap(static_cast<std::size_t>(g.node_count()), -1);
  for (std::size_t i = 0; i < sorted.size(); ++i) remap[static_cast<std::size_t>(sorted[i])] = static_cast<int>(i);

  std::vector<std::pair<int, int>> edges;
  for (int v : sorted) {
    int rv = remap[static_cast<std::size_t>(v)];
    for (int w : g.neighbors(v)) {
      if (w <= v) continue;
      int rw = remap[static_cast<std::size_t>(w)];
      if (rw >= 0) edges.emplace_back(rv, rw);
    }
  }
  return Graph::from_edges(static_cast<int>(sorted.size()), std::move(edges));
}

}  // namespace cdsample
