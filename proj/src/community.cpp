#include "cdsample/community.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <queue>
#include <set>
#include <unordered_map>

namespace cdsample {

Partition Partition::from_labels(std::vector<int> labels) {
  Partition p;
  p.labels = std::move(labels);
  int max_label = -1;
  for (int l : p.labels) max_label = std::max(max_label, l);
  p.communities.assign(static_cast<std::size_t>(max_label + 1), {});
  for (std::size_t v = 0; v < p.labels.size(); ++v)
    p.communities[static_cast<std::size_t>(p.labels[v])].push_back(static_cast<int>(v));
  return p;
}

double modularity(const Graph& g, const Partition& p) {
  if (g.edge_count() == 0) throw std::domain_error("modularity undefined on edgeless graph");
  const double m = static_cast<double>(g.edge_count());
  std::vector<long long> intra(p.communities.size(), 0);
  std::vector<long long> deg(p.communities.size(), 0);
  for (int v = 0; v < g.node_count(); ++v)
    deg[static_cast<std::size_t>(p.labels[static_cast<std::size_t>(v)])] += g.degree(v);
  for (const auto& [u, v] : g.edges()) {
    int cu = p.labels[static_cast<std::size_t>(u)];
    int cv = p.labels[static_cast<std::size_t>(v)];
    if (cu == cv) ++intra[static_cast<std::size_t>(cu)];
  }
  double q = 0.0;
  for (std::size_t c = 0; c < p.communities.size(); ++c) {
    double a = static_cast<double>(deg[c]) / (2.0 * m);
    q += static_cast<double>(intra[c]) / m - a * a;
  }
  return q;
}

std::vector<int> Dendrogram::members(int id) const {
  std::vector<int> out;
  std::vector<int> stack = {id};
  while (!stack.empty()) {
    int cur = stack.back();
    stack.pop_back();
    const auto& node = nodes[static_cast<std::size_t>(cur)];
    if (node.is_leaf()) {
      const auto& mem = leaf_members[static_cast<std::size_t>(cur)];
      out.insert(out.end(), mem.begin(), mem.end());
    } else {
      stack.push_back(node.left);
      stack.push_back(node.right);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

struct MergeRecord {
  int keep;        // surviving community id (the smaller)
  int dead;        // absorbed community id
  long long cross; // edges between the two at merge time
};

struct HeapEntry {
  double dq;
  int i, j;
  std::uint64_t stamp_i, stamp_j;
  // max-heap on dq, then smallest pair first
  bool operator<(const HeapEntry& o) const {
    if (dq != o.dq) return dq < o.dq;
    if (i != o.i) return i > o.i;
    return j > o.j;
  }
};

/// Builds partition + dendrogram from the merge sequence and the chosen cut.
Hierarchy assemble(const Graph& g, const std::vector<MergeRecord>& merges, std::size_t cut) {
  const int n = g.node_count();
  std::vector<std::vector<int>> members(static_cast<std::size_t>(n));
  std::vector<long long> intra(static_cast<std::size_t>(n), 0);
  std::vector<bool> alive(static_cast<std::size_t>(n), true);
  for (int v = 0; v < n; ++v) members[static_cast<std::size_t>(v)] = {v};

  auto apply = [&](const MergeRecord& r) {
    auto& mk = members[static_cast<std::size_t>(r.keep)];
    auto& md = members[static_cast<std::size_t>(r.dead)];
    mk.insert(mk.end(), md.begin(), md.end());
    md.clear();
    md.shrink_to_fit();
    intra[static_cast<std::size_t>(r.keep)] += intra[static_cast<std::size_t>(r.dead)] + r.cross;
    alive[static_cast<std::size_t>(r.dead)] = false;
  };

  for (std::size_t t = 0; t < cut; ++t) apply(merges[t]);

  Hierarchy h;
  std::vector<int> community_ids;
  for (int c = 0; c < n; ++c)
    if (alive[static_cast<std::size_t>(c)]) community_ids.push_back(c);

  h.partition.labels.assign(static_cast<std::size_t>(n), -1);
  std::vector<int> dend_of_community(static_cast<std::size_t>(n), -1);
  for (std::size_t k = 0; k < community_ids.size(); ++k) {
    int c = community_ids[k];
    auto mem = members[static_cast<std::size_t>(c)];
    std::sort(mem.begin(), mem.end());
    for (int v : mem) h.partition.labels[static_cast<std::size_t>(v)] = static_cast<int>(k);
    h.partition.communities.push_back(mem);

    DendrogramNode leaf;
    leaf.node_count = static_cast<long long>(mem.size());
    leaf.edge_count = intra[static_cast<std::size_t>(c)];
    int id = static_cast<int>(h.dendrogram.nodes.size());
    h.dendrogram.nodes.push_back(leaf);
    h.dendrogram.leaf_members.push_back(std::move(mem));
    h.dendrogram.leaf_ids.push_back(id);
    dend_of_community[static_cast<std::size_t>(c)] = id;
  }

  for (std::size_t t = cut; t < merges.size(); ++t) {
    const auto& r = merges[t];
    DendrogramNode inner;
    inner.left = dend_of_community[static_cast<std::size_t>(r.keep)];
    inner.right = dend_of_community[static_cast<std::size_t>(r.dead)];
    inner.merge_order = static_cast<int>(t - cut);
    inner.node_count = h.dendrogram.nodes[static_cast<std::size_t>(inner.left)].node_count +
                       h.dendrogram.nodes[static_cast<std::size_t>(inner.right)].node_count;
    inner.edge_count = h.dendrogram.nodes[static_cast<std::size_t>(inner.left)].edge_count +
                       h.dendrogram.nodes[static_cast<std::size_t>(inner.right)].edge_count + r.cross;
    int id = static_cast<int>(h.dendrogram.nodes.size());
    h.dendrogram.nodes.push_back(inner);
    h.dendrogram.leaf_members.emplace_back();
    apply(r);
    dend_of_community[static_cast<std::size_t>(r.keep)] = id;
  }

  h.dendrogram.root = static_cast<int>(h.dendrogram.nodes.size()) - 1;
  return h;
}

}  // namespace

Hierarchy extract_hierarchy(const Graph& g) {
  const int n = g.node_count();
  if (n == 0) throw std::domain_error("extract_hierarchy on empty graph");
  const double m = static_cast<double>(g.edge_count());

  if (g.edge_count() == 0) {
    // no modularity signal: singleton leaves, chain merges in index order
    std::vector<MergeRecord> merges;
    for (int v = 1; v < n; ++v) merges.push_back({0, v, 0});
    return assemble(g, merges, 0);
  }

  std::vector<long long> deg(static_cast<std::size_t>(n));
  std::vector<long long> nnodes(static_cast<std::size_t>(n), 1);
  std::vector<std::uint64_t> stamp(static_cast<std::size_t>(n), 0);
  std::vector<bool> alive(static_cast<std::size_t>(n), true);
  std::vector<std::unordered_map<int, long long>> links(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) deg[static_cast<std::size_t>(v)] = g.degree(v);
  for (const auto& [u, v] : g.edges()) {
    links[static_cast<std::size_t>(u)][v] += 1;
    links[static_cast<std::size_t>(v)][u] += 1;
  }

  auto delta_q = [&](int i, int j, long long cross) {
    return static_cast<double>(cross) / m -
           static_cast<double>(deg[static_cast<std::size_t>(i)]) *
               static_cast<double>(deg[static_cast<std::size_t>(j)]) / (2.0 * m * m);
  };

  std::priority_queue<HeapEntry> heap;
  for (const auto& [u, v] : g.edges()) heap.push({delta_q(u, v, 1), u, v, 0, 0});

  // alive communities ordered by (degree, id); the head pair is the best
  // candidate among disconnected pairs
  std::set<std::pair<long long, int>> by_degree;
  for (int v = 0; v < n; ++v) by_degree.insert({deg[static_cast<std::size_t>(v)], v});

  double q = 0.0;
  for (int v = 0; v < n; ++v) {
    double a = static_cast<double>(deg[static_cast<std::size_t>(v)]) / (2.0 * m);
    q -= a * a;
  }
  double best_q = q;
  std::size_t best_cut = 0;

  std::vector<MergeRecord> merges;
  int alive_count = n;

  while (alive_count > 1) {
    // best connected candidate from the lazy heap
    bool have_a = false;
    HeapEntry a{};
    while (!heap.empty()) {
      const HeapEntry& top = heap.top();
      if (alive[static_cast<std::size_t>(top.i)] && alive[static_cast<std::size_t>(top.j)] &&
          stamp[static_cast<std::size_t>(top.i)] == top.stamp_i &&
          stamp[static_cast<std::size_t>(top.j)] == top.stamp_j) {
        a = top;
        have_a = true;
        break;
      }
      heap.pop();
    }

    // best candidate among the two smallest-degree communities
    auto it = by_degree.begin();
    int b_i = it->second;
    ++it;
    int b_j = it->second;
    if (b_i > b_j) std::swap(b_i, b_j);
    long long b_cross = 0;
    if (auto f = links[static_cast<std::size_t>(b_i)].find(b_j); f != links[static_cast<std::size_t>(b_i)].end())
      b_cross = f->second;
    double b_dq = delta_q(b_i, b_j, b_cross);

    int keep, dead;
    long long cross;
    double dq;
    bool use_a = have_a && (a.dq > b_dq || (a.dq == b_dq && std::pair(a.i, a.j) <= std::pair(b_i, b_j)));
    if (use_a) {
      keep = a.i;
      dead = a.j;
      cross = links[static_cast<std::size_t>(a.i)][a.j];
      dq = a.dq;
      heap.pop();
    } else {
      keep = b_i;
      dead = b_j;
      cross = b_cross;
      dq = b_dq;
    }

    by_degree.erase({deg[static_cast<std::size_t>(keep)], keep});
    by_degree.erase({deg[static_cast<std::size_t>(dead)], dead});

    auto& lk = links[static_cast<std::size_t>(keep)];
    auto& ld = links[static_cast<std::size_t>(dead)];
    if (ld.size() > lk.size()) lk.swap(ld);
    lk.erase(keep);
    lk.erase(dead);
    for (const auto& [nbr, cnt] : ld) {
      if (nbr == keep || nbr == dead) continue;
      lk[nbr] += cnt;
    }
    ld.clear();
    for (const auto& [nbr, cnt] : lk) {
      auto& ln = links[static_cast<std::size_t>(nbr)];
      ln.erase(dead);
      ln[keep] = cnt;
    }

    deg[static_cast<std::size_t>(keep)] += deg[static_cast<std::size_t>(dead)];
    nnodes[static_cast<std::size_t>(keep)] += nnodes[static_cast<std::size_t>(dead)];
    alive[static_cast<std::size_t>(dead)] = false;
    ++stamp[static_cast<std::size_t>(keep)];
    --alive_count;
    by_degree.insert({deg[static_cast<std::size_t>(keep)], keep});

    q += dq;
    merges.push_back({keep, dead, cross});
    if (q > best_q + 1e-12) {
      best_q = q;
      best_cut = merges.size();
    }

    for (const auto& [nbr, cnt] : lk) {
      int i2 = std::min(keep, nbr);
      int j2 = std::max(keep, nbr);
      heap.push({delta_q(i2, j2, cnt), i2, j2, stamp[static_cast<std::size_t>(i2)],
                 stamp[static_cast<std::size_t>(j2)]});
    }
  }

  return assemble(g, merges, best_cut);
}

void write_dendrogram(std::ostream& out, const Dendrogram& d) {
  for (std::size_t id = 0; id < d.nodes.size(); ++id) {
    const auto& node = d.nodes[id];
    if (node.is_leaf()) {
      out << "leaf " << id << " " << node.node_count << " " << node.edge_count << " :";
      for (int v : d.leaf_members[id]) out << " " << v;
      out << "\n";
    } else {
      out << "merge " << id << " " << node.left << " " << node.right << " " << node.merge_order << "\n";
    }
  }
}

}  // namespace cdsample
