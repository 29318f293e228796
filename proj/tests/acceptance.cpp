/// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
/// nonzero if any fail. argv[1] (optional) is the CLI binary path used by the
/// determinism check.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "cdsample/budget.hpp"
#include "cdsample/community.hpp"
#include "cdsample/cplusd.hpp"
#include "cdsample/harness.hpp"
#include "cdsample/metrics.hpp"
#include "cdsample/rng.hpp"
#include "cdsample/samplers.hpp"
#include "cdsample/spectral.hpp"
#include "cdsample/synthetic.hpp"

using namespace cdsample;

namespace {

std::string g_cli_path;

Graph random_graph(Rng& rng, int n, double p) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.uniform01() < p) edges.emplace_back(u, v);
  return Graph::from_edges(n, std::move(edges));
}

// ---- criterion 1: DPL worked examples ----------------------------------

bool dpl_worked_examples(std::string& note) {
  double alpha = densification_exponent(500, 1000);
  if (std::abs(alpha - 1.1115) > 0.001) {
    note = "alpha(500,1000) = " + std::to_string(alpha);
    return false;
  }
  // single community of 500 nodes / 1000 edges, 10% sample
  Dendrogram d;
  d.nodes.push_back({-1, -1, -1, 500, 1000});
  d.leaf_ids = {0};
  d.leaf_members.resize(1);
  d.root = 0;
  BudgetTree bt = allocate_budgets(d, 0.1, 0.0);
  long long nb = bt.nodes[0].node_budget, eb = bt.nodes[0].edge_budget;
  if (nb != 50 || std::abs(eb - 76) > 1) {
    note = "budgets (" + std::to_string(nb) + ", " + std::to_string(eb) + ")";
    return false;
  }
  long long big = dpl_edge_target(500, densification_exponent(5000, 10000), 0.0);
  if (big < 790 || big > 840) {
    note = "target " + std::to_string(big);
    return false;
  }
  note = "alpha 1.1115, budgets (50, " + std::to_string(eb) + "), target " + std::to_string(big);
  return true;
}

// ---- criterion 2: K-S brute-force oracle -------------------------------

double cdf_at(const Distribution& d, double x) {
  double c = 0.0;
  for (std::size_t i = 0; i < d.support.size(); ++i)
    if (d.support[i] <= x) c += d.mass[i];
  return c;
}

bool ks_oracle_equivalence(std::string& note) {
  Rng rng(2024);
  double worst = 0.0;
  for (int trial = 0; trial < 1000; ++trial) {
    Distribution dists[2];
    for (auto& d : dists) {
      std::vector<std::pair<double, double>> pts;
      int n = 1 + static_cast<int>(rng.below(25));
      for (int i = 0; i < n; ++i)
        pts.emplace_back(std::floor(rng.uniform01() * 40.0), rng.uniform01() + 0.01);
      d = make_distribution(PropertyKind::degree, std::move(pts));
    }
    std::vector<double> grid = dists[0].support;
    grid.insert(grid.end(), dists[1].support.begin(), dists[1].support.end());
    std::sort(grid.begin(), grid.end());
    std::vector<double> points = grid;
    for (std::size_t i = 0; i + 1 < grid.size(); ++i) points.push_back(0.5 * (grid[i] + grid[i + 1]));
    double oracle = 0.0;
    for (double x : points)
      oracle = std::max(oracle, std::abs(cdf_at(dists[0], x) - cdf_at(dists[1], x)));
    worst = std::max(worst, std::abs(ks_dstat(dists[0], dists[1]) - oracle));
  }
  note = "max |D - oracle| = " + std::to_string(worst) + " over 1000 pairs";
  return worst <= 1e-12;
}

// ---- criterion 3: modularity vs exhaustive enumeration -----------------

double modularity_oracle(const Graph& g, const std::vector<int>& labels) {
  double m = static_cast<double>(g.edge_count());
  double intra = 0.0;
  for (const auto& [u, v] : g.edges())
    if (labels[static_cast<std::size_t>(u)] == labels[static_cast<std::size_t>(v)]) intra += 1.0;
  std::vector<double> degree_sum(labels.size(), 0.0);
  for (int v = 0; v < g.node_count(); ++v)
    degree_sum[static_cast<std::size_t>(labels[static_cast<std::size_t>(v)])] += g.degree(v);
  double q = intra / m;
  for (double deg : degree_sum) q -= (deg / (2.0 * m)) * (deg / (2.0 * m));
  return q;
}

bool modularity_correctness(std::string& note) {
  Graph g = Graph::from_edges(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {2, 3}});
  // exhaustive maximum over all set partitions of 6 nodes
  std::vector<int> labels(6, 0), best_labels;
  double best = -2.0;
  while (true) {
    double q = modularity_oracle(g, labels);
    if (q > best) {
      best = q;
      best_labels = labels;
    }
    int i = 5;
    for (; i > 0; --i) {
      int cap = *std::max_element(labels.begin(), labels.begin() + i) + 1;
      if (labels[static_cast<std::size_t>(i)] < cap) {
        ++labels[static_cast<std::size_t>(i)];
        std::fill(labels.begin() + i + 1, labels.end(), 0);
        break;
      }
    }
    if (i == 0) break;
  }
  Hierarchy h = extract_hierarchy(g);
  double q = modularity(g, h.partition);
  bool two_triangles = h.partition.size() == 2;
  for (const auto& c : h.partition.communities) {
    std::set<int> s(c.begin(), c.end());
    two_triangles &= (s == std::set<int>{0, 1, 2} || s == std::set<int>{3, 4, 5});
  }
  note = "Q = " + std::to_string(q) + ", exhaustive best = " + std::to_string(best);
  return std::abs(best - 0.35714285) < 1e-6 && std::abs(q - best) < 1e-9 && two_triangles;
}

// ---- criterion 4: spectral oracle --------------------------------------

bool spectral_oracle(std::string& note) {
  Rng rng(404);
  double worst = 0.0;
  int vector_checked = 0;
  for (int trial = 0; trial < 100; ++trial) {
    int n = 4 + static_cast<int>(rng.below(27));
    Graph g = random_graph(rng, n, 0.15 + 0.5 * rng.uniform01());
    if (g.edge_count() == 0) continue;
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
    for (const auto& [u, v] : g.edges()) a(u, v) = a(v, u) = 1.0;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a);
    std::vector<double> oracle;
    for (int i = 0; i < n; ++i) oracle.push_back(std::abs(solver.eigenvalues()[i]));
    std::sort(oracle.rbegin(), oracle.rend());

    auto sv = top_singular_values(g, n, SpectralMethod::lanczos);
    for (int i = 0; i < n; ++i)
      worst = std::max(worst, std::abs(sv[static_cast<std::size_t>(i)] - oracle[static_cast<std::size_t>(i)]));

    // the principal vector is only well-defined when the top singular value
    // is simple; under a degenerate top value any basis of the eigenspace is
    // equally valid and component-wise comparison is meaningless
    if (n >= 2 && oracle[0] - oracle[1] > 1e-6) {
      int bi = 0;
      for (int i = 1; i < n; ++i)
        if (std::abs(solver.eigenvalues()[i]) > std::abs(solver.eigenvalues()[bi])) bi = i;
      auto vec = principal_singular_vector_abs(g, SpectralMethod::lanczos);
      for (int i = 0; i < n; ++i)
        worst = std::max(worst,
                         std::abs(vec[static_cast<std::size_t>(i)] - std::abs(solver.eigenvectors().col(bi)[i])));
      ++vector_checked;
    }
  }
  note = "max deviation " + std::to_string(worst) + " over 100 graphs (" +
         std::to_string(vector_checked) + " with a simple top value for the vector check)";
  return worst <= 1e-6 && vector_checked >= 50;
}

// ---- criterion 5: sampler contracts ------------------------------------

bool sample_valid(const Graph& g, const SampleGraph& s) {
  if (!std::is_sorted(s.nodes.begin(), s.nodes.end())) return false;
  if (std::adjacent_find(s.nodes.begin(), s.nodes.end()) != s.nodes.end()) return false;
  for (const auto& [u, v] : s.edges) {
    if (u >= v || !g.has_edge(u, v)) return false;
    if (!std::binary_search(s.nodes.begin(), s.nodes.end(), u)) return false;
    if (!std::binary_search(s.nodes.begin(), s.nodes.end(), v)) return false;
  }
  return true;
}

bool sampler_contracts(std::string& note) {
  Rng rng(505);
  int trials = 0;
  for (int round = 0; round < 50; ++round) {
    Graph g = random_graph(rng, 12 + static_cast<int>(rng.below(30)), 0.15);
    SamplerParams p;
    p.fraction = 0.15 + 0.6 * rng.uniform01();
    p.rng_seed = rng.next();
    long long nb = node_budget_for(g, p.fraction);
    long long ebudget = g.edge_count() > 0 ? 1 + static_cast<long long>(rng.below(g.edge_count())) : 0;

    for (auto* fn : {&sample_rn, &sample_rdn, &sample_rpn}) {
      SampleGraph s = (*fn)(g, p);
      ++trials;
      if (!sample_valid(g, s) || static_cast<long long>(s.nodes.size()) != nb ||
          s.edges != detail::induced_edges(g, s.nodes)) {
        note = s.method + " contract violated";
        return false;
      }
    }
    if (ebudget > 0) {
      for (auto* fn : {&sample_re, &sample_rne}) {
        SampleGraph s = (*fn)(g, ebudget, p);
        ++trials;
        if (!sample_valid(g, s) || static_cast<long long>(s.edges.size()) != ebudget) {
          note = s.method + " contract violated";
          return false;
        }
      }
    }
    for (ExploreMethod m :
         {ExploreMethod::random_walk, ExploreMethod::random_jump, ExploreMethod::forest_fire}) {
      for (bool induced : {false, true}) {
        p.induced = induced;
        SampleGraph s = sample_exploration(g, m, p);
        ++trials;
        if (!sample_valid(g, s) || static_cast<long long>(s.nodes.size()) != nb) {
          note = s.method + " contract violated";
          return false;
        }
        if (induced && s.edges != detail::induced_edges(g, s.nodes)) {
          note = s.method + " induced edges wrong";
          return false;
        }
        if (!induced && m == ExploreMethod::forest_fire && !s.nodes.empty() &&
            s.edges.size() > s.nodes.size() - 1) {
          note = "FF sample is not a forest";
          return false;
        }
      }
    }
    p.induced = false;
  }
  note = std::to_string(trials) + " randomized trials";
  return trials >= 500;
}

// ---- criterion 6: RDN proportionality on K1,9 --------------------------

bool rdn_proportionality(std::string& note) {
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v <= 9; ++v) edges.emplace_back(0, v);
  Graph star = Graph::from_edges(10, edges);
  SamplerParams p;
  p.fraction = 0.1;  // budget 1: the sample is exactly the first draw
  int hub_hits = 0;
  const int seeds = 10000;
  for (int s = 0; s < seeds; ++s) {
    p.rng_seed = static_cast<std::uint64_t>(s) + 1;
    SampleGraph sg = sample_rdn(star, p);
    if (sg.nodes.size() == 1 && sg.nodes[0] == 0) ++hub_hits;
  }
  // hub degree 9 of total 18: expected frequency 0.5
  double freq = hub_hits / static_cast<double>(seeds);
  double sigma = std::sqrt(0.25 / seeds);
  note = "hub frequency " + std::to_string(freq) + " (expected 0.5 +/- " + std::to_string(3 * sigma) + ")";
  return std::abs(freq - 0.5) <= 3 * sigma;
}

// ---- criteria 7-9: directional table reproductions ---------------------

/// Preferential-attachment synthetic obeying the densification power law by
/// construction (accelerating attachment, alpha = 1.38). Constant-attachment
/// graphs are locally tree-like and cannot reproduce the densification
/// directions the criteria target.
std::string synthetic_spec() { return "dpl:2000:1.38:1234"; }
std::string synthetic_table(const std::string& suffix) { return "dpl_2000_1_38_1234_" + suffix; }

double table_cell(const HarnessOutput& out, const std::string& table, const std::string& row,
                  const std::string& col) {
  for (const auto& [name, t] : out.tables) {
    if (name != table) continue;
    std::size_t ci = std::find(t.columns.begin(), t.columns.end(), col) - t.columns.begin();
    for (std::size_t i = 0; i < t.row_names.size(); ++i)
      if (t.row_names[i] == row) return t.cells[i][ci];
  }
  throw std::runtime_error("missing cell " + table + "/" + row + "/" + col);
}

bool dpl_direction(std::string& note) {
  ExperimentConfig cfg;
  cfg.datasets = {synthetic_spec()};
  cfg.methods = {"C+D", "RDN", "RE", "RW", "FF"};
  cfg.repetitions = 10;
  cfg.fraction = 0.1;
  cfg.master_seed = 7;
  HarnessOutput out = run_dpl_table(cfg);
  auto delta = [&](const std::string& m) {
    return table_cell(out, synthetic_table("dpl"), m, "DeltaAlpha");
  };
  double cd = std::abs(delta("C+D"));
  std::ostringstream text;
  text << "|C+D| " << cd << " vs RDN " << delta("RDN") << ", RE " << delta("RE") << ", RW "
       << delta("RW") << ", FF " << delta("FF");
  note = text.str();
  return cd < std::abs(delta("RDN")) && cd < std::abs(delta("RE")) && cd < std::abs(delta("RW")) &&
         delta("FF") < 0.0 && delta("RDN") > 0.0;
}

bool alpha_sweep_direction(std::string& note) {
  ExperimentConfig cfg;
  cfg.datasets = {synthetic_spec()};
  cfg.repetitions = 10;
  cfg.fraction = 0.1;
  cfg.master_seed = 7;
  HarnessOutput out = run_alpha_sweep(cfg);
  double best = 1e9, at_zero = 0.0;
  std::string best_row;
  for (const auto& [name, t] : out.tables) {
    std::size_t avg = std::find(t.columns.begin(), t.columns.end(), "Avg") - t.columns.begin();
    for (std::size_t i = 0; i < t.row_names.size(); ++i) {
      double v = t.cells[i][avg];
      if (t.row_names[i] == "d_alpha=0") at_zero = v;
      if (v < best) {
        best = v;
        best_row = t.row_names[i];
      }
    }
  }
  note = "best " + best_row + " (" + std::to_string(best) + "), d_alpha=0 gives " + std::to_string(at_zero);
  return best_row == "d_alpha=0";
}

bool community_wrapper_direction(std::string& note) {
  ExperimentConfig cfg;
  cfg.datasets = {synthetic_spec()};
  cfg.methods = {"RN", "RW", "CBasedRN", "CBasedRW"};
  cfg.repetitions = 10;
  cfg.fraction = 0.1;
  cfg.master_seed = 7;
  HarnessOutput out = run_comparison(cfg);
  auto avg = [&](const std::string& m) {
    return table_cell(out, synthetic_table("node_based"), m, "Avg");
  };
  std::ostringstream text;
  text << "CBasedRN " << avg("CBasedRN") << " vs RN " << avg("RN") << "; CBasedRW " << avg("CBasedRW")
       << " vs RW " << avg("RW");
  note = text.str();
  return avg("CBasedRN") <= avg("RN") && avg("CBasedRW") <= avg("RW");
}

// ---- criterion 10: CLI determinism -------------------------------------

bool run_cmd(const std::string& cmd) { return std::system(cmd.c_str()) == 0; }

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

bool cli_determinism(std::string& note) {
  if (g_cli_path.empty()) {
    note = "no CLI path given";
    return false;
  }
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "cdsample_acceptance";
  fs::remove_all(dir);
  fs::create_directories(dir);

  Graph g = generate_preferential_attachment(400, 3, 9);
  {
    std::ofstream out(dir / "g.txt");
    write_edge_list(out, g);
  }
  std::string base = "\"" + g_cli_path + "\"";
  for (const char* out_name : {"s1.txt", "s2.txt"})
    if (!run_cmd(base + " sample --input " + (dir / "g.txt").string() + " --method C+D --fraction 0.2 --seed 5 --output " +
                 (dir / out_name).string())) {
      note = "sample invocation failed";
      return false;
    }
  if (slurp(dir / "s1.txt") != slurp(dir / "s2.txt")) {
    note = "sample outputs differ";
    return false;
  }
  {
    std::ofstream cfg(dir / "cfg.txt");
    cfg << "dataset = " << (dir / "g.txt").string() << "\nmethods = RDN, C+D\nrepetitions = 2\n"
        << "fraction = 0.2\nseed = 3\n";
  }
  for (const char* out_name : {"d1", "d2"})
    if (!run_cmd(base + " compare --config " + (dir / "cfg.txt").string() + " --output-dir " +
                 (dir / out_name).string())) {
      note = "compare invocation failed";
      return false;
    }
  for (const auto& entry : fs::directory_iterator(dir / "d1")) {
    fs::path other = dir / "d2" / entry.path().filename();
    if (slurp(entry.path()) != slurp(other)) {
      note = "experiment output " + entry.path().filename().string() + " differs";
      return false;
    }
  }
  note = "sample + compare outputs byte-identical";
  return true;
}

// ---- criterion 11: desk-scale performance ------------------------------

bool desk_scale_performance(std::string& note) {
  auto start = std::chrono::steady_clock::now();
  Graph g = generate_preferential_attachment(10000, 5, 77);
  ExperimentConfig cfg;
  PropertySet props = compute_properties(g, cfg);
  CplusdResult r = sample_cplusd(g, 0.1, 0.0, 5);
  double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::ostringstream text;
  text << g.node_count() << " nodes / " << g.edge_count() << " edges, five properties + C+D sample ("
       << r.sample.nodes.size() << " nodes) in " << seconds << " s";
  note = text.str();
  (void)props;
  return seconds < 300.0;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1) g_cli_path = argv[1];

  struct Criterion {
    const char* title;
    std::function<bool(std::string&)> check;
  };
  const std::vector<Criterion> criteria = {
      {"DPL worked examples", dpl_worked_examples},
      {"K-S oracle equivalence", ks_oracle_equivalence},
      {"modularity vs exhaustive enumeration", modularity_correctness},
      {"spectral dense-decomposition oracle", spectral_oracle},
      {"sampler size/validity contracts", sampler_contracts},
      {"RDN proportionality on K1,9", rdn_proportionality},
      {"densification-difference direction", dpl_direction},
      {"exponent-offset sweep optimum", alpha_sweep_direction},
      {"community wrapper improvement", community_wrapper_direction},
      {"CLI determinism", cli_determinism},
      {"desk-scale performance", desk_scale_performance},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    std::string note;
    bool ok = false;
    try {
      ok = criteria[i].check(note);
    } catch (const std::exception& e) {
      note = std::string("exception: ") + e.what();
    }
    if (!ok) ++failures;
    std::cout << "criterion " << (i + 1) << " [" << criteria[i].title << "]: " << (ok ? "PASS" : "FAIL");
    if (!note.empty()) std::cout << " - " << note;
    std::cout << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
