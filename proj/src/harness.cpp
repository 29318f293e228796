#include "cdsample/harness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <map>
#include <memory>
#include <numeric>
#include <sstream>

#include "cdsample/rng.hpp"
#include "cdsample/synthetic.hpp"

namespace cdsample {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::string fmt_double(double x) {
  if (std::isnan(x)) return "";
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.10g", x);
  return buf;
}

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::string sanitize(const std::string& name) {
  std::string base = std::filesystem::path(name).filename().string();
  if (base.empty()) base = name;
  for (char& c : base)
    if (!std::isalnum(static_cast<unsigned char>(c))) c = '_';
  return base;
}

bool needs_hierarchy(const std::string& tag) {
  return tag == "C+D" || tag.rfind("CBased", 0) == 0;
}

}  // namespace

ExperimentConfig ExperimentConfig::parse(std::istream& in) {
  ExperimentConfig cfg;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    std::size_t eq = t.find('=');
    if (eq == std::string::npos) throw std::runtime_error("config line " + std::to_string(line_no) + ": expected key = value");
    std::string key = trim(t.substr(0, eq));
    std::string value = trim(t.substr(eq + 1));
    if (key == "dataset" || key == "datasets") {
      for (auto& d : split_list(value)) cfg.datasets.push_back(d);
    } else if (key == "methods") {
      cfg.methods = split_list(value);
    } else if (key == "fraction") {
      cfg.fraction = std::stod(value);
    } else if (key == "repetitions") {
      cfg.repetitions = std::stoi(value);
    } else if (key == "seed" || key == "master_seed") {
      cfg.master_seed = std::stoull(value);
    } else if (key == "d_alpha_list") {
      cfg.d_alpha_list.clear();
      for (auto& d : split_list(value)) cfg.d_alpha_list.push_back(std::stod(d));
    } else if (key == "edge_budget_policy") {
      if (value != "fraction-of-edges" && value != "matched-to-cplusd")
        throw std::runtime_error("unknown edge_budget_policy: " + value);
      cfg.edge_budget_policy = value;
    } else if (key == "svd_k") {
      cfg.svd_k = std::stoi(value);
    } else if (key == "hop_mode") {
      if (value != "exact" && value != "sampled") throw std::runtime_error("unknown hop_mode: " + value);
      cfg.hop_mode = value;
    } else if (key == "hop_sources") {
      cfg.hop_sources = std::stoi(value);
    } else {
      throw std::runtime_error("unknown config key: " + key);
    }
  }
  if (cfg.repetitions < 1) throw std::runtime_error("repetitions must be >= 1");
  if (!(cfg.fraction > 0.0 && cfg.fraction <= 1.0)) throw std::runtime_error("fraction must be in (0, 1]");
  return cfg;
}

ExperimentConfig ExperimentConfig::parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config " + path);
  return parse(in);
}

std::vector<double> ExperimentConfig::effective_d_alpha_list() const {
  if (!d_alpha_list.empty()) return d_alpha_list;
  std::vector<double> out;
  for (int i = -5; i <= 5; ++i) out.push_back(i / 10.0);
  return out;
}

std::string ExperimentConfig::canonical_text() const {
  std::ostringstream out;
  auto join = [](const auto& v) {
    std::string s;
    for (const auto& x : v) {
      if (!s.empty()) s += ",";
      if constexpr (std::is_same_v<std::decay_t<decltype(x)>, std::string>)
        s += x;
      else
        s += fmt_double(x);
    }
    return s;
  };
  out << "datasets=" << join(datasets) << "\n";
  out << "methods=" << join(methods) << "\n";
  out << "fraction=" << fmt_double(fraction) << "\n";
  out << "repetitions=" << repetitions << "\n";
  out << "master_seed=" << master_seed << "\n";
  out << "d_alpha_list=" << join(effective_d_alpha_list()) << "\n";
  out << "edge_budget_policy=" << edge_budget_policy << "\n";
  out << "svd_k=" << svd_k << "\n";
  out << "hop_mode=" << hop_mode << "\n";
  out << "hop_sources=" << hop_sources << "\n";
  return out.str();
}

std::uint64_t ExperimentConfig::config_hash() const { return fnv1a(canonical_text()); }

std::uint64_t derive_run_seed(std::uint64_t master, const std::string& dataset, const std::string& method,
                              int rep) {
  std::uint64_t s = master;
  s = mix_seed(s, fnv1a(dataset));
  s = mix_seed(s, fnv1a(method));
  return mix_seed(s, static_cast<std::uint64_t>(rep));
}

Graph load_dataset(const std::string& spec) {
  auto fields = [&](std::size_t skip) {
    std::string s = spec.substr(skip);
    std::replace(s.begin(), s.end(), ':', ',');
    return split_list(s);
  };
  if (spec.rfind("pa:", 0) == 0) {
    auto parts = fields(3);
    if (parts.size() != 3) throw std::runtime_error("synthetic spec must be pa:<n>:<attachment>:<seed>");
    return generate_preferential_attachment(std::stoi(parts[0]), std::stoi(parts[1]), std::stoull(parts[2]));
  }
  if (spec.rfind("dpl:", 0) == 0) {
    auto parts = fields(4);
    if (parts.size() != 3 && parts.size() != 4)
      throw std::runtime_error("synthetic spec must be dpl:<n>:<alpha>:<seed>[:<triad-probability>]");
    return generate_dpl_attachment(std::stoi(parts[0]), std::stod(parts[1]), std::stoull(parts[2]),
                                   parts.size() == 4 ? std::stod(parts[3]) : 0.0);
  }
  if (spec.rfind("hk:", 0) == 0) {
    auto parts = fields(3);
    if (parts.size() != 4)
      throw std::runtime_error("synthetic spec must be hk:<n>:<attachment>:<triad-probability>:<seed>");
    return generate_preferential_attachment(std::stoi(parts[0]), std::stoi(parts[1]), std::stoull(parts[3]),
                                            std::stod(parts[2]));
  }
  return load_edge_list_file(spec).graph;
}

PropertySet compute_properties(const Graph& g, const ExperimentConfig& cfg) {
  HopMode mode = cfg.hop_mode == "sampled" ? HopMode::sampled : HopMode::exact;
  return {degree_distribution(g),
          singular_value_distribution(g, cfg.svd_k),
          singular_vector_distribution(g),
          cc_distribution(g),
          hop_distribution(g, mode, cfg.hop_sources, cfg.master_seed)};
}

bool is_edge_based_method(const std::string& tag) {
  return tag == "RE" || tag == "RNE" || tag == "CBasedRE" || tag == "DBasedRE";
}

std::vector<std::string> default_node_based_methods() {
  return {"C+D", "RN", "RDN", "RPN", "RW", "RJ", "FF", "RW(i)", "RJ(i)", "FF(i)"};
}

std::vector<std::string> default_edge_based_methods() { return {"C+D", "RE", "RNE"}; }

SampleGraph run_method(const Graph& g, const Hierarchy* hier, const std::string& tag,
                       const SamplerParams& params, long long edge_budget, double d_alpha) {
  auto need_hier = [&]() -> const Hierarchy& {
    if (!hier) throw std::runtime_error(tag + " needs a community hierarchy");
    return *hier;
  };
  if (tag == "RN") return sample_rn(g, params);
  if (tag == "RDN") return sample_rdn(g, params);
  if (tag == "RPN") return sample_rpn(g, params);
  if (tag == "RE") return sample_re(g, edge_budget, params);
  if (tag == "RNE") return sample_rne(g, edge_budget, params);
  if (tag == "RW" || tag == "RJ" || tag == "FF" || tag == "RW(i)" || tag == "RJ(i)" || tag == "FF(i)") {
    SamplerParams p = params;
    p.induced = tag.size() > 2;
    ExploreMethod m = tag.rfind("RW", 0) == 0   ? ExploreMethod::random_walk
                      : tag.rfind("RJ", 0) == 0 ? ExploreMethod::random_jump
                                                : ExploreMethod::forest_fire;
    return sample_exploration(g, m, p);
  }
  if (tag == "C+D")
    return sample_cplusd_with_hierarchy(g, need_hier(), params.fraction, d_alpha, params.rng_seed).sample;
  if (tag == "CBasedRN") return wrap_community_based(BaseMethod::rn, g, need_hier().partition, params, edge_budget);
  if (tag == "CBasedRDN") return wrap_community_based(BaseMethod::rdn, g, need_hier().partition, params, edge_budget);
  if (tag == "CBasedRE") return wrap_community_based(BaseMethod::re, g, need_hier().partition, params, edge_budget);
  if (tag == "CBasedRW") return wrap_community_based(BaseMethod::rw, g, need_hier().partition, params, edge_budget);
  if (tag == "DBasedRN") return wrap_dpl_based(BaseMethod::rn, g, params, edge_budget);
  if (tag == "DBasedRDN") return wrap_dpl_based(BaseMethod::rdn, g, params, edge_budget);
  if (tag == "DBasedRE") return wrap_dpl_based(BaseMethod::re, g, params, edge_budget);
  if (tag == "DBasedRW") return wrap_dpl_based(BaseMethod::rw, g, params, edge_budget);
  throw std::runtime_error("unknown method tag: " + tag);
}

namespace {

struct DatasetContext {
  std::string name;
  Graph graph;
  PropertySet original;
  std::unique_ptr<Hierarchy> hierarchy;
  std::vector<long long> edge_budgets;  // per repetition
};

DatasetContext prepare_dataset(const std::string& spec, const ExperimentConfig& cfg,
                               const std::vector<std::string>& methods) {
  DatasetContext ctx;
  ctx.name = spec;
  ctx.graph = load_dataset(spec);
  ctx.original = compute_properties(ctx.graph, cfg);
  bool any_hier = std::any_of(methods.begin(), methods.end(), [](const auto& m) { return needs_hierarchy(m); });
  bool matched = cfg.edge_budget_policy == "matched-to-cplusd";
  if (any_hier || matched) ctx.hierarchy = std::make_unique<Hierarchy>(extract_hierarchy(ctx.graph));
  for (int rep = 0; rep < cfg.repetitions; ++rep) {
    if (matched) {
      auto seed = derive_run_seed(cfg.master_seed, spec, "C+D", rep);
      auto r = sample_cplusd_with_hierarchy(ctx.graph, *ctx.hierarchy, cfg.fraction, 0.0, seed);
      ctx.edge_budgets.push_back(static_cast<long long>(r.sample.edges.size()));
    } else {
      ctx.edge_budgets.push_back(default_edge_budget(ctx.graph, cfg.fraction));
    }
  }
  return ctx;
}

RunRecord execute_run(const DatasetContext& ctx, const ExperimentConfig& cfg, const std::string& method,
                      int rep, double d_alpha) {
  RunRecord rec;
  rec.dataset = ctx.name;
  rec.method = method;
  rec.rep = rep;
  rec.seed = derive_run_seed(cfg.master_seed, ctx.name, method, rep);
  rec.d_stat.fill(kNaN);
  rec.delta_alpha = kNaN;
  try {
    SamplerParams params;
    params.fraction = cfg.fraction;
    params.rng_seed = rec.seed;
    SampleGraph s = run_method(ctx.graph, ctx.hierarchy.get(), method, params,
                               ctx.edge_budgets[static_cast<std::size_t>(rep)], d_alpha);
    rec.sample_nodes = static_cast<long long>(s.nodes.size());
    rec.sample_edges = static_cast<long long>(s.edges.size());
    Graph sg = sample_to_graph(s);
    PropertySet props = compute_properties(sg, cfg);
    for (std::size_t i = 0; i < kProperties.size(); ++i)
      rec.d_stat[i] = ks_dstat(ctx.original[i], props[i]);
    if (sg.node_count() >= 2 && sg.edge_count() >= 1) rec.delta_alpha = dpl_difference(ctx.graph, sg);
  } catch (const std::exception& e) {
    rec.failed = true;
    rec.error = e.what();
  }
  return rec;
}

double mean_valid(const std::vector<double>& v) {
  double sum = 0.0;
  int count = 0;
  for (double x : v)
    if (!std::isnan(x)) {
      sum += x;
      ++count;
    }
  return count > 0 ? sum / count : kNaN;
}

/// Competition ranks: 1 + number of strictly smaller valid values; NaN rows
/// keep NaN.
std::vector<double> ranks_ascending(const std::vector<double>& values) {
  std::vector<double> out(values.size(), kNaN);
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (std::isnan(values[i])) continue;
    int smaller = 0;
    for (std::size_t j = 0; j < values.size(); ++j)
      if (!std::isnan(values[j]) && values[j] < values[i]) ++smaller;
    out[i] = smaller + 1;
  }
  return out;
}

std::vector<double> normalize_column(const std::vector<double>& values) {
  std::vector<double> valid;
  for (double v : values)
    if (!std::isnan(v)) valid.push_back(v);
  std::vector<double> out(values.size(), kNaN);
  if (valid.size() < 2) return out;
  auto [mn, mx] = std::minmax_element(valid.begin(), valid.end());
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (std::isnan(values[i])) continue;
    out[i] = *mx > *mn ? (values[i] - *mn) / (*mx - *mn) : 0.0;
  }
  return out;
}

/// Per-method mean D per property across repetitions for one dataset.
std::vector<std::array<double, 5>> aggregate_means(const std::vector<RunRecord>& runs,
                                                   const std::vector<std::string>& methods,
                                                   const std::string& dataset) {
  std::vector<std::array<double, 5>> out;
  for (const auto& method : methods) {
    std::array<double, 5> means{};
    for (std::size_t p = 0; p < 5; ++p) {
      std::vector<double> vals;
      for (const auto& r : runs)
        if (r.dataset == dataset && r.method == method) vals.push_back(r.d_stat[p]);
      means[p] = mean_valid(vals);
    }
    out.push_back(means);
  }
  return out;
}

ReportTable build_comparison_table(const std::vector<std::string>& methods,
                                   const std::vector<std::array<double, 5>>& means, bool with_ranks) {
  ReportTable t;
  t.row_names = methods;
  if (with_ranks)
    t.columns = {"Degree", "Degree_R", "Sval", "Sval_R", "Svec", "Svec_R", "CC", "CC_R",
                 "Hop",    "Hop_R",    "Avg",  "Avg_R",  "AvgNorm", "AvgNorm_R"};
  else
    t.columns = {"Degree", "Sval", "Svec", "CC", "Hop", "Avg"};
  t.cells.assign(methods.size(), std::vector<double>(t.columns.size(), kNaN));

  std::vector<double> avg(methods.size(), kNaN);
  std::vector<std::vector<double>> norm_cols(5);
  for (std::size_t p = 0; p < 5; ++p) {
    std::vector<double> col;
    for (const auto& m : means) col.push_back(m[p]);
    norm_cols[p] = normalize_column(col);
  }
  for (std::size_t i = 0; i < methods.size(); ++i) {
    double sum = 0.0;
    int count = 0;
    for (std::size_t p = 0; p < 5; ++p)
      if (!std::isnan(means[i][p])) {
        sum += means[i][p];
        ++count;
      }
    avg[i] = count == 5 ? sum / 5.0 : kNaN;
  }
  std::vector<double> avg_norm(methods.size(), kNaN);
  for (std::size_t i = 0; i < methods.size(); ++i) {
    double sum = 0.0;
    int count = 0;
    for (std::size_t p = 0; p < 5; ++p)
      if (!std::isnan(norm_cols[p][i])) {
        sum += norm_cols[p][i];
        ++count;
      }
    avg_norm[i] = count == 5 ? sum / 5.0 : kNaN;
  }

  if (with_ranks) {
    std::vector<std::vector<double>> prop_ranks(5);
    for (std::size_t p = 0; p < 5; ++p) {
      std::vector<double> col;
      for (const auto& m : means) col.push_back(m[p]);
      prop_ranks[p] = ranks_ascending(col);
    }
    auto avg_rank = ranks_ascending(avg);
    auto avg_norm_rank = ranks_ascending(avg_norm);
    for (std::size_t i = 0; i < methods.size(); ++i) {
      for (std::size_t p = 0; p < 5; ++p) {
        t.cells[i][2 * p] = means[i][p];
        t.cells[i][2 * p + 1] = prop_ranks[p][i];
      }
      t.cells[i][10] = avg[i];
      t.cells[i][11] = avg_rank[i];
      t.cells[i][12] = avg_norm[i];
      t.cells[i][13] = avg_norm_rank[i];
    }
  } else {
    for (std::size_t i = 0; i < methods.size(); ++i) {
      for (std::size_t p = 0; p < 5; ++p) t.cells[i][p] = means[i][p];
      t.cells[i][5] = avg[i];
    }
  }
  return t;
}

std::vector<std::array<double, 5>> mean_over_datasets(const std::vector<std::vector<std::array<double, 5>>>& per_ds) {
  std::vector<std::array<double, 5>> out(per_ds.front().size());
  for (std::size_t i = 0; i < out.size(); ++i)
    for (std::size_t p = 0; p < 5; ++p) {
      std::vector<double> vals;
      for (const auto& ds : per_ds) vals.push_back(ds[i][p]);
      out[i][p] = mean_valid(vals);
    }
  return out;
}

}  // namespace

HarnessOutput run_comparison(const ExperimentConfig& cfg) {
  HarnessOutput out;
  std::vector<std::string> node_methods, edge_methods;
  if (cfg.methods.empty()) {
    node_methods = default_node_based_methods();
    edge_methods = default_edge_based_methods();
  } else {
    for (const auto& m : cfg.methods) {
      if (m == "C+D") {
        node_methods.push_back(m);
        edge_methods.push_back(m);
      } else if (is_edge_based_method(m)) {
        edge_methods.push_back(m);
      } else {
        node_methods.push_back(m);
      }
    }
  }
  std::vector<std::string> all_methods = node_methods;
  for (const auto& m : edge_methods)
    if (std::find(all_methods.begin(), all_methods.end(), m) == all_methods.end()) all_methods.push_back(m);

  std::vector<std::vector<std::array<double, 5>>> node_means_per_ds, edge_means_per_ds;
  for (const auto& spec : cfg.datasets) {
    auto ctx = prepare_dataset(spec, cfg, all_methods);
    for (const auto& method : all_methods)
      for (int rep = 0; rep < cfg.repetitions; ++rep)
        out.runs.push_back(execute_run(ctx, cfg, method, rep, 0.0));
    if (!node_methods.empty()) {
      auto means = aggregate_means(out.runs, node_methods, spec);
      node_means_per_ds.push_back(means);
      out.tables.emplace_back(sanitize(spec) + "_node_based", build_comparison_table(node_methods, means, true));
    }
    if (!edge_methods.empty()) {
      auto means = aggregate_means(out.runs, edge_methods, spec);
      edge_means_per_ds.push_back(means);
      out.tables.emplace_back(sanitize(spec) + "_edge_based", build_comparison_table(edge_methods, means, true));
    }
  }
  if (cfg.datasets.size() > 1) {
    if (!node_means_per_ds.empty())
      out.tables.emplace_back("all_node_based",
                              build_comparison_table(node_methods, mean_over_datasets(node_means_per_ds), true));
    if (!edge_means_per_ds.empty())
      out.tables.emplace_back("all_edge_based",
                              build_comparison_table(edge_methods, mean_over_datasets(edge_means_per_ds), true));
  }
  return out;
}

HarnessOutput run_consistency(const ExperimentConfig& cfg) {
  if (cfg.repetitions < 2) throw std::runtime_error("consistency needs repetitions >= 2");
  HarnessOutput out;
  std::vector<std::string> methods = cfg.methods;
  if (methods.empty()) {
    methods = default_node_based_methods();
    for (const auto& m : default_edge_based_methods())
      if (std::find(methods.begin(), methods.end(), m) == methods.end()) methods.push_back(m);
  }
  for (const auto& spec : cfg.datasets) {
    auto ctx = prepare_dataset(spec, cfg, methods);
    for (const auto& method : methods)
      for (int rep = 0; rep < cfg.repetitions; ++rep)
        out.runs.push_back(execute_run(ctx, cfg, method, rep, 0.0));

    std::vector<std::array<double, 5>> sds;
    for (const auto& method : methods) {
      std::array<double, 5> sd{};
      for (std::size_t p = 0; p < 5; ++p) {
        std::vector<double> vals;
        for (const auto& r : out.runs)
          if (r.dataset == spec && r.method == method && !std::isnan(r.d_stat[p])) vals.push_back(r.d_stat[p]);
        sd[p] = vals.size() >= 2 ? sample_stddev(vals) : kNaN;
      }
      sds.push_back(sd);
    }
    out.tables.emplace_back(sanitize(spec) + "_consistency", build_comparison_table(methods, sds, true));
  }
  return out;
}

HarnessOutput run_dpl_table(const ExperimentConfig& cfg) {
  HarnessOutput out;
  std::vector<std::string> methods = cfg.methods;
  if (methods.empty()) {
    methods = default_node_based_methods();
    for (const auto& m : default_edge_based_methods())
      if (std::find(methods.begin(), methods.end(), m) == methods.end()) methods.push_back(m);
  }
  for (const auto& spec : cfg.datasets) {
    auto ctx = prepare_dataset(spec, cfg, methods);
    ReportTable t;
    t.columns = {"DeltaAlpha"};
    for (const auto& method : methods) {
      std::vector<double> deltas;
      for (int rep = 0; rep < cfg.repetitions; ++rep) {
        auto rec = execute_run(ctx, cfg, method, rep, 0.0);
        deltas.push_back(rec.delta_alpha);
        out.runs.push_back(std::move(rec));
      }
      t.row_names.push_back(method);
      t.cells.push_back({mean_valid(deltas)});
    }
    out.tables.emplace_back(sanitize(spec) + "_dpl", std::move(t));
  }
  return out;
}

HarnessOutput run_alpha_sweep(const ExperimentConfig& cfg) {
  HarnessOutput out;
  auto offsets = cfg.effective_d_alpha_list();
  for (const auto& spec : cfg.datasets) {
    auto ctx = prepare_dataset(spec, cfg, {"C+D"});
    std::vector<std::string> rows;
    std::vector<std::array<double, 5>> means;
    for (double d_alpha : offsets) {
      std::string row = "d_alpha=" + fmt_double(d_alpha);
      rows.push_back(row);
      std::array<double, 5> mean{};
      std::vector<std::vector<double>> per_prop(5);
      for (int rep = 0; rep < cfg.repetitions; ++rep) {
        auto rec = execute_run(ctx, cfg, "C+D", rep, d_alpha);
        rec.method = row;  // distinguish offsets in the runs log
        for (std::size_t p = 0; p < 5; ++p) per_prop[p].push_back(rec.d_stat[p]);
        out.runs.push_back(std::move(rec));
      }
      for (std::size_t p = 0; p < 5; ++p) mean[p] = mean_valid(per_prop[p]);
      means.push_back(mean);
    }
    out.tables.emplace_back(sanitize(spec) + "_alpha_sweep", build_comparison_table(rows, means, true));
  }
  return out;
}

HarnessOutput run_hybrid_comparison(const ExperimentConfig& cfg) {
  HarnessOutput out;
  const std::vector<std::string> cbased = {"RN", "CBasedRN", "RDN", "CBasedRDN",
                                           "RE", "CBasedRE", "RW", "CBasedRW"};
  const std::vector<std::string> dbased = {"RN", "DBasedRN", "RDN", "DBasedRDN",
                                           "RE", "DBasedRE", "RW", "DBasedRW"};
  std::vector<std::string> all = cbased;
  for (const auto& m : dbased)
    if (std::find(all.begin(), all.end(), m) == all.end()) all.push_back(m);

  for (const auto& spec : cfg.datasets) {
    auto ctx = prepare_dataset(spec, cfg, all);
    for (const auto& method : all)
      for (int rep = 0; rep < cfg.repetitions; ++rep)
        out.runs.push_back(execute_run(ctx, cfg, method, rep, 0.0));
    out.tables.emplace_back(sanitize(spec) + "_hybrid_cbased",
                            build_comparison_table(cbased, aggregate_means(out.runs, cbased, spec), false));
    out.tables.emplace_back(sanitize(spec) + "_hybrid_dbased",
                            build_comparison_table(dbased, aggregate_means(out.runs, dbased, spec), false));
  }
  return out;
}

void write_table_csv(std::ostream& out, const ReportTable& table, const ExperimentConfig& cfg) {
  out << "# tool=cdsample " << kToolVersion << "\n";
  char hash[20];
  std::snprintf(hash, sizeof(hash), "%016llx", static_cast<unsigned long long>(cfg.config_hash()));
  out << "# config-hash=" << hash << " master-seed=" << cfg.master_seed << "\n";
  out << "method";
  for (const auto& c : table.columns) out << "," << c;
  out << "\n";
  for (std::size_t i = 0; i < table.row_names.size(); ++i) {
    out << table.row_names[i];
    for (double v : table.cells[i]) out << "," << fmt_double(v);
    out << "\n";
  }
}

void write_runs_csv(std::ostream& out, const std::vector<RunRecord>& runs, const ExperimentConfig& cfg) {
  out << "# tool=cdsample " << kToolVersion << "\n";
  char hash[20];
  std::snprintf(hash, sizeof(hash), "%016llx", static_cast<unsigned long long>(cfg.config_hash()));
  out << "# config-hash=" << hash << " master-seed=" << cfg.master_seed << "\n";
  out << "dataset,method,rep,seed,failed,degree,sval,svec,cc,hop,delta_alpha,sample_nodes,sample_edges,error\n";
  for (const auto& r : runs) {
    out << r.dataset << "," << r.method << "," << r.rep << "," << r.seed << "," << (r.failed ? 1 : 0);
    for (double d : r.d_stat) out << "," << fmt_double(d);
    out << "," << fmt_double(r.delta_alpha) << "," << r.sample_nodes << "," << r.sample_edges << ","
        << r.error << "\n";
  }
}

void write_outputs(const HarnessOutput& result, const ExperimentConfig& cfg, const std::string& dir) {
  std::filesystem::create_directories(dir);
  for (const auto& [name, table] : result.tables) {
    std::ofstream out(std::filesystem::path(dir) / (name + ".csv"));
    write_table_csv(out, table, cfg);
  }
  std::ofstream runs_out(std::filesystem::path(dir) / "runs.csv");
  write_runs_csv(runs_out, result.runs, cfg);
}

}  // namespace cdsample
