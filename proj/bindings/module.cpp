/// Python bindings for the sampling toolkit core.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "cdsample/cplusd.hpp"
#include "cdsample/harness.hpp"
#include "cdsample/metrics.hpp"
#include "cdsample/samplers.hpp"
#include "cdsample/synthetic.hpp"

namespace py = pybind11;
using namespace cdsample;

namespace {

Graph graph_from_edges(int node_count, const std::vector<std::pair<int, int>>& edges) {
  return Graph::from_edges(node_count, edges);
}

Graph load_from_string(const std::string& text) {
  std::istringstream in(text);
  return load_edge_list(in).graph;
}

py::dict distribution_to_dict(const Distribution& d) {
  py::dict out;
  out["kind"] = property_name(d.kind);
  out["support"] = d.support;
  out["mass"] = d.mass;
  out["degenerate_uniform"] = d.degenerate_uniform;
  return out;
}

SampleGraph run_sampler(const Graph& g, const std::string& method, double fraction, std::uint64_t seed,
                        double d_alpha, long long edge_budget) {
  SamplerParams params;
  params.fraction = fraction;
  params.rng_seed = seed;
  std::unique_ptr<Hierarchy> hier;
  if (method == "C+D" || method.rfind("CBased", 0) == 0)
    hier = std::make_unique<Hierarchy>(extract_hierarchy(g));
  if (edge_budget < 0) edge_budget = default_edge_budget(g, fraction);
  return run_method(g, hier.get(), method, params, edge_budget, d_alpha);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "community + densification-law graph sampling core";
  m.attr("__version__") = kToolVersion;

  py::class_<Graph>(m, "Graph")
      .def(py::init(&graph_from_edges), py::arg("node_count"), py::arg("edges"))
      .def_property_readonly("node_count", &Graph::node_count)
      .def_property_readonly("edge_count", [](const Graph& g) { return g.edge_count(); })
      .def("degree", &Graph::degree)
      .def("neighbors", [](const Graph& g, int v) { return g.neighbors(v); })
      .def("has_edge", &Graph::has_edge)
      .def("edges", [](const Graph& g) { return g.edges(); })
      .def("degree_sequence", &Graph::degree_sequence);

  py::class_<SampleGraph>(m, "SampleGraph")
      .def_readonly("nodes", &SampleGraph::nodes)
      .def_readonly("edges", &SampleGraph::edges)
      .def_readonly("method", &SampleGraph::method)
      .def_readonly("notes", &SampleGraph::notes)
      .def("to_graph", [](const SampleGraph& s) { return sample_to_graph(s); });

  m.def("load_edge_list", &load_from_string, py::arg("text"),
        "parse a SNAP-style edge list from a string");
  m.def("generate_preferential_attachment", &generate_preferential_attachment, py::arg("nodes"),
        py::arg("attachment"), py::arg("seed"), py::arg("triad_probability") = 0.0);
  m.def("generate_dpl_attachment", &generate_dpl_attachment, py::arg("nodes"), py::arg("alpha"),
        py::arg("seed"), py::arg("triad_probability") = 0.0);
  m.def("densification_exponent", &densification_exponent, py::arg("nodes"), py::arg("edges"));
  m.def("dpl_edge_target", &dpl_edge_target, py::arg("node_budget"), py::arg("alpha"),
        py::arg("d_alpha") = 0.0);
  m.def(
      "modularity_partition",
      [](const Graph& g) {
        Hierarchy h = extract_hierarchy(g);
        return h.partition.communities;
      },
      py::arg("graph"), "max-modularity communities (greedy agglomerative)");
  m.def(
      "modularity",
      [](const Graph& g, const std::vector<int>& labels) {
        return modularity(g, Partition::from_labels(labels));
      },
      py::arg("graph"), py::arg("labels"));
  m.def("sample", &run_sampler, py::arg("graph"), py::arg("method"), py::arg("fraction") = 0.10,
        py::arg("seed") = 1, py::arg("d_alpha") = 0.0, py::arg("edge_budget") = -1,
        "draw one sample with any method tag (RN, RE, RW, FF(i), C+D, CBasedRN, ...)");
  m.def(
      "properties",
      [](const Graph& g, int svd_k, const std::string& hop_mode, int hop_sources) {
        ExperimentConfig cfg;
        cfg.svd_k = svd_k;
        cfg.hop_mode = hop_mode;
        cfg.hop_sources = hop_sources;
        PropertySet props = compute_properties(g, cfg);
        py::list out;
        for (const auto& d : props) out.append(distribution_to_dict(d));
        return out;
      },
      py::arg("graph"), py::arg("svd_k") = 100, py::arg("hop_mode") = "exact",
      py::arg("hop_sources") = 1000, "the five property distributions as dicts");
  m.def(
      "ks_distance",
      [](const Graph& a, const Graph& b, int svd_k) {
        ExperimentConfig cfg;
        cfg.svd_k = svd_k;
        PropertySet pa = compute_properties(a, cfg);
        PropertySet pb = compute_properties(b, cfg);
        py::dict out;
        for (std::size_t i = 0; i < pa.size(); ++i)
          out[property_name(kProperties[i])] = ks_dstat(pa[i], pb[i]);
        return out;
      },
      py::arg("original"), py::arg("sample"), py::arg("svd_k") = 100,
      "per-property K-S D-statistics between two graphs");
  m.def(
      "dpl_difference",
      [](const Graph& original, const Graph& sample) { return dpl_difference(original, sample); },
      py::arg("original"), py::arg("sample"));
}
