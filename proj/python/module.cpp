#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tccs/ctmsf_index.hpp"
#include "tccs/generator.hpp"
#include "tccs/oracle.hpp"
#include "tccs/query.hpp"

#include <sstream>

namespace py = pybind11;
using namespace tccs;

namespace {

VertexId denseOf(const TemporalGraph& g, Label l) {
  VertexId u = g.vertexByLabel(l);
  if (u == kNoVertex) throw std::invalid_argument("vertex label not in graph");
  return u;
}

std::vector<Label> toLabels(const std::vector<VertexId>& vs, const std::vector<Label>& labels) {
  std::vector<Label> out;
  out.reserve(vs.size());
  for (VertexId v : vs) out.push_back(labels[v]);
  return out;
}

}  // namespace

PYBIND11_MODULE(_tccs, m) {
  m.doc() = "historical temporal k-core component search";

  py::class_<TemporalGraph>(m, "TemporalGraph")
      .def_property_readonly("num_vertices", &TemporalGraph::numVertices)
      .def_property_readonly("num_edges", &TemporalGraph::numEdges)
      .def_property_readonly("t_max", &TemporalGraph::tMax)
      .def("labels", [](const TemporalGraph& g) { return g.labels(); })
      .def("edges",
           [](const TemporalGraph& g) {
             std::vector<std::tuple<Label, Label, Timestamp>> out;
             for (const auto& e : g.edges()) out.emplace_back(g.label(e.u), g.label(e.v), e.t);
             return out;
           })
      .def("normalize_timestamps", [](const TemporalGraph& g) { return normalizeTimestamps(g); })
      .def("aggregate_days", [](const TemporalGraph& g) { return aggregateDays(g); });

  m.def("load_edge_list", [](const std::string& path) { return loadEdgeListFile(path); }, py::arg("path"));
  m.def("parse_edge_list",
        [](const std::string& text) {
          std::istringstream in(text);
          return loadEdgeList(in);
        },
        py::arg("text"));
  m.def("generate_graph", &generateGraph, py::arg("n"), py::arg("m"), py::arg("tmax"), py::arg("seed"));
  m.def("measure_kmax", &measureKmax, py::arg("graph"));

  m.def("core_component",
        [](const TemporalGraph& g, std::uint32_t k, Label u, Timestamp ts, Timestamp te) {
          return toLabels(oracleComponent(g, k, denseOf(g, u), {ts, te}), g.labels());
        },
        py::arg("graph"), py::arg("k"), py::arg("u"), py::arg("ts"), py::arg("te"),
        "ground-truth component of u in the k-core of [ts, te], by direct peeling");

  m.def("edge_core_times",
        [](const TemporalGraph& g, std::uint32_t k) {
          CoreTimeTable t = allEdgeCoreTimes(g, k);
          std::vector<std::vector<std::pair<Timestamp, py::object>>> out(g.numEdges());
          for (EdgeId e = 0; e < g.numEdges(); ++e)
            for (const auto& p : t.row(e))
              out[e].emplace_back(p.startTime, p.coreTime == kInfiniteTime
                                                   ? py::none()
                                                   : py::object(py::cast(p.coreTime)));
          return out;
        },
        py::arg("graph"), py::arg("k"),
        "per-edge change-compressed (start_time, core_time) pairs; None = never");

  py::class_<PecbIndex>(m, "ForestIndex")
      .def_property_readonly("k", &PecbIndex::k)
      .def_property_readonly("num_vertices", &PecbIndex::numVertices)
      .def_property_readonly("t_max", &PecbIndex::tMax)
      .def_property_readonly("node_count", &PecbIndex::nodeCount)
      .def("query",
           [](const PecbIndex& idx, Label u, Timestamp ts, Timestamp te) {
             VertexId du = idx.vertexByLabel(u);
             if (du == kNoVertex) throw std::invalid_argument("vertex label not in index");
             return toLabels(queryComponent(idx, du, {ts, te}), idx.labels());
           },
           py::arg("u"), py::arg("ts"), py::arg("te"))
      .def("save", &PecbIndex::saveFile, py::arg("path"))
      .def("stats", [](const PecbIndex& idx) {
        IndexStats st = idx.stats();
        py::dict d;
        d["nodes"] = st.nodeCount;
        d["live_nodes"] = st.liveNodeCount;
        d["entries"] = st.entryCount;
        d["entry_point_records"] = st.entryPointRecordCount;
        d["avg_entries_per_node"] = st.avgEntriesPerNode;
        d["bytes"] = st.serializedBytes;
        return d;
      });

  m.def("build_index",
        [](const TemporalGraph& g, std::uint32_t k) { return PecbIndex::build(g, k); },
        py::arg("graph"), py::arg("k"));
  m.def("load_index", &PecbIndex::loadFile, py::arg("path"));

  py::class_<CtmsfIndex>(m, "BaselineIndex")
      .def_property_readonly("k", &CtmsfIndex::k)
      .def_property_readonly("num_vertices", &CtmsfIndex::numVertices)
      .def_property_readonly("t_max", &CtmsfIndex::tMax)
      .def("query",
           [](const CtmsfIndex& idx, Label u, Timestamp ts, Timestamp te) {
             VertexId du = idx.vertexByLabel(u);
             if (du == kNoVertex) throw std::invalid_argument("vertex label not in index");
             return toLabels(idx.query(du, {ts, te}), idx.labels());
           },
           py::arg("u"), py::arg("ts"), py::arg("te"))
      .def("save", &CtmsfIndex::saveFile, py::arg("path"));

  m.def("build_baseline",
        [](const TemporalGraph& g, std::uint32_t k) { return CtmsfIndex::build(g, k); },
        py::arg("graph"), py::arg("k"));
  m.def("load_baseline", &CtmsfIndex::loadFile, py::arg("path"));
}
