#include "tccs/graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <sstream>
#include <unordered_map>

namespace tccs {

VertexId TemporalGraph::vertexByLabel(Label l) const {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), l);
  if (it == labels_.end() || *it != l) return kNoVertex;
  return static_cast<VertexId>(it - labels_.begin());
}

std::size_t TemporalGraph::firstEdgeAt(Timestamp ts) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), ts,
                             [](const TemporalEdge& e, Timestamp t) { return e.t < t; });
  return static_cast<std::size_t>(it - edges_.begin());
}

std::pair<std::size_t, std::size_t> TemporalGraph::edgeRangeAt(Timestamp t) const {
  std::size_t b = firstEdgeAt(t);
  std::size_t e = b;
  while (e < edges_.size() && edges_[e].t == t) ++e;
  return {b, e};
}

void TemporalGraph::validateWindow(TimeWindow w) const {
  if (w.ts < 1 || w.ts > w.te || w.te > tMax())
    throw std::invalid_argument("window [" + std::to_string(w.ts) + "," + std::to_string(w.te) +
                                "] out of range, tMax=" + std::to_string(tMax()));
}

TemporalGraph TemporalGraph::fromDense(std::vector<Label> labels, std::vector<TemporalEdge> edges) {
  TemporalGraph g;
  for (auto& e : edges) {
    if (e.u == e.v) throw std::invalid_argument("self loop in dense edge list");
    if (e.u >= labels.size() || e.v >= labels.size())
      throw std::invalid_argument("dense vertex id out of range");
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::stable_sort(edges.begin(), edges.end(),
                   [](const TemporalEdge& a, const TemporalEdge& b) { return a.t < b.t; });
  g.labels_ = std::move(labels);
  g.edges_ = std::move(edges);
  return g;
}

namespace {

struct RawEdge {
  Label u, v;
  Timestamp t;
  std::size_t order;
};

bool parseField(const char*& p, const char* end, std::uint64_t& out) {
  while (p < end && (*p == ' ' || *p == '\t' || *p == '\r')) ++p;
  if (p >= end) return false;
  auto res = std::from_chars(p, end, out);
  if (res.ec != std::errc()) return false;
  p = res.ptr;
  return true;
}

}  // namespace

TemporalGraph loadEdgeList(std::istream& in, LoadStats* stats) {
  LoadStats local;
  std::vector<RawEdge> raw;
  std::string line;
  std::size_t lineNo = 0;
  while (std::getline(in, line)) {
    ++lineNo;
    ++local.linesRead;
    const char* p = line.data();
    const char* end = p + line.size();
    while (p < end && (*p == ' ' || *p == '\t' || *p == '\r')) ++p;
    if (p >= end || *p == '#' || *p == '%') continue;
    std::uint64_t u, v, t;
    if (!parseField(p, end, u) || !parseField(p, end, v) || !parseField(p, end, t)) {
      // a leading '-' makes from_chars<uint64> fail; report both shapes the same way
      throw ParseError("line " + std::to_string(lineNo) + ": expected 'u v t' with nonnegative integers");
    }
    while (p < end && (*p == ' ' || *p == '\t' || *p == '\r')) ++p;
    if (p < end) throw ParseError("line " + std::to_string(lineNo) + ": trailing junk after 'u v t'");
    if (t > std::numeric_limits<Timestamp>::max() - 1)
      throw ParseError("line " + std::to_string(lineNo) + ": timestamp too large");
    if (u == v) {
      ++local.selfLoopsDropped;
      continue;
    }
    raw.push_back({u, v, static_cast<Timestamp>(t), raw.size()});
  }
  if (in.bad()) throw IoError("read failure on edge list input");

  std::vector<Label> labels;
  labels.reserve(raw.size() * 2);
  for (const auto& e : raw) {
    labels.push_back(e.u);
    labels.push_back(e.v);
  }
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());

  auto denseOf = [&](Label l) {
    return static_cast<VertexId>(std::lower_bound(labels.begin(), labels.end(), l) - labels.begin());
  };

  std::stable_sort(raw.begin(), raw.end(), [](const RawEdge& a, const RawEdge& b) { return a.t < b.t; });

  TemporalGraph g;
  g.edges_.reserve(raw.size());
  for (const auto& e : raw) {
    VertexId du = denseOf(e.u), dv = denseOf(e.v);
    if (du > dv) std::swap(du, dv);
    g.edges_.push_back({du, dv, e.t});
  }
  g.labels_ = std::move(labels);
  if (stats) *stats = local;
  return g;
}

TemporalGraph loadEdgeListFile(const std::string& path, LoadStats* stats) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  return loadEdgeList(in, stats);
}

namespace {

TemporalGraph remapTimes(const TemporalGraph& g, const std::vector<Timestamp>& distinct,
                         std::vector<Timestamp>* mappingOut) {
  TemporalGraph out;
  std::vector<TemporalEdge> edges = g.edges();
  for (auto& e : edges) {
    auto it = std::lower_bound(distinct.begin(), distinct.end(), e.t);
    e.t = static_cast<Timestamp>(it - distinct.begin()) + 1;
  }
  if (mappingOut) *mappingOut = distinct;
  return TemporalGraph::fromDense(g.labels(), std::move(edges));
}

}  // namespace

TemporalGraph normalizeTimestamps(const TemporalGraph& g, std::vector<Timestamp>* mappingOut) {
  std::vector<Timestamp> distinct;
  distinct.reserve(g.numEdges());
  for (const auto& e : g.edges()) distinct.push_back(e.t);
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  return remapTimes(g, distinct, mappingOut);
}

TemporalGraph aggregateDays(const TemporalGraph& g, std::vector<Timestamp>* mappingOut) {
  std::vector<TemporalEdge> edges = g.edges();
  for (auto& e : edges) e.t = e.t / 86400u;
  TemporalGraph bucketed = TemporalGraph::fromDense(g.labels(), std::move(edges));
  return normalizeTimestamps(bucketed, mappingOut);
}

StaticGraph StaticGraph::fromPairs(std::uint32_t n, std::vector<std::pair<VertexId, VertexId>> pairs) {
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  StaticGraph s(n);
  for (auto [u, v] : pairs) {
    s.adj_[u].push_back(v);
    s.adj_[v].push_back(u);
  }
  s.edgeCount_ = pairs.size();
  for (std::uint32_t u = 0; u < n; ++u) {
    auto& a = s.adj_[u];
    std::sort(a.begin(), a.end());
    if (!a.empty()) s.vertices_.push_back(u);
  }
  return s;
}

StaticGraph project(const TemporalGraph& g, TimeWindow w) {
  g.validateWindow(w);
  std::vector<std::pair<VertexId, VertexId>> pairs;
  for (std::size_t i = g.firstEdgeAt(w.ts); i < g.numEdges(); ++i) {
    const auto& e = g.edge(static_cast<EdgeId>(i));
    if (e.t > w.te) break;
    pairs.emplace_back(e.u, e.v);
  }
  return StaticGraph::fromPairs(g.numVertices(), std::move(pairs));
}

StaticGraph peelKCore(const StaticGraph& g, std::uint32_t k) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  const std::uint32_t n = g.idBound();
  std::vector<std::size_t> deg(n, 0);
  std::vector<char> alive(n, 0);
  std::vector<VertexId> queue;
  for (VertexId u : g.vertices()) {
    deg[u] = g.degree(u);
    alive[u] = 1;
    if (deg[u] < k) queue.push_back(u);
  }
  while (!queue.empty()) {
    VertexId u = queue.back();
    queue.pop_back();
    if (!alive[u]) continue;
    alive[u] = 0;
    for (VertexId v : g.neighbors(u)) {
      if (alive[v] && deg[v]-- == k) queue.push_back(v);
    }
  }
  std::vector<std::pair<VertexId, VertexId>> pairs;
  for (VertexId u : g.vertices()) {
    if (!alive[u]) continue;
    for (VertexId v : g.neighbors(u))
      if (u < v && alive[v]) pairs.emplace_back(u, v);
  }
  return StaticGraph::fromPairs(n, std::move(pairs));
}

std::vector<std::vector<VertexId>> connectedComponents(const StaticGraph& g) {
  std::vector<std::vector<VertexId>> comps;
  std::vector<char> seen(g.idBound(), 0);
  std::vector<VertexId> stack;
  for (VertexId s : g.vertices()) {
    if (seen[s]) continue;
    std::vector<VertexId> comp;
    seen[s] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      VertexId u = stack.back();
      stack.pop_back();
      comp.push_back(u);
      for (VertexId v : g.neighbors(u)) {
        if (!seen[v]) {
          seen[v] = 1;
          stack.push_back(v);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;  // seeds scanned ascending, so ordering by smallest member holds
}

std::uint32_t measureKmax(const TemporalGraph& g) {
  if (g.numEdges() == 0) return 0;
  StaticGraph s = project(g, {g.tMin(), g.tMax()});
  // bucket peel; coreness of u = k at eviction
  const std::uint32_t n = s.idBound();
  std::vector<std::size_t> deg(n, 0);
  std::vector<char> alive(n, 0);
  std::size_t maxDeg = 0;
  for (VertexId u : s.vertices()) {
    deg[u] = s.degree(u);
    alive[u] = 1;
    maxDeg = std::max(maxDeg, deg[u]);
  }
  std::vector<std::vector<VertexId>> bucket(maxDeg + 1);
  for (VertexId u : s.vertices()) bucket[deg[u]].push_back(u);
  std::uint32_t kmax = 0;
  for (std::size_t d = 0; d <= maxDeg; ++d) {
    while (!bucket[d].empty()) {
      VertexId u = bucket[d].back();
      bucket[d].pop_back();
      if (!alive[u] || deg[u] > d) continue;  // stale entry
      alive[u] = 0;
      kmax = std::max<std::uint32_t>(kmax, static_cast<std::uint32_t>(d));
      for (VertexId v : s.neighbors(u)) {
        if (alive[v] && deg[v] > d) bucket[--deg[v]].push_back(v);
      }
    }
  }
  return kmax;
}

std::uint32_t resolveK(const std::string& spec, std::uint32_t kmax) {
  if (spec.empty()) throw std::invalid_argument("empty k spec");
  if (spec.back() == '%') {
    double pct = 0;
    std::size_t pos = 0;
    pct = std::stod(spec.substr(0, spec.size() - 1), &pos);
    if (pos != spec.size() - 1) throw std::invalid_argument("bad percent k spec: " + spec);
    long v = std::lround(pct / 100.0 * static_cast<double>(kmax));
    return static_cast<std::uint32_t>(std::max(1L, v));
  }
  std::size_t pos = 0;
  unsigned long v = std::stoul(spec, &pos);
  if (pos != spec.size() || v < 1) throw std::invalid_argument("bad k spec: " + spec);
  return static_cast<std::uint32_t>(v);
}

}  // namespace tccs
