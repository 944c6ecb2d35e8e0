#pragma once

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace tccs {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;
using Timestamp = std::uint32_t;
using Label = std::uint64_t;

// Sentinel used wherever a core time may be "never": compares greater than
// every finite timestamp.
constexpr Timestamp kInfiniteTime = std::numeric_limits<Timestamp>::max();

constexpr VertexId kNoVertex = std::numeric_limits<VertexId>::max();

struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

struct IoError : std::runtime_error {
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

struct TemporalEdge {
  VertexId u;  // u < v always
  VertexId v;
  Timestamp t;
};

struct TimeWindow {
  Timestamp ts;
  Timestamp te;
};

struct LoadStats {
  std::size_t linesRead = 0;
  std::size_t selfLoopsDropped = 0;
};

// Multigraph with dense vertex ids 0..n-1 and edges sorted by (t, input
// order). Dense ids follow ascending original label order; the label map is
// kept for reporting and CLI output.
class TemporalGraph {
 public:
  TemporalGraph() = default;

  std::uint32_t numVertices() const { return static_cast<std::uint32_t>(labels_.size()); }
  std::size_t numEdges() const { return edges_.size(); }
  Timestamp tMax() const { return edges_.empty() ? 0 : edges_.back().t; }
  Timestamp tMin() const { return edges_.empty() ? 0 : edges_.front().t; }

  const std::vector<TemporalEdge>& edges() const { return edges_; }
  const TemporalEdge& edge(EdgeId e) const { return edges_[e]; }

  Label label(VertexId v) const { return labels_[v]; }
  const std::vector<Label>& labels() const { return labels_; }
  // kNoVertex when the label does not occur.
  VertexId vertexByLabel(Label l) const;

  // First edge index with t >= ts (edges are t-sorted).
  std::size_t firstEdgeAt(Timestamp ts) const;
  // [begin, end) edge index range for exact timestamp t.
  std::pair<std::size_t, std::size_t> edgeRangeAt(Timestamp t) const;

  // Raw constructor for generators/bindings: labels give dense-id -> label,
  // edges may be unsorted and use dense ids already. Endpoints are
  // canonicalised (u < v) and edges stably sorted by t.
  static TemporalGraph fromDense(std::vector<Label> labels, std::vector<TemporalEdge> edges);

  void validateWindow(TimeWindow w) const;

 private:
  std::vector<TemporalEdge> edges_;
  std::vector<Label> labels_;

  friend TemporalGraph loadEdgeList(std::istream&, LoadStats*);
};

// Whitespace-separated "u v t" lines; '#' and '%' start comment lines; blank
// lines skipped. Self-loops are dropped and counted. Malformed lines and
// negative timestamps raise ParseError with the line number.
TemporalGraph loadEdgeList(std::istream& in, LoadStats* stats = nullptr);
TemporalGraph loadEdgeListFile(const std::string& path, LoadStats* stats = nullptr);

// Rank-compresses distinct timestamps to 1..T preserving order. mappingOut
// (optional) receives the original value of each new timestamp, index i
// holding the original of new timestamp i+1.
TemporalGraph normalizeTimestamps(const TemporalGraph& g, std::vector<Timestamp>* mappingOut = nullptr);

// Buckets raw epoch-second timestamps into days (floor t/86400), then
// normalizes buckets to 1..D. Day boundaries at UTC midnight.
TemporalGraph aggregateDays(const TemporalGraph& g, std::vector<Timestamp>* mappingOut = nullptr);

// Simple undirected graph over the same dense id space. Vertices with no
// incident edge are absent.
class StaticGraph {
 public:
  StaticGraph() = default;
  explicit StaticGraph(std::uint32_t n) : adj_(n) {}

  std::uint32_t idBound() const { return static_cast<std::uint32_t>(adj_.size()); }
  const std::vector<VertexId>& vertices() const { return vertices_; }  // sorted
  bool contains(VertexId u) const { return u < adj_.size() && !adj_[u].empty(); }
  const std::vector<VertexId>& neighbors(VertexId u) const { return adj_[u]; }
  std::size_t degree(VertexId u) const { return u < adj_.size() ? adj_[u].size() : 0; }
  std::size_t edgeCount() const { return edgeCount_; }

  // pairs must have u < v; duplicates collapse.
  static StaticGraph fromPairs(std::uint32_t n, std::vector<std::pair<VertexId, VertexId>> pairs);

 private:
  std::vector<std::vector<VertexId>> adj_;  // sorted unique
  std::vector<VertexId> vertices_;
  std::size_t edgeCount_ = 0;
};

// Projection of the window [w.ts, w.te]: parallel edges collapse, isolated
// vertices are absent.
StaticGraph project(const TemporalGraph& g, TimeWindow w);

// Maximal subgraph with minimum degree >= k. k >= 1 required. Unique, so
// peel order does not matter.
StaticGraph peelKCore(const StaticGraph& g, std::uint32_t k);

// Connected components as sorted vertex lists, ordered by smallest member.
std::vector<std::vector<VertexId>> connectedComponents(const StaticGraph& g);

// Coreness of every vertex of the full-window projection; kmax = max entry.
// Graph with no edges has kmax 0.
std::uint32_t measureKmax(const TemporalGraph& g);

// "60%" -> round(0.60 * kmax), floored at 1. Plain integers pass through.
std::uint32_t resolveK(const std::string& spec, std::uint32_t kmax);

}  // namespace tccs
