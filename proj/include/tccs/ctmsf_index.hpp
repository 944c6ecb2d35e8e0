#pragma once

#include "tccs/coretime.hpp"
#include "tccs/graph.hpp"

#include <iosfwd>

namespace tccs {

struct MsfEdge {
  EdgeId edgeId;
  VertexId other;
  Timestamp coreTime;
  bool operator==(const MsfEdge&) const = default;
};

// Baseline index: for every start time the minimum spanning forest of the
// finite-core-time edges under (coreTime, edgeId) weights, stored per vertex
// as change-compressed incident-edge lists (whole list rewritten on any
// change). Same versioned lookup rule as the forest index; built
// independently per start time, so it doubles as an oracle for the
// incremental construction.
class CtmsfIndex {
 public:
  CtmsfIndex() = default;

  static CtmsfIndex build(const TemporalGraph& g, std::uint32_t k);
  static CtmsfIndex build(const TemporalGraph& g, std::uint32_t k, const CoreTimeTable& table);

  std::uint32_t k() const { return k_; }
  std::uint32_t numVertices() const { return static_cast<std::uint32_t>(labels_.size()); }
  Timestamp tMax() const { return tMax_; }
  const std::vector<Label>& labels() const { return labels_; }
  VertexId vertexByLabel(Label l) const;

  // Incident spanning-forest edges of u at start time ts (empty when none).
  const std::vector<MsfEdge>& incidentAt(VertexId u, Timestamp ts) const;

  // Same semantics as the forest-index query: component of u in the
  // temporal k-core of [w.ts, w.te], walked over vertices.
  std::vector<VertexId> query(VertexId u, TimeWindow w) const;

  std::size_t recordCount() const;
  std::size_t serializedBytes() const;

  void serialize(std::ostream& out) const;
  static CtmsfIndex deserialize(std::istream& in);
  void saveFile(const std::string& path) const;
  static CtmsfIndex loadFile(const std::string& path);

 private:
  struct VertexRecord {
    Timestamp startTime;
    std::vector<MsfEdge> edges;  // sorted by edgeId
  };

  std::uint32_t k_ = 0;
  Timestamp tMax_ = 0;
  std::vector<Label> labels_;
  std::vector<std::vector<VertexRecord>> perVertex_;  // descending startTime

  static const std::vector<MsfEdge> kEmpty_;
};

// Deterministic Kruskal over edges with finite core time at ts, weights
// (coreTime, edgeId) ascending. Returns chosen edge ids sorted.
std::vector<EdgeId> kruskalForestAt(const TemporalGraph& g, const CoreTimeTable& table, Timestamp ts);

}  // namespace tccs
