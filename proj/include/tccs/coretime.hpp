#pragma once

#include "tccs/graph.hpp"

namespace tccs {

struct CoreTimePair {
  Timestamp startTime;
  Timestamp coreTime;  // kInfiniteTime = never in core
};

// Per-edge core-time lists, change-compressed over ascending start times:
// the value at ts is the pair with the largest startTime <= ts. Every list
// begins at startTime 1 and both columns are strictly/weakly increasing.
class CoreTimeTable {
 public:
  CoreTimeTable() = default;
  explicit CoreTimeTable(std::size_t edgeCount) : rows_(edgeCount) {}

  std::size_t edgeCount() const { return rows_.size(); }
  const std::vector<CoreTimePair>& row(EdgeId e) const { return rows_[e]; }
  Timestamp at(EdgeId e, Timestamp ts) const;

  // Appends preserving compression: ignored when equal to the last value.
  void append(EdgeId e, Timestamp startTime, Timestamp coreTime);

  std::size_t totalPairs() const;

 private:
  std::vector<std::vector<CoreTimePair>> rows_;
};

// Core times of every vertex for windows starting at ts: ct[v] = smallest te
// with v in the k-core of [ts, te], kInfiniteTime when never. Descending
// timestamp-group deletion from the [ts, tMax] core.
std::vector<Timestamp> vertexCoreTimesAt(const TemporalGraph& g, std::uint32_t k, Timestamp ts);

// Whole table: for each ts ascending, CT(e) = kInfiniteTime if t(e) < ts,
// else max(t(e), ct[u], ct[v]).
CoreTimeTable allEdgeCoreTimes(const TemporalGraph& g, std::uint32_t k);

}  // namespace tccs
