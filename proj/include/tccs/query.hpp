#pragma once

#include "tccs/ecb_index.hpp"

namespace tccs {

struct QueryStats {
  std::size_t nodesVisited = 0;
  std::size_t versionLookups = 0;
};

// Component of u in the temporal k-core of [w.ts, w.te], answered from the
// index alone: locate u's entry node, reject if its core time exceeds w.te,
// else walk parent/left/right links at w.ts keeping nodes with core time
// <= w.te and collect endpoints. Sorted dense vertex ids.
std::vector<VertexId> queryComponent(const PecbIndex& idx, VertexId u, TimeWindow w,
                                     QueryStats* stats = nullptr);

struct BatchQueryResult {
  std::vector<VertexId> vertices;
  std::uint64_t micros;
};

// Results in input order. threads > 1 splits the batch into contiguous
// chunks; queries are read-only so workers share the index.
std::vector<BatchQueryResult> batchQuery(const PecbIndex& idx,
                                         const std::vector<std::pair<VertexId, TimeWindow>>& queries,
                                         unsigned threads = 1);

}  // namespace tccs
