#pragma once

#include "tccs/graph.hpp"

namespace tccs {

// k-core of the window projection. Disconnected; components are separate
// answers.
StaticGraph temporalKCore(const TemporalGraph& g, std::uint32_t k, TimeWindow w);

// Sorted vertex set of u's component in the temporal k-core; empty when u is
// not in the core. Ground truth for every index-based answer.
std::vector<VertexId> oracleComponent(const TemporalGraph& g, std::uint32_t k, VertexId u, TimeWindow w);

// Earliest te such that edge e belongs to the k-core of [ts, te];
// kInfiniteTime when none (including t(e) < ts). Ascending scan over te.
Timestamp oracleEdgeCoreTime(const TemporalGraph& g, std::uint32_t k, EdgeId e, Timestamp ts);

}  // namespace tccs
