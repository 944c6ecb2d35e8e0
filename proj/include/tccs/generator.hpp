#pragma once

#include "tccs/graph.hpp"

namespace tccs {

// splitmix64: tiny deterministic RNG with stable cross-platform output, so
// generated graphs and sampled queries are reproducible byte-for-byte.
struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // uniform in [0, bound), bound >= 1; modulo bias negligible here and the
  // arithmetic is identical everywhere
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }
};

// Uniform random multigraph: m edges over n vertices (labels 0..n-1), no
// self-loops, timestamps uniform in [1, tmax].
TemporalGraph generateGraph(std::uint32_t n, std::size_t m, Timestamp tmax, std::uint64_t seed);

// Vertex uniform over 0..n-1, window uniform over ordered pairs
// 1 <= ts <= te <= tmax.
std::pair<VertexId, TimeWindow> sampleQuery(std::uint32_t n, Timestamp tmax, SplitMix64& rng);

// Edge-list text, one "u v t" line per edge in stored order.
void writeEdgeList(const TemporalGraph& g, std::ostream& out);

}  // namespace tccs
