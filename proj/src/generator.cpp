#include "tccs/generator.hpp"

#include <ostream>

namespace tccs {

TemporalGraph generateGraph(std::uint32_t n, std::size_t m, Timestamp tmax, std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("need at least 2 vertices");
  if (tmax < 1) throw std::invalid_argument("tmax must be >= 1");
  SplitMix64 rng(seed);
  std::vector<Label> labels(n);
  for (std::uint32_t i = 0; i < n; ++i) labels[i] = i;
  std::vector<TemporalEdge> edges;
  edges.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    VertexId u = static_cast<VertexId>(rng.below(n));
    VertexId v = static_cast<VertexId>(rng.below(n - 1));
    if (v >= u) ++v;  // uniform over the n-1 others
    Timestamp t = static_cast<Timestamp>(1 + rng.below(tmax));
    edges.push_back({u, v, t});
  }
  return TemporalGraph::fromDense(std::move(labels), std::move(edges));
}

std::pair<VertexId, TimeWindow> sampleQuery(std::uint32_t n, Timestamp tmax, SplitMix64& rng) {
  VertexId u = static_cast<VertexId>(rng.below(n));
  std::uint64_t total = static_cast<std::uint64_t>(tmax) * (tmax + 1) / 2;
  std::uint64_t r = rng.below(total);
  Timestamp ts = 1;
  std::uint64_t span = tmax;  // windows starting at ts
  while (r >= span) {
    r -= span;
    --span;
    ++ts;
  }
  Timestamp te = ts + static_cast<Timestamp>(r);
  return {u, {ts, te}};
}

void writeEdgeList(const TemporalGraph& g, std::ostream& out) {
  for (const auto& e : g.edges())
    out << g.label(e.u) << ' ' << g.label(e.v) << ' ' << e.t << '\n';
}

}  // namespace tccs
