#include "tccs/oracle.hpp"

#include <algorithm>

namespace tccs {

StaticGraph temporalKCore(const TemporalGraph& g, std::uint32_t k, TimeWindow w) {
  return peelKCore(project(g, w), k);
}

std::vector<VertexId> oracleComponent(const TemporalGraph& g, std::uint32_t k, VertexId u, TimeWindow w) {
  if (u >= g.numVertices()) throw std::invalid_argument("vertex id out of range");
  StaticGraph core = temporalKCore(g, k, w);
  if (!core.contains(u)) return {};
  std::vector<VertexId> comp;
  std::vector<char> seen(core.idBound(), 0);
  std::vector<VertexId> stack{u};
  seen[u] = 1;
  while (!stack.empty()) {
    VertexId x = stack.back();
    stack.pop_back();
    comp.push_back(x);
    for (VertexId y : core.neighbors(x)) {
      if (!seen[y]) {
        seen[y] = 1;
        stack.push_back(y);
      }
    }
  }
  std::sort(comp.begin(), comp.end());
  return comp;
}

Timestamp oracleEdgeCoreTime(const TemporalGraph& g, std::uint32_t k, EdgeId e, Timestamp ts) {
  if (e >= g.numEdges()) throw std::invalid_argument("edge id out of range");
  const TemporalEdge& ed = g.edge(e);
  if (ed.t < ts) return kInfiniteTime;
  for (Timestamp te = std::max(ts, ed.t); te <= g.tMax(); ++te) {
    StaticGraph core = temporalKCore(g, k, {ts, te});
    if (core.contains(ed.u) && core.contains(ed.v)) return te;
  }
  return kInfiniteTime;
}

}  // namespace tccs
