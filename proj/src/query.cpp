#include "tccs/query.hpp"

#include <algorithm>
#include <chrono>
#include <thread>
#include <unordered_set>

namespace tccs {

std::vector<VertexId> queryComponent(const PecbIndex& idx, VertexId u, TimeWindow w,
                                     QueryStats* stats) {
  if (u >= idx.numVertices()) throw std::invalid_argument("vertex id out of range");
  if (w.ts < 1 || w.ts > w.te || w.te > idx.tMax())
    throw std::invalid_argument("window [" + std::to_string(w.ts) + "," + std::to_string(w.te) +
                                "] out of range, tMax=" + std::to_string(idx.tMax()));
  QueryStats local;
  std::vector<VertexId> out;
  NodeId s = idx.entryNodeAt(u, w.ts);
  ++local.versionLookups;
  if (s != kNoNode && idx.node(s).coreTime <= w.te) {
    std::unordered_set<NodeId> visited;
    std::vector<NodeId> stack{s};
    visited.insert(s);
    std::unordered_set<VertexId> verts;
    while (!stack.empty()) {
      NodeId x = stack.back();
      stack.pop_back();
      ++local.nodesVisited;
      verts.insert(idx.node(x).u);
      verts.insert(idx.node(x).v);
      NodeLinks nl = idx.linksAt(x, w.ts);
      ++local.versionLookups;
      for (NodeId y : {nl.parent, nl.left, nl.right}) {
        if (y == kNoNode || visited.count(y)) continue;
        if (idx.node(y).coreTime > w.te) continue;
        visited.insert(y);
        stack.push_back(y);
      }
    }
    out.assign(verts.begin(), verts.end());
    std::sort(out.begin(), out.end());
  }
  if (stats) *stats = local;
  return out;
}

std::vector<BatchQueryResult> batchQuery(const PecbIndex& idx,
                                         const std::vector<std::pair<VertexId, TimeWindow>>& queries,
                                         unsigned threads) {
  std::vector<BatchQueryResult> results(queries.size());
  // reject bad queries before any worker starts; throws must not cross
  // thread boundaries
  for (const auto& [u, w] : queries) {
    if (u >= idx.numVertices()) throw std::invalid_argument("vertex id out of range");
    if (w.ts < 1 || w.ts > w.te || w.te > idx.tMax())
      throw std::invalid_argument("query window out of range");
  }
  auto runRange = [&](std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) {
      auto t0 = std::chrono::steady_clock::now();
      std::vector<VertexId> v = queryComponent(idx, queries[i].first, queries[i].second);
      auto t1 = std::chrono::steady_clock::now();
      results[i].vertices = std::move(v);
      results[i].micros = static_cast<std::uint64_t>(
          std::chrono::duration_cast<std::chrono::microseconds>(t1 - t0).count());
    }
  };
  if (threads <= 1 || queries.size() < 2) {
    runRange(0, queries.size());
    return results;
  }
  unsigned nw = std::min<unsigned>(threads, static_cast<unsigned>(queries.size()));
  std::vector<std::thread> workers;
  std::size_t chunk = (queries.size() + nw - 1) / nw;
  for (unsigned w = 0; w < nw; ++w) {
    std::size_t lo = w * chunk;
    std::size_t hi = std::min(queries.size(), lo + chunk);
    if (lo >= hi) break;
    workers.emplace_back(runRange, lo, hi);
  }
  for (auto& t : workers) t.join();
  return results;
}

}  // namespace tccs
