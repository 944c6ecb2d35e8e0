#include "tccs/coretime.hpp"

#include <algorithm>
#include <unordered_map>

namespace tccs {

Timestamp CoreTimeTable::at(EdgeId e, Timestamp ts) const {
  const auto& r = rows_[e];
  // last pair with startTime <= ts
  auto it = std::upper_bound(r.begin(), r.end(), ts,
                             [](Timestamp t, const CoreTimePair& p) { return t < p.startTime; });
  if (it == r.begin()) throw std::invalid_argument("start time below table range");
  return std::prev(it)->coreTime;
}

void CoreTimeTable::append(EdgeId e, Timestamp startTime, Timestamp coreTime) {
  auto& r = rows_[e];
  if (!r.empty()) {
    if (r.back().startTime >= startTime) throw std::invalid_argument("start times must ascend");
    if (r.back().coreTime == coreTime) return;
  }
  r.push_back({startTime, coreTime});
}

std::size_t CoreTimeTable::totalPairs() const {
  std::size_t n = 0;
  for (const auto& r : rows_) n += r.size();
  return n;
}

namespace {

// Simple-graph view of the window [ts, tMax] with per-pair multiplicities,
// peeled to the k-core and then eroded a timestamp group at a time.
struct PeelState {
  std::uint32_t n;
  std::vector<std::uint32_t> head;   // CSR offsets per vertex
  std::vector<VertexId> nbr;         // simple-edge other endpoint, per direction
  std::vector<std::uint32_t> eid;    // simple-edge index, per direction
  std::vector<std::uint32_t> mult;   // per simple edge
  std::vector<char> edgeAlive;       // per simple edge
  std::vector<std::uint32_t> deg;    // alive distinct-neighbor degree
  std::vector<char> alive;           // per vertex
  std::unordered_map<std::uint64_t, std::uint32_t> pairIndex;

  static std::uint64_t key(VertexId u, VertexId v) {
    return (static_cast<std::uint64_t>(u) << 32) | v;
  }
};

void evictBelowK(PeelState& st, std::uint32_t k, std::vector<VertexId>& queue,
                 std::vector<VertexId>* evicted) {
  while (!queue.empty()) {
    VertexId u = queue.back();
    queue.pop_back();
    if (!st.alive[u] || st.deg[u] >= k) continue;
    st.alive[u] = 0;
    if (evicted) evicted->push_back(u);
    for (std::uint32_t i = st.head[u]; i < st.head[u + 1]; ++i) {
      std::uint32_t se = st.eid[i];
      if (!st.edgeAlive[se]) continue;
      st.edgeAlive[se] = 0;
      VertexId v = st.nbr[i];
      if (st.alive[v] && st.deg[v]-- == k) queue.push_back(v);
    }
  }
}

}  // namespace

std::vector<Timestamp> vertexCoreTimesAt(const TemporalGraph& g, std::uint32_t k, Timestamp ts) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  const std::uint32_t n = g.numVertices();
  std::vector<Timestamp> ct(n, kInfiniteTime);
  const std::size_t first = g.firstEdgeAt(ts);
  const std::size_t m = g.numEdges();
  if (first >= m) return ct;

  PeelState st;
  st.n = n;
  // collapse window multi-edges into simple edges with multiplicities
  st.pairIndex.reserve((m - first) * 2);
  std::vector<std::pair<VertexId, VertexId>> simple;
  for (std::size_t i = first; i < m; ++i) {
    const auto& e = g.edge(static_cast<EdgeId>(i));
    auto key = PeelState::key(e.u, e.v);
    auto [it, inserted] = st.pairIndex.try_emplace(key, static_cast<std::uint32_t>(simple.size()));
    if (inserted) {
      simple.emplace_back(e.u, e.v);
      st.mult.push_back(1);
    } else {
      ++st.mult[it->second];
    }
  }
  const std::uint32_t sm = static_cast<std::uint32_t>(simple.size());
  st.edgeAlive.assign(sm, 1);
  st.deg.assign(n, 0);
  st.alive.assign(n, 0);
  std::vector<std::uint32_t> cnt(n + 1, 0);
  for (auto [u, v] : simple) {
    ++cnt[u];
    ++cnt[v];
  }
  st.head.assign(n + 1, 0);
  for (std::uint32_t i = 0; i < n; ++i) st.head[i + 1] = st.head[i] + cnt[i];
  st.nbr.resize(st.head[n]);
  st.eid.resize(st.head[n]);
  std::vector<std::uint32_t> fill(st.head.begin(), st.head.end() - 1);
  for (std::uint32_t se = 0; se < sm; ++se) {
    auto [u, v] = simple[se];
    st.nbr[fill[u]] = v;
    st.eid[fill[u]++] = se;
    st.nbr[fill[v]] = u;
    st.eid[fill[v]++] = se;
  }
  for (std::uint32_t u = 0; u < n; ++u) {
    st.deg[u] = st.head[u + 1] - st.head[u];
    st.alive[u] = st.deg[u] > 0;
  }

  // peel [ts, tMax] down to the k-core; vertices lost here are never in any
  // core starting at ts
  std::vector<VertexId> queue;
  for (std::uint32_t u = 0; u < n; ++u)
    if (st.alive[u] && st.deg[u] < k) queue.push_back(u);
  evictBelowK(st, k, queue, nullptr);

  // delete timestamp groups from tMax down; eviction while deleting group t
  // means the vertex survives [ts, t] but not [ts, t-1], so ct = t
  std::vector<VertexId> evicted;
  std::size_t hi = m;  // edges [lo, hi) form the group
  while (hi > first) {
    std::size_t lo = hi;
    Timestamp t = g.edge(static_cast<EdgeId>(hi - 1)).t;
    while (lo > first && g.edge(static_cast<EdgeId>(lo - 1)).t == t) --lo;
    for (std::size_t i = lo; i < hi; ++i) {
      const auto& e = g.edge(static_cast<EdgeId>(i));
      if (!st.alive[e.u] || !st.alive[e.v]) continue;
      std::uint32_t se = st.pairIndex[PeelState::key(e.u, e.v)];
      if (!st.edgeAlive[se]) continue;
      if (--st.mult[se] == 0) {
        st.edgeAlive[se] = 0;
        if (st.deg[e.u]-- == k) queue.push_back(e.u);
        if (st.deg[e.v]-- == k) queue.push_back(e.v);
      }
    }
    evicted.clear();
    evictBelowK(st, k, queue, &evicted);
    for (VertexId u : evicted) ct[u] = t;
    hi = lo;
  }
  return ct;
}

CoreTimeTable allEdgeCoreTimes(const TemporalGraph& g, std::uint32_t k) {
  CoreTimeTable table(g.numEdges());
  const Timestamp tMax = g.tMax();
  if (g.numEdges() == 0) return table;
  for (Timestamp ts = 1; ts <= tMax; ++ts) {
    std::vector<Timestamp> ct = vertexCoreTimesAt(g, k, ts);
    for (EdgeId e = 0; e < g.numEdges(); ++e) {
      const auto& ed = g.edge(e);
      Timestamp v;
      if (ed.t < ts || ct[ed.u] == kInfiniteTime || ct[ed.v] == kInfiniteTime) {
        v = kInfiniteTime;
      } else {
        v = std::max(ed.t, std::max(ct[ed.u], ct[ed.v]));
      }
      table.append(e, ts, v);
    }
  }
  return table;
}

}  // namespace tccs
