#include "tccs/ctmsf_index.hpp"

#include "binary_io.hpp"
#include "tccs/union_find.hpp"

#include <algorithm>
#include <fstream>

namespace tccs {

namespace {
constexpr char kMagic[7] = {'C', 'T', 'M', 'S', 'F', 'I', 'X'};
constexpr std::uint8_t kFormatVersion = 1;
}  // namespace

const std::vector<MsfEdge> CtmsfIndex::kEmpty_{};

std::vector<EdgeId> kruskalForestAt(const TemporalGraph& g, const CoreTimeTable& table, Timestamp ts) {
  std::vector<std::pair<Timestamp, EdgeId>> weighted;
  for (EdgeId e = 0; e < g.numEdges(); ++e) {
    Timestamp ct = table.at(e, ts);
    if (ct != kInfiniteTime) weighted.emplace_back(ct, e);
  }
  std::sort(weighted.begin(), weighted.end());
  UnionFind uf(g.numVertices());
  std::vector<EdgeId> chosen;
  for (auto [ct, e] : weighted) {
    if (uf.unite(g.edge(e).u, g.edge(e).v)) chosen.push_back(e);
  }
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

VertexId CtmsfIndex::vertexByLabel(Label l) const {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), l);
  if (it == labels_.end() || *it != l) return kNoVertex;
  return static_cast<VertexId>(it - labels_.begin());
}

CtmsfIndex CtmsfIndex::build(const TemporalGraph& g, std::uint32_t k, const CoreTimeTable& table) {
  if (table.edgeCount() != g.numEdges()) throw std::invalid_argument("core-time table size mismatch");
  CtmsfIndex idx;
  idx.k_ = k;
  idx.tMax_ = g.tMax();
  idx.labels_ = g.labels();
  const std::uint32_t n = g.numVertices();
  idx.perVertex_.assign(n, {});
  std::vector<std::vector<MsfEdge>> last(n);
  std::vector<char> everRecorded(n, 0);
  for (Timestamp ts = idx.tMax_; ts >= 1; --ts) {
    std::vector<EdgeId> forest = kruskalForestAt(g, table, ts);
    std::vector<std::vector<MsfEdge>> cur(n);
    for (EdgeId e : forest) {
      const auto& ed = g.edge(e);
      Timestamp ct = table.at(e, ts);
      cur[ed.u].push_back({e, ed.v, ct});
      cur[ed.v].push_back({e, ed.u, ct});
    }
    for (std::uint32_t u = 0; u < n; ++u) {
      // forest edge ids ascend, so cur[u] is already edgeId-sorted
      if (everRecorded[u] ? cur[u] == last[u] : cur[u].empty()) continue;
      idx.perVertex_[u].push_back({ts, cur[u]});
      last[u] = std::move(cur[u]);
      everRecorded[u] = 1;
    }
  }
  return idx;
}

CtmsfIndex CtmsfIndex::build(const TemporalGraph& g, std::uint32_t k) {
  return build(g, k, allEdgeCoreTimes(g, k));
}

const std::vector<MsfEdge>& CtmsfIndex::incidentAt(VertexId u, Timestamp ts) const {
  if (u >= numVertices()) throw std::invalid_argument("vertex id out of range");
  const auto& recs = perVertex_[u];
  auto it = std::partition_point(recs.begin(), recs.end(),
                                 [ts](const VertexRecord& r) { return r.startTime >= ts; });
  if (it == recs.begin()) return kEmpty_;
  return std::prev(it)->edges;
}

std::vector<VertexId> CtmsfIndex::query(VertexId u, TimeWindow w) const {
  if (u >= numVertices()) throw std::invalid_argument("vertex id out of range");
  if (w.ts < 1 || w.ts > w.te || w.te > tMax_)
    throw std::invalid_argument("query window out of range");
  // u belongs to the core iff some incident forest edge has core time <= te
  bool inCore = false;
  for (const MsfEdge& e : incidentAt(u, w.ts))
    if (e.coreTime <= w.te) inCore = true;
  if (!inCore) return {};
  std::vector<VertexId> out;
  std::vector<char> seen(numVertices(), 0);
  std::vector<VertexId> stack{u};
  seen[u] = 1;
  while (!stack.empty()) {
    VertexId x = stack.back();
    stack.pop_back();
    out.push_back(x);
    for (const MsfEdge& e : incidentAt(x, w.ts)) {
      if (e.coreTime > w.te || seen[e.other]) continue;
      seen[e.other] = 1;
      stack.push_back(e.other);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t CtmsfIndex::recordCount() const {
  std::size_t c = 0;
  for (const auto& recs : perVertex_) c += recs.size();
  return c;
}

std::size_t CtmsfIndex::serializedBytes() const {
  bio::CountingBuf buf;
  std::ostream counter(&buf);
  serialize(counter);
  return buf.count();
}

void CtmsfIndex::serialize(std::ostream& out) const {
  bio::putMagic(out, kMagic, kFormatVersion);
  bio::put32(out, k_);
  bio::put32(out, numVertices());
  bio::put32(out, tMax_);
  for (Label l : labels_) bio::put64(out, l);
  for (const auto& recs : perVertex_) {
    bio::put32(out, static_cast<std::uint32_t>(recs.size()));
    for (const auto& r : recs) {
      bio::put32(out, r.startTime);
      bio::put32(out, static_cast<std::uint32_t>(r.edges.size()));
      for (const auto& e : r.edges) {
        bio::put32(out, e.edgeId);
        bio::put32(out, e.other);
        bio::put32(out, e.coreTime);
      }
    }
  }
  if (!out) throw IoError("write failure while serializing index");
}

CtmsfIndex CtmsfIndex::deserialize(std::istream& in) {
  bio::expectMagic(in, kMagic, kFormatVersion, "spanning-forest");
  CtmsfIndex idx;
  idx.k_ = bio::get32(in);
  std::uint32_t n = bio::get32(in);
  idx.tMax_ = bio::get32(in);
  if (idx.k_ < 1) throw IoError("corrupt index: k < 1");
  idx.labels_.resize(n);
  for (auto& l : idx.labels_) l = bio::get64(in);
  if (!std::is_sorted(idx.labels_.begin(), idx.labels_.end()))
    throw IoError("corrupt index: labels not sorted");
  idx.perVertex_.resize(n);
  for (auto& recs : idx.perVertex_) {
    std::uint32_t cnt = bio::get32(in);
    if (cnt > idx.tMax_) throw IoError("corrupt index: record count exceeds time range");
    recs.resize(cnt);
    Timestamp prev = kInfiniteTime;
    for (auto& r : recs) {
      r.startTime = bio::get32(in);
      if (r.startTime < 1 || r.startTime > idx.tMax_ || r.startTime >= prev)
        throw IoError("corrupt index: record start times not descending in range");
      prev = r.startTime;
      std::uint32_t ec = bio::get32(in);
      if (ec >= n) throw IoError("corrupt index: incident list too long");
      r.edges.resize(ec);
      for (auto& e : r.edges) {
        e.edgeId = bio::get32(in);
        e.other = bio::get32(in);
        e.coreTime = bio::get32(in);
        if (e.other >= n) throw IoError("corrupt index: neighbor out of range");
      }
    }
  }
  return idx;
}

void CtmsfIndex::saveFile(const std::string& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path + " for writing");
  serialize(out);
  out.flush();
  if (!out) throw IoError("write failure on " + path);
}

CtmsfIndex CtmsfIndex::loadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  return deserialize(in);
}

}  // namespace tccs
