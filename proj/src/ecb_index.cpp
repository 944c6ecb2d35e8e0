#include "tccs/ecb_index.hpp"

#include "binary_io.hpp"

#include <algorithm>
#include <fstream>

namespace tccs {

namespace {
constexpr char kMagic[7] = {'P', 'E', 'C', 'B', 'I', 'D', 'X'};
constexpr std::uint8_t kFormatVersion = 1;
}  // namespace

VertexId PecbIndex::vertexByLabel(Label l) const {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), l);
  if (it == labels_.end() || *it != l) return kNoVertex;
  return static_cast<VertexId>(it - labels_.begin());
}

NodeId PecbIndex::entryNodeAt(VertexId u, Timestamp ts) const {
  const auto& recs = entryPoints_[u];
  // descending startTime: records >= ts form a prefix, its last element is
  // the smallest startTime >= ts
  auto it = std::partition_point(recs.begin(), recs.end(),
                                 [ts](const EntryPointRecord& r) { return r.startTime >= ts; });
  if (it == recs.begin()) return kNoNode;
  return std::prev(it)->node;
}

NodeLinks PecbIndex::linksAt(NodeId x, Timestamp ts) const {
  const auto& es = entries_[x];
  auto it = std::partition_point(es.begin(), es.end(),
                                 [ts](const VersionedEntry& e) { return e.startTime >= ts; });
  if (it == es.begin()) return {};
  const VersionedEntry& e = *std::prev(it);
  return {e.left, e.right, e.parent};
}

SnapshotForest PecbIndex::snapshotAt(Timestamp ts) const {
  SnapshotForest s;
  for (NodeId x = 0; x < nodes_.size(); ++x) {
    if (!liveAt(x, ts)) continue;
    s.nodes.push_back(x);
    s.links.push_back(linksAt(x, ts));
  }
  return s;
}

IndexStats PecbIndex::stats() const {
  IndexStats st;
  st.nodeCount = nodes_.size();
  for (const auto& n : nodes_) st.liveNodeCount += n.everLive;
  for (const auto& es : entries_) st.entryCount += es.size();
  for (const auto& ps : entryPoints_) st.entryPointRecordCount += ps.size();
  st.avgEntriesPerNode = nodes_.empty() ? 0.0 : static_cast<double>(st.entryCount) / nodes_.size();
  bio::CountingBuf buf;
  std::ostream counter(&buf);
  serialize(counter);
  st.serializedBytes = buf.count();

  st.insertionsPerTs.assign(tMax_, 0);
  st.deletionsPerTs.assign(tMax_, 0);
  st.depthPerTs.assign(tMax_, 0);
  for (const auto& n : nodes_) {
    if (!n.everLive) continue;
    ++st.insertionsPerTs[n.createdTs - 1];
    if (n.deletedTs != kNeverDeleted) ++st.deletionsPerTs[n.deletedTs - 1];
  }
  for (Timestamp ts = 1; ts <= tMax_; ++ts) {
    SnapshotForest s = snapshotAt(ts);
    std::vector<std::uint32_t> depth(s.nodes.size(), kInfiniteTime);
    auto idxOf = [&](NodeId x) {
      return static_cast<std::size_t>(
          std::lower_bound(s.nodes.begin(), s.nodes.end(), x) - s.nodes.begin());
    };
    std::uint32_t maxDepth = 0;
    std::vector<std::size_t> chain;
    for (std::size_t i = 0; i < s.nodes.size(); ++i) {
      std::size_t j = i;
      chain.clear();
      while (depth[j] == kInfiniteTime) {
        chain.push_back(j);
        NodeId p = s.links[j].parent;
        if (p == kNoNode) {
          depth[j] = 0;
          chain.pop_back();
          break;
        }
        j = idxOf(p);
      }
      std::uint32_t d = depth[j];
      for (auto it = chain.rbegin(); it != chain.rend(); ++it) depth[*it] = ++d;
      maxDepth = std::max(maxDepth, depth[i]);
    }
    st.depthPerTs[ts - 1] = maxDepth;
  }
  return st;
}

void PecbIndex::serialize(std::ostream& out) const {
  bio::putMagic(out, kMagic, kFormatVersion);
  bio::put32(out, k_);
  bio::put32(out, numVertices());
  bio::put32(out, tMax_);
  bio::put64(out, edgeCount_);
  bio::put64(out, nodes_.size());
  for (Label l : labels_) bio::put64(out, l);
  for (const auto& n : nodes_) {
    bio::put32(out, n.edgeId);
    bio::put32(out, n.u);
    bio::put32(out, n.v);
    bio::put32(out, n.coreTime);
  }
  for (const auto& es : entries_) {
    bio::put32(out, static_cast<std::uint32_t>(es.size()));
    for (const auto& e : es) {
      bio::put32(out, e.startTime);
      bio::put32(out, e.left);
      bio::put32(out, e.right);
      bio::put32(out, e.parent);
    }
  }
  for (const auto& ps : entryPoints_) {
    bio::put32(out, static_cast<std::uint32_t>(ps.size()));
    for (const auto& p : ps) {
      bio::put32(out, p.startTime);
      bio::put32(out, p.node);
    }
  }
  for (const auto& n : nodes_) {
    bio::put32(out, n.createdTs);
    bio::put32(out, n.deletedTs);
    bio::put8(out, n.everLive ? 1 : 0);
  }
  if (!out) throw IoError("write failure while serializing index");
}

PecbIndex PecbIndex::deserialize(std::istream& in) {
  bio::expectMagic(in, kMagic, kFormatVersion, "forest");
  PecbIndex idx;
  idx.k_ = bio::get32(in);
  std::uint32_t n = bio::get32(in);
  idx.tMax_ = bio::get32(in);
  idx.edgeCount_ = bio::get64(in);
  std::uint64_t nodeCount = bio::get64(in);
  if (idx.k_ < 1) throw IoError("corrupt index: k < 1");
  idx.labels_.resize(n);
  for (auto& l : idx.labels_) l = bio::get64(in);
  if (!std::is_sorted(idx.labels_.begin(), idx.labels_.end()))
    throw IoError("corrupt index: labels not sorted");
  auto checkNodeRef = [&](NodeId x) {
    if (x != kNoNode && x >= nodeCount) throw IoError("corrupt index: node reference out of range");
  };
  idx.nodes_.resize(nodeCount);
  for (auto& nd : idx.nodes_) {
    nd.edgeId = bio::get32(in);
    nd.u = bio::get32(in);
    nd.v = bio::get32(in);
    nd.coreTime = bio::get32(in);
    if (nd.u >= n || nd.v >= n || nd.u >= nd.v) throw IoError("corrupt index: bad node endpoints");
    if (nd.edgeId >= idx.edgeCount_) throw IoError("corrupt index: edge id out of range");
  }
  idx.entries_.resize(nodeCount);
  for (auto& es : idx.entries_) {
    std::uint32_t cnt = bio::get32(in);
    if (cnt > idx.tMax_) throw IoError("corrupt index: entry count exceeds time range");
    es.resize(cnt);
    Timestamp prev = kInfiniteTime;
    for (auto& e : es) {
      e.startTime = bio::get32(in);
      e.left = bio::get32(in);
      e.right = bio::get32(in);
      e.parent = bio::get32(in);
      if (e.startTime < 1 || e.startTime > idx.tMax_ || e.startTime >= prev)
        throw IoError("corrupt index: entry start times not descending in range");
      prev = e.startTime;
      checkNodeRef(e.left);
      checkNodeRef(e.right);
      checkNodeRef(e.parent);
    }
  }
  idx.entryPoints_.resize(n);
  for (auto& ps : idx.entryPoints_) {
    std::uint32_t cnt = bio::get32(in);
    if (cnt > idx.tMax_) throw IoError("corrupt index: entry point count exceeds time range");
    ps.resize(cnt);
    Timestamp prev = kInfiniteTime;
    for (auto& p : ps) {
      p.startTime = bio::get32(in);
      p.node = bio::get32(in);
      if (p.startTime < 1 || p.startTime > idx.tMax_ || p.startTime >= prev)
        throw IoError("corrupt index: entry point start times not descending in range");
      prev = p.startTime;
      checkNodeRef(p.node);
    }
  }
  for (auto& nd : idx.nodes_) {
    nd.createdTs = bio::get32(in);
    nd.deletedTs = bio::get32(in);
    nd.everLive = bio::get8(in) != 0;
    if (nd.createdTs < 1 || nd.createdTs > idx.tMax_)
      throw IoError("corrupt index: creation time out of range");
    if (nd.deletedTs != kNeverDeleted && nd.deletedTs >= nd.createdTs)
      throw IoError("corrupt index: deletion not below creation time");
  }
  return idx;
}

void PecbIndex::saveFile(const std::string& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path + " for writing");
  serialize(out);
  out.flush();
  if (!out) throw IoError("write failure on " + path);
}

PecbIndex PecbIndex::loadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  return deserialize(in);
}

}  // namespace tccs
