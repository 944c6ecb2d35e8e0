#pragma once

#include "tccs/coretime.hpp"
#include "tccs/graph.hpp"

#include <iosfwd>

namespace tccs {

using NodeId = std::uint32_t;
constexpr NodeId kNoNode = std::numeric_limits<NodeId>::max();
// deletedTs sentinel; valid timestamps start at 1.
constexpr Timestamp kNeverDeleted = 0;

// One core-time version of one edge. Rank = (coreTime, edgeId) ascending,
// total because simultaneously live versions never share both fields.
struct ForestNode {
  EdgeId edgeId;
  VertexId u;
  VertexId v;
  Timestamp coreTime;   // finite by construction
  Timestamp createdTs;  // highest start time at which this version holds
  Timestamp deletedTs;  // highest start time at which it is gone again
  bool everLive;        // false: candidate whose endpoints were already connected
};

struct VersionedEntry {
  Timestamp startTime;
  NodeId left;
  NodeId right;
  NodeId parent;
};

struct EntryPointRecord {
  Timestamp startTime;
  NodeId node;  // kNoNode records a transition to "no live incident node"
};

struct NodeLinks {
  NodeId left = kNoNode;
  NodeId right = kNoNode;
  NodeId parent = kNoNode;
  bool operator==(const NodeLinks&) const = default;
};

struct SnapshotForest {
  std::vector<NodeId> nodes;  // live at ts, ascending id
  std::vector<NodeLinks> links;
};

struct IndexStats {
  std::size_t nodeCount = 0;
  std::size_t liveNodeCount = 0;  // inserted at least once
  std::size_t entryCount = 0;
  std::size_t entryPointRecordCount = 0;
  double avgEntriesPerNode = 0;
  std::size_t serializedBytes = 0;
  std::vector<std::uint32_t> insertionsPerTs;  // index ts-1
  std::vector<std::uint32_t> deletionsPerTs;
  std::vector<std::uint32_t> depthPerTs;  // max root distance over live nodes
};

// Versioned edge-centric binary forest: one logical forest per start time,
// stored as per-node change-compressed link entries plus per-vertex entry
// points. Lookups at ts select the entry with the smallest recorded
// startTime >= ts.
class PecbIndex {
 public:
  PecbIndex() = default;

  static PecbIndex build(const TemporalGraph& g, std::uint32_t k);
  static PecbIndex build(const TemporalGraph& g, std::uint32_t k, const CoreTimeTable& table);

  std::uint32_t k() const { return k_; }
  std::uint32_t numVertices() const { return static_cast<std::uint32_t>(labels_.size()); }
  std::size_t edgeCount() const { return edgeCount_; }
  Timestamp tMax() const { return tMax_; }
  const std::vector<Label>& labels() const { return labels_; }
  VertexId vertexByLabel(Label l) const;

  std::size_t nodeCount() const { return nodes_.size(); }
  const ForestNode& node(NodeId x) const { return nodes_[x]; }
  const std::vector<VersionedEntry>& entries(NodeId x) const { return entries_[x]; }
  const std::vector<EntryPointRecord>& entryPoints(VertexId u) const { return entryPoints_[u]; }

  // Lowest-ranked live node containing u in the forest at ts; kNoNode when u
  // has none.
  NodeId entryNodeAt(VertexId u, Timestamp ts) const;
  // Links of x in the forest at ts; all-kNoNode when x has no entry at ts.
  NodeLinks linksAt(NodeId x, Timestamp ts) const;
  bool liveAt(NodeId x, Timestamp ts) const {
    const ForestNode& n = nodes_[x];
    return n.everLive && ts <= n.createdTs && (n.deletedTs == kNeverDeleted || ts > n.deletedTs);
  }

  SnapshotForest snapshotAt(Timestamp ts) const;
  IndexStats stats() const;

  void serialize(std::ostream& out) const;
  static PecbIndex deserialize(std::istream& in);
  void saveFile(const std::string& path) const;
  static PecbIndex loadFile(const std::string& path);

 private:
  std::uint32_t k_ = 0;
  Timestamp tMax_ = 0;
  std::size_t edgeCount_ = 0;
  std::vector<Label> labels_;
  std::vector<ForestNode> nodes_;
  std::vector<std::vector<VersionedEntry>> entries_;      // descending startTime
  std::vector<std::vector<EntryPointRecord>> entryPoints_;  // descending startTime

  friend class EcbBuilder;
};

inline bool rankLess(const ForestNode& a, const ForestNode& b) {
  return a.coreTime < b.coreTime || (a.coreTime == b.coreTime && a.edgeId < b.edgeId);
}

}  // namespace tccs
