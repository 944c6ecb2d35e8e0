#pragma once

#include "tccs/ctmsf_index.hpp"
#include "tccs/ecb_index.hpp"
#include "tccs/oracle.hpp"
#include "tccs/union_find.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

// Structural checks every built index must satisfy, used by unit tests and
// the acceptance suite. Each returns an empty string on success or a
// description of the first violation.
namespace tccs::testing {

inline std::string atTs(Timestamp ts, const char* what) {
  return std::string(what) + " at start time " + std::to_string(ts);
}

// parent/child link consistency + rank heap order of one snapshot
inline std::string checkForestShape(const PecbIndex& idx, Timestamp ts) {
  SnapshotForest s = idx.snapshotAt(ts);
  std::set<NodeId> live(s.nodes.begin(), s.nodes.end());
  std::map<NodeId, NodeId> parentOf;
  for (std::size_t i = 0; i < s.nodes.size(); ++i) {
    NodeId x = s.nodes[i];
    const NodeLinks& nl = s.links[i];
    for (NodeId c : {nl.left, nl.right}) {
      if (c == kNoNode) continue;
      if (!live.count(c)) return atTs(ts, "child link to non-live node");
      if (!rankLess(idx.node(c), idx.node(x))) return atTs(ts, "child does not rank below parent");
      if (parentOf.count(c)) return atTs(ts, "node is a child twice");
      parentOf[c] = x;
    }
    if (nl.left != kNoNode && nl.left == nl.right) return atTs(ts, "same node in both slots");
    if (nl.parent != kNoNode && !live.count(nl.parent))
      return atTs(ts, "parent link to non-live node");
  }
  for (std::size_t i = 0; i < s.nodes.size(); ++i) {
    auto it = parentOf.find(s.nodes[i]);
    NodeId actual = it == parentOf.end() ? kNoNode : it->second;
    if (s.links[i].parent != actual) return atTs(ts, "parent pointer disagrees with child slots");
  }
  return {};
}

// live node set at ts must be exactly the deterministic minimum spanning
// forest of the finite-core-time edges, version core times matching the table
inline std::string checkKruskalEquality(const PecbIndex& idx, const TemporalGraph& g,
                                        const CoreTimeTable& table, Timestamp ts) {
  std::vector<EdgeId> expect = kruskalForestAt(g, table, ts);
  SnapshotForest s = idx.snapshotAt(ts);
  std::vector<EdgeId> got;
  for (NodeId x : s.nodes) {
    got.push_back(idx.node(x).edgeId);
    if (idx.node(x).coreTime != table.at(idx.node(x).edgeId, ts))
      return atTs(ts, "live version core time disagrees with table");
  }
  std::sort(got.begin(), got.end());
  if (got != expect) return atTs(ts, "live node set differs from spanning forest");
  return {};
}

// filtering the ts-snapshot to core times <= te must span exactly the k-core
// components of [ts, te], and each component's nodes must stay connected
// inside the filtered forest (so a walk from any entry node finds everything)
inline std::string checkSliceSpanning(const PecbIndex& idx, const TemporalGraph& g, std::uint32_t k,
                                      Timestamp ts) {
  SnapshotForest s = idx.snapshotAt(ts);
  for (Timestamp te = ts; te <= g.tMax(); ++te) {
    std::vector<std::size_t> kept;  // indexes into s.nodes
    for (std::size_t i = 0; i < s.nodes.size(); ++i)
      if (idx.node(s.nodes[i]).coreTime <= te) kept.push_back(i);

    UnionFind ufVerts(g.numVertices());
    std::set<VertexId> touched;
    for (std::size_t i : kept) {
      const ForestNode& n = idx.node(s.nodes[i]);
      ufVerts.unite(n.u, n.v);
      touched.insert(n.u);
      touched.insert(n.v);
    }
    std::map<VertexId, std::vector<VertexId>> byRoot;
    for (VertexId v : touched) byRoot[ufVerts.find(v)].push_back(v);
    std::vector<std::vector<VertexId>> got;
    for (auto& [root, vs] : byRoot) {
      std::sort(vs.begin(), vs.end());
      got.push_back(vs);
    }
    std::sort(got.begin(), got.end());
    std::vector<std::vector<VertexId>> expect = connectedComponents(temporalKCore(g, k, {ts, te}));
    std::sort(expect.begin(), expect.end());
    if (got != expect)
      return "slice of forest at [" + std::to_string(ts) + "," + std::to_string(te) +
             "] does not span the core components";

    std::map<NodeId, std::uint32_t> nodeIdx;
    for (std::size_t j = 0; j < kept.size(); ++j)
      nodeIdx[s.nodes[kept[j]]] = static_cast<std::uint32_t>(j);
    UnionFind ufNodes(kept.size());
    for (std::size_t j = 0; j < kept.size(); ++j) {
      const NodeLinks& nl = s.links[kept[j]];
      for (NodeId y : {nl.left, nl.right}) {
        auto it = y == kNoNode ? nodeIdx.end() : nodeIdx.find(y);
        if (it != nodeIdx.end()) ufNodes.unite(static_cast<std::uint32_t>(j), it->second);
      }
    }
    std::set<std::uint32_t> nodeRoots;
    for (std::size_t j = 0; j < kept.size(); ++j) nodeRoots.insert(ufNodes.find(static_cast<std::uint32_t>(j)));
    if (nodeRoots.size() != got.size())
      return "filtered forest at [" + std::to_string(ts) + "," + std::to_string(te) +
             "] splits a component across subtrees";
  }
  return {};
}

// versioned entries and entry point records must be change-compressed, in
// strictly descending start-time order, and entry points must decode to the
// lowest-ranked live incident node at every ts
inline std::string checkVersionedStorage(const PecbIndex& idx) {
  for (NodeId x = 0; x < idx.nodeCount(); ++x) {
    const auto& es = idx.entries(x);
    if (!idx.node(x).everLive && !es.empty()) return "skipped candidate has entries";
    for (std::size_t i = 0; i < es.size(); ++i) {
      if (i && es[i - 1].startTime <= es[i].startTime) return "entry start times not descending";
      if (i && es[i - 1].left == es[i].left && es[i - 1].right == es[i].right &&
          es[i - 1].parent == es[i].parent)
        return "consecutive entries identical (not change-compressed)";
    }
    if (idx.node(x).everLive && (es.empty() || es.front().startTime != idx.node(x).createdTs))
      return "live node lacks an entry at its creation time";
  }
  for (VertexId v = 0; v < idx.numVertices(); ++v) {
    const auto& ps = idx.entryPoints(v);
    for (std::size_t i = 0; i < ps.size(); ++i) {
      if (i && ps[i - 1].startTime <= ps[i].startTime)
        return "entry point start times not descending";
      if (i && ps[i - 1].node == ps[i].node)
        return "consecutive entry point records identical";
    }
  }
  for (Timestamp ts = 1; ts <= idx.tMax(); ++ts) {
    SnapshotForest s = idx.snapshotAt(ts);
    std::vector<NodeId> lowest(idx.numVertices(), kNoNode);
    for (NodeId x : s.nodes) {
      for (VertexId w : {idx.node(x).u, idx.node(x).v}) {
        if (lowest[w] == kNoNode || rankLess(idx.node(x), idx.node(lowest[w]))) lowest[w] = x;
      }
    }
    for (VertexId v = 0; v < idx.numVertices(); ++v)
      if (idx.entryNodeAt(v, ts) != lowest[v])
        return atTs(ts, "entry point does not decode to lowest incident live node");
  }
  return {};
}

// child definition: the left (right) child of x must be the highest-ranked
// node connected to x's first (second) endpoint using only nodes ranked
// below x. Quadratic; meant for small graphs.
inline std::string checkChildMaximality(const PecbIndex& idx, const TemporalGraph& g, Timestamp ts) {
  SnapshotForest s = idx.snapshotAt(ts);
  // nodes ascending by rank
  std::vector<std::size_t> order(s.nodes.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return rankLess(idx.node(s.nodes[a]), idx.node(s.nodes[b]));
  });
  for (std::size_t oi = 0; oi < order.size(); ++oi) {
    std::size_t i = order[oi];
    NodeId x = s.nodes[i];
    UnionFind uf(g.numVertices());
    for (std::size_t oj = 0; oj < oi; ++oj) {
      const ForestNode& lower = idx.node(s.nodes[order[oj]]);
      uf.unite(lower.u, lower.v);
    }
    auto expectedChild = [&](VertexId w) {
      NodeId best = kNoNode;
      for (std::size_t oj = 0; oj < oi; ++oj) {
        NodeId y = s.nodes[order[oj]];
        if (uf.find(idx.node(y).u) != uf.find(w)) continue;
        if (best == kNoNode || rankLess(idx.node(best), idx.node(y))) best = y;
      }
      return best;
    };
    if (s.links[i].left != expectedChild(idx.node(x).u))
      return atTs(ts, "left child is not the highest node connected below");
    if (s.links[i].right != expectedChild(idx.node(x).v))
      return atTs(ts, "right child is not the highest node connected below");
  }
  return {};
}

// each version lives on one contiguous start-time interval and versions of
// one edge never overlap
inline std::string checkVersionLiveness(const PecbIndex& idx) {
  std::map<EdgeId, std::vector<NodeId>> versions;
  for (NodeId x = 0; x < idx.nodeCount(); ++x) versions[idx.node(x).edgeId].push_back(x);
  for (auto& [e, vs] : versions) {
    for (Timestamp ts = 1; ts <= idx.tMax(); ++ts) {
      int liveCount = 0;
      for (NodeId x : vs) liveCount += idx.liveAt(x, ts);
      if (liveCount > 1) return "two versions of one edge live at the same start time";
    }
    for (NodeId x : vs) {
      const ForestNode& n = idx.node(x);
      if (n.deletedTs != kNeverDeleted && n.deletedTs >= n.createdTs)
        return "version deleted at or above its creation time";
    }
  }
  return {};
}

// runs every structural check over all start times of one index
inline std::string checkAllInvariants(const PecbIndex& idx, const TemporalGraph& g, std::uint32_t k,
                                      const CoreTimeTable& table, bool childMaximality) {
  for (Timestamp ts = 1; ts <= g.tMax(); ++ts) {
    if (auto e = checkForestShape(idx, ts); !e.empty()) return e;
    if (auto e = checkKruskalEquality(idx, g, table, ts); !e.empty()) return e;
    if (auto e = checkSliceSpanning(idx, g, k, ts); !e.empty()) return e;
    if (childMaximality)
      if (auto e = checkChildMaximality(idx, g, ts); !e.empty()) return e;
  }
  if (auto e = checkVersionedStorage(idx); !e.empty()) return e;
  if (auto e = checkVersionLiveness(idx); !e.empty()) return e;
  return {};
}

}  // namespace tccs::testing
