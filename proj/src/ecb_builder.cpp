#include "tccs/ecb_index.hpp"

#include <algorithm>
#include <set>

namespace tccs {

namespace {

// Construction-time invariant check; violations mean the forest state is
// corrupt, so fail loudly even in release builds.
[[noreturn]] void invariantFailure(const char* what) {
  throw std::logic_error(std::string("forest invariant violated: ") + what);
}

#define TCCS_CHECK(cond, what) \
  do {                         \
    if (!(cond)) invariantFailure(what); \
  } while (0)

enum class Side : std::uint8_t { L, R };

struct PendingVersion {
  EdgeId edgeId;
  Timestamp coreTime;
  Timestamp createdTs;
};

}  // namespace

class EcbBuilder {
 public:
  EcbBuilder(const TemporalGraph& g, std::uint32_t k, const CoreTimeTable& table)
      : g_(g), k_(k), table_(table), incident_(g.numVertices(), std::set<NodeId, IncCmp>(IncCmp{&nodes_})) {}

  PecbIndex run();

 private:
  struct IncCmp {
    const std::vector<ForestNode>* nodes;
    bool operator()(NodeId a, NodeId b) const { return rankLess((*nodes)[a], (*nodes)[b]); }
  };

  const TemporalGraph& g_;
  std::uint32_t k_;
  const CoreTimeTable& table_;

  std::vector<ForestNode> nodes_;
  std::vector<std::vector<VersionedEntry>> entries_;
  std::vector<std::vector<EntryPointRecord>> entryPoints_;

  // live forest state
  std::vector<NodeId> parent_, left_, right_;
  std::vector<std::set<NodeId, IncCmp>> incident_;

  // change tracking within one start-time iteration
  std::vector<NodeId> dirtyNodes_;
  std::vector<char> nodeDirty_;
  std::vector<VertexId> dirtyVertices_;
  std::vector<char> vertexDirty_;
  std::vector<NodeLinks> lastWritten_;
  std::vector<NodeId> lastEntryPoint_;
  std::vector<char> entryPointRecorded_;

  NodeId& slotRef(NodeId p, Side s) { return s == Side::L ? left_[p] : right_[p]; }

  Side sideOf(NodeId p, NodeId c) const {
    if (left_[p] == c) return Side::L;
    TCCS_CHECK(right_[p] == c, "child not in either slot of its parent");
    return Side::R;
  }

  void markNode(NodeId x) {
    if (!nodeDirty_[x]) {
      nodeDirty_[x] = 1;
      dirtyNodes_.push_back(x);
    }
  }
  void markVertex(VertexId v) {
    if (!vertexDirty_[v]) {
      vertexDirty_[v] = 1;
      dirtyVertices_.push_back(v);
    }
  }

  // Severs c from its parent, vacating the slot. Returns old parent.
  NodeId detachFromParent(NodeId c, Side* vacated = nullptr) {
    NodeId p = parent_[c];
    if (p == kNoNode) return kNoNode;
    Side s = sideOf(p, c);
    if (vacated) *vacated = s;
    slotRef(p, s) = kNoNode;
    parent_[c] = kNoNode;
    markNode(p);
    markNode(c);
    return p;
  }

  void attach(NodeId p, Side s, NodeId c) {
    TCCS_CHECK(slotRef(p, s) == kNoNode, "attach into occupied slot");
    TCCS_CHECK(parent_[c] == kNoNode, "attach of node that still has a parent");
    TCCS_CHECK(rankLess(nodes_[c], nodes_[p]), "attach breaking rank order");
    slotRef(p, s) = c;
    parent_[c] = p;
    markNode(p);
    markNode(c);
  }

  Side endpointSide(NodeId x, VertexId w) const {
    TCCS_CHECK(nodes_[x].u == w || nodes_[x].v == w, "anchor not incident to endpoint");
    return nodes_[x].u == w ? Side::L : Side::R;
  }

  // One frontier of find_insertion at endpoint w of candidate x:
  //   below: highest-ranked live node containing w below x, walked up while
  //          the parent still ranks below x (ends at that subchain's top)
  //   anchor/slot: where x's merge chain enters the above-x region
  struct Frontier {
    NodeId below = kNoNode;
    NodeId anchor = kNoNode;
    Side slot = Side::L;
  };

  Frontier findFrontier(NodeId x, VertexId w) {
    Frontier f;
    const auto& inc = incident_[w];
    auto it = inc.lower_bound(x);  // first incident node ranked above x (x not in set)
    NodeId incAbove = it == inc.end() ? kNoNode : *it;
    if (it != inc.begin()) {
      NodeId l = *std::prev(it);
      while (parent_[l] != kNoNode && rankLess(nodes_[parent_[l]], nodes_[x])) l = parent_[l];
      f.below = l;
      f.anchor = parent_[l];
      if (f.anchor != kNoNode) f.slot = sideOf(f.anchor, l);
    }
    if (incAbove != kNoNode && (f.anchor == kNoNode || rankLess(nodes_[incAbove], nodes_[f.anchor]))) {
      // canonical forests only reach this with no below-x chain at w; the
      // endpoint slot of the lowest incident node above x is then free
      f.anchor = incAbove;
      f.slot = endpointSide(incAbove, w);
    }
    return f;
  }

  void killNode(NodeId x, Timestamp ts) {
    TCCS_CHECK(left_[x] == kNoNode && right_[x] == kNoNode, "deleting node with children");
    TCCS_CHECK(parent_[x] == kNoNode, "deleting node still attached");
    nodes_[x].deletedTs = ts;
    incident_[nodes_[x].u].erase(x);
    incident_[nodes_[x].v].erase(x);
    markVertex(nodes_[x].u);
    markVertex(nodes_[x].v);
  }

  // Zips the two root-ward chains of x in ascending rank order. anchorU/V are
  // the next nodes above the current chain head e; slotU/V the slots on them
  // where the head attaches.
  void merge(NodeId x, Frontier fu, Frontier fv, Timestamp ts) {
    NodeId e = x;
    NodeId au = fu.anchor, av = fv.anchor;
    Side su = fu.slot, sv = fv.slot;
    while (true) {
      if (au == av) {
        if (au == kNoNode) return;  // e is the merged root
        // lowest common ancestor: both chains arrived, so both its slots
        // were vacated; e takes its place
        NodeId lca = au;
        Side ps{};
        NodeId p = detachFromParent(lca, &ps);
        killNode(lca, ts);
        if (p != kNoNode) attach(p, ps, e);
        return;
      }
      bool useU = (av == kNoNode) || (au != kNoNode && rankLess(nodes_[au], nodes_[av]));
      NodeId a = useU ? au : av;
      Side s = useU ? su : sv;
      Side ps{};
      NodeId p = detachFromParent(a, &ps);
      attach(a, s, e);
      e = a;
      if (useU) {
        au = p;
        su = ps;
      } else {
        av = p;
        sv = ps;
      }
    }
  }

  void insertVersion(NodeId x, Timestamp ts) {
    const VertexId u = nodes_[x].u, v = nodes_[x].v;
    Frontier fu = findFrontier(x, u);
    Frontier fv = findFrontier(x, v);
    if (fu.below != kNoNode && fu.below == fv.below) {
      // endpoints already connected strictly below x: candidate never joins
      return;
    }
    nodes_[x].everLive = true;
    if (fu.below != kNoNode) {
      detachFromParent(fu.below);
      attach(x, Side::L, fu.below);
    }
    if (fv.below != kNoNode) {
      detachFromParent(fv.below);
      attach(x, Side::R, fv.below);
    }
    incident_[u].insert(x);
    incident_[v].insert(x);
    markVertex(u);
    markVertex(v);
    markNode(x);
    merge(x, fu, fv, ts);
  }

  void flushIteration(Timestamp ts) {
    std::sort(dirtyNodes_.begin(), dirtyNodes_.end());
    for (NodeId x : dirtyNodes_) {
      nodeDirty_[x] = 0;
      if (!nodes_[x].everLive || nodes_[x].deletedTs != kNeverDeleted) continue;  // no tombstones
      NodeLinks cur{left_[x], right_[x], parent_[x]};
      if (!entries_[x].empty() && lastWritten_[x] == cur) continue;
      entries_[x].push_back({ts, cur.left, cur.right, cur.parent});
      lastWritten_[x] = cur;
    }
    dirtyNodes_.clear();
    std::sort(dirtyVertices_.begin(), dirtyVertices_.end());
    for (VertexId w : dirtyVertices_) {
      vertexDirty_[w] = 0;
      NodeId cur = incident_[w].empty() ? kNoNode : *incident_[w].begin();
      if (entryPointRecorded_[w] ? cur == lastEntryPoint_[w] : cur == kNoNode) continue;
      entryPoints_[w].push_back({ts, cur});
      lastEntryPoint_[w] = cur;
      entryPointRecorded_[w] = 1;
    }
    dirtyVertices_.clear();
  }
};

PecbIndex EcbBuilder::run() {
  const Timestamp tMax = g_.tMax();
  const std::uint32_t n = g_.numVertices();

  // enumerate versions: each finite core-time run of an edge becomes one
  // node, created at the run's highest start time
  std::vector<std::vector<PendingVersion>> byTs(tMax + 1);
  for (EdgeId e = 0; e < g_.numEdges(); ++e) {
    const auto& row = table_.row(e);
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (row[i].coreTime == kInfiniteTime) continue;
      Timestamp created = i + 1 < row.size() ? row[i + 1].startTime - 1 : tMax;
      byTs[created].push_back({e, row[i].coreTime, created});
    }
  }

  vertexDirty_.assign(n, 0);
  entryPoints_.assign(n, {});
  lastEntryPoint_.assign(n, kNoNode);
  entryPointRecorded_.assign(n, 0);

  for (Timestamp ts = tMax; ts >= 1; --ts) {
    auto& batch = byTs[ts];
    std::sort(batch.begin(), batch.end(), [](const PendingVersion& a, const PendingVersion& b) {
      return a.coreTime < b.coreTime || (a.coreTime == b.coreTime && a.edgeId < b.edgeId);
    });
    for (const auto& pv : batch) {
      NodeId x = static_cast<NodeId>(nodes_.size());
      const auto& ed = g_.edge(pv.edgeId);
      nodes_.push_back({pv.edgeId, ed.u, ed.v, pv.coreTime, pv.createdTs, kNeverDeleted, false});
      entries_.emplace_back();
      parent_.push_back(kNoNode);
      left_.push_back(kNoNode);
      right_.push_back(kNoNode);
      nodeDirty_.push_back(0);
      lastWritten_.emplace_back();
      insertVersion(x, ts);
    }
    flushIteration(ts);
  }

  PecbIndex idx;
  idx.k_ = k_;
  idx.tMax_ = tMax;
  idx.edgeCount_ = g_.numEdges();
  idx.labels_ = g_.labels();
  idx.nodes_ = std::move(nodes_);
  idx.entries_ = std::move(entries_);
  idx.entryPoints_ = std::move(entryPoints_);
  return idx;
}

PecbIndex PecbIndex::build(const TemporalGraph& g, std::uint32_t k, const CoreTimeTable& table) {
  if (table.edgeCount() != g.numEdges()) throw std::invalid_argument("core-time table size mismatch");
  return EcbBuilder(g, k, table).run();
}

PecbIndex PecbIndex::build(const TemporalGraph& g, std::uint32_t k) {
  return build(g, k, allEdgeCoreTimes(g, k));
}

}  // namespace tccs
