#pragma once

#include "tccs/ecb_index.hpp"
#include "tccs/graph.hpp"

#include <map>
#include <sstream>
#include <string>
#include <tuple>

namespace tccs::testing {

// 8-vertex, 11-edge running example used across the suite. Timestamps 2..7,
// labels 1..8. Worked expectations below were derived by hand from the
// peeling definition and double-checked against the reference tables.
inline const char* exampleGraphText() {
  return "3 8 2\n"
         "4 5 3\n"
         "1 2 4\n"
         "1 3 4\n"
         "2 3 4\n"
         "6 7 4\n"
         "6 8 5\n"
         "7 8 5\n"
         "2 4 6\n"
         "2 5 6\n"
         "5 6 7\n";
}

inline TemporalGraph exampleGraph() {
  std::istringstream in(exampleGraphText());
  return loadEdgeList(in);
}

constexpr Timestamp kInf = kInfiniteTime;

// expected k=2 core-time table, one row per edge in (t, input order)
inline std::vector<std::vector<std::pair<Timestamp, Timestamp>>> exampleCoreTimesK2() {
  return {
      {{1, 5}, {3, kInf}},          // (3,8,2)
      {{1, 6}, {4, kInf}},          // (4,5,3)
      {{1, 4}, {5, kInf}},          // (1,2,4)
      {{1, 4}, {5, kInf}},          // (1,3,4)
      {{1, 4}, {5, kInf}},          // (2,3,4)
      {{1, 5}, {5, kInf}},          // (6,7,4)
      {{1, 5}, {5, kInf}},          // (6,8,5)
      {{1, 5}, {5, kInf}},          // (7,8,5)
      {{1, 6}, {4, kInf}},          // (2,4,6)
      {{1, 6}, {4, 7}, {5, kInf}},  // (2,5,6)
      {{1, 7}, {5, kInf}},          // (5,6,7)
  };
}

// a forest node of the k=2 example index, keyed by endpoint labels and core
// time (unique there)
struct NodeKey {
  Label u, v;
  Timestamp coreTime;
  bool operator<(const NodeKey& o) const {
    return std::tie(u, v, coreTime) < std::tie(o.u, o.v, o.coreTime);
  }
  bool operator==(const NodeKey& o) const {
    return u == o.u && v == o.v && coreTime == o.coreTime;
  }
};

constexpr NodeKey kNone{0, 0, 0};

struct ExpectedEntry {
  Timestamp startTime;
  NodeKey left, right, parent;
};

struct ExpectedNode {
  NodeKey key;
  bool live;                           // false: skipped candidate
  Timestamp createdTs;
  Timestamp deletedTs;                 // 0 = never
  std::vector<ExpectedEntry> entries;  // descending startTime
};

// full expected contents of the k=2 example index
inline std::vector<ExpectedNode> exampleIndexNodesK2() {
  NodeKey n1{1, 2, 4}, n2{1, 3, 4}, n3{2, 3, 4}, n4{3, 8, 5}, n5{6, 7, 5}, n6{6, 8, 5},
      n7{7, 8, 5}, n8{4, 5, 6}, n9{2, 4, 6}, n10{2, 5, 6}, n11{2, 5, 7}, n12{5, 6, 7};
  return {
      {n1, true, 4, 0, {{4, kNone, kNone, n2}}},
      {n2, true, 4, 0, {{4, n1, kNone, n11}, {3, n1, kNone, n9}, {2, n1, kNone, n4}}},
      {n3, false, 4, 0, {}},
      {n4, true, 2, 0, {{2, n2, kNone, n6}}},
      {n5, true, 4, 0, {{4, kNone, kNone, n6}}},
      {n6, true, 4, 0, {{4, n5, kNone, n12}, {2, n5, n4, n9}}},
      {n7, false, 4, 0, {}},
      {n8, true, 3, 0, {{3, kNone, kNone, n9}}},
      {n9, true, 3, 0, {{3, n2, n8, n12}, {2, n6, n8, kNone}}},
      {n10, false, 3, 0, {}},
      {n11, true, 4, 3, {{4, n2, kNone, n12}}},
      {n12, true, 4, 2, {{4, n11, n6, kNone}, {3, n9, n6, kNone}}},
  };
}

struct ExpectedEntryPoint {
  Timestamp startTime;
  NodeKey node;  // kNone when the record is a transition to "none"
};

inline std::map<Label, std::vector<ExpectedEntryPoint>> exampleEntryPointsK2() {
  NodeKey n1{1, 2, 4}, n2{1, 3, 4}, n4{3, 8, 5}, n5{6, 7, 5}, n6{6, 8, 5}, n8{4, 5, 6},
      n11{2, 5, 7};
  return {
      {1, {{4, n1}}},          {2, {{4, n1}}},
      {3, {{4, n2}}},          {4, {{3, n8}}},
      {5, {{4, n11}, {3, n8}}}, {6, {{4, n5}}},
      {7, {{4, n5}}},          {8, {{4, n6}, {2, n4}}},
  };
}

inline NodeId findNode(const PecbIndex& idx, NodeKey key) {
  for (NodeId x = 0; x < idx.nodeCount(); ++x) {
    const ForestNode& n = idx.node(x);
    if (idx.labels()[n.u] == key.u && idx.labels()[n.v] == key.v && n.coreTime == key.coreTime)
      return x;
  }
  return kNoNode;
}

inline NodeKey keyOf(const PecbIndex& idx, NodeId x) {
  if (x == kNoNode) return kNone;
  const ForestNode& n = idx.node(x);
  return {idx.labels()[n.u], idx.labels()[n.v], n.coreTime};
}

inline std::vector<Label> toLabels(const std::vector<VertexId>& vs, const TemporalGraph& g) {
  std::vector<Label> out;
  for (VertexId v : vs) out.push_back(g.label(v));
  return out;
}

}  // namespace tccs::testing
