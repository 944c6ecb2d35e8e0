#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "support/fixtures.hpp"
#include "tccs/ctmsf_index.hpp"
#include "tccs/generator.hpp"
#include "tccs/oracle.hpp"

#include <sstream>

using namespace tccs;
using namespace tccs::testing;

TEST_CASE("per-start-time spanning forest of the example graph") {
  TemporalGraph g = exampleGraph();
  CoreTimeTable t = allEdgeCoreTimes(g, 2);
  // ts=3 finite edges ranked (coreTime, edgeId): e2 e3 e4 (ct 4), e0 e5 e6 e7
  // (ct 5), e1 e8 e9 (ct 6), e10 (ct 7); Kruskal keeps the first spanning set
  CHECK(kruskalForestAt(g, t, 3) == std::vector<EdgeId>{1, 2, 3, 5, 6, 8, 10});
  // ts=5 has no finite core times at all
  CHECK(kruskalForestAt(g, t, 5).empty());
  // ts=1 includes e0=(3,8) ct 5, which displaces nothing but bridges the halves
  CHECK(kruskalForestAt(g, t, 1) == std::vector<EdgeId>{0, 1, 2, 3, 5, 6, 8});
}

TEST_CASE("incident lists resolve by versioned lookup") {
  TemporalGraph g = exampleGraph();
  CtmsfIndex idx = CtmsfIndex::build(g, 2);
  VertexId v2 = idx.vertexByLabel(2);
  const auto& inc = idx.incidentAt(v2, 3);
  REQUIRE(inc.size() == 2);
  CHECK(inc[0] == MsfEdge{2, idx.vertexByLabel(1), 4});
  CHECK(inc[1] == MsfEdge{8, idx.vertexByLabel(4), 6});
  CHECK(idx.incidentAt(v2, 5).empty());
  CHECK(idx.incidentAt(idx.vertexByLabel(4), 4).empty());
  CHECK_THROWS_AS(idx.incidentAt(99, 3), std::invalid_argument);
}

TEST_CASE("baseline queries match the direct computation everywhere on the example") {
  TemporalGraph g = exampleGraph();
  for (std::uint32_t k : {1u, 2u, 3u}) {
    CtmsfIndex idx = CtmsfIndex::build(g, k);
    for (VertexId u = 0; u < g.numVertices(); ++u)
      for (Timestamp ts = 1; ts <= g.tMax(); ++ts)
        for (Timestamp te = ts; te <= g.tMax(); ++te)
          REQUIRE(idx.query(u, {ts, te}) == oracleComponent(g, k, u, {ts, te}));
  }
}

TEST_CASE("baseline queries match the direct computation on random graphs") {
  for (std::uint64_t seed : {41u, 42u}) {
    TemporalGraph g = generateGraph(22, 130, 15, seed);
    for (std::uint32_t k : {2u, 3u}) {
      CtmsfIndex idx = CtmsfIndex::build(g, k);
      SplitMix64 rng(seed);
      for (int i = 0; i < 300; ++i) {
        auto [u, w] = sampleQuery(g.numVertices(), g.tMax(), rng);
        REQUIRE(idx.query(u, w) == oracleComponent(g, k, u, w));
      }
    }
  }
}

TEST_CASE("baseline query validation") {
  TemporalGraph g = exampleGraph();
  CtmsfIndex idx = CtmsfIndex::build(g, 2);
  CHECK_THROWS_AS(idx.query(99, {1, 7}), std::invalid_argument);
  CHECK_THROWS_AS(idx.query(0, {0, 7}), std::invalid_argument);
  CHECK_THROWS_AS(idx.query(0, {5, 4}), std::invalid_argument);
  CHECK_THROWS_AS(idx.query(0, {1, 8}), std::invalid_argument);
}

TEST_CASE("baseline round-trips through its binary form") {
  TemporalGraph g = exampleGraph();
  CtmsfIndex idx = CtmsfIndex::build(g, 2);
  std::ostringstream out;
  idx.serialize(out);
  CHECK(out.str().size() == idx.serializedBytes());
  std::istringstream in(out.str());
  CtmsfIndex back = CtmsfIndex::deserialize(in);
  CHECK(back.k() == 2);
  CHECK(back.tMax() == 7);
  CHECK(back.labels() == g.labels());
  CHECK(back.recordCount() == idx.recordCount());
  for (VertexId u = 0; u < g.numVertices(); ++u)
    for (Timestamp ts = 1; ts <= g.tMax(); ++ts)
      for (Timestamp te = ts; te <= g.tMax(); ++te)
        CHECK(back.query(u, {ts, te}) == idx.query(u, {ts, te}));
}
