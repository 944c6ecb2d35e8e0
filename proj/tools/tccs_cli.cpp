#include "CLI11.hpp"

#include "tccs/ctmsf_index.hpp"
#include "tccs/generator.hpp"
#include "tccs/oracle.hpp"
#include "tccs/query.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace tccs;

// exit codes: 0 ok, 1 usage, 2 data (parse/io/range), 3 verification failure
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;
constexpr int kExitVerify = 3;

struct GraphOptions {
  std::string input;
  bool aggregateDays = false;
  bool normalize = false;
};

void addGraphOptions(CLI::App* cmd, GraphOptions& o) {
  cmd->add_option("--input", o.input, "edge list file (u v t per line)")->required();
  cmd->add_flag("--aggregate-days", o.aggregateDays,
                "bucket epoch-second timestamps into days, then renumber 1..D");
  cmd->add_flag("--normalize", o.normalize, "renumber distinct timestamps 1..T");
}

TemporalGraph loadGraph(const GraphOptions& o) {
  LoadStats ls;
  TemporalGraph g = loadEdgeListFile(o.input, &ls);
  if (ls.selfLoopsDropped)
    std::cerr << "warning: dropped " << ls.selfLoopsDropped << " self loop(s)\n";
  if (o.aggregateDays) g = aggregateDays(g);
  if (o.normalize && !o.aggregateDays) g = normalizeTimestamps(g);
  return g;
}

std::uint32_t resolveKSpec(const std::string& kspec, const TemporalGraph& g) {
  if (kspec.find('%') != std::string::npos) {
    std::uint32_t kmax = measureKmax(g);
    std::uint32_t k = resolveK(kspec, kmax);
    std::cerr << "kmax=" << kmax << " -> k=" << k << "\n";
    return k;
  }
  return resolveK(kspec, 0);
}

std::string joinLabels(const std::vector<VertexId>& vs, const std::vector<Label>& labels) {
  std::string s;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(labels[vs[i]]);
  }
  return s;
}

double seconds(std::chrono::steady_clock::time_point a, std::chrono::steady_clock::time_point b) {
  return std::chrono::duration<double>(b - a).count();
}

// ---- build ----------------------------------------------------------------

struct BuildArgs {
  GraphOptions g;
  std::string kspec;
  std::string output;
  std::string kind = "pecb";
  bool printStats = false;
};

int runBuild(const BuildArgs& a) {
  TemporalGraph g = loadGraph(a.g);
  std::uint32_t k = resolveKSpec(a.kspec, g);
  auto t0 = std::chrono::steady_clock::now();
  CoreTimeTable table = allEdgeCoreTimes(g, k);
  if (a.kind == "pecb") {
    PecbIndex idx = PecbIndex::build(g, k, table);
    auto t1 = std::chrono::steady_clock::now();
    idx.saveFile(a.output);
    std::cerr << "built forest index in " << seconds(t0, t1) << " s\n";
    if (a.printStats) {
      IndexStats st = idx.stats();
      std::cout << "nodes " << st.nodeCount << "\nlive_nodes " << st.liveNodeCount << "\nentries "
                << st.entryCount << "\nentry_points " << st.entryPointRecordCount << "\nbytes "
                << st.serializedBytes << "\n";
    }
  } else if (a.kind == "ctmsf") {
    CtmsfIndex idx = CtmsfIndex::build(g, k, table);
    auto t1 = std::chrono::steady_clock::now();
    idx.saveFile(a.output);
    std::cerr << "built spanning-forest index in " << seconds(t0, t1) << " s\n";
    if (a.printStats)
      std::cout << "records " << idx.recordCount() << "\nbytes " << idx.serializedBytes() << "\n";
  } else {
    std::cerr << "unknown index kind " << a.kind << "\n";
    return kExitUsage;
  }
  return 0;
}

// ---- query / oracle -------------------------------------------------------

bool sniffPecb(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  char b[7] = {};
  in.read(b, 7);
  return std::string_view(b, 7) == "PECBIDX";
}

struct QueryArgs {
  std::string index;
  Label vertex = 0;
  Timestamp ts = 0, te = 0;
};

int runQuery(const QueryArgs& a) {
  std::vector<VertexId> result;
  const std::vector<Label>* labels;
  PecbIndex pidx;
  CtmsfIndex cidx;
  if (sniffPecb(a.index)) {
    pidx = PecbIndex::loadFile(a.index);
    VertexId u = pidx.vertexByLabel(a.vertex);
    if (u == kNoVertex) throw std::invalid_argument("vertex label " + std::to_string(a.vertex) + " not in index");
    result = queryComponent(pidx, u, {a.ts, a.te});
    labels = &pidx.labels();
  } else {
    cidx = CtmsfIndex::loadFile(a.index);
    VertexId u = cidx.vertexByLabel(a.vertex);
    if (u == kNoVertex) throw std::invalid_argument("vertex label " + std::to_string(a.vertex) + " not in index");
    result = cidx.query(u, {a.ts, a.te});
    labels = &cidx.labels();
  }
  std::cout << joinLabels(result, *labels) << "\n";
  return 0;
}

struct OracleArgs {
  GraphOptions g;
  std::string kspec;
  Label vertex = 0;
  Timestamp ts = 0, te = 0;
};

int runOracle(const OracleArgs& a) {
  TemporalGraph g = loadGraph(a.g);
  std::uint32_t k = resolveKSpec(a.kspec, g);
  VertexId u = g.vertexByLabel(a.vertex);
  if (u == kNoVertex) throw std::invalid_argument("vertex label " + std::to_string(a.vertex) + " not in graph");
  std::vector<VertexId> result = oracleComponent(g, k, u, {a.ts, a.te});
  std::cout << joinLabels(result, g.labels()) << "\n";
  return 0;
}

// ---- batch ----------------------------------------------------------------

struct BatchArgs {
  std::string index;
  std::string queries;
  std::string output;
  unsigned threads = 1;
};

int runBatch(const BatchArgs& a) {
  if (!sniffPecb(a.index)) throw IoError("batch requires a forest index file");
  PecbIndex idx = PecbIndex::loadFile(a.index);
  std::ifstream qin(a.queries);
  if (!qin) throw IoError("cannot open " + a.queries);
  std::vector<std::pair<VertexId, TimeWindow>> qs;
  std::vector<std::array<std::uint64_t, 3>> raw;
  std::string line;
  std::size_t lineNo = 0;
  while (std::getline(qin, line)) {
    ++lineNo;
    if (line.empty() || line[0] == '#') continue;
    if (lineNo == 1 && line.rfind("u,", 0) == 0) continue;  // optional header
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream ls(line);
    std::uint64_t u, ts, te;
    if (!(ls >> u >> ts >> te))
      throw ParseError("query line " + std::to_string(lineNo) + ": expected u,ts,te");
    VertexId du = idx.vertexByLabel(u);
    if (du == kNoVertex)
      throw std::invalid_argument("query line " + std::to_string(lineNo) + ": unknown vertex label " +
                                  std::to_string(u));
    qs.push_back({du, {static_cast<Timestamp>(ts), static_cast<Timestamp>(te)}});
    raw.push_back({u, ts, te});
  }
  std::vector<BatchQueryResult> res = batchQuery(idx, qs, a.threads);
  std::ofstream out(a.output);
  if (!out) throw IoError("cannot open " + a.output + " for writing");
  out << "u,ts,te,size,vertices,micros\n";
  for (std::size_t i = 0; i < res.size(); ++i) {
    out << raw[i][0] << ',' << raw[i][1] << ',' << raw[i][2] << ',' << res[i].vertices.size() << ','
        << joinLabels(res[i].vertices, idx.labels()) << ',' << res[i].micros << "\n";
  }
  if (!out) throw IoError("write failure on " + a.output);
  return 0;
}

// ---- coretimes ------------------------------------------------------------

struct CoretimesArgs {
  GraphOptions g;
  std::string kspec;
  std::string output;
};

int runCoretimes(const CoretimesArgs& a) {
  TemporalGraph g = loadGraph(a.g);
  std::uint32_t k = resolveKSpec(a.kspec, g);
  CoreTimeTable table = allEdgeCoreTimes(g, k);
  std::ostream* out = &std::cout;
  std::ofstream f;
  if (!a.output.empty()) {
    f.open(a.output);
    if (!f) throw IoError("cannot open " + a.output + " for writing");
    out = &f;
  }
  *out << "edgeId,u,v,t,startTime,coreTime\n";
  for (EdgeId e = 0; e < g.numEdges(); ++e) {
    const auto& ed = g.edge(e);
    for (const auto& p : table.row(e)) {
      *out << e << ',' << g.label(ed.u) << ',' << g.label(ed.v) << ',' << ed.t << ','
           << p.startTime << ',';
      if (p.coreTime == kInfiniteTime)
        *out << "inf\n";
      else
        *out << p.coreTime << "\n";
    }
  }
  if (!*out) throw IoError("write failure on core time output");
  return 0;
}

// ---- verify ---------------------------------------------------------------

struct VerifyArgs {
  GraphOptions g;
  std::string kspec;
  bool exhaustive = false;
  std::size_t samples = 100000;
  std::uint64_t seed = 1;
  std::size_t maxChecks = 2000000;
};

int runVerify(const VerifyArgs& a) {
  TemporalGraph g = loadGraph(a.g);
  std::uint32_t k = resolveKSpec(a.kspec, g);
  if (g.numEdges() == 0) {
    std::cout << "empty graph: nothing to verify\n";
    return 0;
  }
  CoreTimeTable table = allEdgeCoreTimes(g, k);
  PecbIndex pidx = PecbIndex::build(g, k, table);
  CtmsfIndex cidx = CtmsfIndex::build(g, k, table);
  const std::uint32_t n = g.numVertices();
  const Timestamp tmax = g.tMax();

  std::size_t checks = 0, mismatches = 0;
  auto checkOne = [&](VertexId u, TimeWindow w) {
    std::vector<VertexId> expect = oracleComponent(g, k, u, w);
    std::vector<VertexId> viaForest = queryComponent(pidx, u, w);
    std::vector<VertexId> viaMsf = cidx.query(u, w);
    ++checks;
    if (viaForest != expect || viaMsf != expect) {
      if (++mismatches <= 5) {
        std::cerr << "mismatch u=" << g.label(u) << " window=[" << w.ts << "," << w.te
                  << "] oracle={" << joinLabels(expect, g.labels()) << "} forest={"
                  << joinLabels(viaForest, g.labels()) << "} msf={" << joinLabels(viaMsf, g.labels())
                  << "}\n";
      }
    }
  };

  if (a.exhaustive) {
    std::size_t total = static_cast<std::size_t>(n) * tmax * (tmax + 1) / 2;
    if (total > a.maxChecks) {
      std::cerr << "exhaustive verification needs " << total << " checks (> --max-checks "
                << a.maxChecks << "); use --samples\n";
      return kExitUsage;
    }
    for (VertexId u = 0; u < n; ++u)
      for (Timestamp ts = 1; ts <= tmax; ++ts)
        for (Timestamp te = ts; te <= tmax; ++te) checkOne(u, {ts, te});
    std::cout << "checked " << checks << " query tuples (" << n << " vertices x "
              << tmax * (tmax + 1) / 2 << " windows): ";
  } else {
    SplitMix64 rng(a.seed);
    for (std::size_t i = 0; i < a.samples; ++i) {
      auto [u, w] = sampleQuery(n, tmax, rng);
      checkOne(u, w);
    }
    std::cout << "checked " << checks << " sampled query tuples: ";
  }
  if (mismatches) {
    std::cout << mismatches << " mismatches\n";
    return kExitVerify;
  }
  std::cout << "all agree\n";
  return 0;
}

// ---- bench ----------------------------------------------------------------

struct BenchArgs {
  GraphOptions g;
  std::string kList = "70%";
  std::size_t queries = 1000;
  std::uint64_t seed = 42;
  std::string kinds = "pecb,ctmsf";
  std::string output;
  std::size_t verifySamples = 200;
};

int runBench(const BenchArgs& a) {
  TemporalGraph g = loadGraph(a.g);
  if (g.numEdges() == 0) throw std::invalid_argument("empty graph");
  std::uint32_t kmax = measureKmax(g);
  std::cerr << "vertices=" << g.numVertices() << " edges=" << g.numEdges() << " tmax=" << g.tMax()
            << " kmax=" << kmax << "\n";

  std::vector<std::uint32_t> ks;
  {
    std::istringstream ss(a.kList);
    std::string item;
    while (std::getline(ss, item, ',')) ks.push_back(resolveK(item, kmax));
  }
  std::vector<std::string> kinds;
  {
    std::istringstream ss(a.kinds);
    std::string item;
    while (std::getline(ss, item, ',')) kinds.push_back(item);
  }

  std::ostream* out = &std::cout;
  std::ofstream f;
  if (!a.output.empty()) {
    f.open(a.output);
    if (!f) throw IoError("cannot open " + a.output + " for writing");
    out = &f;
  }
  *out << "kind,k,build_seconds,index_bytes,avg_query_micros,p50_query_micros,queries,"
          "oracle_checks,oracle_agreement\n";

  bool allAgree = true;
  for (std::uint32_t k : ks) {
    // same seeded workload for every kind and k
    std::vector<std::pair<VertexId, TimeWindow>> qs;
    SplitMix64 rng(a.seed);
    for (std::size_t i = 0; i < a.queries; ++i) qs.push_back(sampleQuery(g.numVertices(), g.tMax(), rng));

    for (const std::string& kind : kinds) {
      double buildSec = 0;
      std::size_t bytes = 0;
      std::vector<std::uint64_t> micros(qs.size());
      std::size_t agree = 0, oracleChecks = 0;
      std::vector<std::vector<VertexId>> answers(qs.size());
      if (kind == "pecb") {
        auto t0 = std::chrono::steady_clock::now();
        PecbIndex idx = PecbIndex::build(g, k);
        auto t1 = std::chrono::steady_clock::now();
        buildSec = seconds(t0, t1);
        bytes = idx.stats().serializedBytes;
        std::vector<BatchQueryResult> res = batchQuery(idx, qs);
        for (std::size_t i = 0; i < qs.size(); ++i) {
          micros[i] = res[i].micros;
          answers[i] = std::move(res[i].vertices);
        }
      } else if (kind == "ctmsf") {
        auto t0 = std::chrono::steady_clock::now();
        CtmsfIndex idx = CtmsfIndex::build(g, k);
        auto t1 = std::chrono::steady_clock::now();
        buildSec = seconds(t0, t1);
        bytes = idx.serializedBytes();
        for (std::size_t i = 0; i < qs.size(); ++i) {
          auto q0 = std::chrono::steady_clock::now();
          answers[i] = idx.query(qs[i].first, qs[i].second);
          auto q1 = std::chrono::steady_clock::now();
          micros[i] = static_cast<std::uint64_t>(
              std::chrono::duration_cast<std::chrono::microseconds>(q1 - q0).count());
        }
      } else {
        std::cerr << "unknown index kind " << kind << "\n";
        return kExitUsage;
      }
      std::size_t step = std::max<std::size_t>(1, qs.size() / std::max<std::size_t>(1, a.verifySamples));
      for (std::size_t i = 0; i < qs.size() && oracleChecks < a.verifySamples; i += step) {
        ++oracleChecks;
        if (oracleComponent(g, k, qs[i].first, qs[i].second) == answers[i]) ++agree;
      }
      if (agree != oracleChecks) allAgree = false;
      double avg = 0;
      for (auto m : micros) avg += static_cast<double>(m);
      avg = micros.empty() ? 0 : avg / static_cast<double>(micros.size());
      std::vector<std::uint64_t> sorted = micros;
      std::sort(sorted.begin(), sorted.end());
      std::uint64_t p50 = sorted.empty() ? 0 : sorted[sorted.size() / 2];
      *out << kind << ',' << k << ',' << buildSec << ',' << bytes << ',' << avg << ',' << p50 << ','
           << qs.size() << ',' << oracleChecks << ','
           << (oracleChecks ? static_cast<double>(agree) / static_cast<double>(oracleChecks) : 1.0)
           << "\n";
    }
  }
  if (!*out) throw IoError("write failure on bench output");
  return allAgree ? 0 : kExitVerify;
}

// ---- gen / stats ----------------------------------------------------------

struct GenArgs {
  std::uint32_t vertices = 0;
  std::size_t edges = 0;
  Timestamp tmax = 0;
  std::uint64_t seed = 1;
  std::string output;
};

int runGen(const GenArgs& a) {
  TemporalGraph g = generateGraph(a.vertices, a.edges, a.tmax, a.seed);
  std::ofstream out(a.output);
  if (!out) throw IoError("cannot open " + a.output + " for writing");
  writeEdgeList(g, out);
  if (!out) throw IoError("write failure on " + a.output);
  return 0;
}

int runStats(const std::string& path) {
  if (sniffPecb(path)) {
    PecbIndex idx = PecbIndex::loadFile(path);
    IndexStats st = idx.stats();
    std::cout << "kind forest\nk " << idx.k() << "\nvertices " << idx.numVertices() << "\nedges "
              << idx.edgeCount() << "\ntmax " << idx.tMax() << "\nnodes " << st.nodeCount
              << "\nlive_nodes " << st.liveNodeCount << "\nentries " << st.entryCount
              << "\navg_entries_per_node " << st.avgEntriesPerNode << "\nentry_point_records "
              << st.entryPointRecordCount << "\nbytes " << st.serializedBytes << "\n";
    std::uint32_t maxDepth = 0;
    std::size_t ins = 0, del = 0;
    for (auto d : st.depthPerTs) maxDepth = std::max(maxDepth, d);
    for (auto c : st.insertionsPerTs) ins += c;
    for (auto c : st.deletionsPerTs) del += c;
    std::cout << "max_depth " << maxDepth << "\ninsertions " << ins << "\ndeletions " << del << "\n";
  } else {
    CtmsfIndex idx = CtmsfIndex::loadFile(path);
    std::cout << "kind spanning-forest\nk " << idx.k() << "\nvertices " << idx.numVertices()
              << "\ntmax " << idx.tMax() << "\nrecords " << idx.recordCount() << "\nbytes "
              << idx.serializedBytes() << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"temporal k-core component search over historical windows"};
  app.require_subcommand(1);

  BuildArgs build;
  auto* cb = app.add_subcommand("build", "build an index from an edge list");
  addGraphOptions(cb, build.g);
  cb->add_option("--k", build.kspec, "degree threshold (integer or percent of kmax, e.g. 70%)")->required();
  cb->add_option("--output", build.output, "index file to write")->required();
  cb->add_option("--kind", build.kind, "pecb (versioned forest) or ctmsf (baseline)");
  cb->add_flag("--stats", build.printStats, "print index statistics after building");

  QueryArgs query;
  auto* cq = app.add_subcommand("query", "answer one component query from an index");
  cq->add_option("--index", query.index, "index file")->required();
  cq->add_option("--vertex", query.vertex, "query vertex (original label)")->required();
  cq->add_option("--start", query.ts, "window start")->required();
  cq->add_option("--end", query.te, "window end")->required();

  BatchArgs batch;
  auto* cbt = app.add_subcommand("batch", "answer a CSV file of queries");
  cbt->add_option("--index", batch.index, "forest index file")->required();
  cbt->add_option("--queries", batch.queries, "CSV with u,ts,te rows")->required();
  cbt->add_option("--output", batch.output, "CSV output")->required();
  cbt->add_option("--threads", batch.threads, "worker threads");

  OracleArgs oracle;
  auto* co = app.add_subcommand("oracle", "answer one query by direct peeling (ground truth)");
  addGraphOptions(co, oracle.g);
  co->add_option("--k", oracle.kspec, "degree threshold")->required();
  co->add_option("--vertex", oracle.vertex, "query vertex (original label)")->required();
  co->add_option("--start", oracle.ts, "window start")->required();
  co->add_option("--end", oracle.te, "window end")->required();

  CoretimesArgs coretimes;
  auto* cct = app.add_subcommand("coretimes", "dump the per-edge core time table as CSV");
  addGraphOptions(cct, coretimes.g);
  cct->add_option("--k", coretimes.kspec, "degree threshold")->required();
  cct->add_option("--output", coretimes.output, "CSV output (default stdout)");

  VerifyArgs verify;
  auto* cv = app.add_subcommand("verify", "check index answers against the peeling oracle");
  addGraphOptions(cv, verify.g);
  cv->add_option("--k", verify.kspec, "degree threshold")->required();
  cv->add_flag("--exhaustive", verify.exhaustive, "check every (vertex, window) tuple");
  cv->add_option("--samples", verify.samples, "sampled tuples when not exhaustive");
  cv->add_option("--seed", verify.seed, "sampling seed");
  cv->add_option("--max-checks", verify.maxChecks, "refuse exhaustive runs larger than this");

  BenchArgs bench;
  auto* cbn = app.add_subcommand("bench", "build/query timing with oracle spot checks");
  addGraphOptions(cbn, bench.g);
  cbn->add_option("--k-list", bench.kList, "comma separated k specs (integers or percents)");
  cbn->add_option("--queries", bench.queries, "random queries per k");
  cbn->add_option("--seed", bench.seed, "query sampling seed");
  cbn->add_option("--kinds", bench.kinds, "comma separated index kinds");
  cbn->add_option("--output", bench.output, "CSV output (default stdout)");
  cbn->add_option("--verify-samples", bench.verifySamples, "oracle spot checks per run");

  GenArgs gen;
  auto* cg = app.add_subcommand("gen", "generate a random temporal graph");
  cg->add_option("--vertices", gen.vertices, "vertex count")->required();
  cg->add_option("--edges", gen.edges, "edge count")->required();
  cg->add_option("--tmax", gen.tmax, "timestamps drawn uniformly from [1, tmax]")->required();
  cg->add_option("--seed", gen.seed, "generator seed");
  cg->add_option("--output", gen.output, "edge list file to write")->required();

  std::string statsPath;
  auto* cs = app.add_subcommand("stats", "print index statistics");
  cs->add_option("--index", statsPath, "index file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    if (cb->parsed()) return runBuild(build);
    if (cq->parsed()) return runQuery(query);
    if (cbt->parsed()) return runBatch(batch);
    if (co->parsed()) return runOracle(oracle);
    if (cct->parsed()) return runCoretimes(coretimes);
    if (cv->parsed()) return runVerify(verify);
    if (cbn->parsed()) return runBench(bench);
    if (cg->parsed()) return runGen(gen);
    if (cs->parsed()) return runStats(statsPath);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitData;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitData;
  } catch (const std::logic_error& e) {
    // construction invariant violations surface here
    std::cerr << "internal check failed: " << e.what() << "\n";
    return kExitVerify;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitData;
  }
  return kExitUsage;
}
