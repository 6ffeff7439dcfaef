#include "burch/report.hpp"

#include <atomic>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>

#include "burch/error.hpp"
#include "burch/pipelines.hpp"
#include "burch/strand.hpp"

namespace burch {

namespace {

Json polys(const std::vector<Polynomial>& ps) {
  Json a = Json::array();
  for (const auto& p : ps) a.push_back(p.toString());
  return a;
}

Json longs(const std::vector<long>& v) { return Json(v); }

GradedFreeComplex resolutionOfRing(const Ideal& I, int upTo) {
  if (I.isMonomial() && static_cast<int>(I.gens().size()) <= TaylorAlgebra::kMaxGenerators)
    return TaylorAlgebra::ofIdeal(I)->complex();
  const RingPtr& r = I.ring();
  std::vector<int> deg;
  for (const auto& g : I.gens()) deg.push_back(g.degree());
  PolyMatrix row(r, {0}, deg);
  for (std::size_t k = 0; k < I.gens().size(); ++k)
    row.setColumn(static_cast<int>(k), FreeElement::fromEntries({{0, I.gens()[k]}}));
  return resolveOverQ(r, {0}, row, upTo);
}

void requireMonomial(const Ideal& I) {
  if (!I.isMonomial()) throw InputError("dg and A-infinity structures are implemented for monomial ideals only");
  if (static_cast<int>(I.gens().size()) > TaylorAlgebra::kMaxGenerators)
    throw ResourceError("the Taylor resolution is limited to " + std::to_string(TaylorAlgebra::kMaxGenerators) +
                        " generators");
}

void requireArtinian(const QuotientRing& R) {
  if (!R.isArtinian()) throw InputError("k-rank verification needs an Artinian quotient");
}

Json splitJson(const SplitVerdict& v) {
  Json j;
  j["mode"] = splitModeName(v.mode);
  j["witness"] = v.witness ? Json(v.witness->toString()) : Json(nullptr);
  j["rejected"] = polys(v.rejected);
  j["reason"] = v.reason;
  return j;
}

Json golodJson(const GolodReport& g) {
  Json j;
  j["golod"] = g.golod;
  j["minimal"] = g.minimal;
  j["seriesMatch"] = g.seriesMatch;
  j["ranks"] = longs(g.ranks);
  j["series"] = longs(g.series);
  j["betti"] = longs(g.betti);
  if (!g.unitEntry.empty()) j["unitEntry"] = g.unitEntry;
  return j;
}

Json verdictsJson(const KRankReport& k) {
  Json j;
  j["burchIndex"] = k.burchIndex;
  j["m"] = k.m;
  j["golodFlag"] = k.golodFlag;
  Json rows = Json::array();
  for (const auto& r : k.rows)
    rows.push_back({{"i", r.i},
                    {"betti", r.betti},
                    {"kRank", r.kRank},
                    {"generalBound", r.generalBound},
                    {"general", verdictName(r.general)},
                    {"golodBound", r.golodBound},
                    {"golod", verdictName(r.golod)}});
  j["rows"] = rows;
  j["holds"] = k.holds();
  if (k.partial) j["partial"] = k.partialReason;
  return j;
}

Json generalJson(const GeneralRun& run) {
  Json j;
  j["taylorShortcut"] = run.taylorShortcut;
  j["barRanks"] = longs(run.barRanks);
  j["burchCyclesVerified"] = run.burchCheck.ok;
  Json ds = Json::array();
  for (const auto& d : run.degrees) {
    Json dj;
    dj["q"] = d.q;
    Json cs = Json::array();
    for (std::size_t k = 0; k < d.cycles.size(); ++k) {
      const auto& rc = d.cycles[k];
      cs.push_back({{"pair", {rc.i + 1, rc.j + 1}},
                    {"alphaZero", rc.alphaZero},
                    {"isCycle", rc.isCycle},
                    {"split", splitJson(d.splits[k])},
                    {"inSocle", static_cast<bool>(d.survival.inSocle[k])},
                    {"survives", static_cast<bool>(d.survival.survives[k])}});
    }
    dj["cycles"] = cs;
    dj["survivors"] = d.survival.survivors;
    dj["survivorsInBar"] = d.survival.survivorsInBar;
    dj["certified"] = d.allCycles && d.allSplit && d.allSurvive;
    ds.push_back(dj);
  }
  j["degrees"] = ds;
  j["certified"] = run.ok();
  return j;
}

Json golodRunJson(const GolodRun& run) {
  Json j;
  j["m"] = run.m;
  j["golod"] = golodJson(run.golod);
  Json ds = Json::array();
  for (const auto& d : run.degrees)
    ds.push_back({{"q", d.q},
                  {"expected", d.expected},
                  {"emitted", d.emitted},
                  {"cycles", d.cycles},
                  {"split", d.split},
                  {"certified", d.certified}});
  j["degrees"] = ds;
  j["countsMatch"] = run.ok();
  return j;
}

struct Ctx {
  const JobSpec& job;
  Json& rep;
  Instance in;
  std::vector<std::string> findings;
  bool violation = false;
  const Ideal& I() const { return in.R->ideal(); }
  int burch() const { return I().isZero() ? 0 : burchIndex(I()); }
};

void burchSection(Ctx& c) {
  const Ideal& I = c.I();
  Json j;
  if (I.isZero()) {
    j["burchIndex"] = 0;
    c.rep["burch"] = j;
    return;
  }
  j["socleLift"] = polys(minimalGenerators(socleLift(I)));
  j["burchIdeal"] = polys(minimalGenerators(burchIdeal(I)));
  const int b = burchIndex(I);
  j["burchIndex"] = b;
  if (b >= 1) {
    BurchData bd = burchData(I);
    Json f = Json::array();
    for (int i = 0; i < bd.b; ++i)
      f.push_back({{"x", bd.x[i].toString()},
                   {"s", bd.s[i].toString()},
                   {"a", bd.a[bd.j[i]].toString()},
                   {"j", bd.j[i] + 1}});
    j["factorizations"] = f;
    GradedFreeComplex X = resolutionOfRing(I, 3);
    Json e = Json::array();
    for (int k = 0; k < X.rank(1); ++k) e.push_back(X.diff(1).column(k).at(0).toString());
    j["basisX1"] = e;
    auto cycles = burchCycles(I, bd, X);
    auto chk = verifyBurchCycles(I, X, cycles);
    if (!chk.ok) throw InternalError("Burch cycle invariants: " + chk.firstFailure);
    SplitContext ctx = SplitContext::of(I);
    Json cs = Json::array();
    for (const auto& cy : cycles)
      cs.push_back({{"i", cy.i + 1},
                    {"j", cy.j + 1},
                    {"xi", cy.xi.toString()},
                    {"xj", cy.xj.toString()},
                    {"s", cy.s.toString()},
                    {"omega", cy.omega.toString("e")},
                    {"f", cy.f.toString("f")},
                    {"certified", cy.certified},
                    {"split", splitJson(splittingCheck(cy.f, X.diff(2).apply(cy.f), ctx))}});
    j["cycles"] = cs;
  }
  c.rep["burch"] = j;
}

void resolveSection(Ctx& c) {
  const ModulePresentation& M = c.in.M;
  const RingPtr& r = c.in.r;
  const Ideal& I = c.I();
  const int n = r->nvars();
  Json j;
  // M over Q: the relations together with I e_1, .., I e_g
  std::vector<int> colDeg = M.relations.colDegrees();
  std::vector<FreeElement> cols = M.relations.columns();
  for (int g = 0; g < M.generators(); ++g)
    for (const auto& a : I.gens()) {
      colDeg.push_back(a.degree() + M.genDegrees[g]);
      cols.push_back(FreeElement::fromEntries({{g, a}}));
    }
  PolyMatrix presQ(r, M.genDegrees, colDeg);
  for (std::size_t k = 0; k < cols.size(); ++k) presQ.setColumn(static_cast<int>(k), cols[k]);
  j["bettiQModule"] = resolveOverQ(r, M.genDegrees, presQ, n + 1).ranks();
  j["bettiQRing"] = resolutionOfRing(I, n + 1).ranks();
  if (c.in.R->isArtinian()) {
    const long dim = moduleDim(M);
    Json km;
    km["colon"] = kRank(M);
    km["strand"] = kRankStrand(M);
    km["bruteForce"] = dim <= c.job.caps.bruteForceDim ? Json(kRankBruteForce(M, c.job.caps.bruteForceDim)) : Json(nullptr);
    j["kRankModule"] = km;
    Json rows = Json::array();
    for (const auto& s : syzygyKRanks(M, c.job.caps.homDegree))
      rows.push_back({{"i", s.i}, {"betti", s.betti}, {"kRank", s.kRank}});
    j["syzygies"] = rows;
  } else {
    j["bettiR"] = resolveOverRLifted(M, c.job.caps.homDegree).ranks();
  }
  c.rep["resolution"] = j;
}

void barSection(Ctx& c) {
  const ModulePresentation& M = c.in.M;
  requireMonomial(c.I());
  const int up = c.job.caps.barDegree;
  const bool dg = c.job.regime == "dg";
  BarInputs bi = barInputs(M, up);
  std::shared_ptr<const AInfAlgebra> A;
  std::shared_ptr<const AInfModule> Y;
  if (dg) {
    A = AInfAlgebra::fromDg(bi.X);
    Y = AInfModule::fromDg(A, bi.Y.Y);
  } else {
    A = AInfAlgebra::transfer(bi.X, c.job.caps.arity);
    Y = AInfModule::transfer(A, bi.Y.Y);
  }
  guardBarRanks(A->complex(), Y->complex(), up, c.job.caps.barRank);
  BarComplex B(Y, M.R, up);
  auto v = verifyBar(B, c.in.R->isArtinian() ? moduleDim(M) : -1);
  Json j;
  j["regime"] = regimeName(B.regime());
  j["degree"] = up;
  j["xRanks"] = A->complex().ranks();
  j["yRanks"] = Y->complex().ranks();
  j["ranks"] = longs(v.ranks);
  j["squareZero"] = v.squareZero;
  j["exact"] = v.exact;
  j["ranksMatch"] = v.ranksMatch;
  j["augmentationOk"] = v.augmentationOk;
  j["homology"] = longs(v.homology);
  j["minimal"] = B.complex().isMinimal();
  if (!v.squareZero || !v.ranksMatch || (c.in.R->isArtinian() && (!v.exact || !v.augmentationOk)))
    throw InternalError("bar complex check failed: " + v.failure);
  if (!dg) j["golod"] = golodJson(golodCheck(B, resolveOverR(M, up).ranks()));
  c.rep["bar"] = j;
}

// Dg cycle pipeline; returns false when it could not run.
bool generalPipeline(Ctx& c, Json& out) {
  const int qMax = c.job.caps.barDegree - 1;
  if (qMax < 4) {
    out["general"] = {{"skipped", "barDegree must be at least 5"}};
    return false;
  }
  requireMonomial(c.I());
  GeneralRun run = verifyGeneral(c.in.M, 4, qMax, 0, false, c.job.caps.barRank);
  out["general"] = generalJson(run);
  if (!run.ok()) {
    std::ostringstream s;
    s << "dg cycle certification incomplete:";
    for (const auto& d : run.degrees) {
      int zero = 0, split = 0, surv = 0;
      for (std::size_t k = 0; k < d.cycles.size(); ++k) {
        zero += d.cycles[k].alphaZero;
        split += d.splits[k].ok();
        surv += d.survival.survives[k] ? 1 : 0;
      }
      s << " q=" << d.q << " (" << d.cycles.size() << " cycles, " << zero << " zero, " << split << " split, "
        << surv << " survive)";
    }
    c.findings.push_back(s.str());
  }
  return true;
}

GolodRun golodPipeline(Ctx& c, Json& out) {
  requireMonomial(c.I());
  GolodRun run = verifyGolod(c.in.M, std::max(3, c.job.caps.barDegree - 1), c.job.caps.arity, c.job.caps.barRank);
  out["golod"] = golodRunJson(run);
  return run;
}

void cyclesSection(Ctx& c) {
  Json j;
  const int b = c.burch();
  j["burchIndex"] = b;
  if (b < 2) {
    j["note"] = "bounds vacuous: Burch index < 2";
    c.rep["cycles"] = j;
    return;
  }
  if (c.job.regime != "ainf") generalPipeline(c, j);
  if (c.job.regime != "dg") golodPipeline(c, j);
  c.rep["cycles"] = j;
}

void verifyGeneralSection(Ctx& c) {
  requireArtinian(*c.in.R);
  const int b = c.burch();
  KRankReport k = boundVerdicts(c.in.M, c.job.caps.homDegree, false);
  // filled in place so that a cap hit in the pipeline keeps the verdicts
  Json& j = c.rep["verifyGeneral"];
  j["verdicts"] = verdictsJson(k);
  if (k.partial) throw ResourceError(k.partialReason);
  if (!k.holds()) c.violation = true;
  if (b < 2) {
    j["note"] = "bounds vacuous: Burch index < 2";
  } else if (c.I().isMonomial()) {
    generalPipeline(c, j);
  }
}

void verifyGolodSection(Ctx& c) {
  requireArtinian(*c.in.R);
  const int b = c.burch();
  Json j;
  bool golod = false;
  if (b >= 1) {
    GolodRun run = golodPipeline(c, j);
    golod = run.golod.golod;
    if (golod && b >= 2 && !run.ok()) c.violation = true;
  } else {
    requireMonomial(c.I());
    const int up = std::max(4, c.job.caps.barDegree);
    BarInputs bi = barInputs(c.in.M, up);
    auto A = AInfAlgebra::transfer(bi.X, c.job.caps.arity);
    auto Y = AInfModule::transfer(A, bi.Y.Y);
    guardBarRanks(A->complex(), Y->complex(), up, c.job.caps.barRank);
    BarComplex B(Y, c.in.M.R, up);
    GolodReport g = golodCheck(B, resolveOverR(c.in.M, up).ranks());
    golod = g.golod;
    j["golod"] = {{"golod", golodJson(g)}};
  }
  KRankReport k = boundVerdicts(c.in.M, c.job.caps.homDegree, golod);
  j["verdicts"] = verdictsJson(k);
  if (k.partial) throw ResourceError(k.partialReason);
  if (!k.holds()) c.violation = true;
  GrowthReport g = growthCheck(k, c.in.r->nvars(), 0);
  j["growth"] = {{"applies", g.applies}, {"start", g.start}, {"bound", g.bound}, {"ok", g.ok}};
  if (g.applies && !g.ok) c.violation = true;
  if (b < 2) j["note"] = "bounds vacuous: Burch index < 2";
  c.rep["verifyGolod"] = j;
}

std::string statusName(int code) {
  switch (code) {
    case kExitOk: return "ok";
    case kExitBoundViolation: return "bound-violation";
    case kExitInput: return "input-error";
    case kExitResource: return "partial";
    default: return "internal-error";
  }
}

}  // namespace

RunResult runJob(const JobSpec& job) {
  const auto t0 = std::chrono::steady_clock::now();
  RunResult out;
  Json& rep = out.report;
  rep["schemaVersion"] = kSchemaVersion;
  rep["command"] = job.command;
  rep["job"] = toJson(job);
  Ctx c{job, rep, {}, {}, false};
  try {
    if (job.command == "corpus") throw InputError("corpus runs from the command line with an index file");
    c.in = instantiate(job);
    Json ring;
    ring["prime"] = job.p;
    ring["vars"] = job.vars;
    ring["ideal"] = polys(c.I().gens());
    ring["artinian"] = c.in.R->isArtinian();
    if (c.in.R->isArtinian()) ring["dimension"] = c.in.R->dimension();
    rep["ring"] = ring;
    Json mod;
    mod["generators"] = c.in.M.generators();
    mod["relations"] = c.in.M.relations.cols();
    if (c.in.R->isArtinian()) mod["dimension"] = moduleDim(c.in.M);
    rep["module"] = mod;

    const std::string& cmd = job.command;
    if (cmd == "burch") {
      burchSection(c);
    } else if (cmd == "resolve") {
      resolveSection(c);
    } else if (cmd == "bar") {
      barSection(c);
    } else if (cmd == "cycles") {
      burchSection(c);
      cyclesSection(c);
    } else if (cmd == "verify-general") {
      burchSection(c);
      verifyGeneralSection(c);
    } else if (cmd == "verify-golod") {
      burchSection(c);
      verifyGolodSection(c);
    } else {
      burchSection(c);
      verifyGeneralSection(c);
      verifyGolodSection(c);
    }
    out.exitCode = c.violation ? kExitBoundViolation : kExitOk;
  } catch (const InputError& e) {
    rep["error"] = e.what();
    out.exitCode = kExitInput;
  } catch (const StructuralError& e) {
    rep["error"] = e.what();
    out.exitCode = kExitInput;
  } catch (const ResourceError& e) {
    rep["partial"] = true;
    rep["capExceeded"] = e.what();
    out.exitCode = kExitResource;
  } catch (const InternalError& e) {
    rep["error"] = std::string("internal: ") + e.what();
    out.exitCode = kExitInternal;
  }
  rep["findings"] = c.findings;
  rep["status"] = statusName(out.exitCode);
  rep["exitCode"] = out.exitCode;
  rep["timingSeconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return out;
}

Json withoutTiming(Json report) {
  report.erase("timingSeconds");
  return report;
}

namespace {

std::string readFile(const std::filesystem::path& p) {
  std::ifstream in(p);
  if (!in) throw InputError("cannot read " + p.string());
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

RunResult runCorpus(const std::string& indexPath, int threads, bool writeGolden) {
  const auto t0 = std::chrono::steady_clock::now();
  namespace fs = std::filesystem;
  RunResult out;
  Json& rep = out.report;
  rep["schemaVersion"] = kSchemaVersion;
  rep["command"] = "corpus";
  Json index;
  try {
    index = Json::parse(readFile(indexPath));
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("corpus index: ") + e.what());
  }
  if (!index.contains("entries") || !index["entries"].is_array()) throw InputError("corpus index needs an entries array");
  const fs::path dir = fs::path(indexPath).parent_path();
  const auto& entries = index["entries"];
  const std::size_t n = entries.size();
  std::vector<Json> rows(n);
  std::atomic<std::size_t> next{0};
  auto work = [&]() {
    for (std::size_t k = next++; k < n; k = next++) {
      const Json& e = entries[k];
      Json row;
      row["name"] = e.value("name", "entry" + std::to_string(k));
      row["expectedExit"] = e.value("expectedExit", 0);
      RunResult rr;
      try {
        rr = runJob(parseJobText(readFile(dir / e.at("job").get<std::string>())));
      } catch (const Error& err) {
        rr.exitCode = dynamic_cast<const InputError*>(&err) ? kExitInput : kExitInternal;
        rr.report = {{"schemaVersion", kSchemaVersion},
                     {"command", "parse"},
                     {"error", err.what()},
                     {"status", statusName(rr.exitCode)},
                     {"exitCode", rr.exitCode}};
      }
      row["command"] = rr.report.value("command", "");
      row["exitCode"] = rr.exitCode;
      const fs::path golden = dir / (row["name"].get<std::string>() + ".expected.json");
      Json mine = withoutTiming(rr.report);
      if (writeGolden) {
        std::ofstream(golden) << mine.dump(2) << "\n";
        row["goldenMatch"] = true;
      } else {
        bool match = false;
        try {
          match = withoutTiming(Json::parse(readFile(golden))) == mine;
        } catch (const std::exception&) {
          match = false;
        }
        row["goldenMatch"] = match;
      }
      row["ok"] = row["goldenMatch"].get<bool>() && rr.exitCode == row["expectedExit"].get<int>();
      rows[k] = row;
    }
  };
  const int t = std::max(1, std::min<int>(threads, static_cast<int>(n)));
  std::vector<std::thread> pool;
  for (int i = 1; i < t; ++i) pool.emplace_back(work);
  work();
  for (auto& th : pool) th.join();
  bool all = true;
  for (const auto& r : rows) all = all && r["ok"].get<bool>();
  rep["entries"] = rows;
  rep["allMatch"] = all;
  out.exitCode = all ? kExitOk : kExitBoundViolation;
  rep["status"] = all ? "ok" : "corpus-mismatch";
  rep["exitCode"] = out.exitCode;
  rep["timingSeconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return out;
}

namespace {

std::string join(const Json& a, const char* sep = ", ") {
  std::string s;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (k) s += sep;
    s += a[k].is_string() ? a[k].get<std::string>() : a[k].dump();
  }
  return s;
}

void renderVerdicts(std::ostringstream& o, const Json& v) {
  o << "  Burch index " << v["burchIndex"] << ", m = " << v["m"] << ", Golod flag " << v["golodFlag"] << "\n";
  o << "     i   betti   kRank   general(bound)   golod(bound)\n";
  char buf[160];
  for (const auto& r : v["rows"]) {
    std::snprintf(buf, sizeof buf, "  %4d %7d %7d   %-8s(%ld)   %-8s(%ld)\n", r["i"].get<int>(), r["betti"].get<int>(),
                  r["kRank"].get<int>(), r["general"].get<std::string>().c_str(), r["generalBound"].get<long>(),
                  r["golod"].get<std::string>().c_str(), r["golodBound"].get<long>());
    o << buf;
  }
}

void renderGeneral(std::ostringstream& o, const Json& g) {
  if (g.contains("skipped")) {
    o << "  dg cycles skipped: " << g["skipped"].get<std::string>() << "\n";
    return;
  }
  o << "  dg bar ranks: " << join(g["barRanks"]) << "\n";
  for (const auto& d : g["degrees"]) {
    o << "  q=" << d["q"] << ": survivors " << d["survivors"] << " (in B: " << d["survivorsInBar"] << ")";
    for (const auto& cy : d["cycles"])
      o << " [" << join(cy["pair"], ",") << (cy["alphaZero"].get<bool>() ? " zero" : "")
        << (cy["isCycle"].get<bool>() ? " cycle" : " NOT A CYCLE") << ", " << cy["split"]["mode"].get<std::string>()
        << (cy["survives"].get<bool>() ? ", survives" : ", does not survive") << "]";
    o << (d["certified"].get<bool>() ? "  certified\n" : "  not certified\n");
  }
}

void renderGolod(std::ostringstream& o, const Json& g) {
  if (g.contains("m")) o << "  m = " << g["m"] << "\n";
  const Json& gr = g["golod"];
  o << "  Golod: " << gr["golod"] << " (bar minimal " << gr["minimal"] << ", series match " << gr["seriesMatch"]
    << ")\n";
  o << "  bar ranks: " << join(gr["ranks"]) << "\n";
  o << "  series:    " << join(gr["series"]) << "\n";
  if (g.contains("degrees")) {
    o << "     q  expected  emitted  cycles  split  certified\n";
    char buf[120];
    for (const auto& d : g["degrees"]) {
      std::snprintf(buf, sizeof buf, "  %4d %9ld %8d %7d %6d %10d\n", d["q"].get<int>(), d["expected"].get<long>(),
                    d["emitted"].get<int>(), d["cycles"].get<int>(), d["split"].get<int>(), d["certified"].get<int>());
      o << buf;
    }
  }
}

}  // namespace

std::string renderText(const Json& rep) {
  std::ostringstream o;
  o << "burchlab " << rep.value("command", "") << "\n";
  if (rep.contains("ring")) {
    const Json& r = rep["ring"];
    o << "ring: k[" << join(r["vars"]) << "]/(" << join(r["ideal"]) << "), p = " << r["prime"];
    if (r.contains("dimension")) o << ", dim_k R = " << r["dimension"];
    o << "\n";
  }
  if (rep.contains("module")) {
    const Json& m = rep["module"];
    o << "module: " << m["generators"] << " generator(s), " << m["relations"] << " relation(s)";
    if (m.contains("dimension")) o << ", dim_k M = " << m["dimension"];
    o << "\n";
  }
  if (rep.contains("burch")) {
    const Json& b = rep["burch"];
    o << "\n-- Burch data\n";
    if (b.contains("socleLift")) o << "  I : n = (" << join(b["socleLift"]) << ")\n";
    if (b.contains("burchIdeal")) o << "  BI = (" << join(b["burchIdeal"]) << ")\n";
    o << "  Burch index " << b["burchIndex"] << "\n";
    if (b.contains("factorizations"))
      for (const auto& f : b["factorizations"])
        o << "  " << f["a"].get<std::string>() << " = (" << f["x"].get<std::string>() << ") * ("
          << f["s"].get<std::string>() << ")\n";
    if (b.contains("basisX1")) o << "  X_1 basis e1.. -> " << join(b["basisX1"]) << "\n";
    if (b.contains("cycles"))
      for (const auto& cy : b["cycles"])
        o << "  omega(" << cy["xj"].get<std::string>() << "," << cy["xi"].get<std::string>()
          << ") = " << cy["omega"].get<std::string>() << (cy["certified"].get<bool>() ? "" : "  [not certified]")
          << "; splitting: " << cy["split"]["mode"].get<std::string>()
          << (cy["split"]["witness"].is_null() ? "" : " with s = " + cy["split"]["witness"].get<std::string>())
          << "\n";
  }
  if (rep.contains("resolution")) {
    const Json& r = rep["resolution"];
    o << "\n-- Resolutions\n";
    o << "  Betti over Q of R: " << join(r["bettiQRing"]) << "\n";
    o << "  Betti over Q of M: " << join(r["bettiQModule"]) << "\n";
    if (r.contains("kRankModule"))
      o << "  kRank(M) = " << r["kRankModule"]["colon"] << " (strand " << r["kRankModule"]["strand"]
        << ", brute force " << r["kRankModule"]["bruteForce"] << ")\n";
    if (r.contains("syzygies")) {
      o << "     i   betti   kRank(syz_i)\n";
      char buf[80];
      for (const auto& s : r["syzygies"]) {
        std::snprintf(buf, sizeof buf, "  %4d %7d %7d\n", s["i"].get<int>(), s["betti"].get<int>(),
                      s["kRank"].get<int>());
        o << buf;
      }
    }
    if (r.contains("bettiR")) o << "  Betti over R: " << join(r["bettiR"]) << "\n";
  }
  if (rep.contains("bar")) {
    const Json& b = rep["bar"];
    o << "\n-- Bar resolution (" << b["regime"].get<std::string>() << ", through degree " << b["degree"] << ")\n";
    o << "  X ranks " << join(b["xRanks"]) << "; Y ranks " << join(b["yRanks"]) << "\n";
    o << "  ranks: " << join(b["ranks"]) << "\n";
    o << "  d^2 = 0: " << b["squareZero"] << ", exact: " << b["exact"] << ", rank formula: " << b["ranksMatch"]
      << ", H_0 = M: " << b["augmentationOk"] << ", minimal: " << b["minimal"] << "\n";
    if (b.contains("golod")) renderGolod(o, {{"golod", b["golod"]}});
  }
  if (rep.contains("cycles")) {
    const Json& c = rep["cycles"];
    o << "\n-- Cycles\n";
    if (c.contains("note")) o << "  " << c["note"].get<std::string>() << "\n";
    if (c.contains("general")) renderGeneral(o, c["general"]);
    if (c.contains("golod")) renderGolod(o, c["golod"]);
  }
  if (rep.contains("verifyGeneral")) {
    const Json& v = rep["verifyGeneral"];
    o << "\n-- General bound verdicts\n";
    renderVerdicts(o, v["verdicts"]);
    if (v.contains("note")) o << "  " << v["note"].get<std::string>() << "\n";
    if (v.contains("general")) renderGeneral(o, v["general"]);
  }
  if (rep.contains("verifyGolod")) {
    const Json& v = rep["verifyGolod"];
    o << "\n-- Golod bound verdicts\n";
    if (v.contains("golod")) renderGolod(o, v["golod"]);
    renderVerdicts(o, v["verdicts"]);
    const Json& g = v["growth"];
    o << "  growth: applies " << g["applies"] << ", starts at i = " << g["start"] << ", bound " << g["bound"]
      << ", ok " << g["ok"] << "\n";
    if (v.contains("note")) o << "  " << v["note"].get<std::string>() << "\n";
  }
  if (rep.contains("entries")) {
    o << "\n-- Corpus\n";
    for (const auto& e : rep["entries"])
      o << "  " << (e["ok"].get<bool>() ? "ok      " : "MISMATCH") << " " << e["name"].get<std::string>() << " ("
        << e["command"].get<std::string>() << ", exit " << e["exitCode"] << ", expected " << e["expectedExit"]
        << ", golden " << (e["goldenMatch"].get<bool>() ? "match" : "differs") << ")\n";
  }
  if (rep.contains("findings"))
    for (const auto& f : rep["findings"]) o << "\nfinding: " << f.get<std::string>() << "\n";
  if (rep.contains("error")) o << "\nerror: " << rep["error"].get<std::string>() << "\n";
  if (rep.contains("capExceeded")) o << "\nPARTIAL REPORT, cap exceeded: " << rep["capExceeded"].get<std::string>() << "\n";
  o << "\nstatus: " << rep.value("status", "") << " (exit " << rep.value("exitCode", 0) << ")";
  if (rep.contains("timingSeconds")) {
    char buf[40];
    std::snprintf(buf, sizeof buf, ", %.2f s", rep["timingSeconds"].get<double>());
    o << buf;
  }
  o << "\n";
  return o.str();
}

}  // namespace burch
