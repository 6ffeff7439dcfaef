#include "burch/pipelines.hpp"

#include <algorithm>
#include <map>

#include "burch/error.hpp"
#include "burch/groebner.hpp"
#include "burch/strand.hpp"

namespace burch {

namespace {

long binom2(long b) { return b * (b - 1) / 2; }

long power(long base, int e) {
  long r = 1;
  while (e-- > 0) r *= base;
  return r;
}

bool hasUnitEntry(const FreeElement& v) {
  for (const auto& [idx, c] : v.entries())
    if (c.constantTerm() != 0) return true;
  return false;
}

// u in X_1 with d_1 u = t. Monomials go to the first generator dividing them.
FreeElement liftThroughD1(const PolyMatrix& d1, const TrackedGroebner& tg, const Polynomial& t) {
  const RingPtr& r = d1.ring();
  if (t.isZero()) return FreeElement();
  if (t.isMonomial()) {
    const Term& tt = t.leading();
    for (int l = 0; l < d1.cols(); ++l) {
      Polynomial g = d1.column(l).at(0);
      if (!g.isMonomial() || !g.leading().m.divides(tt.m)) continue;
      Coeff c = r->field.div(tt.c, g.leading().c);
      return FreeElement::basis(r, l).times(Polynomial::monomial(r, tt.m / g.leading().m, c));
    }
  }
  FreeElement target = FreeElement::fromEntries({{0, t}});
  FreeElement u;
  if (!tg.solve(target, u)) throw InternalError("element of I does not lift through d_1: " + t.toString());
  return u;
}

// Rank of the span of cands modulo m * (span of cols) inside the free module
// indexed by S, degree by degree; each[k] records whether cands[k] alone is
// outside m * span.
int rankModuloMaximal(const StrandIndex& S, const std::vector<FreeElement>& cols, const std::vector<int>& colDeg,
                      const std::vector<FreeElement>& cands, std::vector<bool>* each) {
  const QuotientRing& R = S.ring();
  std::map<int, std::vector<int>> byDegree;
  if (each) each->assign(cands.size(), false);
  for (std::size_t k = 0; k < cands.size(); ++k)
    if (!cands[k].isZero()) byDegree[cands[k].degree(S.basisDegrees())].push_back(static_cast<int>(k));
  int total = 0;
  for (const auto& [D, ks] : byDegree) {
    Echelon base(R.field());
    for (std::size_t c = 0; c < cols.size(); ++c) {
      int gap = D - colDeg[c];
      if (gap < 1 || cols[c].isZero()) continue;
      for (Monomial u : R.basis(gap)) base.insert(S.toVector(u, cols[c], D));
    }
    std::vector<SparseVec> vs;
    for (int k : ks) {
      vs.push_back(S.toVector(cands[k], D));
      if (each) (*each)[k] = !base.inSpan(vs.back());
    }
    for (auto& v : vs) total += base.insert(std::move(v)) ? 1 : 0;
  }
  return total;
}

}  // namespace

std::vector<Polynomial> linearForms(const RingPtr& r, const BurchData& bd) {
  std::vector<Polynomial> L = bd.x;
  for (int v = 0; v < r->nvars(); ++v)
    if (std::find(bd.xVar.begin(), bd.xVar.end(), v) == bd.xVar.end()) L.push_back(Polynomial::variable(r, v));
  return L;
}

std::vector<BurchCycle> burchCycles(const Ideal& I, const BurchData& bd, const GradedFreeComplex& X) {
  const RingPtr& r = I.ring();
  if (bd.b == 0 || r->nvars() < 2) return {};  // no pairs i < j
  if (X.top() < 2 || X.rank(0) != 1) throw InputError("X must resolve Q/I through degree 2");
  const PolyMatrix& d1 = X.diff(1);
  TrackedGroebner tg1(d1);
  TrackedGroebner tg2(X.diff(2));
  std::vector<Polynomial> L = linearForms(r, bd);
  std::vector<BurchCycle> out;
  for (int i = 0; i < bd.b; ++i) {
    FreeElement ei = liftThroughD1(d1, tg1, bd.x[i] * bd.s[i]);
    for (int j = i + 1; j < static_cast<int>(L.size()); ++j) {
      BurchCycle c;
      c.i = i;
      c.j = j;
      c.xi = bd.x[i];
      c.xj = L[j];
      c.s = bd.s[i];
      c.certified = j < bd.b;
      FreeElement rest = liftThroughD1(d1, tg1, L[j] * bd.s[i]);
      c.omega = ei.times(L[j]) - rest.times(bd.x[i]);
      if (!d1.apply(c.omega).isZero()) throw InternalError("Burch cycle is not a cycle");
      if (!tg2.solve(c.omega, c.f)) throw InternalError("Burch cycle does not lift through d_2");
      out.push_back(std::move(c));
    }
  }
  return out;
}

StructureReport verifyBurchCycles(const Ideal& I, const GradedFreeComplex& X,
                                  const std::vector<BurchCycle>& cycles) {
  StructureReport rep;
  const RingPtr& r = I.ring();
  Ideal bi = burchIdeal(I);
  std::vector<FreeElement> gens;
  for (const auto& c : cycles) {
    ++rep.checked;
    std::string tag = "(" + std::to_string(c.i) + "," + std::to_string(c.j) + ")";
    if (X.diff(2).apply(c.f) != c.omega) rep.fail("d f != omega at " + tag);
    if (!X.diff(1).apply(c.omega).isZero()) rep.fail("omega is not a cycle at " + tag);
    if (!c.certified) continue;
    bool outside = false;
    for (const auto& [idx, p] : c.omega.entries()) outside = outside || !bi.contains(p);
    if (!outside) rep.fail("omega lies in BI X_1 at " + tag);
    gens.push_back(c.omega);
  }
  if (!gens.empty()) {
    const std::size_t k = gens.size();
    Submodule z = syzygies(X.diff(1));
    for (const auto& g : z.gens()) gens.push_back(g);
    auto keep = minimalGeneratorIndices(r, gens, X.degrees(1));
    for (std::size_t t = 0; t < k; ++t)
      if (std::find(keep.begin(), keep.end(), static_cast<int>(t)) == keep.end())
        rep.fail("certified Burch cycles are dependent modulo n Z_1");
  }
  return rep;
}

const char* splitModeName(SplitMode m) {
  switch (m) {
    case SplitMode::Splits: return "splits";
    case SplitMode::ZeroBoundary: return "zero boundary";
    case SplitMode::Fails: return "fails";
    case SplitMode::NotBasis: return "not part of a basis";
  }
  return "?";
}

SplitContext SplitContext::of(const Ideal& I) {
  const RingPtr& r = I.ring();
  SplitContext c{I, product(Ideal::maximal(r), I), burchIdeal(I), {}};
  c.socle = minimalGenerators(socleLift(I));
  std::stable_sort(c.socle.begin(), c.socle.end(), [](const Polynomial& p, const Polynomial& q) {
    if (p.degree() != q.degree()) return p.degree() < q.degree();
    return grevlex(p.leading().m, q.leading().m) > 0;
  });
  return c;
}

SplitVerdict splittingCheck(const FreeElement& rho, const FreeElement& dRho, const SplitContext& ctx) {
  SplitVerdict v;
  if (!hasUnitEntry(rho)) {
    v.mode = SplitMode::NotBasis;
    v.reason = "rho lies in the maximal ideal times the module";
    return v;
  }
  if (dRho.isZero()) {
    v.mode = SplitMode::ZeroBoundary;
    v.reason = "the boundary vanishes over Q";
    return v;
  }
  if (hasUnitEntry(dRho)) {
    v.mode = SplitMode::Fails;
    v.reason = "the boundary has a unit coefficient";
    return v;
  }
  bool outsideBI = false;
  for (const auto& [idx, c] : dRho.entries()) outsideBI = outsideBI || !ctx.BI.contains(c);
  for (const auto& s : ctx.socle) {
    bool good = false;
    for (const auto& [idx, c] : dRho.entries()) {
      Polynomial sc = s * c;
      if (!ctx.I.contains(sc)) throw InternalError("s d(rho) is not in I G although d(rho) is in n G");
      good = good || !ctx.nI.contains(sc);
    }
    if (good) {
      v.witness = s;
      break;
    }
    v.rejected.push_back(s);
  }
  if (v.witness.has_value() != outsideBI)
    throw InternalError("socle witness search disagrees with membership in BI G");
  v.mode = outsideBI ? SplitMode::Splits : SplitMode::Fails;
  v.reason = outsideBI ? "s d(rho) lies in I G but not in n I G"
                       : "d(rho) lies in BI G, so s d(rho) is in n I G for every s in I : n";
  return v;
}

SplitVerdict splittingCheck(const BarComplex& B, int q, const FreeElement& rho, const SplitContext& ctx) {
  return splittingCheck(rho, B.complex().applyDiff(q, rho), ctx);
}

std::vector<RhoCycle> rhoCyclesGeneral(const std::vector<BurchCycle>& cycles, const DgAlgebra& X,
                                       const ChainMap& psi, const BarComplex& B, int q, int e) {
  if (q < 4) throw InputError("rho cycles need q >= 4");
  if (B.regime() != BarRegime::Dg) throw InputError("rhoCyclesGeneral needs the dg bar complex");
  if (q > B.top()) throw InputError("bar complex does not reach degree " + std::to_string(q));
  const RingPtr& r = X.complex().ring();
  if (e < 0 || e >= X.complex().rank(1)) throw InputError("e is not a basis index of X_1");
  const QuotientRing& R = B.ring();
  FreeElement eVec = FreeElement::basis(r, e);
  FreeElement psiE = psi.apply(1, eVec);
  FreeElement psi1 = psi.apply(0, FreeElement::basis(r, 0));
  const bool even = q % 2 == 0;
  const int reps = even ? (q - 4) / 2 : (q - 5) / 2;
  std::vector<RhoCycle> out;
  for (const auto& c : cycles) {
    if (!c.certified) continue;
    RhoCycle rc;
    rc.i = c.i;
    rc.j = c.j;
    rc.q = q;
    rc.source = c;
    FreeElement ef = X.multiply(1, eVec, 2, c.f);
    std::vector<std::pair<int, FreeElement>> tail(reps, {1, eVec});
    auto withHead = [&](int d, const FreeElement& h) {
      std::vector<std::pair<int, FreeElement>> xs{{d, h}};
      xs.insert(xs.end(), tail.begin(), tail.end());
      return xs;
    };
    if (even)
      rc.rho = B.word(withHead(2, c.f), 1, psiE) - B.word(withHead(3, ef), 0, psi1);
    else
      rc.rho = B.word(withHead(3, ef), 1, psiE);
    rc.alpha = R.reduce(rc.rho.times(c.s));
    rc.alphaZero = rc.alpha.isZero();
    rc.isCycle = B.complex().applyDiff(q, rc.alpha).isZero();
    out.push_back(std::move(rc));
  }
  return out;
}

std::vector<RhoCycle> rhoCyclesGolod(const std::vector<BurchCycle>& cycles, const BarComplex& B, int q) {
  if (q < 3) throw InputError("Golod cycles need q >= 3");
  if (q > B.top()) throw InputError("bar complex does not reach degree " + std::to_string(q));
  const GradedFreeComplex& X = B.module().algebra().complex();
  const GradedFreeComplex& Y = B.module().complex();
  if (!X.isMinimal() || !Y.isMinimal()) throw InputError("rhoCyclesGolod needs minimal X and Y");
  const RingPtr& r = X.ring();
  const QuotientRing& R = B.ring();
  const int d = (q - 3) / 2, rr = (q - 3) % 2;
  const int m = X.rank(1);
  std::vector<RhoCycle> out;
  if (rr > Y.top() || Y.rank(rr) == 0) return out;
  FreeElement y = FreeElement::basis(r, 0);
  for (const auto& c : cycles) {
    if (!c.certified) continue;
    std::vector<int> tuple(d, 0);
    while (true) {
      RhoCycle rc;
      rc.i = c.i;
      rc.j = c.j;
      rc.q = q;
      rc.source = c;
      rc.tail = tuple;
      std::vector<std::pair<int, FreeElement>> xs{{2, c.f}};
      for (int t : tuple) xs.emplace_back(1, FreeElement::basis(r, t));
      rc.rho = B.word(xs, rr, y);
      rc.alpha = R.reduce(rc.rho.times(c.s));
      rc.alphaZero = rc.alpha.isZero();
      rc.isCycle = B.complex().applyDiff(q, rc.alpha).isZero();
      out.push_back(std::move(rc));
      int k = d - 1;
      while (k >= 0 && tuple[k] == m - 1) tuple[k--] = 0;
      if (k < 0) break;
      ++tuple[k];
    }
  }
  return out;
}

SurvivalReport projectToMinimal(const BarComplex& B, const Contraction& ctr, int q,
                                const std::vector<FreeElement>& cycles) {
  if (q + 1 > B.top() || q + 1 > ctr.small.top())
    throw InputError("projection needs the bar complex and its minimal model through degree q + 1");
  SurvivalReport rep;
  rep.q = q;
  rep.candidates = static_cast<int>(cycles.size());
  const GradedFreeComplex& F = ctr.small;
  const QuotientRing& R = B.ring();
  const RingPtr& r = F.ring();
  for (const auto& a : cycles) {
    FreeElement img = F.reduce(ctr.project(q, a));
    bool socle = true;
    for (int v = 0; v < r->nvars() && socle; ++v)
      socle = R.reduce(a.times(Polynomial::variable(r, v))).isZero();
    if (!F.applyDiff(q, img).isZero()) throw InternalError("projected cycle is not a cycle");
    rep.inSocle.push_back(socle);
    rep.images.push_back(std::move(img));
  }
  {
    StrandIndex S(B.complex().quotient(), F.degrees(q));
    std::vector<FreeElement> cols;
    for (int k = 0; k < F.rank(q + 1); ++k) cols.push_back(F.column(q + 1, k));
    rep.survivors = rankModuloMaximal(S, cols, F.degrees(q + 1), rep.images, &rep.survives);
  }
  {
    const GradedFreeComplex& C = B.complex();
    StrandIndex S(C.quotient(), C.degrees(q));
    std::vector<FreeElement> cols;
    for (int k = 0; k < C.rank(q + 1); ++k) cols.push_back(C.column(q + 1, k));
    std::vector<bool> each;
    rep.survivorsInBar = rankModuloMaximal(S, cols, C.degrees(q + 1), cycles, &each);
    // for socle elements the two tests agree
    for (std::size_t k = 0; k < cycles.size(); ++k)
      if (rep.inSocle[k] && each[k] != rep.survives[k])
        throw InternalError("survival in B and in its minimal model disagree");
  }
  return rep;
}

GolodReport golodCheck(const BarComplex& B, const std::vector<int>& bettiOracle) {
  const GradedFreeComplex& X = B.module().algebra().complex();
  const GradedFreeComplex& Y = B.module().complex();
  if (!X.isMinimal() || !Y.isMinimal()) throw InputError("golodCheck needs minimal X and Y");
  GolodReport rep;
  const GradedFreeComplex& C = B.complex();
  for (int n = 0; n <= C.top(); ++n) rep.ranks.push_back(C.rank(n));
  rep.series = barRanksBySeries(X.ranks(), Y.ranks(), C.top());
  rep.minimal = true;
  for (int n = 1; n <= C.top() && rep.minimal; ++n)
    for (int k = 0; k < C.rank(n) && rep.minimal; ++k)
      for (const auto& [row, p] : C.diff(n).column(k).entries())
        if (p.constantTerm() != 0) {
          rep.minimal = false;
          rep.unitEntry = "d_" + std::to_string(n) + " row " + std::to_string(row) + " column " +
                          std::to_string(k) + " (" + B.describe(B.words(n)[k]) + ")";
          break;
        }
  rep.seriesMatch = rep.ranks == rep.series;
  for (std::size_t n = 0; n < bettiOracle.size() && n < rep.series.size(); ++n) {
    rep.betti.push_back(bettiOracle[n]);
    if (bettiOracle[n] != rep.series[n]) rep.seriesMatch = false;
  }
  rep.golod = rep.minimal && rep.seriesMatch;
  return rep;
}

const char* verdictName(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "FAIL";
    case Verdict::Vacuous: return "vacuous";
  }
  return "?";
}

bool KRankReport::holds() const {
  for (const auto& r : rows)
    if (r.general == Verdict::Fail || r.golod == Verdict::Fail) return false;
  return true;
}

KRankReport boundVerdicts(const ModulePresentation& M, int upTo, bool golod) {
  KRankReport rep;
  const Ideal& I = M.R->ideal();
  rep.burchIndex = I.isZero() ? 0 : burchIndex(I);
  rep.m = I.isZero() ? 0 : static_cast<int>(minimalGenerators(I).size());
  rep.golodFlag = golod;
  std::vector<SyzygyRow> rows;
  try {
    rows = syzygyKRanks(M, upTo);
  } catch (const ResourceError& e) {
    rep.partial = true;
    rep.partialReason = e.what();
    return rep;
  }
  const int b = rep.burchIndex;
  for (const auto& s : rows) {
    if (s.i < 1) continue;
    VerdictRow row;
    row.i = s.i;
    row.betti = s.betti;
    row.kRank = s.kRank;
    if (b >= 2 && s.i >= 5) {
      row.generalBound = 1;
      row.general = s.kRank >= 1 ? Verdict::Pass : Verdict::Fail;
    }
    if (golod && b >= 2 && s.i >= 4) {
      row.golodBound = binom2(b) * power(rep.m, (s.i - 4) / 2);
      row.golod = s.kRank >= row.golodBound ? Verdict::Pass : Verdict::Fail;
    }
    rep.rows.push_back(row);
  }
  return rep;
}

GrowthReport growthCheck(const KRankReport& rep, int edim, int depth) {
  GrowthReport g;
  g.bound = std::min(9, edim - depth + 4);
  g.applies = rep.golodFlag && rep.burchIndex >= 2;
  const auto& rows = rep.rows;
  for (std::size_t t = 0; t + 3 < rows.size() && g.start < 0; ++t) {
    if (rows[t].kRank < 2) continue;
    bool up = true;
    for (std::size_t u = t; u < t + 3; ++u) up = up && rows[u + 1].kRank > rows[u].kRank;
    if (up) g.start = rows[t].i;
  }
  g.ok = !g.applies || (g.start >= 1 && g.start <= g.bound);
  return g;
}

void guardBarRanks(const GradedFreeComplex& X, const GradedFreeComplex& Y, int upTo, long cap) {
  auto ranks = barRanksByCompositions(X.ranks(), Y.ranks(), upTo);
  for (int n = 0; n <= upTo; ++n)
    if (ranks[n] > cap)
      throw ResourceError("bar complex rank " + std::to_string(ranks[n]) + " in degree " + std::to_string(n) +
                          " exceeds the cap " + std::to_string(cap));
}

BarInputs barInputs(const ModulePresentation& M, int upTo, bool semifree) {
  BarInputs in;
  in.X = TaylorAlgebra::ofIdeal(M.R->ideal());
  in.Y = semifree ? semifreeResolution(M, in.X, upTo) : dgModuleResolution(M, in.X, upTo);
  return in;
}

bool GeneralRun::ok() const {
  if (!burchCheck.ok || degrees.empty()) return false;
  for (const auto& d : degrees)
    if (!d.allCycles || !d.allSplit || !d.allSurvive) return false;
  return true;
}

GeneralRun verifyGeneral(const ModulePresentation& M, int qMin, int qMax, int e, bool semifree, long maxBarRank) {
  if (qMin < 4 || qMax < qMin) throw InputError("certification degrees must satisfy 4 <= qMin <= qMax");
  const Ideal& I = M.R->ideal();
  GeneralRun run;
  run.bd = burchData(I);
  BarInputs in = barInputs(M, qMax + 1, semifree);
  run.taylorShortcut = in.Y.taylorShortcut;
  run.burch = burchCycles(I, run.bd, in.X->complex());
  run.burchCheck = verifyBurchCycles(I, in.X->complex(), run.burch);
  guardBarRanks(in.X->complex(), in.Y.Y->complex(), qMax + 1, maxBarRank);
  BarComplex B(AInfModule::fromDg(AInfAlgebra::fromDg(in.X), in.Y.Y), M.R, qMax + 1);
  for (int n = 0; n <= B.top(); ++n) run.barRanks.push_back(B.complex().rank(n));
  MinimalizeOptions opt;
  opt.trackHomotopy = false;
  opt.upTo = qMax + 1;
  Contraction ctr = minimalize(B.complex(), opt);
  SplitContext ctx = SplitContext::of(I);
  for (int q = qMin; q <= qMax; ++q) {
    GeneralDegree g;
    g.q = q;
    g.cycles = rhoCyclesGeneral(run.burch, *in.X, in.Y.psi, B, q, e);
    std::vector<FreeElement> alphas;
    for (const auto& rc : g.cycles) {
      g.allCycles = g.allCycles && rc.isCycle;
      g.splits.push_back(splittingCheck(B, q, rc.rho, ctx));
      g.allSplit = g.allSplit && g.splits.back().ok();
      alphas.push_back(rc.alpha);
    }
    g.survival = projectToMinimal(B, ctr, q, alphas);
    for (bool s : g.survival.survives) g.allSurvive = g.allSurvive && s;
    g.allSurvive = g.allSurvive && g.survival.survivors >= 1;
    run.degrees.push_back(std::move(g));
  }
  return run;
}

bool GolodRun::ok() const {
  if (!golod.golod || degrees.empty()) return false;
  for (const auto& d : degrees)
    if (d.emitted != d.expected || d.certified != d.expected) return false;
  return true;
}

GolodRun verifyGolod(const ModulePresentation& M, int qMax, int arityCap, long maxBarRank) {
  if (qMax < 3) throw InputError("Golod cycles start in degree 3");
  const Ideal& I = M.R->ideal();
  GolodRun run;
  run.bd = burchData(I);
  BarInputs in = barInputs(M, qMax + 1);
  auto A = AInfAlgebra::transfer(in.X, arityCap);
  auto Y = AInfModule::transfer(A, in.Y.Y);
  guardBarRanks(A->complex(), Y->complex(), qMax + 1, maxBarRank);
  BarComplex B(Y, M.R, qMax + 1);
  run.m = A->complex().rank(1);
  run.golod = golodCheck(B, resolveOverR(M, qMax + 1).ranks());
  auto cycles = burchCycles(I, run.bd, A->complex());
  Contraction id = identityContraction(B.complex());
  SplitContext ctx = SplitContext::of(I);
  for (int q = 3; q <= qMax; ++q) {
    GolodDegree g;
    g.q = q;
    g.expected = binom2(run.bd.b) * power(run.m, (q - 3) / 2);
    auto rc = rhoCyclesGolod(cycles, B, q);
    g.emitted = static_cast<int>(rc.size());
    std::vector<FreeElement> good;
    for (const auto& c : rc) {
      if (!c.isCycle) continue;
      ++g.cycles;
      if (!splittingCheck(B, q, c.rho, ctx).ok()) continue;
      ++g.split;
      good.push_back(c.alpha);
    }
    g.certified = projectToMinimal(B, id, q, good).survivors;
    run.degrees.push_back(g);
  }
  return run;
}

}  // namespace burch
