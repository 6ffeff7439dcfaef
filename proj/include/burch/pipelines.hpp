#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "burch/bar.hpp"
#include "burch/burch.hpp"
#include "burch/krank.hpp"
#include "burch/resolution.hpp"

namespace burch {

/// omega = x_j e_i - x_i sum_l r_l e_l in X_1 with d f = omega. Indices are
/// zero-based: i into BurchData, j into linearForms().
struct BurchCycle {
  int i = 0, j = 0;
  Polynomial xi, xj, s;
  FreeElement omega;
  FreeElement f;
  /// x_j is one of x_1..x_b, so the independence statement applies.
  bool certified = false;
};

/// x_1..x_b followed by the variables not among them.
std::vector<Polynomial> linearForms(const RingPtr& r, const BurchData& bd);

/// One cycle per pair i < j with i < b. X must resolve Q/I over Q with X_0
/// of rank one. Throws InternalError if omega fails to lift through d_2.
std::vector<BurchCycle> burchCycles(const Ideal& I, const BurchData& bd, const GradedFreeComplex& X);

/// d f = omega and d omega = 0; certified omegas lie outside BI X_1 and are
/// independent modulo n Z_1(X).
StructureReport verifyBurchCycles(const Ideal& I, const GradedFreeComplex& X,
                                  const std::vector<BurchCycle>& cycles);

enum class SplitMode { Splits, ZeroBoundary, Fails, NotBasis };
const char* splitModeName(SplitMode m);

struct SplitVerdict {
  SplitMode mode = SplitMode::Fails;
  /// Generator s of (I : n) with s d(rho) outside n I G, when one exists.
  std::optional<Polynomial> witness;
  /// Generators of (I : n) that were tried and failed.
  std::vector<Polynomial> rejected;
  std::string reason;
  bool ok() const { return mode == SplitMode::Splits || mode == SplitMode::ZeroBoundary; }
};

/// Ideals the splitting test needs, computed once per ring.
struct SplitContext {
  Ideal I, nI, BI;
  std::vector<Polynomial> socle;  // generators of (I : n)
  static SplitContext of(const Ideal& I);
};

/// rho and its boundary, both given over Q. Tests d rho in n G and d rho
/// outside BI G, searches the socle generators for a witness and throws
/// InternalError if the two answers disagree.
SplitVerdict splittingCheck(const FreeElement& rho, const FreeElement& dRho, const SplitContext& ctx);
/// rho in B_q; entries of the bar differential are normal forms, which serve
/// as the lift to Q.
SplitVerdict splittingCheck(const BarComplex& B, int q, const FreeElement& rho, const SplitContext& ctx);

struct RhoCycle {
  int i = 0, j = 0;
  int q = 0;
  BurchCycle source;
  std::vector<int> tail;  // e_{i_1} .. e_{i_d} in the Golod family
  FreeElement rho, alpha;
  bool isCycle = false;
  bool alphaZero = false;
};

/// Dg regime. X is the dg algebra the cycles were computed on, psi: X -> Y
/// the split injection, e a basis index of X_1.
std::vector<RhoCycle> rhoCyclesGeneral(const std::vector<BurchCycle>& cycles, const DgAlgebra& X,
                                       const ChainMap& psi, const BarComplex& B, int q, int e = 0);
/// Minimal A-infinity regime; cycles computed on the minimal X. Throws
/// InputError unless X and Y are minimal.
std::vector<RhoCycle> rhoCyclesGolod(const std::vector<BurchCycle>& cycles, const BarComplex& B, int q);

struct SurvivalReport {
  int q = 0;
  std::vector<FreeElement> images;  // p(alpha) in F_q
  std::vector<bool> inSocle;  // alpha is killed by m
  std::vector<bool> survives;  // p(alpha) outside m Z_q(F)
  int candidates = 0;
  /// Rank of the span of the images modulo m Z_q(F).
  int survivors = 0;
  /// Same rank for the alphas modulo m Z_q(B).
  int survivorsInBar = 0;
};

/// ctr must come from minimalize(B) with upTo >= q + 1, and B must reach
/// degree q + 1.
SurvivalReport projectToMinimal(const BarComplex& B, const Contraction& ctr, int q,
                                const std::vector<FreeElement>& cycles);

struct GolodReport {
  bool minimal = false;
  bool seriesMatch = false;
  bool golod = false;
  std::vector<long> ranks, series;
  std::vector<long> betti;  // oracle, when supplied
  std::string unitEntry;
};

/// B from minimal X and Y. Series P_Y / (1 - t (P_X - 1)) against the bar
/// ranks and, when given, the Betti numbers of M over R.
GolodReport golodCheck(const BarComplex& B, const std::vector<int>& bettiOracle = {});

enum class Verdict { Pass, Fail, Vacuous };
const char* verdictName(Verdict v);

struct VerdictRow {
  int i = 0;
  int betti = 0;
  int kRank = 0;
  long generalBound = 0;
  long golodBound = 0;
  Verdict general = Verdict::Vacuous;
  Verdict golod = Verdict::Vacuous;
};

struct KRankReport {
  int burchIndex = 0;
  int m = 0;  // minimal number of generators of I
  bool golodFlag = false;
  std::vector<VerdictRow> rows;
  bool partial = false;
  std::string partialReason;
  bool holds() const;
};

/// k-ranks of syz_1 .. syz_upTo from the minimal R-resolution, against
/// kRank >= 1 for i >= 5 (Burch index >= 2) and, when golod is set,
/// kRank >= C(b,2) m^floor((i-4)/2) for i >= 4.
KRankReport boundVerdicts(const ModulePresentation& M, int upTo, bool golod);

struct GrowthReport {
  int start = -1;  // first i with kRank > 1 and strictly increasing for four degrees
  int bound = 0;
  bool applies = false;
  bool ok = false;
};
/// depth M is 0 for Artinian R; edim is the number of variables.
GrowthReport growthCheck(const KRankReport& rep, int edim, int depth);

/// General pipeline through q = qMax: Taylor X, dg module resolution Y,
/// dg bar complex, rho cycles, splitting and projection.
struct GeneralDegree {
  int q = 0;
  std::vector<RhoCycle> cycles;
  std::vector<SplitVerdict> splits;
  SurvivalReport survival;
  bool allCycles = true, allSplit = true, allSurvive = true;
};
struct GeneralRun {
  BurchData bd;
  std::vector<BurchCycle> burch;
  StructureReport burchCheck;
  std::vector<long> barRanks;
  bool taylorShortcut = false;
  std::vector<GeneralDegree> degrees;
  bool ok() const;
};
/// semifree forces the cycle-killing construction for Y.
GeneralRun verifyGeneral(const ModulePresentation& M, int qMin, int qMax, int e = 0, bool semifree = false,
                         long maxBarRank = 20000);

/// Golod pipeline: transferred minimal X and Y, A-infinity bar complex,
/// Golod test and the cycle family in degrees 3..qMax.
struct GolodDegree {
  int q = 0;
  long expected = 0;
  int emitted = 0;
  int cycles = 0;
  int split = 0;
  int certified = 0;  // rank modulo m Z_q(B) among cycles that split
};
struct GolodRun {
  BurchData bd;
  int m = 0;
  GolodReport golod;
  std::vector<GolodDegree> degrees;
  bool ok() const;
};
GolodRun verifyGolod(const ModulePresentation& M, int qMax, int arityCap = 4, long maxBarRank = 20000);

/// Taylor resolution X of R and a dg X-module resolution of M.
struct BarInputs {
  std::shared_ptr<const TaylorAlgebra> X;
  DgModuleResolution Y;
};
BarInputs barInputs(const ModulePresentation& M, int upTo, bool semifree = false);
/// ResourceError when the composition count exceeds cap in some degree.
void guardBarRanks(const GradedFreeComplex& X, const GradedFreeComplex& Y, int upTo, long cap);

}  // namespace burch
