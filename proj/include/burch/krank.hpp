#pragma once

#include <vector>

#include "burch/complex.hpp"

namespace burch {

/// M = R^g / (relations) over R = Q/I. Relation columns live in Q^g and are
/// read modulo I.
struct ModulePresentation {
  QuotientPtr R;
  std::vector<int> genDegrees;
  PolyMatrix relations;

  int generators() const { return static_cast<int>(genDegrees.size()); }
  /// R/J for an ideal J given by generators.
  static ModulePresentation cyclic(QuotientPtr R, const std::vector<Polynomial>& J);
  static ModulePresentation residueField(QuotientPtr R);
  static ModulePresentation freeModule(QuotientPtr R, std::vector<int> degrees);
  static ModulePresentation directSum(const ModulePresentation& a, const ModulePresentation& b);
  /// Throws InputError unless every relation column is homogeneous.
  void validate() const;
};

/// dim_k of the image of soc(M) in M / mM, by a module colon over Q:
/// dim of the image of (N' : n) in F/nF minus that of N', N' = N + I F.
int kRank(const ModulePresentation& M);
/// Same quantity through degree-wise linear algebra over R.
int kRankStrand(const ModulePresentation& M);
/// Same quantity from the full k-space of M with raw action matrices,
/// without Groebner bases. Throws ResourceError when dim_k M > cap.
int kRankBruteForce(const ModulePresentation& M, int cap = 60);
/// dim_k M (Artinian R).
long moduleDim(const ModulePresentation& M);

struct SyzygyRow {
  int i = 0;
  int betti = 0;  // rank of F_i
  int kRank = 0;  // k-rank of syz_i = image of F_i -> F_{i-1} (syz_0 = M)
};

/// Minimal R-resolution of M through F_upTo and the k-rank of each syzygy.
std::vector<SyzygyRow> syzygyKRanks(const ModulePresentation& M, int upTo);
/// k-rank of syz_i computed from the presentation F_{i+1} -> F_i instead.
int syzygyKRankByPresentation(const GradedFreeComplex& F, int i);

}  // namespace burch
