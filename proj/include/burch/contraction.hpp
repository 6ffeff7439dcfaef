#pragma once

#include <vector>

#include "burch/complex.hpp"

namespace burch {

/// One Gaussian elimination of a scalar entry phi = d_n[a][b] (indices into
/// the original bases of C_{n-1} and C_n).
struct EliminationStep {
  int n = 0;
  int a = 0, b = 0;
  Coeff phiInv = 0;
  /// Column b of the current d_n without row a.
  std::vector<std::pair<int, Polynomial>> gamma;
};

/// Deformation retract of big onto small with p i = id and
/// id - i p = d h + h d.
struct Contraction {
  GradedFreeComplex big, small;
  ChainMap incl;
  /// htpy[n]: big_n -> big_{n+1}; empty when not tracked.
  std::vector<PolyMatrix> htpy;
  /// survivors[n][k]: index in big_n of the k-th basis element of small_n.
  std::vector<std::vector<int>> survivors;
  std::vector<EliminationStep> steps;

  bool hasHomotopy() const { return !htpy.empty(); }
  /// p applied to an element of big_n, by replaying the eliminations.
  FreeElement project(int n, const FreeElement& v) const;
  /// p as a matrix (one column per big basis element).
  ChainMap projection() const;
  FreeElement homotopy(int n, const FreeElement& v) const;
};

struct MinimalizeOptions {
  bool trackHomotopy = true;
  /// Only eliminate in d_1 .. d_upTo (all when negative).
  int upTo = -1;
};

/// Eliminates scalar entries of the differential, lowest homological degree
/// first and by ascending (row, column) within a degree. The result has no
/// unit entries when the input is homogeneous.
Contraction minimalize(const GradedFreeComplex& C, const MinimalizeOptions& opt = {});

/// small = big, i = p = id, h = 0.
Contraction identityContraction(const GradedFreeComplex& C);

/// p i = id, id - i p = d h + h d, h i = 0, p h = 0, h h = 0, i and p chain
/// maps, and minimality of the small complex.
StructureReport verifyContraction(const Contraction& c);

}  // namespace burch
