#pragma once

#include <vector>

#include "burch/complex.hpp"
#include "burch/linalg.hpp"

namespace burch {

/// k-basis of a graded free module over an Artinian quotient R, one internal
/// degree at a time: pairs (basis element j, standard monomial u), ordered by
/// j and then by the order of R's monomial basis.
class StrandIndex {
 public:
  StrandIndex(QuotientPtr R, std::vector<int> basisDegrees);

  const QuotientRing& ring() const { return *R_; }
  int rank() const { return static_cast<int>(degrees_.size()); }
  const std::vector<int>& basisDegrees() const { return degrees_; }
  int minDegree() const { return minDeg_; }
  int maxDegree() const { return maxDeg_; }
  int dim(int D) const;
  int totalDim() const;
  /// Position of (j, u) in the degree D = deg(u) + deg(e_j) strand, or -1.
  int index(int j, Monomial u) const;
  std::pair<int, Monomial> element(int D, int k) const;
  /// Start of the block of basis element j in degree D, or -1 if empty.
  int offsetOf(int D, int j) const;

  /// Coordinates of the degree-D component of v.
  SparseVec toVector(const FreeElement& v, int D) const;
  /// Coordinates of the degree-D component of u * v.
  SparseVec toVector(Monomial u, const FreeElement& v, int D) const;
  FreeElement toElement(const SparseVec& v, int D) const;

 private:
  QuotientPtr R_;
  std::vector<int> degrees_;
  int minDeg_ = 0, maxDeg_ = -1;
  std::vector<std::vector<int>> offset_;  // offset_[D - minDeg_][j]
  std::vector<std::vector<std::pair<int, int>>> blocks_;  // (offset, j) per degree
  std::vector<int> dims_;
};

/// Columns of the k-linear map C_n -> C_{n-1} in internal degree D, one per
/// strand basis element (j, u) of the source: the coordinates of u * d(e_j).
std::vector<SparseVec> strandMap(const PolyMatrix& d, const StrandIndex& src, const StrandIndex& tgt, int D);

/// dim_k H_n for 0 <= n < top of a complex over an Artinian quotient.
std::vector<long> homologyDims(const GradedFreeComplex& C);

/// dim_k of the cokernel of the presentation R^r -> R^g.
long quotientDim(const StrandIndex& F, const PolyMatrix& relations, const StrandIndex& rel);

/// Minimal free resolution over the Artinian quotient R of the cokernel of
/// the given presentation, through homological degree upTo.
GradedFreeComplex resolveArtinian(QuotientPtr R, const std::vector<int>& genDegrees,
                                  const PolyMatrix& relations, int upTo);

/// Minimal generators of the submodule of F spanned by gens, chosen from gens.
std::vector<int> minimalGeneratorsStrand(const StrandIndex& F, const std::vector<FreeElement>& gens,
                                         const std::vector<int>& genDegrees);

/// k-rank of the submodule of F generated by homogeneous gens.
int kRankSubmoduleStrand(const StrandIndex& F, const std::vector<FreeElement>& gens,
                         const std::vector<int>& genDegrees);

}  // namespace burch
