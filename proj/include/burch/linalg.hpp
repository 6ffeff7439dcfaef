#pragma once

#include <unordered_map>
#include <utility>
#include <vector>

#include "burch/field.hpp"

namespace burch {

/// Sparse vector over F_p: (index, nonzero value) sorted by index.
using SparseVec = std::vector<std::pair<int, Coeff>>;

/// y += a * x
void axpy(SparseVec& y, Coeff a, const SparseVec& x, const PrimeField& F);
SparseVec scaledVec(const SparseVec& x, Coeff a, const PrimeField& F);
/// Sorts and merges an unsorted list of (index, value) pairs.
SparseVec canonicalVec(std::vector<std::pair<int, Coeff>> raw, const PrimeField& F);

/// Incremental row echelon form. Each stored row has a leading 1 at its
/// smallest index and no other row has that pivot. Optionally tracks, for
/// each row, its expression in terms of the inserted vectors.
class Echelon {
 public:
  explicit Echelon(const PrimeField& F, bool trackHistory = false) : F_(F), track_(trackHistory) {}

  /// Reduces v (and its history, if given) against the stored rows.
  void reduce(SparseVec& v, SparseVec* hist = nullptr) const;
  /// Inserts v; returns true if it was independent of the stored rows.
  /// With history tracking, id is the label of v in history vectors; when v
  /// is dependent and dependency is non-null, it receives the relation
  /// (a vector over labels with v's own label having coefficient 1).
  bool insert(SparseVec v, int id = -1, SparseVec* dependency = nullptr);
  bool inSpan(SparseVec v) const;
  int rank() const { return static_cast<int>(rows_.size()); }
  const std::vector<SparseVec>& rows() const { return rows_; }
  const std::vector<SparseVec>& histories() const { return hist_; }
  int pivotOfRow(int r) const { return rows_[r].front().first; }
  bool isPivot(int col) const { return pivot_.count(col) != 0; }

 private:
  PrimeField F_;
  bool track_;
  std::vector<SparseVec> rows_;
  std::vector<SparseVec> hist_;
  std::unordered_map<int, int> pivot_;
};

/// Kernel of the linear map whose images of source basis vectors 0..n-1 are
/// the given columns; returns a basis of the kernel as vectors over the source.
std::vector<SparseVec> kernelBasis(const std::vector<SparseVec>& columns, const PrimeField& F);
int rankOf(const std::vector<SparseVec>& vectors, const PrimeField& F);

}  // namespace burch
