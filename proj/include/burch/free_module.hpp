#pragma once

#include <utility>
#include <vector>

#include "burch/polynomial.hpp"

namespace burch {

/// Element of a free module, stored as sorted (basis index, nonzero coefficient).
class FreeElement {
 public:
  using Entry = std::pair<int, Polynomial>;

  FreeElement() = default;
  static FreeElement basis(const RingPtr& r, int j);
  static FreeElement fromEntries(std::vector<Entry> entries);

  const std::vector<Entry>& entries() const { return entries_; }
  bool isZero() const { return entries_.empty(); }
  Polynomial at(int j) const;
  /// Adds p to coordinate j.
  void add(int j, const Polynomial& p);
  /// Largest basis index plus one, 0 for the zero element.
  int support() const { return entries_.empty() ? 0 : entries_.back().first + 1; }

  FreeElement operator+(const FreeElement& o) const;
  FreeElement operator-(const FreeElement& o) const;
  FreeElement operator-() const;
  FreeElement& operator+=(const FreeElement& o) { return *this = *this + o; }
  FreeElement& operator-=(const FreeElement& o) { return *this = *this - o; }
  FreeElement times(const Polynomial& p) const;
  FreeElement scaled(Coeff c) const;
  FreeElement mulTerm(Monomial m, Coeff c) const;

  /// Degree of a homogeneous element given basis degrees; -1 if zero,
  /// throws InputError if inhomogeneous.
  int degree(const std::vector<int>& basisDegrees) const;
  bool isHomogeneous(const std::vector<int>& basisDegrees) const;

  std::string toString(const char* basisName = "e") const;

  friend bool operator==(const FreeElement& a, const FreeElement& b) { return a.entries_ == b.entries_; }

 private:
  std::vector<Entry> entries_;
};

/// Matrix over Q whose columns are images of the source basis.
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(RingPtr r, std::vector<int> rowDegrees, std::vector<int> colDegrees);
  static PolyMatrix identity(RingPtr r, const std::vector<int>& degrees);

  const RingPtr& ring() const { return ring_; }
  int rows() const { return static_cast<int>(rowDegrees_.size()); }
  int cols() const { return static_cast<int>(colDegrees_.size()); }
  const std::vector<int>& rowDegrees() const { return rowDegrees_; }
  const std::vector<int>& colDegrees() const { return colDegrees_; }
  const FreeElement& column(int j) const { return columns_[j]; }
  const std::vector<FreeElement>& columns() const { return columns_; }
  void setColumn(int j, FreeElement v);
  Polynomial entry(int i, int j) const { return columns_[j].at(i); }
  void setEntry(int i, int j, const Polynomial& p);

  FreeElement apply(const FreeElement& v) const;
  /// this * rhs (apply rhs first).
  PolyMatrix compose(const PolyMatrix& rhs) const;
  bool isZero() const;
  /// Degree-0 homogeneity: deg(entry[i][j]) = colDeg[j] - rowDeg[i].
  bool isHomogeneous() const;
  /// All entries have zero constant term.
  bool entriesInMaximalIdeal() const;

 private:
  RingPtr ring_;
  std::vector<int> rowDegrees_, colDegrees_;
  std::vector<FreeElement> columns_;
};

}  // namespace burch
