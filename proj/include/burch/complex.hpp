#pragma once

#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "burch/ideal.hpp"
#include "burch/linalg.hpp"

namespace burch {

/// R = Q/I with normal forms and, when R is Artinian, its monomial k-basis.
class QuotientRing {
 public:
  explicit QuotientRing(Ideal I);

  const RingPtr& ring() const { return I_.ring(); }
  const Ideal& ideal() const { return I_; }
  const PrimeField& field() const { return I_.ring()->field; }
  Polynomial reduce(const Polynomial& p) const { return I_.normalForm(p); }
  FreeElement reduce(const FreeElement& v) const;
  bool isArtinian() const { return artinian_; }
  /// Largest degree with a nonzero standard monomial (Artinian only).
  int topDegree() const;
  /// Standard monomials of degree d, descending grevlex.
  const std::vector<Monomial>& basis(int d) const;
  int dimension() const;
  /// Position of a standard monomial within basis(deg m), or -1.
  int indexOf(Monomial m) const;
  /// Normal form of a monomial as coordinates in basis(deg m) (Artinian only;
  /// empty above the top degree).
  const SparseVec& normalFormOf(Monomial m) const;

 private:
  Ideal I_;
  bool artinian_ = false;
  std::vector<std::vector<Monomial>> basis_;
  std::vector<std::vector<std::pair<std::uint64_t, int>>> lookup_;
  std::unordered_map<std::uint64_t, SparseVec> nf_;
  static const std::vector<Monomial> kEmpty;
  static const SparseVec kZero;
};

using QuotientPtr = std::shared_ptr<const QuotientRing>;

/// Bounded complex of graded free modules C_0 <- C_1 <- ... <- C_N. Over a
/// quotient ring the differential entries are kept in normal form.
class GradedFreeComplex {
 public:
  GradedFreeComplex() = default;
  explicit GradedFreeComplex(RingPtr r, QuotientPtr over = nullptr) : ring_(std::move(r)), over_(std::move(over)) {}

  const RingPtr& ring() const { return ring_; }
  const QuotientPtr& quotient() const { return over_; }
  bool overQuotient() const { return over_ != nullptr; }
  /// Largest index with a module (possibly of rank 0).
  int top() const { return static_cast<int>(degrees_.size()) - 1; }
  int rank(int n) const;
  const std::vector<int>& degrees(int n) const;
  /// Differential C_n -> C_{n-1} for 1 <= n <= top().
  const PolyMatrix& diff(int n) const;
  std::vector<int> ranks() const;

  /// Appends C_{top()+1} with the given basis degrees and differential.
  void setModule(int n, std::vector<int> degrees);
  void setDiff(int n, PolyMatrix d);
  void truncate(int n);

  /// Reduces modulo the quotient ideal when over R.
  FreeElement reduce(const FreeElement& v) const;
  Polynomial reduce(const Polynomial& p) const;
  FreeElement applyDiff(int n, const FreeElement& v) const;
  /// Image of basis element j of C_n, reduced.
  FreeElement column(int n, int j) const { return reduce(diff(n).column(j)); }

  /// Throws InternalError unless d_{n-1} d_n = 0 for all n.
  void checkSquareZero() const;
  /// All differential entries lie in the maximal ideal.
  bool isMinimal() const;
  /// Homogeneous of degree 0 with respect to the basis degrees.
  bool isHomogeneous() const;

 private:
  RingPtr ring_;
  QuotientPtr over_;
  std::vector<std::vector<int>> degrees_;
  std::vector<PolyMatrix> diffs_;  // diffs_[n] for n >= 1; diffs_[0] unused
  static const std::vector<int> kNoDegrees;
};

/// Associative graded-commutative product on a free complex over Q.
class DgAlgebra {
 public:
  virtual ~DgAlgebra() = default;
  virtual const GradedFreeComplex& complex() const = 0;
  /// Product of basis elements (n1, i1) and (n2, i2), in degree n1 + n2.
  virtual FreeElement multiply(int n1, int i1, int n2, int i2) const = 0;
  /// Bilinear extension to elements of degrees n1 and n2.
  FreeElement multiply(int n1, const FreeElement& a, int n2, const FreeElement& b) const;
  /// False when every term of the Leibniz rule and commutativity for this
  /// pair vanishes for structural reasons; lets checkers skip it.
  virtual bool pairRelevant(int, int, int, int) const { return true; }
  /// False when both sides of associativity vanish structurally.
  virtual bool tripleRelevant(int, int, int, int, int, int) const { return true; }
};

/// Dg module over a DgAlgebra.
class DgModule {
 public:
  virtual ~DgModule() = default;
  virtual const GradedFreeComplex& complex() const = 0;
  virtual const DgAlgebra& algebra() const = 0;
  /// Action of basis (nx, ix) of the algebra on basis (ny, iy) of the module.
  virtual FreeElement act(int nx, int ix, int ny, int iy) const = 0;
  FreeElement act(int nx, const FreeElement& a, int ny, const FreeElement& y) const;
  virtual bool pairRelevant(int, int, int, int) const { return true; }
  virtual bool tripleRelevant(int, int, int, int, int, int) const { return true; }
};

/// Degree-wise Q-linear map between complexes.
struct ChainMap {
  std::vector<PolyMatrix> maps;  // maps[n]: source_n -> target_n
  FreeElement apply(int n, const FreeElement& v) const;
};

struct StructureReport {
  bool ok = true;
  long checked = 0;
  std::string firstFailure;
  void fail(const std::string& what) {
    if (ok) firstFailure = what;
    ok = false;
  }
};

/// Leibniz rule, associativity, graded commutativity and unit on basis tuples
/// (skipping tuples the structure reports as irrelevant).
StructureReport checkDgAlgebra(const DgAlgebra& A);
StructureReport checkDgModule(const DgModule& M);
/// psi is a chain map X -> Y and psi(x * x') = x * psi(x') on basis pairs.
StructureReport checkDgModuleMap(const DgModule& Y, const ChainMap& psi);

}  // namespace burch
