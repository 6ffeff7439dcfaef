#pragma once

#include <map>
#include <memory>
#include <vector>

#include "burch/complex.hpp"
#include "burch/contraction.hpp"

namespace burch {

/// Basis element idx of C_deg.
struct BasisRef {
  int deg = 0;
  int idx = 0;
  friend bool operator==(const BasisRef&, const BasisRef&) = default;
};
using BasisTuple = std::vector<BasisRef>;

/// A-infinity algebra on the small complex of a contraction, transferred from
/// a dg algebra on the big complex by tree sums.
///
/// Two sign conventions are exposed. The suspended operations b_n all have
/// degree -1 on the shifted complex, with b_1(sx) = -s dx and
/// b_2(sa, sb) = (-1)^|a| s(ab); b(xs) returns the unsuspended payload. The
/// unsuspended m_n of degree n - 2 satisfy
///   sum (-1)^(r + st) m_(r+1+t)(1^r, m_s, 1^t) = 0.
class AInfAlgebra {
 public:
  AInfAlgebra(std::shared_ptr<const DgAlgebra> dg, std::shared_ptr<const Contraction> ctr, int arityCap = 4);
  /// The dg algebra itself (identity contraction, m_n = 0 for n >= 3).
  static std::shared_ptr<const AInfAlgebra> fromDg(std::shared_ptr<const DgAlgebra> dg, int arityCap = 4);
  /// Transfer onto the minimal model of dg's complex.
  static std::shared_ptr<const AInfAlgebra> transfer(std::shared_ptr<const DgAlgebra> dg, int arityCap = 4);

  const GradedFreeComplex& complex() const { return ctr_->small; }
  const DgAlgebra& dg() const { return *dg_; }
  const Contraction& contraction() const { return *ctr_; }
  int arityCap() const { return arityCap_; }
  /// No eliminations took place, so all higher operations vanish.
  bool isDg() const { return ctr_->steps.empty(); }

  /// b_n(s x_1, ..., s x_n) as an element of degree sum |x_k| + n - 2. Throws
  /// ResourceError when n exceeds the arity cap and the output degree is in
  /// range.
  FreeElement b(const BasisTuple& xs) const;
  FreeElement m(const BasisTuple& xs) const;
  /// Tree term on the big complex, of degree sum |x_k| + n - 1.
  FreeElement lambda(const BasisTuple& xs) const;

 private:
  std::shared_ptr<const DgAlgebra> dg_;
  std::shared_ptr<const Contraction> ctr_;
  int arityCap_;
  mutable std::map<std::vector<int>, FreeElement> lam_, ops_;
};

/// A-infinity module over an AInfAlgebra, transferred from a dg module over
/// the same big algebra. Operations take n - 1 algebra inputs and one module
/// input; b^Y_1 = d, b^Y_2(s a, y) = a y.
class AInfModule {
 public:
  AInfModule(std::shared_ptr<const AInfAlgebra> A, std::shared_ptr<const DgModule> dg,
             std::shared_ptr<const Contraction> ctr);
  static std::shared_ptr<const AInfModule> fromDg(std::shared_ptr<const AInfAlgebra> A,
                                                  std::shared_ptr<const DgModule> dg);
  static std::shared_ptr<const AInfModule> transfer(std::shared_ptr<const AInfAlgebra> A,
                                                    std::shared_ptr<const DgModule> dg);

  const GradedFreeComplex& complex() const { return ctr_->small; }
  const AInfAlgebra& algebra() const { return *A_; }
  const DgModule& dg() const { return *dg_; }
  const Contraction& contraction() const { return *ctr_; }
  bool isDg() const { return A_->isDg() && ctr_->steps.empty(); }

  FreeElement b(const BasisTuple& xs, BasisRef y) const;
  FreeElement mu(const BasisTuple& xs, BasisRef y) const;
  FreeElement lambda(const BasisTuple& xs, BasisRef y) const;

 private:
  std::shared_ptr<const AInfAlgebra> A_;
  std::shared_ptr<const DgModule> dg_;
  std::shared_ptr<const Contraction> ctr_;
  mutable std::map<std::vector<int>, FreeElement> lam_, ops_;
};

enum class SignConvention { Suspended, Unsuspended };

/// n-th Stasheff identity on every basis tuple whose output degree is in
/// range. Unit inputs included.
StructureReport stasheffCheck(const AInfAlgebra& A, int n, SignConvention c = SignConvention::Unsuspended);
StructureReport stasheffCheck(const AInfModule& M, int n, SignConvention c = SignConvention::Unsuspended);
/// m_2(1, a) = a = m_2(a, 1) and m_n vanishes on tuples containing 1 for
/// 3 <= n <= arity; for modules mu_2(1, y) = y and mu_n(.., 1, .., y) = 0.
StructureReport checkStrictUnit(const AInfAlgebra& A, int arity);
StructureReport checkStrictUnit(const AInfModule& M, int arity);
/// Operations of arity 2..arity on positive-degree algebra inputs have all
/// coefficients in the maximal ideal.
StructureReport checkMinimalOps(const AInfAlgebra& A, int arity);
StructureReport checkMinimalOps(const AInfModule& M, int arity);

/// All tuples of n basis elements (degrees in [minDeg, top]) with
/// sum of degrees <= maxSum, in lexicographic order.
std::vector<BasisTuple> basisTuples(const GradedFreeComplex& C, int n, int minDeg, int maxSum);

}  // namespace burch
