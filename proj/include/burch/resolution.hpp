#pragma once

#include <memory>
#include <vector>

#include "burch/complex.hpp"
#include "burch/krank.hpp"
#include "burch/taylor.hpp"

namespace burch {

/// Minimal free resolution over Q of Q^g / (relations) through F_upTo.
GradedFreeComplex resolveOverQ(const RingPtr& r, const std::vector<int>& genDegrees, const PolyMatrix& relations,
                               int upTo);
/// Minimal free resolution over R. Artinian quotients use strand linear
/// algebra, others the lifting route below.
GradedFreeComplex resolveOverR(const ModulePresentation& M, int upTo);
/// Syzygies over R computed over Q from [A | I e_1 .. I e_r], followed by
/// minimalization.
GradedFreeComplex resolveOverRLifted(const ModulePresentation& M, int upTo);

/// ker d_n is contained in im d_{n+1}, checked with Groebner bases over Q.
bool exactOverQ(const GradedFreeComplex& C, int n);

/// Semifree dg module X (x) V over a dg algebra X, built by adjoining free
/// generators to kill homology. Basis of Y_n: generators v in order of
/// adjunction, and for each v the basis of X_{n - |v|}.
class SemifreeModule : public DgModule {
 public:
  struct Generator {
    int hdeg = 0;
    int intDeg = 0;
    FreeElement boundary;  // element of Y_{hdeg-1}
  };

  explicit SemifreeModule(std::shared_ptr<const DgAlgebra> X) : X_(std::move(X)) {}

  const GradedFreeComplex& complex() const override { return Y_; }
  const DgAlgebra& algebra() const override { return *X_; }
  FreeElement act(int nx, int ix, int ny, int iy) const override;
  using DgModule::act;

  const std::vector<Generator>& generators() const { return gens_; }
  /// Index in Y_n of x (x) v for basis x of X_{n - |v|}.
  int indexOf(int n, int v, int ix) const;
  /// Adds generators and rebuilds the complex through degree top.
  void adjoin(const std::vector<Generator>& gens, int top);

 private:
  void rebuild(int top);
  std::shared_ptr<const DgAlgebra> X_;
  std::vector<Generator> gens_;
  GradedFreeComplex Y_;
  std::vector<std::vector<int>> offset_;  // offset_[n][v], -1 when empty
  std::vector<std::vector<std::pair<int, int>>> basis_;  // basis_[n][k] = (v, ix)
};

struct DgModuleResolution {
  std::shared_ptr<const DgModule> Y;
  ChainMap psi;
  /// The cyclic monomial shortcut Y = Taylor(I, J) was used.
  bool taylorShortcut = false;
};

/// Dg X-module resolution of M over Q with a split injection psi: X -> Y
/// onto the first free summand. Cyclic modules R/J with J monomial use the
/// Taylor complex on the generators of I followed by those of J.
DgModuleResolution dgModuleResolution(const ModulePresentation& M, std::shared_ptr<const TaylorAlgebra> X,
                                      int upTo, long rankCap = 4000);
/// The general semifree construction, regardless of shape.
DgModuleResolution semifreeResolution(const ModulePresentation& M, std::shared_ptr<const DgAlgebra> X, int upTo,
                                      long rankCap = 4000);

/// psi is a chain map, X-linear, and sends basis elements to distinct basis
/// elements (hence is split in each degree).
StructureReport checkSplitInjection(const DgModule& Y, const ChainMap& psi);

}  // namespace burch
