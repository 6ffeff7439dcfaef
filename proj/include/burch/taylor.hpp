#pragma once

#include <memory>
#include <vector>

#include "burch/complex.hpp"

namespace burch {

/// Taylor resolution of Q/(m_1..m_g) with its standard dg algebra product.
/// Basis elements of degree n are the n-subsets of the generators, in
/// lexicographic order of their sorted index lists.
class TaylorAlgebra : public DgAlgebra {
 public:
  static constexpr int kMaxGenerators = 12;

  TaylorAlgebra(RingPtr r, std::vector<Monomial> gens);
  /// Uses the given generators of a monomial ideal (InputError otherwise).
  static std::shared_ptr<TaylorAlgebra> ofIdeal(const Ideal& I);

  const GradedFreeComplex& complex() const override { return C_; }
  FreeElement multiply(int n1, int i1, int n2, int i2) const override;
  using DgAlgebra::multiply;
  bool pairRelevant(int n1, int i1, int n2, int i2) const override;
  bool tripleRelevant(int n1, int i1, int n2, int i2, int n3, int i3) const override;

  int generatorCount() const { return static_cast<int>(gens_.size()); }
  const std::vector<Monomial>& generators() const { return gens_; }
  unsigned mask(int n, int i) const { return masks_[n][i]; }
  /// Basis index of a subset within its degree.
  int indexOf(unsigned mask) const { return index_[mask]; }
  Monomial lcmOf(unsigned mask) const { return lcm_[mask]; }
  /// e_S * e_T as (sign, coefficient monomial, union mask); sign 0 if zero.
  int productOf(unsigned S, unsigned T, Monomial& coeff) const;

 private:
  RingPtr ring_;
  std::vector<Monomial> gens_;
  std::vector<std::vector<unsigned>> masks_;
  std::vector<int> index_;
  std::vector<Monomial> lcm_;
  GradedFreeComplex C_;
};

/// Taylor resolution of Q/J viewed as a dg module over the Taylor resolution
/// of Q/I, where the generators of I come first among those of J.
class TaylorModule : public DgModule {
 public:
  TaylorModule(std::shared_ptr<const TaylorAlgebra> X, std::shared_ptr<const TaylorAlgebra> Y);

  const GradedFreeComplex& complex() const override { return Y_->complex(); }
  const DgAlgebra& algebra() const override { return *X_; }
  FreeElement act(int nx, int ix, int ny, int iy) const override;
  using DgModule::act;
  bool pairRelevant(int nx, int ix, int ny, int iy) const override;
  bool tripleRelevant(int n1, int i1, int n2, int i2, int ny, int iy) const override;

  const TaylorAlgebra& moduleAlgebra() const { return *Y_; }
  /// Subset inclusion X -> Y.
  ChainMap inclusion() const;

 private:
  std::shared_ptr<const TaylorAlgebra> X_, Y_;
};

}  // namespace burch
