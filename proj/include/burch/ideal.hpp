#pragma once

#include <string>
#include <vector>

#include "burch/groebner.hpp"

namespace burch {

/// Ideal of Q with its reduced grevlex Groebner basis computed at construction.
class Ideal {
 public:
  Ideal() = default;
  Ideal(RingPtr r, std::vector<Polynomial> gens);
  static Ideal maximal(const RingPtr& r);
  static Ideal parse(const RingPtr& r, const std::vector<std::string>& gens);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& gens() const { return gens_; }
  const std::vector<Polynomial>& groebner() const { return gb_; }
  const GroebnerBasis& groebnerBasis() const { return gbData_; }

  Polynomial normalForm(const Polynomial& p) const;
  bool contains(const Polynomial& p) const { return normalForm(p).isZero(); }
  bool contains(const Ideal& J) const;
  bool operator==(const Ideal& J) const { return contains(J) && J.contains(*this); }
  bool isZero() const { return gb_.empty(); }
  bool isUnit() const;
  bool isMonomial() const;
  bool isHomogeneous() const;
  /// Every generator lies in n^d.
  bool insidePowerOfMaximal(int d) const;
  /// Finite dim_k Q/I.
  bool isArtinian() const;
  std::string toString() const;

 private:
  RingPtr ring_;
  std::vector<Polynomial> gens_;
  std::vector<Polynomial> gb_;
  GroebnerBasis gbData_;
};

Ideal sum(const Ideal& I, const Ideal& J);
Ideal product(const Ideal& I, const Ideal& J);
Ideal intersect(const Ideal& I, const Ideal& J);
/// I : (f)
Ideal colon(const Ideal& I, const Polynomial& f);
/// I : J; monomial inputs use the combinatorial rule.
Ideal colon(const Ideal& I, const Ideal& J);
/// Colon computed through syzygies even for monomial inputs.
Ideal colonGeneral(const Ideal& I, const Ideal& J);
/// Monomial colon by exponent arithmetic (requires monomial generators).
Ideal colonMonomial(const Ideal& I, const Ideal& J);

/// Subset of the generators forming a minimal generating set, chosen degree by
/// degree in input order. Throws InputError on inhomogeneous input.
std::vector<Polynomial> minimalGenerators(const Ideal& I);
std::vector<Polynomial> minimalGenerators(const RingPtr& r, const std::vector<Polynomial>& gens);

/// Submodule of a graded free module Q^r.
class Submodule {
 public:
  Submodule() = default;
  Submodule(RingPtr r, std::vector<int> basisDegrees, std::vector<FreeElement> gens);

  const RingPtr& ring() const { return ring_; }
  int ambientRank() const { return static_cast<int>(degrees_.size()); }
  const std::vector<int>& basisDegrees() const { return degrees_; }
  const std::vector<FreeElement>& gens() const { return gens_; }
  const GroebnerBasis& groebnerBasis() const;
  std::vector<FreeElement> groebner() const;
  bool contains(const FreeElement& v) const;
  bool isZero() const;

 private:
  RingPtr ring_;
  std::vector<int> degrees_;
  std::vector<FreeElement> gens_;
  mutable bool haveGb_ = false;
  mutable GroebnerBasis gb_;
};

std::vector<FreeElement> minimalGenerators(const Submodule& N);
/// Indices of a minimal generating subset, degree by degree in input order.
std::vector<int> minimalGeneratorIndices(const RingPtr& r, const std::vector<FreeElement>& gens,
                                         const std::vector<int>& basisDegrees);

/// Generators of the kernel of m as a submodule of its source.
Submodule syzygies(const PolyMatrix& m);

/// All monomials of degree d in n variables, in descending grevlex order.
std::vector<Monomial> monomialsOfDegree(int nvars, int d);

}  // namespace burch
