#pragma once

#include <vector>

#include "burch/free_module.hpp"

namespace burch {

/// Term of a module element: coefficient * monomial * e_pos.
struct MTerm {
  int pos;
  Monomial m;
  Coeff c;
};

/// Module element sorted descending in position-over-term order, where a
/// lower position index is more significant. Ideals use position 0 only.
using ModPoly = std::vector<MTerm>;

/// > 0 when a is larger than b.
inline int potCompare(int posA, Monomial a, int posB, Monomial b) {
  if (posA != posB) return posA < posB ? 1 : -1;
  auto c = grevlex(a, b);
  return c > 0 ? 1 : (c < 0 ? -1 : 0);
}

ModPoly toModPoly(const Polynomial& p, int pos = 0);
ModPoly toModPoly(const FreeElement& v, int posOffset = 0);
Polynomial modPolyToPolynomial(const RingPtr& r, const ModPoly& f);
/// Converts terms with positions in [lo, hi) to a free element indexed from 0.
FreeElement modPolyToFree(const RingPtr& r, const ModPoly& f, int lo, int hi);

/// f += c * m * g
void addMulTo(ModPoly& f, const ModPoly& g, Monomial m, Coeff c, const PrimeField& F);

/// Buchberger's algorithm with the Gebauer-Moeller criteria, pairs processed
/// by ascending degree. The product criterion is only used for ideals.
class GroebnerBasis {
 public:
  GroebnerBasis() = default;
  /// posDegrees gives the degree of each free basis element (may be empty).
  static GroebnerBasis compute(std::vector<ModPoly> gens, const PrimeField& F,
                               std::vector<int> posDegrees = {}, bool idealMode = false);

  const std::vector<ModPoly>& elements() const { return basis_; }
  bool empty() const { return basis_.empty(); }
  /// Full normal form.
  ModPoly normalForm(ModPoly f) const;
  bool reducesToZero(const ModPoly& f) const { return normalForm(f).empty(); }
  /// Index of a basis element whose leading term divides (pos, m), or -1.
  int findReducer(int pos, Monomial m) const;
  const PrimeField& field() const { return F_; }

 private:
  PrimeField F_;
  std::vector<ModPoly> basis_;
  std::vector<std::vector<int>> byPos_;
  void index();
};

/// Groebner basis of the graph of a matrix A: generators (a_j, e_j) in
/// Q^r (+) Q^k with the first block more significant. Elements whose first
/// block is zero generate the syzygies; the rest solve A u = v.
class TrackedGroebner {
 public:
  TrackedGroebner(const PolyMatrix& a);

  /// Generators of ker A as elements of the source free module.
  std::vector<FreeElement> syzygies() const;
  /// Some u with A u = v, or false if v is not in the image.
  bool solve(const FreeElement& v, FreeElement& u) const;
  bool inImage(const FreeElement& v) const;
  /// Image Groebner basis (first-block parts), as free elements of the target.
  std::vector<FreeElement> imageBasis() const;

 private:
  RingPtr ring_;
  int r_ = 0, k_ = 0;
  GroebnerBasis gb_;
};

}  // namespace burch
