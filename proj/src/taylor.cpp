#include "burch/taylor.hpp"

#include <algorithm>
#include <bit>

#include "burch/error.hpp"

namespace burch {

TaylorAlgebra::TaylorAlgebra(RingPtr r, std::vector<Monomial> gens)
    : ring_(std::move(r)), gens_(std::move(gens)), C_(ring_) {
  const int g = generatorCount();
  if (g > kMaxGenerators)
    throw ResourceError("Taylor complex on " + std::to_string(g) + " generators exceeds the limit of " +
                        std::to_string(kMaxGenerators));
  const unsigned full = 1u << g;
  index_.assign(full, -1);
  lcm_.assign(full, Monomial());
  masks_.assign(g + 1, {});
  for (unsigned S = 1; S < full; ++S) {
    int u = std::countr_zero(S);
    lcm_[S] = lcm_[S & (S - 1)].lcm(gens_[u]);
  }
  // lexicographic order of sorted index lists
  std::vector<unsigned> all;
  for (unsigned S = 0; S < full; ++S) all.push_back(S);
  auto lexKey = [](unsigned S) {
    std::vector<int> v;
    for (unsigned t = S; t; t &= t - 1) v.push_back(std::countr_zero(t));
    return v;
  };
  std::sort(all.begin(), all.end(), [&](unsigned a, unsigned b) { return lexKey(a) < lexKey(b); });
  for (unsigned S : all) {
    int n = std::popcount(S);
    index_[S] = static_cast<int>(masks_[n].size());
    masks_[n].push_back(S);
  }
  for (int n = 0; n <= g; ++n) {
    std::vector<int> deg;
    for (unsigned S : masks_[n]) deg.push_back(lcm_[S].degree());
    C_.setModule(n, deg);
  }
  for (int n = 1; n <= g; ++n) {
    PolyMatrix d(ring_, C_.degrees(n - 1), C_.degrees(n));
    for (int i = 0; i < C_.rank(n); ++i) {
      unsigned S = masks_[n][i];
      std::vector<FreeElement::Entry> col;
      int pos = 0;
      for (unsigned t = S; t; t &= t - 1, ++pos) {
        unsigned T = S & ~(1u << std::countr_zero(t));
        Monomial c = lcm_[S] / lcm_[T];
        Coeff sign = pos % 2 ? ring_->field.prime() - 1 : 1;
        col.emplace_back(index_[T], Polynomial::monomial(ring_, c, sign));
      }
      std::sort(col.begin(), col.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
      d.setColumn(i, FreeElement::fromEntries(std::move(col)));
    }
    C_.setDiff(n, std::move(d));
  }
}

std::shared_ptr<TaylorAlgebra> TaylorAlgebra::ofIdeal(const Ideal& I) {
  std::vector<Monomial> gens;
  for (const auto& g : I.gens()) {
    if (g.isZero()) continue;
    if (!g.isMonomial()) throw InputError("Taylor complex needs monomial generators");
    gens.push_back(g.leading().m);
  }
  return std::make_shared<TaylorAlgebra>(I.ring(), std::move(gens));
}

int TaylorAlgebra::productOf(unsigned S, unsigned T, Monomial& coeff) const {
  if (S & T) return 0;
  // inversions: pairs s in S, t in T with s > t
  int inv = 0;
  for (unsigned t = T; t; t &= t - 1) {
    unsigned above = ~((2u << std::countr_zero(t)) - 1);
    inv += std::popcount(S & above);
  }
  coeff = lcm_[S] * lcm_[T] / lcm_[S | T];
  return inv % 2 ? -1 : 1;
}

FreeElement TaylorAlgebra::multiply(int n1, int i1, int n2, int i2) const {
  unsigned S = masks_[n1][i1], T = masks_[n2][i2];
  Monomial c;
  int sign = productOf(S, T, c);
  if (!sign) return FreeElement();
  return FreeElement::fromEntries(
      {{index_[S | T], Polynomial::monomial(ring_, c, sign > 0 ? 1 : ring_->field.prime() - 1)}});
}

bool TaylorAlgebra::pairRelevant(int n1, int i1, int n2, int i2) const {
  return std::popcount(masks_[n1][i1] & masks_[n2][i2]) <= 1;
}

bool TaylorAlgebra::tripleRelevant(int n1, int i1, int n2, int i2, int n3, int i3) const {
  unsigned a = masks_[n1][i1], b = masks_[n2][i2], c = masks_[n3][i3];
  return !(a & b) && !(a & c) && !(b & c);
}

TaylorModule::TaylorModule(std::shared_ptr<const TaylorAlgebra> X, std::shared_ptr<const TaylorAlgebra> Y)
    : X_(std::move(X)), Y_(std::move(Y)) {
  const auto& gx = X_->generators();
  const auto& gy = Y_->generators();
  if (gx.size() > gy.size() || !std::equal(gx.begin(), gx.end(), gy.begin()))
    throw InputError("module Taylor complex must list the algebra generators first");
}

FreeElement TaylorModule::act(int nx, int ix, int ny, int iy) const {
  return Y_->multiply(nx, Y_->indexOf(X_->mask(nx, ix)), ny, iy);
}

bool TaylorModule::pairRelevant(int nx, int ix, int ny, int iy) const {
  return std::popcount(X_->mask(nx, ix) & Y_->mask(ny, iy)) <= 1;
}

bool TaylorModule::tripleRelevant(int n1, int i1, int n2, int i2, int ny, int iy) const {
  unsigned a = X_->mask(n1, i1), b = X_->mask(n2, i2), c = Y_->mask(ny, iy);
  return !(a & b) && !(a & c) && !(b & c);
}

ChainMap TaylorModule::inclusion() const {
  ChainMap psi;
  const GradedFreeComplex& X = X_->complex();
  const GradedFreeComplex& Y = Y_->complex();
  for (int n = 0; n <= X.top(); ++n) {
    PolyMatrix m(X.ring(), Y.degrees(n), X.degrees(n));
    for (int i = 0; i < X.rank(n); ++i)
      m.setColumn(i, FreeElement::basis(X.ring(), Y_->indexOf(X_->mask(n, i))));
    psi.maps.push_back(std::move(m));
  }
  return psi;
}

}  // namespace burch
