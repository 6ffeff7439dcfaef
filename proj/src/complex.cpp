#include "burch/complex.hpp"

#include <algorithm>

#include "burch/error.hpp"

namespace burch {

const std::vector<Monomial> QuotientRing::kEmpty;
const SparseVec QuotientRing::kZero;
const std::vector<int> GradedFreeComplex::kNoDegrees;

QuotientRing::QuotientRing(Ideal I) : I_(std::move(I)) {
  artinian_ = I_.isArtinian() && !I_.isUnit();
  if (I_.isUnit()) return;
  if (!artinian_) return;
  const int n = ring()->nvars();
  std::vector<Monomial> leads;
  for (const auto& g : I_.groebner()) leads.push_back(g.leading().m);
  for (int d = 0;; ++d) {
    std::vector<Monomial> std;
    for (Monomial m : monomialsOfDegree(n, d)) {
      bool divisible = false;
      for (Monomial l : leads)
        if (l.divides(m)) {
          divisible = true;
          break;
        }
      if (!divisible) std.push_back(m);
    }
    if (std.empty()) break;
    std::vector<std::pair<std::uint64_t, int>> lk;
    for (int i = 0; i < static_cast<int>(std.size()); ++i) lk.emplace_back(std[i].raw(), i);
    std::sort(lk.begin(), lk.end());
    basis_.push_back(std::move(std));
    lookup_.push_back(std::move(lk));
  }
  for (int d = 0; d < static_cast<int>(basis_.size()); ++d)
    for (Monomial m : monomialsOfDegree(n, d)) {
      Polynomial p = reduce(Polynomial::monomial(ring(), m));
      SparseVec v;
      for (const auto& t : p.terms()) v.emplace_back(indexOf(t.m), t.c);
      std::sort(v.begin(), v.end());
      nf_.emplace(m.raw(), std::move(v));
    }
}

const SparseVec& QuotientRing::normalFormOf(Monomial m) const {
  auto it = nf_.find(m.raw());
  return it == nf_.end() ? kZero : it->second;
}

FreeElement QuotientRing::reduce(const FreeElement& v) const {
  std::vector<FreeElement::Entry> out;
  for (const auto& [j, p] : v.entries()) {
    Polynomial q = reduce(p);
    if (!q.isZero()) out.emplace_back(j, std::move(q));
  }
  return FreeElement::fromEntries(std::move(out));
}

int QuotientRing::topDegree() const {
  if (!artinian_) throw InputError("the quotient ring is not Artinian");
  return static_cast<int>(basis_.size()) - 1;
}

const std::vector<Monomial>& QuotientRing::basis(int d) const {
  if (!artinian_) throw InputError("the quotient ring is not Artinian");
  if (d < 0 || d >= static_cast<int>(basis_.size())) return kEmpty;
  return basis_[d];
}

int QuotientRing::dimension() const {
  if (!artinian_) throw InputError("the quotient ring is not Artinian");
  int s = 0;
  for (const auto& b : basis_) s += static_cast<int>(b.size());
  return s;
}

int QuotientRing::indexOf(Monomial m) const {
  int d = m.degree();
  if (d >= static_cast<int>(lookup_.size())) return -1;
  const auto& lk = lookup_[d];
  auto it = std::lower_bound(lk.begin(), lk.end(), std::make_pair(m.raw(), -1));
  if (it != lk.end() && it->first == m.raw()) return it->second;
  return -1;
}

// ------------------------------------------------------------------ complex

int GradedFreeComplex::rank(int n) const {
  if (n < 0 || n > top()) return 0;
  return static_cast<int>(degrees_[n].size());
}

const std::vector<int>& GradedFreeComplex::degrees(int n) const {
  if (n < 0 || n > top()) return kNoDegrees;
  return degrees_[n];
}

std::vector<int> GradedFreeComplex::ranks() const {
  std::vector<int> r;
  for (int n = 0; n <= top(); ++n) r.push_back(rank(n));
  return r;
}

const PolyMatrix& GradedFreeComplex::diff(int n) const {
  if (n < 1 || n > top()) throw StructuralError("no differential in degree " + std::to_string(n));
  return diffs_[n];
}

void GradedFreeComplex::setModule(int n, std::vector<int> degrees) {
  if (n < 0) throw StructuralError("negative homological degree");
  if (n > top() + 1) throw StructuralError("modules must be added in order");
  if (n == top() + 1) {
    degrees_.push_back(std::move(degrees));
    diffs_.emplace_back();
    if (n >= 1) diffs_[n] = PolyMatrix(ring_, degrees_[n - 1], degrees_[n]);
  } else {
    degrees_[n] = std::move(degrees);
    if (n >= 1) diffs_[n] = PolyMatrix(ring_, degrees_[n - 1], degrees_[n]);
    if (n + 1 <= top()) diffs_[n + 1] = PolyMatrix(ring_, degrees_[n], degrees_[n + 1]);
  }
}

void GradedFreeComplex::setDiff(int n, PolyMatrix d) {
  if (n < 1 || n > top()) throw StructuralError("differential index out of range");
  if (d.rows() != rank(n - 1) || d.cols() != rank(n)) throw StructuralError("differential has wrong shape");
  diffs_[n] = std::move(d);
}

void GradedFreeComplex::truncate(int n) {
  if (n < top()) {
    degrees_.resize(n + 1);
    diffs_.resize(n + 1);
  }
}

FreeElement GradedFreeComplex::reduce(const FreeElement& v) const { return over_ ? over_->reduce(v) : v; }

Polynomial GradedFreeComplex::reduce(const Polynomial& p) const { return over_ ? over_->reduce(p) : p; }

FreeElement GradedFreeComplex::applyDiff(int n, const FreeElement& v) const {
  if (n < 1 || n > top()) return FreeElement();
  return reduce(diffs_[n].apply(v));
}

void GradedFreeComplex::checkSquareZero() const {
  for (int n = 2; n <= top(); ++n)
    for (int j = 0; j < rank(n); ++j) {
      FreeElement v = applyDiff(n - 1, diffs_[n].column(j));
      if (!v.isZero())
        throw InternalError("differential squares to a nonzero map in degree " + std::to_string(n) +
                            " on basis element " + std::to_string(j));
    }
}

bool GradedFreeComplex::isMinimal() const {
  for (int n = 1; n <= top(); ++n)
    if (!diffs_[n].entriesInMaximalIdeal()) return false;
  return true;
}

bool GradedFreeComplex::isHomogeneous() const {
  for (int n = 1; n <= top(); ++n)
    if (!diffs_[n].isHomogeneous()) return false;
  return true;
}

// ------------------------------------------------------------ structures

FreeElement DgAlgebra::multiply(int n1, const FreeElement& a, int n2, const FreeElement& b) const {
  FreeElement out;
  for (const auto& [i, p] : a.entries())
    for (const auto& [j, q] : b.entries()) {
      FreeElement m = multiply(n1, i, n2, j);
      if (!m.isZero()) out += m.times(p * q);
    }
  return out;
}

FreeElement DgModule::act(int nx, const FreeElement& a, int ny, const FreeElement& y) const {
  FreeElement out;
  for (const auto& [i, p] : a.entries())
    for (const auto& [j, q] : y.entries()) {
      FreeElement m = act(nx, i, ny, j);
      if (!m.isZero()) out += m.times(p * q);
    }
  return out;
}

FreeElement ChainMap::apply(int n, const FreeElement& v) const {
  if (n < 0 || n >= static_cast<int>(maps.size())) return FreeElement();
  return maps[n].apply(v);
}

namespace {

std::string tag(int n, int i) { return "(" + std::to_string(n) + "," + std::to_string(i) + ")"; }

FreeElement basisElt(const RingPtr& r, int i) { return FreeElement::basis(r, i); }

}  // namespace

StructureReport checkDgAlgebra(const DgAlgebra& A) {
  StructureReport rep;
  const GradedFreeComplex& C = A.complex();
  const RingPtr& r = C.ring();
  const int top = C.top();
  if (C.rank(0) != 1) {
    rep.fail("degree 0 must have rank 1");
    return rep;
  }
  Coeff minus = r->field.prime() - 1;
  for (int n = 0; n <= top; ++n)
    for (int i = 0; i < C.rank(n); ++i) {
      FreeElement e = basisElt(r, i);
      ++rep.checked;
      if (!(A.multiply(0, 0, n, i) == e) || !(A.multiply(n, i, 0, 0) == e)) rep.fail("unit on " + tag(n, i));
    }
  for (int n1 = 1; n1 <= top; ++n1)
    for (int n2 = 1; n1 + n2 <= top; ++n2)
      for (int i1 = 0; i1 < C.rank(n1); ++i1)
        for (int i2 = 0; i2 < C.rank(n2); ++i2) {
          if (!A.pairRelevant(n1, i1, n2, i2)) continue;
          ++rep.checked;
          FreeElement ab = A.multiply(n1, i1, n2, i2);
          FreeElement ba = A.multiply(n2, i2, n1, i1);
          if (!(ab == ((n1 * n2) % 2 ? ba.scaled(minus) : ba)))
            rep.fail("graded commutativity on " + tag(n1, i1) + tag(n2, i2));
          FreeElement lhs = C.applyDiff(n1 + n2, ab);
          FreeElement rhs = A.multiply(n1 - 1, C.diff(n1).column(i1), n2, basisElt(r, i2));
          FreeElement t = A.multiply(n1, basisElt(r, i1), n2 - 1, C.diff(n2).column(i2));
          rhs += n1 % 2 ? t.scaled(minus) : t;
          if (!(lhs == rhs)) rep.fail("Leibniz rule on " + tag(n1, i1) + tag(n2, i2));
        }
  for (int n1 = 1; n1 <= top; ++n1)
    for (int n2 = 1; n1 + n2 <= top; ++n2)
      for (int n3 = 1; n1 + n2 + n3 <= top; ++n3)
        for (int i1 = 0; i1 < C.rank(n1); ++i1)
          for (int i2 = 0; i2 < C.rank(n2); ++i2)
            for (int i3 = 0; i3 < C.rank(n3); ++i3) {
              if (!A.tripleRelevant(n1, i1, n2, i2, n3, i3)) continue;
              ++rep.checked;
              FreeElement l = A.multiply(n1 + n2, A.multiply(n1, i1, n2, i2), n3, basisElt(r, i3));
              FreeElement rr = A.multiply(n1, basisElt(r, i1), n2 + n3, A.multiply(n2, i2, n3, i3));
              if (!(l == rr)) rep.fail("associativity on " + tag(n1, i1) + tag(n2, i2) + tag(n3, i3));
            }
  return rep;
}

StructureReport checkDgModule(const DgModule& M) {
  StructureReport rep;
  const GradedFreeComplex& Y = M.complex();
  const GradedFreeComplex& X = M.algebra().complex();
  const RingPtr& r = Y.ring();
  Coeff minus = r->field.prime() - 1;
  for (int n = 0; n <= Y.top(); ++n)
    for (int i = 0; i < Y.rank(n); ++i) {
      ++rep.checked;
      if (!(M.act(0, 0, n, i) == basisElt(r, i))) rep.fail("unit acting on " + tag(n, i));
    }
  for (int nx = 1; nx <= X.top(); ++nx)
    for (int ny = 0; nx + ny <= Y.top(); ++ny)
      for (int ix = 0; ix < X.rank(nx); ++ix)
        for (int iy = 0; iy < Y.rank(ny); ++iy) {
          if (!M.pairRelevant(nx, ix, ny, iy)) continue;
          ++rep.checked;
          FreeElement lhs = Y.applyDiff(nx + ny, M.act(nx, ix, ny, iy));
          FreeElement rhs = M.act(nx - 1, X.diff(nx).column(ix), ny, basisElt(r, iy));
          if (ny > 0) {
            FreeElement t = M.act(nx, basisElt(r, ix), ny - 1, Y.diff(ny).column(iy));
            rhs += nx % 2 ? t.scaled(minus) : t;
          }
          if (!(lhs == rhs)) rep.fail("module Leibniz rule on " + tag(nx, ix) + tag(ny, iy));
        }
  const DgAlgebra& A = M.algebra();
  for (int n1 = 1; n1 <= X.top(); ++n1)
    for (int n2 = 1; n1 + n2 <= X.top(); ++n2)
      for (int ny = 0; n1 + n2 + ny <= Y.top(); ++ny)
        for (int i1 = 0; i1 < X.rank(n1); ++i1)
          for (int i2 = 0; i2 < X.rank(n2); ++i2)
            for (int iy = 0; iy < Y.rank(ny); ++iy) {
              if (!M.tripleRelevant(n1, i1, n2, i2, ny, iy)) continue;
              ++rep.checked;
              FreeElement l = M.act(n1 + n2, A.multiply(n1, i1, n2, i2), ny, basisElt(r, iy));
              FreeElement rr = M.act(n1, basisElt(r, i1), n2 + ny, M.act(n2, i2, ny, iy));
              if (!(l == rr)) rep.fail("module associativity on " + tag(n1, i1) + tag(n2, i2) + tag(ny, iy));
            }
  return rep;
}

StructureReport checkDgModuleMap(const DgModule& Y, const ChainMap& psi) {
  StructureReport rep;
  const GradedFreeComplex& X = Y.algebra().complex();
  const GradedFreeComplex& YC = Y.complex();
  const RingPtr& r = X.ring();
  const int top = std::min(X.top(), YC.top());
  for (int n = 1; n <= top; ++n)
    for (int i = 0; i < X.rank(n); ++i) {
      ++rep.checked;
      FreeElement a = YC.applyDiff(n, psi.apply(n, basisElt(r, i)));
      FreeElement b = psi.apply(n - 1, X.diff(n).column(i));
      if (!(a == b)) rep.fail("psi is not a chain map on " + tag(n, i));
    }
  for (int n1 = 0; n1 <= top; ++n1)
    for (int n2 = 0; n1 + n2 <= top; ++n2)
      for (int i1 = 0; i1 < X.rank(n1); ++i1)
        for (int i2 = 0; i2 < X.rank(n2); ++i2) {
          if (!Y.algebra().pairRelevant(n1, i1, n2, i2) && n1 > 0 && n2 > 0) continue;
          ++rep.checked;
          FreeElement a = psi.apply(n1 + n2, Y.algebra().multiply(n1, i1, n2, i2));
          FreeElement b = Y.act(n1, basisElt(r, i1), n2, psi.apply(n2, basisElt(r, i2)));
          if (!(a == b)) rep.fail("psi is not X-linear on " + tag(n1, i1) + tag(n2, i2));
        }
  return rep;
}

}  // namespace burch
