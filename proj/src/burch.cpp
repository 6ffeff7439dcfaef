#include "burch/burch.hpp"

#include <algorithm>

#include "burch/error.hpp"
#include "burch/linalg.hpp"

namespace burch {

namespace {

void requireMinimalPresentation(const Ideal& I) {
  if (!I.isHomogeneous()) throw InputError("the ideal must be homogeneous");
  if (I.isUnit()) throw InputError("the ideal must be proper");
  if (!I.insidePowerOfMaximal(2))
    throw InputError("the ideal is not contained in the square of the maximal ideal (presentation not minimal)");
}

SparseVec linearVec(const Polynomial& p) {
  SparseVec v;
  for (const auto& t : p.terms()) {
    if (t.m.degree() != 1) throw InternalError("expected a linear form");
    for (int k = 0; k < kMaxVars; ++k)
      if (t.m.exponent(k)) v.emplace_back(k, t.c);
  }
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

Ideal socleLift(const Ideal& I) { return colon(I, Ideal::maximal(I.ring())); }

Ideal burchIdeal(const Ideal& I) {
  const RingPtr& r = I.ring();
  Ideal n = Ideal::maximal(r);
  if (I.isZero()) return n;
  requireMinimalPresentation(I);
  Ideal bi = colon(product(I, n), socleLift(I));
  if (!bi.contains(product(n, n))) throw InternalError("Burch ideal does not contain n^2");
  return bi;
}

int burchIndexOf(const Ideal& I, const Ideal& bi) {
  const RingPtr& r = I.ring();
  if (I.isZero()) return 0;
  Echelon e(r->field);
  for (int k = 0; k < r->nvars(); ++k) e.insert(linearVec(bi.normalForm(Polynomial::variable(r, k))));
  return e.rank();
}

int burchIndex(const Ideal& I) { return burchIndexOf(I, burchIdeal(I)); }

BurchData burchData(const Ideal& I) {
  const RingPtr& r = I.ring();
  Ideal bi = burchIdeal(I);
  int b = burchIndexOf(I, bi);
  if (b < 1) throw InputError("Burch index is 0; no Burch data exists");
  Ideal n = Ideal::maximal(r);
  Ideal nI = product(n, I);
  std::vector<Polynomial> socle = minimalGenerators(socleLift(I));
  // ascending degree; within a degree the larger grevlex monomial first
  std::stable_sort(socle.begin(), socle.end(), [](const Polynomial& p, const Polynomial& q) {
    if (p.degree() != q.degree()) return p.degree() < q.degree();
    return grevlex(p.leading().m, q.leading().m) > 0;
  });

  BurchData d;
  d.a = minimalGenerators(I);
  Echelon chosen(r->field);
  for (int v = 0; v < r->nvars() && d.b < b; ++v) {
    Polynomial xv = Polynomial::variable(r, v);
    SparseVec img = linearVec(bi.normalForm(xv));
    if (img.empty() || chosen.inSpan(img)) continue;
    // valid socle lifts for this x, preferring one not used before
    int pick = -1;
    for (int pass = 0; pass < 2 && pick < 0; ++pass)
      for (int k = 0; k < static_cast<int>(socle.size()) && pick < 0; ++k) {
        if (pass == 0 && std::find(d.s.begin(), d.s.end(), socle[k]) != d.s.end()) continue;
        if (!nI.contains(xv * socle[k])) pick = k;
      }
    if (pick < 0) throw InternalError("no socle factorization for a linear form outside BI");
    Polynomial prod = xv * socle[pick];
    int jj = -1;
    for (int k = 0; k < static_cast<int>(d.a.size()) && jj < 0; ++k)
      if (d.a[k] == prod) jj = k;
    if (jj < 0) {
      // x*s is a minimal generator modulo nI; swap it in for one it involves
      for (int k = 0; k < static_cast<int>(d.a.size()) && jj < 0; ++k) {
        if (d.a[k].degree() != prod.degree()) continue;
        if (std::find(d.j.begin(), d.j.end(), k) != d.j.end()) continue;
        std::vector<Polynomial> trial = d.a;
        trial[k] = prod;
        if (Ideal(r, trial) == I && minimalGenerators(r, trial).size() == trial.size()) {
          d.a = trial;
          jj = k;
        }
      }
    }
    if (jj < 0) throw InternalError("could not place x*s among minimal generators");
    chosen.insert(img);
    d.x.push_back(xv);
    d.xVar.push_back(v);
    d.s.push_back(socle[pick]);
    d.j.push_back(jj);
    ++d.b;
  }
  if (d.b != b) throw InternalError("found fewer Burch factorizations than the Burch index");
  verifyBurchData(I, d);
  return d;
}

void verifyBurchData(const Ideal& I, const BurchData& d) {
  const RingPtr& r = I.ring();
  Ideal bi = burchIdeal(I);
  Ideal n = Ideal::maximal(r);
  Ideal nI = product(n, I);
  auto fail = [](const std::string& m) { throw InternalError("BurchData check failed: " + m); };
  if (d.b != burchIndexOf(I, bi)) fail("b differs from the Burch index");
  if (static_cast<int>(d.x.size()) != d.b || d.s.size() != d.x.size() || d.j.size() != d.x.size())
    fail("list lengths");
  if (!(Ideal(r, d.a) == I)) fail("a does not generate I");
  if (minimalGenerators(r, d.a).size() != d.a.size()) fail("a is not minimal");
  Echelon e(r->field);
  for (int i = 0; i < d.b; ++i) {
    if (d.x[i].degree() != 1 || !d.x[i].isHomogeneous()) fail("x_i is not a linear form");
    if (bi.contains(d.x[i])) fail("x_i lies in BI");
    if (!e.insert(linearVec(bi.normalForm(d.x[i])))) fail("x_i dependent modulo BI");
    for (int v = 0; v < r->nvars(); ++v)
      if (!I.contains(d.s[i] * Polynomial::variable(r, v))) fail("s_i is not in I : n");
    if (d.j[i] < 0 || d.j[i] >= static_cast<int>(d.a.size())) fail("j_i out of range");
    if (!nI.contains(d.x[i] * d.s[i] - d.a[d.j[i]])) fail("x_i s_i differs from a_j modulo nI");
    if (nI.contains(d.a[d.j[i]])) fail("a_j lies in nI");
  }
}

}  // namespace burch
