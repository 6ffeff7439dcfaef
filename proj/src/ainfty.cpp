#include "burch/ainfty.hpp"

#include "burch/error.hpp"

namespace burch {

namespace {

std::vector<int> keyOf(const BasisTuple& xs, int tag = -1) {
  std::vector<int> k;
  k.reserve(2 * xs.size() + 1);
  for (const auto& x : xs) {
    k.push_back(x.deg);
    k.push_back(x.idx);
  }
  if (tag >= 0) k.push_back(tag);
  return k;
}

int degSum(const BasisTuple& xs, std::size_t lo, std::size_t hi) {
  int s = 0;
  for (std::size_t k = lo; k < hi; ++k) s += xs[k].deg;
  return s;
}

BasisTuple slice(const BasisTuple& xs, std::size_t lo, std::size_t hi) {
  return BasisTuple(xs.begin() + static_cast<long>(lo), xs.begin() + static_cast<long>(hi));
}

FreeElement negIf(bool odd, const FreeElement& v) { return odd ? -v : v; }

bool inRange(const GradedFreeComplex& C, int d) { return d >= 0 && d <= C.top() && C.rank(d) > 0; }

// (-1)^n eps with eps = (-1)^(sum (n-k)|x_k|), k = 1..n, over the first n degrees
bool unsuspendSign(const std::vector<int>& degs, int n) {
  long e = n;
  for (int k = 1; k <= static_cast<int>(degs.size()); ++k) e += static_cast<long>(n - k) * degs[k - 1];
  return e % 2 != 0;
}

}  // namespace

// ------------------------------------------------------------ algebra

AInfAlgebra::AInfAlgebra(std::shared_ptr<const DgAlgebra> dg, std::shared_ptr<const Contraction> ctr, int arityCap)
    : dg_(std::move(dg)), ctr_(std::move(ctr)), arityCap_(arityCap) {
  if (arityCap_ < 2) throw InputError("arity cap must be at least 2");
  if (ctr_->big.rank(0) != 1 || ctr_->small.rank(0) != 1)
    throw InputError("an A-infinity resolution needs a rank one degree-zero part");
  if (!ctr_->hasHomotopy()) throw InputError("transfer needs the contracting homotopy");
}

std::shared_ptr<const AInfAlgebra> AInfAlgebra::fromDg(std::shared_ptr<const DgAlgebra> dg, int arityCap) {
  auto ctr = std::make_shared<Contraction>(identityContraction(dg->complex()));
  return std::make_shared<AInfAlgebra>(std::move(dg), std::move(ctr), arityCap);
}

std::shared_ptr<const AInfAlgebra> AInfAlgebra::transfer(std::shared_ptr<const DgAlgebra> dg, int arityCap) {
  auto ctr = std::make_shared<Contraction>(minimalize(dg->complex()));
  return std::make_shared<AInfAlgebra>(std::move(dg), std::move(ctr), arityCap);
}

FreeElement AInfAlgebra::lambda(const BasisTuple& xs) const {
  const GradedFreeComplex& big = ctr_->big;
  const std::size_t n = xs.size();
  if (n == 1) return big.reduce(ctr_->incl.maps[xs[0].deg].column(xs[0].idx));
  const int D = degSum(xs, 0, n) + static_cast<int>(n) - 1;
  if (isDg() || D > big.top()) return FreeElement();
  auto key = keyOf(xs);
  if (auto it = lam_.find(key); it != lam_.end()) return it->second;
  FreeElement sum;
  for (std::size_t j = 1; j < n; ++j) {
    BasisTuple left = slice(xs, 0, j), right = slice(xs, j, n);
    FreeElement a = lambda(left);
    if (a.isZero()) continue;
    FreeElement c = lambda(right);
    if (c.isZero()) continue;
    int da = degSum(xs, 0, j) + static_cast<int>(j) - 1;
    int dc = degSum(xs, j, n) + static_cast<int>(n - j) - 1;
    sum += negIf(da % 2, dg_->multiply(da, a, dc, c));
  }
  FreeElement out = sum.isZero() ? FreeElement() : ctr_->homotopy(D - 1, big.reduce(sum));
  lam_.emplace(std::move(key), out);
  return out;
}

FreeElement AInfAlgebra::b(const BasisTuple& xs) const {
  const GradedFreeComplex& S = ctr_->small;
  const int n = static_cast<int>(xs.size());
  if (n == 0) throw InputError("operations need at least one input");
  const int out = degSum(xs, 0, n) + n - 2;
  if (!inRange(S, out)) return FreeElement();
  if (n == 1) return -S.column(xs[0].deg, xs[0].idx);
  if (n >= 3) {
    if (isDg()) return FreeElement();
    for (const auto& x : xs)
      if (x.deg == 0) return FreeElement();
  }
  if (n > arityCap_)
    throw ResourceError("operation of arity " + std::to_string(n) + " needed; the arity cap is " +
                        std::to_string(arityCap_));
  auto key = keyOf(xs);
  if (auto it = ops_.find(key); it != ops_.end()) return it->second;
  FreeElement sum;
  for (int j = 1; j < n; ++j) {
    BasisTuple left = slice(xs, 0, j), right = slice(xs, j, n);
    FreeElement a = lambda(left);
    if (a.isZero()) continue;
    FreeElement c = lambda(right);
    if (c.isZero()) continue;
    int da = degSum(xs, 0, j) + j - 1;
    int dc = degSum(xs, j, n) + n - j - 1;
    sum += negIf(da % 2, dg_->multiply(da, a, dc, c));
  }
  FreeElement res = sum.isZero() ? FreeElement() : ctr_->project(out, ctr_->big.reduce(sum));
  ops_.emplace(std::move(key), res);
  return res;
}

FreeElement AInfAlgebra::m(const BasisTuple& xs) const {
  std::vector<int> degs;
  for (const auto& x : xs) degs.push_back(x.deg);
  return negIf(unsuspendSign(degs, static_cast<int>(xs.size())), b(xs));
}

// ------------------------------------------------------------ module

AInfModule::AInfModule(std::shared_ptr<const AInfAlgebra> A, std::shared_ptr<const DgModule> dg,
                       std::shared_ptr<const Contraction> ctr)
    : A_(std::move(A)), dg_(std::move(dg)), ctr_(std::move(ctr)) {
  if (&dg_->algebra() != &A_->dg()) throw InputError("module and algebra use different dg algebras");
  if (!ctr_->hasHomotopy()) throw InputError("transfer needs the contracting homotopy");
}

std::shared_ptr<const AInfModule> AInfModule::fromDg(std::shared_ptr<const AInfAlgebra> A,
                                                     std::shared_ptr<const DgModule> dg) {
  auto ctr = std::make_shared<Contraction>(identityContraction(dg->complex()));
  return std::make_shared<AInfModule>(std::move(A), std::move(dg), std::move(ctr));
}

std::shared_ptr<const AInfModule> AInfModule::transfer(std::shared_ptr<const AInfAlgebra> A,
                                                       std::shared_ptr<const DgModule> dg) {
  auto ctr = std::make_shared<Contraction>(minimalize(dg->complex()));
  return std::make_shared<AInfModule>(std::move(A), std::move(dg), std::move(ctr));
}

FreeElement AInfModule::lambda(const BasisTuple& xs, BasisRef y) const {
  const GradedFreeComplex& big = ctr_->big;
  const std::size_t k = xs.size();
  if (k == 0) return big.reduce(ctr_->incl.maps[y.deg].column(y.idx));
  const int D = degSum(xs, 0, k) + y.deg + static_cast<int>(k);
  if (ctr_->steps.empty() || D > big.top()) return FreeElement();
  auto key = keyOf(xs);
  key.push_back(y.deg);
  key.push_back(y.idx);
  if (auto it = lam_.find(key); it != lam_.end()) return it->second;
  FreeElement sum;
  for (std::size_t j = 1; j <= k; ++j) {
    FreeElement a = A_->lambda(slice(xs, 0, j));
    if (a.isZero()) continue;
    FreeElement c = lambda(slice(xs, j, k), y);
    if (c.isZero()) continue;
    int da = degSum(xs, 0, j) + static_cast<int>(j) - 1;
    int dc = degSum(xs, j, k) + y.deg + static_cast<int>(k - j);
    sum += dg_->act(da, a, dc, c);
  }
  FreeElement out = sum.isZero() ? FreeElement() : -ctr_->homotopy(D - 1, big.reduce(sum));
  lam_.emplace(std::move(key), out);
  return out;
}

FreeElement AInfModule::b(const BasisTuple& xs, BasisRef y) const {
  const GradedFreeComplex& S = ctr_->small;
  const int n = static_cast<int>(xs.size()) + 1;
  const int out = degSum(xs, 0, xs.size()) + y.deg + n - 2;
  if (!inRange(S, out)) return FreeElement();
  if (n == 1) return S.column(y.deg, y.idx);
  if (n >= 3) {
    if (isDg()) return FreeElement();
    for (const auto& x : xs)
      if (x.deg == 0) return FreeElement();
  }
  if (n > A_->arityCap())
    throw ResourceError("module operation of arity " + std::to_string(n) + " needed; the arity cap is " +
                        std::to_string(A_->arityCap()));
  auto key = keyOf(xs);
  key.push_back(y.deg);
  key.push_back(y.idx);
  if (auto it = ops_.find(key); it != ops_.end()) return it->second;
  FreeElement sum;
  const std::size_t k = xs.size();
  for (std::size_t j = 1; j <= k; ++j) {
    FreeElement a = A_->lambda(slice(xs, 0, j));
    if (a.isZero()) continue;
    FreeElement c = lambda(slice(xs, j, k), y);
    if (c.isZero()) continue;
    int da = degSum(xs, 0, j) + static_cast<int>(j) - 1;
    int dc = degSum(xs, j, k) + y.deg + static_cast<int>(k - j);
    sum += dg_->act(da, a, dc, c);
  }
  FreeElement res = sum.isZero() ? FreeElement() : ctr_->project(out, ctr_->big.reduce(sum));
  ops_.emplace(std::move(key), res);
  return res;
}

FreeElement AInfModule::mu(const BasisTuple& xs, BasisRef y) const {
  std::vector<int> degs;
  long shifted = 0;
  for (const auto& x : xs) {
    degs.push_back(x.deg);
    shifted += x.deg + 1;
  }
  degs.push_back(y.deg);
  const int n = static_cast<int>(xs.size()) + 1;
  bool odd = unsuspendSign(degs, n) != (shifted % 2 == 0);
  return negIf(odd, b(xs, y));
}

// ------------------------------------------------------------ checks

std::vector<BasisTuple> basisTuples(const GradedFreeComplex& C, int n, int minDeg, int maxSum) {
  std::vector<BasisTuple> out;
  BasisTuple cur;
  auto rec = [&](auto&& self, int left, int budget) -> void {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (int d = minDeg; d <= C.top() && d <= budget; ++d)
      for (int i = 0; i < C.rank(d); ++i) {
        cur.push_back({d, i});
        self(self, left - 1, budget - d);
        cur.pop_back();
      }
  };
  if (n >= 0 && maxSum >= 0) rec(rec, n, maxSum);
  return out;
}

namespace {

std::string show(const BasisTuple& xs) {
  std::string s = "(";
  for (std::size_t k = 0; k < xs.size(); ++k) {
    if (k) s += ", ";
    s += std::to_string(xs[k].deg) + ":" + std::to_string(xs[k].idx);
  }
  return s + ")";
}

// Outer operation applied with one slot replaced by the element v of degree dv.
template <class Op>
FreeElement substitute(const BasisTuple& xs, std::size_t r, std::size_t s, int dv, const FreeElement& v, Op&& op) {
  FreeElement acc;
  for (const auto& [j, c] : v.entries()) {
    BasisTuple t = slice(xs, 0, r);
    t.push_back({dv, j});
    t.insert(t.end(), xs.begin() + static_cast<long>(r + s), xs.end());
    acc += op(t).times(c);
  }
  return acc;
}

}  // namespace

StructureReport stasheffCheck(const AInfAlgebra& A, int n, SignConvention conv) {
  StructureReport rep;
  const GradedFreeComplex& S = A.complex();
  const bool susp = conv == SignConvention::Suspended;
  auto op = [&](const BasisTuple& t) { return susp ? A.b(t) : A.m(t); };
  for (const auto& xs : basisTuples(S, n, 0, S.top() - n + 3)) {
    ++rep.checked;
    FreeElement total;
    for (int s = 1; s <= n; ++s)
      for (int r = 0; r + s <= n; ++r) {
        const int t = n - r - s;
        BasisTuple inner = slice(xs, r, r + s);
        FreeElement v = op(inner);
        if (v.isZero()) continue;
        const int dv = degSum(inner, 0, inner.size()) + s - 2;
        long sign;
        if (susp) {
          sign = degSum(xs, 0, r) + r;
        } else {
          sign = r + static_cast<long>(s) * t + static_cast<long>(s) * degSum(xs, 0, r);
        }
        total += negIf(sign % 2, S.reduce(substitute(xs, r, s, dv, v, op)));
      }
    if (!total.isZero()) rep.fail("Stasheff identity " + std::to_string(n) + " fails on " + show(xs));
  }
  return rep;
}

StructureReport stasheffCheck(const AInfModule& M, int n, SignConvention conv) {
  StructureReport rep;
  const GradedFreeComplex& X = M.algebra().complex();
  const GradedFreeComplex& Y = M.complex();
  const bool susp = conv == SignConvention::Suspended;
  auto aop = [&](const BasisTuple& t) { return susp ? M.algebra().b(t) : M.algebra().m(t); };
  // module operations take the tuple with y as its last entry
  auto mop = [&](const BasisTuple& t) {
    BasisTuple xs = slice(t, 0, t.size() - 1);
    return susp ? M.b(xs, t.back()) : M.mu(xs, t.back());
  };
  for (int yd = 0; yd <= Y.top(); ++yd)
    for (int yi = 0; yi < Y.rank(yd); ++yi)
      for (const auto& xs0 : basisTuples(X, n - 1, 0, Y.top() - n + 3 - yd)) {
        BasisTuple xs = xs0;
        xs.push_back({yd, yi});
        ++rep.checked;
        FreeElement total;
        for (int s = 1; s <= n; ++s)
          for (int r = 0; r + s <= n; ++r) {
            const int t = n - r - s;
            BasisTuple inner = slice(xs, r, r + s);
            const bool moduleInner = t == 0;
            FreeElement v = moduleInner ? mop(inner) : aop(inner);
            if (v.isZero()) continue;
            const int dv = degSum(inner, 0, inner.size()) + s - 2;
            long sign = susp ? degSum(xs, 0, r) + r
                             : r + static_cast<long>(s) * t + static_cast<long>(s) * degSum(xs, 0, r);
            total += negIf(sign % 2, Y.reduce(substitute(xs, r, s, dv, v, mop)));
          }
        if (!total.isZero()) rep.fail("module Stasheff identity " + std::to_string(n) + " fails on " + show(xs));
      }
  return rep;
}

StructureReport checkStrictUnit(const AInfAlgebra& A, int arity) {
  StructureReport rep;
  const GradedFreeComplex& S = A.complex();
  const RingPtr& r = S.ring();
  const BasisRef one{0, 0};
  for (int d = 0; d <= S.top(); ++d)
    for (int i = 0; i < S.rank(d); ++i) {
      ++rep.checked;
      FreeElement e = FreeElement::basis(r, i);
      if (!(A.m({one, {d, i}}) == e) || !(A.m({{d, i}, one}) == e))
        rep.fail("unit is not two-sided on " + show({{d, i}}));
    }
  for (int n = 3; n <= arity; ++n)
    for (const auto& xs : basisTuples(S, n, 0, S.top() - n + 2)) {
      bool hasUnit = false;
      for (const auto& x : xs) hasUnit |= x.deg == 0;
      if (!hasUnit) continue;
      ++rep.checked;
      if (!A.m(xs).isZero()) rep.fail("higher operation does not vanish on the unit at " + show(xs));
    }
  return rep;
}

StructureReport checkStrictUnit(const AInfModule& M, int arity) {
  StructureReport rep;
  const GradedFreeComplex& X = M.algebra().complex();
  const GradedFreeComplex& Y = M.complex();
  const RingPtr& r = Y.ring();
  for (int d = 0; d <= Y.top(); ++d)
    for (int i = 0; i < Y.rank(d); ++i) {
      ++rep.checked;
      if (!(M.mu({{0, 0}}, {d, i}) == FreeElement::basis(r, i))) rep.fail("unit does not act as the identity");
      for (int n = 3; n <= arity; ++n)
        for (const auto& xs : basisTuples(X, n - 1, 0, Y.top() - n + 2 - d)) {
          bool hasUnit = false;
          for (const auto& x : xs) hasUnit |= x.deg == 0;
          if (!hasUnit) continue;
          ++rep.checked;
          if (!M.mu(xs, {d, i}).isZero()) rep.fail("higher module operation does not vanish on the unit");
        }
    }
  return rep;
}

namespace {
bool allInMaximalIdeal(const FreeElement& v) {
  for (const auto& [j, p] : v.entries())
    for (const auto& t : p.terms())
      if (t.m.isOne()) return false;
  return true;
}
}  // namespace

StructureReport checkMinimalOps(const AInfAlgebra& A, int arity) {
  StructureReport rep;
  const GradedFreeComplex& S = A.complex();
  for (int n = 2; n <= arity; ++n)
    for (const auto& xs : basisTuples(S, n, 1, S.top() - n + 2)) {
      ++rep.checked;
      if (!allInMaximalIdeal(A.m(xs))) rep.fail("operation with a unit coefficient at " + show(xs));
    }
  return rep;
}

StructureReport checkMinimalOps(const AInfModule& M, int arity) {
  StructureReport rep;
  const GradedFreeComplex& X = M.algebra().complex();
  const GradedFreeComplex& Y = M.complex();
  for (int n = 2; n <= arity; ++n)
    for (int d = 0; d <= Y.top(); ++d)
      for (int i = 0; i < Y.rank(d); ++i)
        for (const auto& xs : basisTuples(X, n - 1, 1, Y.top() - n + 2 - d)) {
          ++rep.checked;
          if (!allInMaximalIdeal(M.mu(xs, {d, i}))) rep.fail("module operation with a unit coefficient");
        }
  return rep;
}

}  // namespace burch
