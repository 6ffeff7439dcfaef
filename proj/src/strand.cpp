#include "burch/strand.hpp"

#include <algorithm>
#include <numeric>

#include "burch/contraction.hpp"
#include "burch/error.hpp"

namespace burch {

StrandIndex::StrandIndex(QuotientPtr R, std::vector<int> basisDegrees)
    : R_(std::move(R)), degrees_(std::move(basisDegrees)) {
  if (!R_->isArtinian()) throw InputError("strand linear algebra needs an Artinian quotient");
  if (degrees_.empty()) return;
  const int top = R_->topDegree();
  minDeg_ = *std::min_element(degrees_.begin(), degrees_.end());
  maxDeg_ = *std::max_element(degrees_.begin(), degrees_.end()) + top;
  for (int D = minDeg_; D <= maxDeg_; ++D) {
    std::vector<int> off(degrees_.size(), -1);
    std::vector<std::pair<int, int>> blocks;
    int total = 0;
    for (std::size_t j = 0; j < degrees_.size(); ++j) {
      int e = D - degrees_[j];
      if (e < 0 || e > top || R_->basis(e).empty()) continue;
      off[j] = total;
      blocks.emplace_back(total, static_cast<int>(j));
      total += static_cast<int>(R_->basis(e).size());
    }
    offset_.push_back(std::move(off));
    blocks_.push_back(std::move(blocks));
    dims_.push_back(total);
  }
}

int StrandIndex::dim(int D) const {
  if (D < minDeg_ || D > maxDeg_) return 0;
  return dims_[D - minDeg_];
}

int StrandIndex::totalDim() const { return std::accumulate(dims_.begin(), dims_.end(), 0); }

int StrandIndex::offsetOf(int D, int j) const {
  if (D < minDeg_ || D > maxDeg_) return -1;
  return offset_[D - minDeg_][j];
}

int StrandIndex::index(int j, Monomial u) const {
  int D = u.degree() + degrees_[j];
  if (D < minDeg_ || D > maxDeg_) return -1;
  int off = offset_[D - minDeg_][j];
  int k = R_->indexOf(u);
  if (off < 0 || k < 0) return -1;
  return off + k;
}

std::pair<int, Monomial> StrandIndex::element(int D, int k) const {
  const auto& blocks = blocks_[D - minDeg_];
  auto it = std::upper_bound(blocks.begin(), blocks.end(), std::make_pair(k, rank()));
  if (it == blocks.begin() || k >= dims_[D - minDeg_]) throw InternalError("strand index out of range");
  --it;
  int j = it->second;
  return {j, R_->basis(D - degrees_[j])[k - it->first]};
}

SparseVec StrandIndex::toVector(const FreeElement& v, int D) const { return toVector(Monomial(), v, D); }

SparseVec StrandIndex::toVector(Monomial u, const FreeElement& v, int D) const {
  std::vector<std::pair<int, Coeff>> raw;
  if (D < minDeg_ || D > maxDeg_) return {};
  const PrimeField& F = R_->field();
  const int ud = u.degree();
  for (const auto& [j, p] : v.entries()) {
    int off = offset_[D - minDeg_][j];
    if (off < 0) continue;
    for (const auto& t : p.terms()) {
      if (t.m.degree() + ud + degrees_[j] != D) continue;
      for (const auto& [k, c] : R_->normalFormOf(u * t.m)) raw.emplace_back(off + k, F.mul(c, t.c));
    }
  }
  return canonicalVec(std::move(raw), F);
}

FreeElement StrandIndex::toElement(const SparseVec& v, int D) const {
  std::vector<std::vector<Term>> byBasis(rank());
  for (const auto& [k, c] : v) {
    auto [j, u] = element(D, k);
    byBasis[j].push_back({u, c});
  }
  std::vector<FreeElement::Entry> e;
  for (int j = 0; j < rank(); ++j)
    if (!byBasis[j].empty()) e.emplace_back(j, Polynomial::fromTerms(R_->ring(), std::move(byBasis[j])));
  return FreeElement::fromEntries(std::move(e));
}

namespace {

// x_v * w for a strand vector w in degree D, as a vector in degree D + 1
SparseVec multiplyVar(const StrandIndex& S, const SparseVec& w, int D, int var) {
  std::vector<std::pair<int, Coeff>> raw;
  const PrimeField& F = S.ring().field();
  const Monomial xv = Monomial::var(var);
  if (D + 1 > S.maxDegree()) return {};
  for (const auto& [k, c] : w) {
    auto [j, u] = S.element(D, k);
    Monomial m = u * xv;
    int base = S.offsetOf(D + 1, j);
    if (base < 0) continue;
    for (const auto& [kk, cc] : S.ring().normalFormOf(m)) raw.emplace_back(base + kk, F.mul(c, cc));
  }
  return canonicalVec(std::move(raw), F);
}

// Images u * g in degree D for every generator g of degree <= D, optionally
// only with deg u >= 1.
std::vector<SparseVec> spanInDegree(const StrandIndex& F, const std::vector<FreeElement>& gens,
                                    const std::vector<int>& degs, int D, bool positiveOnly) {
  std::vector<SparseVec> out;
  const QuotientRing& R = F.ring();
  for (std::size_t g = 0; g < gens.size(); ++g) {
    int e = D - degs[g];
    if (e < (positiveOnly ? 1 : 0) || e > R.topDegree()) continue;
    for (Monomial u : R.basis(e)) {
      SparseVec v = F.toVector(u, gens[g], D);
      if (!v.empty()) out.push_back(std::move(v));
    }
  }
  return out;
}

}  // namespace

std::vector<SparseVec> strandMap(const PolyMatrix& d, const StrandIndex& src, const StrandIndex& tgt, int D) {
  std::vector<SparseVec> cols;
  int n = src.dim(D);
  cols.reserve(n);
  for (int k = 0; k < n; ++k) {
    auto [j, u] = src.element(D, k);
    cols.push_back(tgt.toVector(u, d.column(j), D));
  }
  return cols;
}

std::vector<long> homologyDims(const GradedFreeComplex& C) {
  if (!C.quotient()) throw InputError("homology dimensions need a complex over an Artinian quotient");
  const QuotientPtr& R = C.quotient();
  const PrimeField& F = R->field();
  const int top = C.top();
  std::vector<StrandIndex> S;
  for (int n = 0; n <= top; ++n) S.emplace_back(R, C.degrees(n));
  // rank of d_n summed over internal degrees
  std::vector<long> rk(top + 2, 0);
  for (int n = 1; n <= top; ++n)
    for (int D = S[n].minDegree(); D <= S[n].maxDegree(); ++D)
      rk[n] += rankOf(strandMap(C.diff(n), S[n], S[n - 1], D), F);
  std::vector<long> h;
  for (int n = 0; n < top; ++n) h.push_back(S[n].totalDim() - rk[n] - rk[n + 1]);
  return h;
}

long quotientDim(const StrandIndex& F, const PolyMatrix& relations, const StrandIndex& rel) {
  long total = 0;
  for (int D = F.minDegree(); D <= F.maxDegree(); ++D)
    total += F.dim(D) - rankOf(strandMap(relations, rel, F, D), F.ring().field());
  return total;
}

std::vector<int> minimalGeneratorsStrand(const StrandIndex& F, const std::vector<FreeElement>& gens,
                                         const std::vector<int>& genDegrees) {
  std::vector<int> order(gens.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return genDegrees[a] < genDegrees[b]; });
  std::vector<int> kept;
  std::vector<FreeElement> keptGens;
  std::vector<int> keptDegs;
  std::size_t pos = 0;
  while (pos < order.size()) {
    int D = genDegrees[order[pos]];
    Echelon e(F.ring().field());
    for (auto& v : spanInDegree(F, keptGens, keptDegs, D, true)) e.insert(std::move(v));
    for (; pos < order.size() && genDegrees[order[pos]] == D; ++pos) {
      int g = order[pos];
      if (e.insert(F.toVector(gens[g], D))) {
        kept.push_back(g);
        keptGens.push_back(gens[g]);
        keptDegs.push_back(D);
      }
    }
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

int kRankSubmoduleStrand(const StrandIndex& F, const std::vector<FreeElement>& gens,
                         const std::vector<int>& genDegrees) {
  const PrimeField& P = F.ring().field();
  const int nv = F.ring().ring()->nvars();
  int total = 0;
  for (int D = F.minDegree(); D <= F.maxDegree(); ++D) {
    Echelon N(P);
    for (auto& v : spanInDegree(F, gens, genDegrees, D, false)) N.insert(std::move(v));
    if (N.rank() == 0) continue;
    Echelon mN(P);
    for (auto& v : spanInDegree(F, gens, genDegrees, D, true)) mN.insert(std::move(v));
    // socle: combinations of the rows of N killed by every variable
    const int next = F.dim(D + 1);
    std::vector<SparseVec> images;
    for (const auto& row : N.rows()) {
      std::vector<std::pair<int, Coeff>> raw;
      for (int v = 0; v < nv; ++v)
        for (const auto& [k, c] : multiplyVar(F, row, D, v)) raw.emplace_back(v * next + k, c);
      images.push_back(canonicalVec(std::move(raw), P));
    }
    int before = mN.rank();
    for (const auto& comb : kernelBasis(images, P)) {
      SparseVec s;
      for (const auto& [r, c] : comb) axpy(s, c, N.rows()[r], P);
      mN.insert(std::move(s));
    }
    total += mN.rank() - before;
  }
  return total;
}

GradedFreeComplex resolveArtinian(QuotientPtr R, const std::vector<int>& genDegrees, const PolyMatrix& relations,
                                  int upTo) {
  const RingPtr& ring = R->ring();
  const PrimeField& P = R->field();
  GradedFreeComplex C(ring, R);
  C.setModule(0, genDegrees);
  if (upTo < 1) return C;
  StrandIndex F0(R, genDegrees);
  std::vector<FreeElement> rels;
  std::vector<int> relDegs;
  for (int c = 0; c < relations.cols(); ++c) {
    FreeElement v = R->reduce(relations.column(c));
    if (v.isZero()) continue;
    rels.push_back(v);
    relDegs.push_back(relations.colDegrees()[c]);
  }
  std::vector<int> keep = minimalGeneratorsStrand(F0, rels, relDegs);
  {
    std::vector<int> deg;
    for (int g : keep) deg.push_back(relDegs[g]);
    C.setModule(1, deg);
    PolyMatrix d(ring, genDegrees, deg);
    for (std::size_t k = 0; k < keep.size(); ++k) d.setColumn(static_cast<int>(k), rels[keep[k]]);
    C.setDiff(1, std::move(d));
  }
  for (int i = 1; i < upTo && C.rank(i) > 0; ++i) {
    StrandIndex Fi(R, C.degrees(i)), Fprev(R, C.degrees(i - 1));
    std::vector<int> newDegs;
    std::vector<FreeElement> newCols;
    std::vector<SparseVec> prevKernel;
    for (int D = Fi.minDegree(); D <= Fi.maxDegree(); ++D) {
      std::vector<SparseVec> ker = kernelBasis(strandMap(C.diff(i), Fi, Fprev, D), P);
      Echelon e(P);
      const int nv = ring->nvars();
      for (const auto& z : prevKernel)
        for (int v = 0; v < nv; ++v) e.insert(multiplyVar(Fi, z, D - 1, v));
      for (const auto& z : ker)
        if (e.insert(z)) {
          newDegs.push_back(D);
          newCols.push_back(Fi.toElement(z, D));
        }
      prevKernel = std::move(ker);
    }
    C.setModule(i + 1, newDegs);
    PolyMatrix d(ring, C.degrees(i), newDegs);
    for (std::size_t k = 0; k < newCols.size(); ++k) d.setColumn(static_cast<int>(k), newCols[k]);
    C.setDiff(i + 1, std::move(d));
  }
  MinimalizeOptions opt;
  opt.trackHomotopy = false;
  opt.upTo = 1;
  return minimalize(C, opt).small;
}

}  // namespace burch
