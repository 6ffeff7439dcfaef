#include "burch/resolution.hpp"

#include <set>

#include "burch/contraction.hpp"
#include "burch/error.hpp"
#include "burch/strand.hpp"

namespace burch {

namespace {

std::vector<FreeElement> nonzeroColumns(const PolyMatrix& m, std::vector<int>& degs, const QuotientRing* R) {
  std::vector<FreeElement> out;
  for (int c = 0; c < m.cols(); ++c) {
    FreeElement v = R ? R->reduce(m.column(c)) : m.column(c);
    if (v.isZero()) continue;
    out.push_back(std::move(v));
    degs.push_back(m.colDegrees()[c]);
  }
  return out;
}

void appendModule(GradedFreeComplex& C, int n, const std::vector<FreeElement>& cols, const std::vector<int>& degs) {
  C.setModule(n, degs);
  PolyMatrix d(C.ring(), C.degrees(n - 1), degs);
  for (std::size_t k = 0; k < cols.size(); ++k) d.setColumn(static_cast<int>(k), cols[k]);
  C.setDiff(n, std::move(d));
}

GradedFreeComplex minimalizeFirst(const GradedFreeComplex& C) {
  MinimalizeOptions opt;
  opt.trackHomotopy = false;
  opt.upTo = 1;
  return minimalize(C, opt).small;
}

}  // namespace

GradedFreeComplex resolveOverQ(const RingPtr& r, const std::vector<int>& genDegrees, const PolyMatrix& relations,
                               int upTo) {
  GradedFreeComplex C(r);
  C.setModule(0, genDegrees);
  if (upTo < 1) return C;
  std::vector<int> degs;
  std::vector<FreeElement> cols = nonzeroColumns(relations, degs, nullptr);
  std::vector<FreeElement> keep;
  std::vector<int> keepDeg;
  for (int k : minimalGeneratorIndices(r, cols, genDegrees)) {
    keep.push_back(cols[k]);
    keepDeg.push_back(degs[k]);
  }
  appendModule(C, 1, keep, keepDeg);
  for (int i = 1; i < upTo && C.rank(i) > 0; ++i) {
    Submodule syz = syzygies(C.diff(i));
    std::vector<FreeElement> next;
    std::vector<int> nextDeg;
    for (int k : minimalGeneratorIndices(r, syz.gens(), C.degrees(i))) {
      next.push_back(syz.gens()[k]);
      nextDeg.push_back(syz.gens()[k].degree(C.degrees(i)));
    }
    if (next.empty()) break;
    appendModule(C, i + 1, next, nextDeg);
  }
  return minimalizeFirst(C);
}

GradedFreeComplex resolveOverR(const ModulePresentation& M, int upTo) {
  M.validate();
  if (M.R->isArtinian()) return resolveArtinian(M.R, M.genDegrees, M.relations, upTo);
  return resolveOverRLifted(M, upTo);
}

GradedFreeComplex resolveOverRLifted(const ModulePresentation& M, int upTo) {
  M.validate();
  const QuotientRing& R = *M.R;
  const RingPtr& r = R.ring();
  const auto& Igens = R.ideal().gens();
  GradedFreeComplex C(r, M.R);
  C.setModule(0, M.genDegrees);
  if (upTo < 1) return C;

  // chooses minimal generators over R of the image of cands in R^basis
  auto minimalOverR = [&](const std::vector<FreeElement>& cands, const std::vector<int>& candDegs,
                          const std::vector<int>& basis, std::vector<FreeElement>& out, std::vector<int>& outDeg) {
    std::vector<FreeElement> all;
    for (const auto& f : Igens)
      for (int j = 0; j < static_cast<int>(basis.size()); ++j) all.push_back(FreeElement::fromEntries({{j, f}}));
    const int offset = static_cast<int>(all.size());
    all.insert(all.end(), cands.begin(), cands.end());
    for (int k : minimalGeneratorIndices(r, all, basis))
      if (k >= offset) {
        out.push_back(cands[k - offset]);
        outDeg.push_back(candDegs[k - offset]);
      }
  };

  std::vector<int> degs;
  std::vector<FreeElement> cols = nonzeroColumns(M.relations, degs, &R);
  std::vector<FreeElement> keep;
  std::vector<int> keepDeg;
  minimalOverR(cols, degs, M.genDegrees, keep, keepDeg);
  appendModule(C, 1, keep, keepDeg);
  for (int i = 1; i < upTo && C.rank(i) > 0; ++i) {
    const PolyMatrix& A = C.diff(i);
    const int rows = A.rows(), k = A.cols();
    std::vector<int> colDeg = A.colDegrees();
    std::vector<FreeElement> extra;
    for (const auto& f : Igens)
      for (int j = 0; j < rows; ++j) {
        extra.push_back(FreeElement::fromEntries({{j, f}}));
        colDeg.push_back(f.degree() + A.rowDegrees()[j]);
      }
    PolyMatrix lifted(r, A.rowDegrees(), colDeg);
    for (int c = 0; c < k; ++c) lifted.setColumn(c, A.column(c));
    for (std::size_t e = 0; e < extra.size(); ++e) lifted.setColumn(k + static_cast<int>(e), extra[e]);
    std::vector<FreeElement> cands;
    std::vector<int> candDegs;
    Submodule syz = syzygies(lifted);
    for (const auto& s : syz.gens()) {
      std::vector<FreeElement::Entry> part;
      for (const auto& [j, p] : s.entries())
        if (j < k) part.emplace_back(j, p);
      FreeElement v = R.reduce(FreeElement::fromEntries(std::move(part)));
      if (v.isZero()) continue;
      candDegs.push_back(s.degree(colDeg));
      cands.push_back(std::move(v));
    }
    std::vector<FreeElement> next;
    std::vector<int> nextDeg;
    minimalOverR(cands, candDegs, C.degrees(i), next, nextDeg);
    if (next.empty()) break;
    appendModule(C, i + 1, next, nextDeg);
  }
  return minimalizeFirst(C);
}

bool exactOverQ(const GradedFreeComplex& C, int n) {
  if (n < 1 || n >= C.top()) throw InputError("exactness is checked for 1 <= n < top");
  if (C.rank(n) == 0) return true;
  Submodule B(C.ring(), C.degrees(n), C.diff(n + 1).columns());
  Submodule Z = syzygies(C.diff(n));
  for (const auto& z : Z.gens())
    if (!B.contains(z)) return false;
  return true;
}

// ------------------------------------------------------------ semifree

int SemifreeModule::indexOf(int n, int v, int ix) const {
  if (n < 0 || n >= static_cast<int>(offset_.size())) return -1;
  int off = offset_[n][v];
  return off < 0 ? -1 : off + ix;
}

FreeElement SemifreeModule::act(int nx, int ix, int ny, int iy) const {
  if (nx + ny > Y_.top()) throw StructuralError("action lands above the constructed range");
  auto [v, ixy] = basis_[ny][iy];
  int a = ny - gens_[v].hdeg;
  FreeElement prod = X_->multiply(nx, ix, a, ixy);
  std::vector<FreeElement::Entry> e;
  for (const auto& [i, p] : prod.entries()) e.emplace_back(indexOf(nx + ny, v, i), p);
  return FreeElement::fromEntries(std::move(e));
}

void SemifreeModule::adjoin(const std::vector<Generator>& gens, int top) {
  gens_.insert(gens_.end(), gens.begin(), gens.end());
  rebuild(top);
}

void SemifreeModule::rebuild(int top) {
  const GradedFreeComplex& X = X_->complex();
  const RingPtr& r = X.ring();
  const int nv = static_cast<int>(gens_.size());
  Y_ = GradedFreeComplex(r);
  offset_.assign(top + 1, std::vector<int>(nv, -1));
  basis_.assign(top + 1, {});
  for (int n = 0; n <= top; ++n) {
    std::vector<int> deg;
    for (int v = 0; v < nv; ++v) {
      int a = n - gens_[v].hdeg;
      if (a < 0 || a > X.top() || X.rank(a) == 0) continue;
      offset_[n][v] = static_cast<int>(basis_[n].size());
      for (int i = 0; i < X.rank(a); ++i) {
        basis_[n].emplace_back(v, i);
        deg.push_back(X.degrees(a)[i] + gens_[v].intDeg);
      }
    }
    Y_.setModule(n, deg);
  }
  const Coeff minus = r->field.prime() - 1;
  for (int n = 1; n <= top; ++n) {
    PolyMatrix d(r, Y_.degrees(n - 1), Y_.degrees(n));
    for (int k = 0; k < Y_.rank(n); ++k) {
      auto [v, ix] = basis_[n][k];
      const int b = gens_[v].hdeg, a = n - b;
      FreeElement col;
      if (a >= 1) {
        FreeElement dx = X.diff(a).column(ix);
        for (const auto& [i, p] : dx.entries())
          col += FreeElement::fromEntries({{indexOf(n - 1, v, i), p}});
      }
      if (b >= 1) {
        FreeElement t;
        for (const auto& [kk, c] : gens_[v].boundary.entries()) {
          auto [v2, ix2] = basis_[b - 1][kk];
          int a2 = b - 1 - gens_[v2].hdeg;
          FreeElement prod = X_->multiply(a, ix, a2, ix2);
          for (const auto& [i, p] : prod.entries())
            t += FreeElement::fromEntries({{indexOf(n - 1, v2, i), p * c}});
        }
        col += a % 2 ? t.scaled(minus) : t;
      }
      d.setColumn(k, col);
    }
    Y_.setDiff(n, std::move(d));
  }
}

namespace {

ChainMap firstSummandInclusion(const SemifreeModule& Y, const GradedFreeComplex& X) {
  ChainMap psi;
  const GradedFreeComplex& YC = Y.complex();
  for (int n = 0; n <= std::min(X.top(), YC.top()); ++n) {
    PolyMatrix m(X.ring(), YC.degrees(n), X.degrees(n));
    for (int i = 0; i < X.rank(n); ++i) m.setColumn(i, FreeElement::basis(X.ring(), Y.indexOf(n, 0, i)));
    psi.maps.push_back(std::move(m));
  }
  return psi;
}

bool monomialCyclic(const ModulePresentation& M) {
  if (M.generators() != 1 || M.genDegrees[0] != 0) return false;
  for (int c = 0; c < M.relations.cols(); ++c) {
    const FreeElement& v = M.relations.column(c);
    if (v.isZero()) continue;
    if (!v.at(0).isMonomial()) return false;
  }
  return true;
}

}  // namespace

DgModuleResolution semifreeResolution(const ModulePresentation& M, std::shared_ptr<const DgAlgebra> X, int upTo,
                                      long rankCap) {
  M.validate();
  const RingPtr& r = M.R->ring();
  auto Y = std::make_shared<SemifreeModule>(X);
  std::vector<SemifreeModule::Generator> g0;
  for (int d : M.genDegrees) g0.push_back({0, d, FreeElement()});
  Y->adjoin(g0, 0);
  std::vector<SemifreeModule::Generator> g1;
  for (int c = 0; c < M.relations.cols(); ++c) {
    const FreeElement& rel = M.relations.column(c);
    if (M.R->reduce(rel).isZero()) continue;
    std::vector<FreeElement::Entry> e;
    for (const auto& [j, p] : rel.entries()) e.emplace_back(Y->indexOf(0, j, 0), p);
    g1.push_back({1, M.relations.colDegrees()[c], FreeElement::fromEntries(std::move(e))});
  }
  Y->adjoin(g1, std::min(upTo, 1));
  for (int n = 1; n < upTo; ++n) {
    Y->adjoin({}, n + 1);
    const GradedFreeComplex& C = Y->complex();
    if (C.rank(n) > rankCap || C.rank(n + 1) > rankCap)
      throw ResourceError("semifree module resolution exceeds the rank cap in degree " + std::to_string(n + 1));
    if (C.rank(n) == 0) continue;
    Submodule Z = syzygies(C.diff(n));
    std::vector<FreeElement> all = C.diff(n + 1).columns();
    const int offset = static_cast<int>(all.size());
    all.insert(all.end(), Z.gens().begin(), Z.gens().end());
    std::vector<SemifreeModule::Generator> fresh;
    for (int k : minimalGeneratorIndices(r, all, C.degrees(n)))
      if (k >= offset) {
        const FreeElement& z = all[k];
        fresh.push_back({n + 1, z.degree(C.degrees(n)), z});
      }
    Y->adjoin(fresh, n + 1);
  }
  Y->adjoin({}, upTo);
  DgModuleResolution out;
  out.psi = firstSummandInclusion(*Y, X->complex());
  out.Y = Y;
  return out;
}

DgModuleResolution dgModuleResolution(const ModulePresentation& M, std::shared_ptr<const TaylorAlgebra> X, int upTo,
                                      long rankCap) {
  M.validate();
  if (monomialCyclic(M)) {
    std::vector<Monomial> gens = X->generators();
    for (int c = 0; c < M.relations.cols(); ++c) {
      const FreeElement& v = M.relations.column(c);
      if (v.isZero()) continue;
      Monomial m = v.at(0).leading().m;
      if (std::find(gens.begin(), gens.end(), m) == gens.end()) gens.push_back(m);
    }
    if (static_cast<int>(gens.size()) <= TaylorAlgebra::kMaxGenerators) {
      auto Yalg = std::make_shared<TaylorAlgebra>(X->complex().ring(), gens);
      auto mod = std::make_shared<TaylorModule>(X, Yalg);
      DgModuleResolution out;
      out.psi = mod->inclusion();
      out.Y = mod;
      out.taylorShortcut = true;
      return out;
    }
  }
  return semifreeResolution(M, X, upTo, rankCap);
}

StructureReport checkSplitInjection(const DgModule& Y, const ChainMap& psi) {
  StructureReport rep = checkDgModuleMap(Y, psi);
  for (std::size_t n = 0; n < psi.maps.size(); ++n) {
    std::set<int> seen;
    for (int i = 0; i < psi.maps[n].cols(); ++i) {
      ++rep.checked;
      const FreeElement& c = psi.maps[n].column(i);
      if (c.entries().size() != 1 || !(c.entries()[0].second == Polynomial::constant(Y.complex().ring(), 1)) ||
          !seen.insert(c.entries()[0].first).second)
        rep.fail("psi is not a basis inclusion in degree " + std::to_string(n));
    }
  }
  return rep;
}

}  // namespace burch
