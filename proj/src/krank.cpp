#include "burch/krank.hpp"

#include <map>

#include "burch/error.hpp"
#include "burch/linalg.hpp"
#include "burch/strand.hpp"

namespace burch {

ModulePresentation ModulePresentation::cyclic(QuotientPtr R, const std::vector<Polynomial>& J) {
  const RingPtr& r = R->ring();
  std::vector<int> colDeg;
  std::vector<FreeElement> cols;
  for (const auto& f : J) {
    if (f.isZero()) continue;
    if (!f.isHomogeneous()) throw InputError("module relations must be homogeneous");
    colDeg.push_back(f.degree());
    cols.push_back(FreeElement::fromEntries({{0, f}}));
  }
  PolyMatrix m(r, {0}, colDeg);
  for (std::size_t c = 0; c < cols.size(); ++c) m.setColumn(static_cast<int>(c), cols[c]);
  return {std::move(R), {0}, std::move(m)};
}

ModulePresentation ModulePresentation::residueField(QuotientPtr R) {
  std::vector<Polynomial> vars;
  for (int k = 0; k < R->ring()->nvars(); ++k) vars.push_back(Polynomial::variable(R->ring(), k));
  return cyclic(std::move(R), vars);
}

ModulePresentation ModulePresentation::freeModule(QuotientPtr R, std::vector<int> degrees) {
  PolyMatrix m(R->ring(), degrees, {});
  return {std::move(R), std::move(degrees), std::move(m)};
}

ModulePresentation ModulePresentation::directSum(const ModulePresentation& a, const ModulePresentation& b) {
  std::vector<int> deg = a.genDegrees;
  deg.insert(deg.end(), b.genDegrees.begin(), b.genDegrees.end());
  std::vector<int> colDeg = a.relations.colDegrees();
  colDeg.insert(colDeg.end(), b.relations.colDegrees().begin(), b.relations.colDegrees().end());
  PolyMatrix m(a.R->ring(), deg, colDeg);
  const int ga = a.generators();
  for (int c = 0; c < a.relations.cols(); ++c) m.setColumn(c, a.relations.column(c));
  for (int c = 0; c < b.relations.cols(); ++c) {
    std::vector<FreeElement::Entry> e;
    for (const auto& [j, p] : b.relations.column(c).entries()) e.emplace_back(j + ga, p);
    m.setColumn(a.relations.cols() + c, FreeElement::fromEntries(std::move(e)));
  }
  return {a.R, std::move(deg), std::move(m)};
}

void ModulePresentation::validate() const {
  if (static_cast<int>(relations.rowDegrees().size()) != generators())
    throw InputError("relation matrix has the wrong number of rows");
  if (!relations.isHomogeneous()) throw InputError("module relations must be homogeneous");
}

namespace {

// N' = N + I F as a list of columns with degrees
void extendedRelations(const ModulePresentation& M, std::vector<FreeElement>& cols, std::vector<int>& degs) {
  for (int c = 0; c < M.relations.cols(); ++c) {
    if (M.relations.column(c).isZero()) continue;
    cols.push_back(M.relations.column(c));
    degs.push_back(M.relations.colDegrees()[c]);
  }
  for (const auto& f : M.R->ideal().gens())
    for (int j = 0; j < M.generators(); ++j) {
      cols.push_back(FreeElement::fromEntries({{j, f}}));
      degs.push_back(f.degree() + M.genDegrees[j]);
    }
}

SparseVec constantPart(const FreeElement& v) {
  SparseVec out;
  for (const auto& [j, p] : v.entries()) {
    Coeff c = p.constantTerm();
    if (c) out.emplace_back(j, c);
  }
  return out;
}

}  // namespace

int kRank(const ModulePresentation& M) {
  M.validate();
  const RingPtr& r = M.R->ring();
  const PrimeField& P = r->field;
  const int g = M.generators();
  const int nv = r->nvars();
  if (g == 0) return 0;
  std::vector<FreeElement> N;
  std::vector<int> nd;
  extendedRelations(M, N, nd);
  // columns: f in F (g of them), then one copy of N per variable
  std::vector<int> rowDeg, colDeg;
  for (int v = 0; v < nv; ++v) rowDeg.insert(rowDeg.end(), M.genDegrees.begin(), M.genDegrees.end());
  for (int j = 0; j < g; ++j) colDeg.push_back(M.genDegrees[j]);
  for (int v = 0; v < nv; ++v) colDeg.insert(colDeg.end(), nd.begin(), nd.end());
  PolyMatrix A(r, rowDeg, colDeg);
  for (int j = 0; j < g; ++j) {
    std::vector<FreeElement::Entry> e;
    for (int v = 0; v < nv; ++v) e.emplace_back(v * g + j, Polynomial::variable(r, v));
    A.setColumn(j, FreeElement::fromEntries(std::move(e)));
  }
  const int nn = static_cast<int>(N.size());
  for (int v = 0; v < nv; ++v)
    for (int c = 0; c < nn; ++c) {
      std::vector<FreeElement::Entry> e;
      for (const auto& [j, p] : N[c].entries()) e.emplace_back(v * g + j, p);
      A.setColumn(g + v * nn + c, FreeElement::fromEntries(std::move(e)));
    }
  Submodule syz = syzygies(A);
  Echelon colon(P), base(P);
  for (const auto& n : N) {
    colon.insert(constantPart(n));
    base.insert(constantPart(n));
  }
  for (const auto& s : syz.gens()) {
    std::vector<FreeElement::Entry> e;
    for (const auto& [j, p] : s.entries())
      if (j < g) e.emplace_back(j, p);
    colon.insert(constantPart(FreeElement::fromEntries(std::move(e))));
  }
  return colon.rank() - base.rank();
}

long moduleDim(const ModulePresentation& M) {
  M.validate();
  if (M.generators() == 0) return 0;
  StrandIndex F(M.R, M.genDegrees);
  StrandIndex rel(M.R, M.relations.colDegrees());
  return quotientDim(F, M.relations, rel);
}

int kRankStrand(const ModulePresentation& M) {
  M.validate();
  if (M.generators() == 0) return 0;
  const QuotientRing& R = *M.R;
  const PrimeField& P = R.field();
  const int nv = R.ring()->nvars();
  StrandIndex F(M.R, M.genDegrees);
  StrandIndex rel(M.R, M.relations.colDegrees());
  std::map<int, Echelon> N;
  auto relSpan = [&](int D) -> const Echelon& {
    auto it = N.find(D);
    if (it != N.end()) return it->second;
    Echelon e(P);
    for (auto& v : strandMap(M.relations, rel, F, D)) e.insert(std::move(v));
    return N.emplace(D, std::move(e)).first->second;
  };
  int total = 0;
  for (int D = F.minDegree(); D <= F.maxDegree(); ++D) {
    const int dim = F.dim(D), next = F.dim(D + 1);
    if (dim == 0) continue;
    const Echelon& ND = relSpan(D);
    const Echelon& N1 = relSpan(D + 1);
    // A = mF + N in degree D
    Echelon A(P);
    for (const auto& row : ND.rows()) A.insert(row);
    for (int k = 0; k < dim; ++k)
      if (!F.element(D, k).second.isOne()) A.insert({{k, 1}});
    // preimage of the socle: x_v f in N for all v
    std::vector<SparseVec> images;
    for (int k = 0; k < dim; ++k) {
      auto [j, u] = F.element(D, k);
      std::vector<std::pair<int, Coeff>> raw;
      for (int v = 0; v < nv; ++v) {
        FreeElement e = FreeElement::basis(R.ring(), j);
        SparseVec w = F.toVector(u * Monomial::var(v), e, D + 1);
        N1.reduce(w);
        for (const auto& [i, c] : w) raw.emplace_back(v * next + i, c);
      }
      images.push_back(canonicalVec(std::move(raw), P));
    }
    int before = A.rank();
    for (auto& s : kernelBasis(images, P)) A.insert(std::move(s));
    total += A.rank() - before;
  }
  return total;
}

int kRankBruteForce(const ModulePresentation& M, int cap) {
  M.validate();
  const RingPtr& r = M.R->ring();
  const PrimeField& P = r->field;
  const int nv = r->nvars();
  const int g = M.generators();
  if (g == 0) return 0;
  const auto& Igens = M.R->ideal().gens();
  // smallest T with n^T inside I, found by spanning monomial multiples
  int T = -1;
  for (int d = 0; d <= 64 && T < 0; ++d) {
    std::vector<Monomial> mons = monomialsOfDegree(nv, d);
    std::map<std::uint64_t, int> idx;
    for (std::size_t k = 0; k < mons.size(); ++k) idx[mons[k].raw()] = static_cast<int>(k);
    Echelon e(P);
    for (const auto& f : Igens) {
      int fd = f.degree();
      if (fd > d) continue;
      for (Monomial u : monomialsOfDegree(nv, d - fd)) {
        std::vector<std::pair<int, Coeff>> raw;
        for (const auto& t : f.terms())
          if (t.m.degree() == fd) raw.emplace_back(idx.at((u * t.m).raw()), t.c);
        e.insert(canonicalVec(std::move(raw), P));
      }
    }
    if (e.rank() == static_cast<int>(mons.size())) T = d;
  }
  if (T < 0) throw InputError("brute-force k-rank needs an Artinian ring");

  // V = (Q / n^T)^g with a monomial basis
  std::map<std::pair<int, std::uint64_t>, int> vIdx;
  std::vector<std::pair<int, Monomial>> vBasis;
  for (int j = 0; j < g; ++j)
    for (int d = 0; d < T; ++d)
      for (Monomial u : monomialsOfDegree(nv, d)) {
        vIdx[{j, u.raw()}] = static_cast<int>(vBasis.size());
        vBasis.emplace_back(j, u);
      }
  auto embed = [&](Monomial u, const FreeElement& v) {
    std::vector<std::pair<int, Coeff>> raw;
    for (const auto& [j, p] : v.entries())
      for (const auto& t : p.terms()) {
        if (t.m.degree() + u.degree() >= T) continue;
        raw.emplace_back(vIdx.at({j, (u * t.m).raw()}), t.c);
      }
    return canonicalVec(std::move(raw), P);
  };
  std::vector<FreeElement> rels;
  for (int c = 0; c < M.relations.cols(); ++c) rels.push_back(M.relations.column(c));
  for (const auto& f : Igens)
    for (int j = 0; j < g; ++j) rels.push_back(FreeElement::fromEntries({{j, f}}));
  Echelon W(P);
  for (const auto& rel : rels) {
    int low = T;
    for (const auto& [j, p] : rel.entries()) low = std::min(low, p.lowDegree());
    for (int d = 0; d + low < T; ++d)
      for (Monomial u : monomialsOfDegree(nv, d)) W.insert(embed(u, rel));
  }
  std::vector<int> mBasis;
  std::map<int, int> mPos;
  for (int k = 0; k < static_cast<int>(vBasis.size()); ++k)
    if (!W.isPivot(k)) {
      mPos[k] = static_cast<int>(mBasis.size());
      mBasis.push_back(k);
    }
  const int m = static_cast<int>(mBasis.size());
  if (m > cap) throw ResourceError("module dimension " + std::to_string(m) + " exceeds the brute-force cap");

  // action matrices on the basis of M
  std::vector<std::vector<SparseVec>> act(nv, std::vector<SparseVec>(m));
  for (int v = 0; v < nv; ++v)
    for (int b = 0; b < m; ++b) {
      auto [j, u] = vBasis[mBasis[b]];
      SparseVec w = embed(u * Monomial::var(v), FreeElement::basis(r, j));
      W.reduce(w);
      SparseVec out;
      for (const auto& [k, c] : w) out.emplace_back(mPos.at(k), c);
      act[v][b] = canonicalVec(std::move(out), P);
    }
  Echelon rad(P);
  for (int v = 0; v < nv; ++v)
    for (const auto& col : act[v]) rad.insert(col);
  std::vector<SparseVec> stacked(m);
  for (int b = 0; b < m; ++b) {
    std::vector<std::pair<int, Coeff>> raw;
    for (int v = 0; v < nv; ++v)
      for (const auto& [k, c] : act[v][b]) raw.emplace_back(v * m + k, c);
    stacked[b] = canonicalVec(std::move(raw), P);
  }
  int before = rad.rank();
  for (auto& s : kernelBasis(stacked, P)) rad.insert(std::move(s));
  return rad.rank() - before;
}

std::vector<SyzygyRow> syzygyKRanks(const ModulePresentation& M, int upTo) {
  M.validate();
  GradedFreeComplex F = resolveArtinian(M.R, M.genDegrees, M.relations, upTo);
  std::vector<SyzygyRow> rows;
  rows.push_back({0, F.rank(0), kRankStrand(M)});
  for (int i = 1; i <= upTo; ++i) {
    SyzygyRow row;
    row.i = i;
    row.betti = F.rank(i);
    if (row.betti > 0) {
      StrandIndex prev(M.R, F.degrees(i - 1));
      row.kRank = kRankSubmoduleStrand(prev, F.diff(i).columns(), F.degrees(i));
    }
    rows.push_back(row);
  }
  return rows;
}

int syzygyKRankByPresentation(const GradedFreeComplex& F, int i) {
  if (F.rank(i) == 0) return 0;
  PolyMatrix rel = i + 1 <= F.top() ? F.diff(i + 1) : PolyMatrix(F.ring(), F.degrees(i), {});
  ModulePresentation M{F.quotient(), F.degrees(i), rel};
  return kRankStrand(M);
}

}  // namespace burch
