#include "burch/contraction.hpp"

#include <map>
#include <set>

#include "burch/error.hpp"

namespace burch {

namespace {

using PMap = std::map<int, Polynomial>;

bool isScalar(const Polynomial& p) { return p.isMonomial() && p.leading().m.isOne(); }

PMap toMap(const FreeElement& v) {
  PMap m;
  for (const auto& [j, p] : v.entries()) m.emplace(j, p);
  return m;
}

FreeElement toFree(const PMap& m) {
  std::vector<FreeElement::Entry> e;
  for (const auto& [j, p] : m)
    if (!p.isZero()) e.emplace_back(j, p);
  return FreeElement::fromEntries(std::move(e));
}

// dst += f * src, reduced
void addScaled(PMap& dst, const PMap& src, const Polynomial& f, const GradedFreeComplex& C) {
  for (const auto& [k, p] : src) {
    Polynomial t = C.reduce(f * p);
    if (t.isZero()) continue;
    auto it = dst.find(k);
    if (it == dst.end()) {
      dst.emplace(k, std::move(t));
    } else {
      it->second += t;
      if (it->second.isZero()) dst.erase(it);
    }
  }
}

class Eliminator {
 public:
  Eliminator(const GradedFreeComplex& C, bool trackH) : C_(C), trackH_(trackH) {
    const int top = C.top();
    alive_.resize(top + 1);
    cols_.resize(top + 1);
    rowsOf_.resize(top + 1);
    icol_.resize(top + 1);
    if (trackH_) {
      prow_.resize(top + 1);
      hcol_.resize(top + 1);
    }
    const RingPtr& r = C.ring();
    for (int n = 0; n <= top; ++n) {
      int rk = C.rank(n);
      alive_[n].assign(rk, true);
      icol_[n].resize(rk);
      for (int c = 0; c < rk; ++c) icol_[n][c].emplace(c, Polynomial::constant(r, 1));
      if (trackH_) {
        prow_[n].resize(rk);
        hcol_[n].resize(rk);
        for (int c = 0; c < rk; ++c) prow_[n][c].emplace(c, Polynomial::constant(r, 1));
      }
      if (n >= 1) {
        cols_[n].resize(rk);
        rowsOf_[n].resize(C.rank(n - 1));
        for (int c = 0; c < rk; ++c)
          for (const auto& [row, p] : C.diff(n).column(c).entries()) {
            Polynomial q = C.reduce(p);
            if (q.isZero()) continue;
            cols_[n][c].emplace(row, std::move(q));
            rowsOf_[n][row].insert(c);
          }
      }
    }
  }

  void run(int upTo, std::vector<EliminationStep>& steps) {
    const int top = C_.top();
    const int last = upTo < 0 ? top : std::min(upTo, top);
    for (int n = 1; n <= last; ++n) {
      std::set<int> dirty;
      for (int a = 0; a < C_.rank(n - 1); ++a)
        if (alive_[n - 1][a]) dirty.insert(a);
      while (!dirty.empty()) {
        int a = *dirty.begin();
        int b = -1;
        for (int c : rowsOf_[n][a])
          if (isScalar(cols_[n][c].at(a))) {
            b = c;
            break;
          }
        if (b < 0) {
          dirty.erase(dirty.begin());
          continue;
        }
        eliminate(n, a, b, dirty, steps);
      }
    }
  }

  Contraction finish(std::vector<EliminationStep> steps) {
    Contraction out;
    out.big = C_;
    out.steps = std::move(steps);
    const RingPtr& r = C_.ring();
    const int top = C_.top();
    out.small = GradedFreeComplex(r, C_.quotient());
    std::vector<std::vector<int>> renum(top + 1);
    for (int n = 0; n <= top; ++n) {
      std::vector<int> deg;
      std::vector<int> surv;
      renum[n].assign(C_.rank(n), -1);
      for (int c = 0; c < C_.rank(n); ++c)
        if (alive_[n][c]) {
          renum[n][c] = static_cast<int>(surv.size());
          surv.push_back(c);
          deg.push_back(C_.degrees(n)[c]);
        }
      out.small.setModule(n, deg);
      out.survivors.push_back(std::move(surv));
    }
    for (int n = 1; n <= top; ++n) {
      PolyMatrix d(r, out.small.degrees(n - 1), out.small.degrees(n));
      for (int k = 0; k < out.small.rank(n); ++k) {
        std::vector<FreeElement::Entry> e;
        for (const auto& [row, p] : cols_[n][out.survivors[n][k]]) {
          if (renum[n - 1][row] < 0) throw InternalError("elimination left an entry in a removed row");
          e.emplace_back(renum[n - 1][row], p);
        }
        d.setColumn(k, FreeElement::fromEntries(std::move(e)));
      }
      out.small.setDiff(n, std::move(d));
    }
    for (int n = 0; n <= top; ++n) {
      PolyMatrix m(r, C_.degrees(n), out.small.degrees(n));
      for (int k = 0; k < out.small.rank(n); ++k) m.setColumn(k, toFree(icol_[n][out.survivors[n][k]]));
      out.incl.maps.push_back(std::move(m));
    }
    if (trackH_) {
      for (int n = 0; n <= top; ++n) {
        std::vector<int> target = n + 1 <= top ? C_.degrees(n + 1) : std::vector<int>{};
        PolyMatrix h(r, target, C_.degrees(n));
        for (int j = 0; j < C_.rank(n); ++j)
          if (!hcol_[n][j].empty()) h.setColumn(j, toFree(hcol_[n][j]));
        out.htpy.push_back(std::move(h));
      }
    }
    return out;
  }

 private:
  void setEntry(int n, int row, int col, Polynomial v) {
    auto& column = cols_[n][col];
    if (v.isZero()) {
      if (column.erase(row)) rowsOf_[n][row].erase(col);
      return;
    }
    auto [it, inserted] = column.insert_or_assign(row, std::move(v));
    if (inserted) rowsOf_[n][row].insert(col);
  }

  void eliminate(int n, int a, int b, std::set<int>& dirty, std::vector<EliminationStep>& steps) {
    const PrimeField& F = C_.ring()->field;
    const PMap colB = cols_[n][b];
    Coeff phiInv = F.inv(colB.at(a).leading().c);

    EliminationStep st;
    st.n = n;
    st.a = a;
    st.b = b;
    st.phiInv = phiInv;
    for (const auto& [d, g] : colB)
      if (d != a) st.gamma.emplace_back(d, g);

    std::vector<std::pair<int, Polynomial>> beta;
    for (int c : rowsOf_[n][a])
      if (c != b) beta.emplace_back(c, cols_[n][c].at(a));

    // d_n <- delta - gamma phi^-1 beta; i_n columns follow
    for (const auto& [c, bc] : beta) {
      Polynomial f = bc.scaled(F.neg(phiInv));
      for (const auto& [d, g] : colB) {
        Polynomial t = C_.reduce(f * g);
        if (t.isZero()) continue;
        auto it = cols_[n][c].find(d);
        setEntry(n, d, c, it == cols_[n][c].end() ? t : it->second + t);
        if (d != a) dirty.insert(d);
      }
      addScaled(icol_[n][c], icol_[n][b], f, C_);
    }
    for (const auto& [d, g] : colB) rowsOf_[n][d].erase(b);
    cols_[n][b].clear();
    if (!rowsOf_[n][a].empty()) throw InternalError("pivot row survived elimination");
    alive_[n][b] = false;
    alive_[n - 1][a] = false;
    dirty.erase(a);

    if (n + 1 <= C_.top()) {
      for (int c : rowsOf_[n + 1][b]) cols_[n + 1][c].erase(b);
      rowsOf_[n + 1][b].clear();
    }
    if (n - 1 >= 1) {
      for (const auto& [row, p] : cols_[n - 1][a]) rowsOf_[n - 1][row].erase(a);
      cols_[n - 1][a].clear();
    }

    if (trackH_) {
      const PMap pa = prow_[n - 1][a];
      const PMap ib = icol_[n][b];
      for (const auto& [j, pj] : pa) addScaled(hcol_[n - 1][j], ib, pj.scaled(phiInv), C_);
      for (const auto& [d, g] : st.gamma) addScaled(prow_[n - 1][d], pa, g.scaled(F.neg(phiInv)), C_);
      prow_[n - 1][a].clear();
      prow_[n][b].clear();
    }
    icol_[n][b].clear();
    icol_[n - 1][a].clear();
    steps.push_back(std::move(st));
  }

  const GradedFreeComplex& C_;
  bool trackH_;
  std::vector<std::vector<bool>> alive_;
  std::vector<std::vector<PMap>> cols_;
  std::vector<std::vector<std::set<int>>> rowsOf_;
  std::vector<std::vector<PMap>> icol_;
  std::vector<std::vector<PMap>> prow_;
  std::vector<std::vector<PMap>> hcol_;
};

}  // namespace

Contraction minimalize(const GradedFreeComplex& C, const MinimalizeOptions& opt) {
  Eliminator e(C, opt.trackHomotopy);
  std::vector<EliminationStep> steps;
  e.run(opt.upTo, steps);
  return e.finish(std::move(steps));
}

Contraction identityContraction(const GradedFreeComplex& C) {
  Contraction c;
  c.big = C;
  c.small = C;
  for (int n = 0; n <= C.top(); ++n) {
    c.incl.maps.push_back(PolyMatrix::identity(C.ring(), C.degrees(n)));
    std::vector<int> target = n + 1 <= C.top() ? C.degrees(n + 1) : std::vector<int>{};
    c.htpy.emplace_back(C.ring(), target, C.degrees(n));
    std::vector<int> s(C.rank(n));
    for (int j = 0; j < C.rank(n); ++j) s[j] = j;
    c.survivors.push_back(std::move(s));
  }
  return c;
}

FreeElement Contraction::project(int n, const FreeElement& v) const {
  const PrimeField& F = big.ring()->field;
  PMap m = toMap(v);
  for (const auto& st : steps) {
    if (st.n - 1 == n) {
      auto it = m.find(st.a);
      if (it == m.end()) continue;
      Polynomial va = it->second;
      m.erase(it);
      PMap g;
      for (const auto& [d, p] : st.gamma) g.emplace(d, p);
      addScaled(m, g, va.scaled(F.neg(st.phiInv)), big);
    } else if (st.n == n) {
      m.erase(st.b);
    }
  }
  std::vector<FreeElement::Entry> out;
  const auto& surv = survivors[n];
  for (const auto& [j, p] : m) {
    auto it = std::lower_bound(surv.begin(), surv.end(), j);
    if (it == surv.end() || *it != j) throw InternalError("projection left a removed basis element");
    out.emplace_back(static_cast<int>(it - surv.begin()), p);
  }
  return FreeElement::fromEntries(std::move(out));
}

ChainMap Contraction::projection() const {
  ChainMap p;
  for (int n = 0; n <= big.top(); ++n) {
    PolyMatrix m(big.ring(), small.degrees(n), big.degrees(n));
    for (int j = 0; j < big.rank(n); ++j) m.setColumn(j, project(n, FreeElement::basis(big.ring(), j)));
    p.maps.push_back(std::move(m));
  }
  return p;
}

FreeElement Contraction::homotopy(int n, const FreeElement& v) const {
  if (htpy.empty() || n < 0 || n >= static_cast<int>(htpy.size())) return FreeElement();
  return big.reduce(htpy[n].apply(v));
}

StructureReport verifyContraction(const Contraction& c) {
  StructureReport rep;
  const GradedFreeComplex& B = c.big;
  const GradedFreeComplex& S = c.small;
  const RingPtr& r = B.ring();
  auto tag = [](int n, int j) { return "(" + std::to_string(n) + "," + std::to_string(j) + ")"; };
  if (!S.isMinimal()) rep.fail("small complex has a unit entry");
  for (int n = 0; n <= S.top(); ++n)
    for (int k = 0; k < S.rank(n); ++k) {
      ++rep.checked;
      FreeElement ik = B.reduce(c.incl.apply(n, FreeElement::basis(r, k)));
      if (!(c.project(n, ik) == FreeElement::basis(r, k))) rep.fail("p i != id on " + tag(n, k));
      if (n >= 1 && !(B.applyDiff(n, ik) == B.reduce(c.incl.apply(n - 1, S.diff(n).column(k)))))
        rep.fail("i is not a chain map on " + tag(n, k));
      if (c.hasHomotopy() && !c.homotopy(n, ik).isZero()) rep.fail("h i != 0 on " + tag(n, k));
    }
  for (int n = 0; n <= B.top(); ++n)
    for (int j = 0; j < B.rank(n); ++j) {
      ++rep.checked;
      FreeElement e = FreeElement::basis(r, j);
      FreeElement pe = c.project(n, e);
      if (n >= 1 && !(S.applyDiff(n, pe) == c.project(n - 1, B.column(n, j))))
        rep.fail("p is not a chain map on " + tag(n, j));
      if (!c.hasHomotopy()) continue;
      FreeElement lhs = e - B.reduce(c.incl.apply(n, pe));
      FreeElement he = c.homotopy(n, e);
      FreeElement rhs = B.applyDiff(n + 1, he);
      if (n >= 1) rhs += c.homotopy(n - 1, B.column(n, j));
      if (!(lhs == B.reduce(rhs))) rep.fail("id - i p != d h + h d on " + tag(n, j));
      if (n + 1 <= B.top() && !c.project(n + 1, he).isZero()) rep.fail("p h != 0 on " + tag(n, j));
      if (!c.homotopy(n + 1, he).isZero()) rep.fail("h h != 0 on " + tag(n, j));
    }
  return rep;
}

}  // namespace burch
