#include "burch/groebner.hpp"

#include <algorithm>
#include <queue>

#include "burch/error.hpp"

namespace burch {

ModPoly toModPoly(const Polynomial& p, int pos) {
  ModPoly f;
  f.reserve(p.size());
  for (const auto& t : p.terms()) f.push_back({pos, t.m, t.c});
  return f;
}

ModPoly toModPoly(const FreeElement& v, int posOffset) {
  ModPoly f;
  // lower positions first; each polynomial is already descending
  for (const auto& [j, p] : v.entries())
    for (const auto& t : p.terms()) f.push_back({j + posOffset, t.m, t.c});
  return f;
}

Polynomial modPolyToPolynomial(const RingPtr& r, const ModPoly& f) {
  std::vector<Term> ts;
  ts.reserve(f.size());
  for (const auto& t : f) {
    if (t.pos != 0) throw InternalError("module element is not an ideal element");
    ts.push_back({t.m, t.c});
  }
  return Polynomial::fromSortedTerms(r, std::move(ts));
}

FreeElement modPolyToFree(const RingPtr& r, const ModPoly& f, int lo, int hi) {
  std::vector<FreeElement::Entry> entries;
  std::size_t i = 0;
  while (i < f.size()) {
    int pos = f[i].pos;
    std::vector<Term> ts;
    while (i < f.size() && f[i].pos == pos) {
      ts.push_back({f[i].m, f[i].c});
      ++i;
    }
    if (pos >= lo && pos < hi)
      entries.emplace_back(pos - lo, Polynomial::fromSortedTerms(r, std::move(ts)));
  }
  return FreeElement::fromEntries(std::move(entries));
}

void addMulTo(ModPoly& f, const ModPoly& g, Monomial m, Coeff c, const PrimeField& F) {
  if (c == 0 || g.empty()) return;
  ModPoly out;
  out.reserve(f.size() + g.size());
  std::size_t i = 0, j = 0;
  while (i < f.size() || j < g.size()) {
    if (j == g.size()) {
      out.push_back(f[i++]);
      continue;
    }
    Monomial mj = g[j].m * m;
    if (i == f.size()) {
      out.push_back({g[j].pos, mj, F.mul(g[j].c, c)});
      ++j;
      continue;
    }
    int cmp = potCompare(f[i].pos, f[i].m, g[j].pos, mj);
    if (cmp > 0) {
      out.push_back(f[i++]);
    } else if (cmp < 0) {
      out.push_back({g[j].pos, mj, F.mul(g[j].c, c)});
      ++j;
    } else {
      Coeff s = F.add(f[i].c, F.mul(g[j].c, c));
      if (s) out.push_back({f[i].pos, f[i].m, s});
      ++i;
      ++j;
    }
  }
  f.swap(out);
}

namespace {

void makeMonic(ModPoly& f, const PrimeField& F) {
  if (f.empty() || f.front().c == 1) return;
  Coeff inv = F.inv(f.front().c);
  for (auto& t : f) t.c = F.mul(t.c, inv);
}

void sortModPoly(ModPoly& f, const PrimeField& F) {
  std::sort(f.begin(), f.end(),
            [](const MTerm& a, const MTerm& b) { return potCompare(a.pos, a.m, b.pos, b.m) > 0; });
  ModPoly out;
  for (const auto& t : f) {
    if (!out.empty() && out.back().pos == t.pos && out.back().m == t.m) {
      out.back().c = F.add(out.back().c, t.c);
      if (!out.back().c) out.pop_back();
    } else if (t.c) {
      out.push_back(t);
    }
  }
  f.swap(out);
}

struct Pair {
  int i, j;
  int degree;
  Monomial lcm;
  long serial;
};

struct PairOrder {
  bool operator()(const Pair& a, const Pair& b) const {
    if (a.degree != b.degree) return a.degree > b.degree;
    return a.serial > b.serial;
  }
};

class Buchberger {
 public:
  Buchberger(const PrimeField& F, std::vector<int> posDegrees, bool idealMode)
      : F_(F), posDeg_(std::move(posDegrees)), ideal_(idealMode) {}

  std::vector<ModPoly> run(std::vector<ModPoly> gens) {
    for (auto& g : gens) sortModPoly(g, F_);
    gens.erase(std::remove_if(gens.begin(), gens.end(), [](const ModPoly& g) { return g.empty(); }),
               gens.end());
    std::stable_sort(gens.begin(), gens.end(), [&](const ModPoly& a, const ModPoly& b) {
      return degreeOf(a.front()) < degreeOf(b.front());
    });
    // generators are fed through the pair queue as pseudo pairs (i, -1)
    for (auto& g : gens) pending_.push_back(std::move(g));
    std::size_t nextGen = 0;
    while (nextGen < pending_.size() || !queue_.empty()) {
      bool takeGen = nextGen < pending_.size() &&
                     (queue_.empty() || degreeOf(pending_[nextGen].front()) <= queue_.top().degree);
      ModPoly h;
      if (takeGen) {
        h = std::move(pending_[nextGen++]);
      } else {
        Pair p = queue_.top();
        queue_.pop();
        h = sPoly(p);
      }
      topReduce(h);
      if (h.empty()) continue;
      makeMonic(h, F_);
      tailReduce(h);
      addElement(std::move(h));
    }
    return finish();
  }

 private:
  int degreeOf(const MTerm& t) const {
    int d = t.m.degree();
    if (t.pos < static_cast<int>(posDeg_.size())) d += posDeg_[t.pos];
    return d;
  }

  ModPoly sPoly(const Pair& p) const {
    const ModPoly& f = g_[p.i];
    const ModPoly& g = g_[p.j];
    ModPoly s;
    addMulTo(s, f, p.lcm / f.front().m, 1, F_);
    addMulTo(s, g, p.lcm / g.front().m, F_.neg(1), F_);
    return s;
  }

  int reducer(int pos, Monomial m) const {
    if (pos >= static_cast<int>(byPos_.size())) return -1;
    for (int k : byPos_[pos])
      if (g_[k].front().m.divides(m)) return k;
    return -1;
  }

  void topReduce(ModPoly& h) const {
    while (!h.empty()) {
      int k = reducer(h.front().pos, h.front().m);
      if (k < 0) return;
      addMulTo(h, g_[k], h.front().m / g_[k].front().m, F_.neg(h.front().c), F_);
    }
  }

  void tailReduce(ModPoly& h) const {
    std::size_t i = 1;
    while (i < h.size()) {
      int k = reducer(h[i].pos, h[i].m);
      if (k < 0) {
        ++i;
        continue;
      }
      addMulTo(h, g_[k], h[i].m / g_[k].front().m, F_.neg(h[i].c), F_);
    }
  }

  void addElement(ModPoly h) {
    int hi = static_cast<int>(g_.size());
    int pos = h.front().pos;
    Monomial lh = h.front().m;
    g_.push_back(std::move(h));
    active_.push_back(true);
    if (pos >= static_cast<int>(byPos_.size())) byPos_.resize(pos + 1);

    // Gebauer-Moeller update
    std::vector<Pair> C, D;
    for (int k : byPos_[pos])
      if (active_[k]) C.push_back(makePair(k, hi));
    while (!C.empty()) {
      Pair p = C.back();
      C.pop_back();
      bool coprime = ideal_ && lh.coprime(g_[p.i].front().m);
      bool dominated = false;
      if (!coprime) {
        for (const auto& q : C)
          if (q.lcm.divides(p.lcm)) dominated = true;
        for (const auto& q : D)
          if (q.lcm.divides(p.lcm)) dominated = true;
      }
      if (coprime || !dominated) D.push_back(p);
    }
    std::vector<Pair> E;
    for (const auto& p : D)
      if (!(ideal_ && lh.coprime(g_[p.i].front().m))) E.push_back(p);

    // drop old pairs made redundant by h
    std::vector<Pair> kept;
    while (!queue_.empty()) {
      Pair p = queue_.top();
      queue_.pop();
      bool drop = false;
      if (g_[p.i].front().pos == pos && lh.divides(p.lcm)) {
        Monomial li = lh.lcm(g_[p.i].front().m);
        Monomial lj = lh.lcm(g_[p.j].front().m);
        drop = !(li == p.lcm) && !(lj == p.lcm);
      }
      if (!drop) kept.push_back(p);
    }
    for (auto& p : kept) queue_.push(p);
    for (auto& p : E) queue_.push(p);

    for (int k : byPos_[pos])
      if (active_[k] && lh.divides(g_[k].front().m)) active_[k] = false;
    byPos_[pos].push_back(hi);
  }

  Pair makePair(int i, int j) {
    Monomial l = g_[i].front().m.lcm(g_[j].front().m);
    int d = l.degree();
    int pos = g_[i].front().pos;
    if (pos < static_cast<int>(posDeg_.size())) d += posDeg_[pos];
    return Pair{i, j, d, l, serial_++};
  }

  std::vector<ModPoly> finish() {
    // minimal basis: drop elements whose leading term is divisible by another's
    std::vector<int> keep;
    for (int i = 0; i < static_cast<int>(g_.size()); ++i) {
      bool redundant = false;
      for (int j = 0; j < static_cast<int>(g_.size()) && !redundant; ++j) {
        if (i == j || g_[i].front().pos != g_[j].front().pos) continue;
        if (g_[j].front().m.divides(g_[i].front().m)) {
          if (!(g_[j].front().m == g_[i].front().m) || j < i) redundant = true;
        }
      }
      if (!redundant) keep.push_back(i);
    }
    std::vector<ModPoly> minimal;
    for (int i : keep) minimal.push_back(g_[i]);
    // reduce tails against the minimal basis
    g_ = minimal;
    byPos_.assign(byPos_.size(), {});
    for (int i = 0; i < static_cast<int>(g_.size()); ++i) byPos_[g_[i].front().pos].push_back(i);
    for (auto& h : g_) tailReduce(h);
    std::sort(g_.begin(), g_.end(), [](const ModPoly& a, const ModPoly& b) {
      return potCompare(a.front().pos, a.front().m, b.front().pos, b.front().m) < 0;
    });
    return g_;
  }

  PrimeField F_;
  std::vector<int> posDeg_;
  bool ideal_;
  std::vector<ModPoly> g_;
  std::vector<bool> active_;
  std::vector<std::vector<int>> byPos_;
  std::vector<ModPoly> pending_;
  std::priority_queue<Pair, std::vector<Pair>, PairOrder> queue_;
  long serial_ = 0;
};

}  // namespace

GroebnerBasis GroebnerBasis::compute(std::vector<ModPoly> gens, const PrimeField& F,
                                     std::vector<int> posDegrees, bool idealMode) {
  GroebnerBasis gb;
  gb.F_ = F;
  Buchberger b(F, std::move(posDegrees), idealMode);
  gb.basis_ = b.run(std::move(gens));
  gb.index();
  return gb;
}

void GroebnerBasis::index() {
  byPos_.clear();
  for (int i = 0; i < static_cast<int>(basis_.size()); ++i) {
    int pos = basis_[i].front().pos;
    if (pos >= static_cast<int>(byPos_.size())) byPos_.resize(pos + 1);
    byPos_[pos].push_back(i);
  }
}

int GroebnerBasis::findReducer(int pos, Monomial m) const {
  if (pos >= static_cast<int>(byPos_.size())) return -1;
  for (int k : byPos_[pos])
    if (basis_[k].front().m.divides(m)) return k;
  return -1;
}

ModPoly GroebnerBasis::normalForm(ModPoly f) const {
  sortModPoly(f, F_);
  std::size_t i = 0;
  while (i < f.size()) {
    int k = findReducer(f[i].pos, f[i].m);
    if (k < 0) {
      ++i;
      continue;
    }
    addMulTo(f, basis_[k], f[i].m / basis_[k].front().m, F_.neg(f[i].c), F_);
  }
  return f;
}

// ------------------------------------------------------------ tracked

TrackedGroebner::TrackedGroebner(const PolyMatrix& a) : ring_(a.ring()), r_(a.rows()), k_(a.cols()) {
  if (!ring_) throw StructuralError("matrix without ring");
  std::vector<ModPoly> gens;
  std::vector<int> posDeg(a.rowDegrees());
  posDeg.insert(posDeg.end(), a.colDegrees().begin(), a.colDegrees().end());
  for (int j = 0; j < k_; ++j) {
    ModPoly g = toModPoly(a.column(j), 0);
    g.push_back({r_ + j, Monomial(), 1});
    gens.push_back(std::move(g));
  }
  gb_ = GroebnerBasis::compute(std::move(gens), ring_->field, std::move(posDeg), false);
}

std::vector<FreeElement> TrackedGroebner::syzygies() const {
  std::vector<FreeElement> out;
  for (const auto& g : gb_.elements())
    if (g.front().pos >= r_) out.push_back(modPolyToFree(ring_, g, r_, r_ + k_));
  return out;
}

bool TrackedGroebner::solve(const FreeElement& v, FreeElement& u) const {
  if (v.support() > r_) throw StructuralError("vector outside target of matrix");
  const PrimeField& F = ring_->field;
  ModPoly f = toModPoly(v, 0);
  while (!f.empty() && f.front().pos < r_) {
    int k = gb_.findReducer(f.front().pos, f.front().m);
    if (k < 0) return false;
    const ModPoly& g = gb_.elements()[k];
    addMulTo(f, g, f.front().m / g.front().m, F.neg(f.front().c), F);
  }
  u = -modPolyToFree(ring_, f, r_, r_ + k_);
  return true;
}

bool TrackedGroebner::inImage(const FreeElement& v) const {
  FreeElement u;
  return solve(v, u);
}

std::vector<FreeElement> TrackedGroebner::imageBasis() const {
  std::vector<FreeElement> out;
  for (const auto& g : gb_.elements())
    if (g.front().pos < r_) out.push_back(modPolyToFree(ring_, g, 0, r_));
  return out;
}

}  // namespace burch
