#include "oracles.hpp"

#include <algorithm>
#include <stdexcept>

namespace oracle {

u32 Field::inv(u32 a) const {
  u32 r = 1, b = a, e = p - 2;
  while (e) {
    if (e & 1) r = mul(r, b);
    b = mul(b, b);
    e >>= 1;
  }
  return r;
}

SparseVec Echelon::reduceFully(const SparseVec& v) const {
  std::map<int, u32> acc(v.begin(), v.end());
  SparseVec out;
  while (!acc.empty()) {
    auto [i, c] = *acc.begin();
    auto it = rows_.find(i);
    if (it == rows_.end()) {
      out.emplace_back(i, c);
      acc.erase(acc.begin());
      continue;
    }
    for (const auto& [j, rc] : it->second) {
      u32 nv = F_.sub(acc.count(j) ? acc[j] : 0, F_.mul(c, rc));
      if (nv == 0)
        acc.erase(j);
      else
        acc[j] = nv;
    }
  }
  return out;
}

bool Echelon::insert(SparseVec v) {
  SparseVec w = reduceFully(v);
  if (w.empty()) return false;
  u32 s = F_.inv(w.front().second);
  for (auto& [j, c] : w) c = F_.mul(c, s);
  rows_.emplace(w.front().first, std::move(w));
  return true;
}

std::vector<SparseVec> kernel(const Field& F, const std::vector<SparseVec>& images) {
  int T = 0;
  for (const auto& v : images)
    if (!v.empty()) T = std::max(T, v.back().first + 1);
  Echelon E(F);
  std::vector<SparseVec> out;
  for (std::size_t c = 0; c < images.size(); ++c) {
    SparseVec aug = images[c];
    aug.emplace_back(T + static_cast<int>(c), 1);
    SparseVec w = E.reduceFully(aug);
    if (w.front().first >= T) {
      for (auto& [j, x] : w) j -= T;
      out.push_back(std::move(w));
    } else {
      E.insert(std::move(w));
    }
  }
  return out;
}

int rankOf(const Field& F, const std::vector<SparseVec>& vs) {
  Echelon E(F);
  for (const auto& v : vs) E.insert(v);
  return E.rank();
}

namespace {

int degOf(const Exps& e) {
  int d = 0;
  for (int x : e) d += x;
  return d;
}

bool divides(const Exps& a, const Exps& b) {
  for (int k = 0; k < 8; ++k)
    if (a[k] > b[k]) return false;
  return true;
}

bool inIdeal(const Exps& m, const std::vector<Exps>& gens) {
  for (const auto& g : gens)
    if (divides(g, m)) return true;
  return false;
}

SparseVec sorted(SparseVec v) {
  std::sort(v.begin(), v.end());
  return v;
}

void addTo(std::map<int, u32>& acc, const Field& F, const SparseVec& v, u32 c) {
  for (const auto& [j, x] : v) {
    u32 nv = F.add(acc.count(j) ? acc[j] : 0, F.mul(c, x));
    if (nv == 0)
      acc.erase(j);
    else
      acc[j] = nv;
  }
}

}  // namespace

Ring::Ring(int n, std::vector<Exps> gens, int truncate, u32 p) : n_(n), gens_(std::move(gens)) {
  F_.p = p;
  Exps one{};
  if (inIdeal(one, gens_)) throw std::invalid_argument("oracle ring: unit ideal");
  std::vector<Exps> frontier{one};
  std::map<Exps, int> seen{{one, 0}};
  while (!frontier.empty()) {
    std::vector<Exps> next;
    for (const auto& e : frontier)
      for (int v = 0; v < n_; ++v) {
        Exps f = e;
        ++f[v];
        if (truncate >= 0 && degOf(f) > truncate) continue;
        if (inIdeal(f, gens_) || seen.count(f)) continue;
        seen.emplace(f, 0);
        next.push_back(f);
      }
    frontier = std::move(next);
    if (seen.size() > 20000) throw std::invalid_argument("oracle ring: not Artinian or too large");
  }
  for (const auto& [e, z] : seen) mono_.push_back(e);
  std::stable_sort(mono_.begin(), mono_.end(), [](const Exps& a, const Exps& b) { return degOf(a) < degOf(b); });
  for (std::size_t b = 0; b < mono_.size(); ++b) {
    index_[mono_[b]] = static_cast<int>(b);
    deg_.push_back(degOf(mono_[b]));
    top_ = std::max(top_, deg_.back());
  }
  byDeg_.assign(top_ + 1, {});
  for (int b = 0; b < size(); ++b) byDeg_[deg_[b]].push_back(b);
  table_.assign(size() * size(), -1);
  for (int a = 0; a < size(); ++a)
    for (int b = 0; b < size(); ++b) {
      Exps e;
      for (int k = 0; k < 8; ++k) e[k] = mono_[a][k] + mono_[b][k];
      table_[a * size() + b] = find(e);
    }
  varMul_.assign(size() * n_, -1);
  for (int b = 0; b < size(); ++b)
    for (int v = 0; v < n_; ++v) {
      Exps e = mono_[b];
      ++e[v];
      varMul_[b * n_ + v] = find(e);
    }
}

int Ring::find(const Exps& e) const {
  auto it = index_.find(e);
  return it == index_.end() ? -1 : it->second;
}

const std::vector<int>& Ring::ofDegree(int d) const {
  if (d < 0 || d > top_) return empty_;
  return byDeg_[d];
}

SparseVec shift(const Ring& R, const SparseVec& v, int b) {
  SparseVec out;
  const int n = R.size();
  for (const auto& [g, c] : v) {
    int t = R.mul(g % n, b);
    if (t >= 0) out.emplace_back((g / n) * n + t, c);
  }
  return sorted(std::move(out));
}

SparseVec multiplyVar(const Ring& R, const SparseVec& v, int var) {
  SparseVec out;
  const int n = R.size();
  for (const auto& [g, c] : v) {
    int t = R.mulVar(g % n, var);
    if (t >= 0) out.emplace_back((g / n) * n + t, c);
  }
  return sorted(std::move(out));
}

std::vector<SparseVec> strandImages(const Ring& R, const Mat& d, int D) {
  std::vector<SparseVec> out;
  for (std::size_t c = 0; c < d.cols.size(); ++c)
    for (int b : R.ofDegree(D - d.colDeg[c])) out.push_back(shift(R, d.cols[c], b));
  return out;
}

std::vector<SparseVec> spanInDegree(const Ring& R, const Mat& d, int D) {
  Echelon E(R.field());
  std::vector<SparseVec> out;
  for (auto& v : strandImages(R, d, D))
    if (E.insert(v)) out.push_back(std::move(v));
  return out;
}

SparseVec apply(const Ring& R, const Mat& d, const SparseVec& v) {
  std::map<int, u32> acc;
  const int n = R.size();
  for (const auto& [g, c] : v) addTo(acc, R.field(), shift(R, d.cols[g / n], g % n), c);
  return SparseVec(acc.begin(), acc.end());
}

namespace {

std::pair<int, int> degreeRange(const Ring& R, const std::vector<int>& deg) {
  if (deg.empty()) return {0, -1};
  return {*std::min_element(deg.begin(), deg.end()), *std::max_element(deg.begin(), deg.end()) + R.top()};
}

long strandDim(const Ring& R, const std::vector<int>& deg, int D) {
  long s = 0;
  for (int d : deg) s += static_cast<long>(R.ofDegree(D - d).size());
  return s;
}

}  // namespace

bool composesToZero(const Ring& R, const Mat& dn, const Mat& dn1) {
  for (const auto& col : dn1.cols)
    if (!apply(R, dn, col).empty()) return false;
  return true;
}

long homology(const Ring& R, const std::vector<int>& degN, const Mat* dIn, const Mat* dOut, int maxDeg) {
  auto [lo, hi] = degreeRange(R, degN);
  hi = std::min(hi, maxDeg);
  long h = 0;
  for (int D = lo; D <= hi; ++D) {
    long dim = strandDim(R, degN, D);
    if (dim == 0) continue;
    long out = dOut ? rankOf(R.field(), strandImages(R, *dOut, D)) : 0;
    long in = dIn ? rankOf(R.field(), strandImages(R, *dIn, D)) : 0;
    h += dim - out - in;
  }
  return h;
}

int kRank(const Ring& R, const Subquotient& q) {
  const Field& F = R.field();
  const int G = static_cast<int>(q.ambientDeg.size()) * R.size();
  auto [lo, hi] = degreeRange(R, q.ambientDeg);
  int total = 0;
  std::vector<SparseVec> prevS;
  for (int D = lo; D <= hi; ++D) {
    std::vector<SparseVec> S = spanInDegree(R, q.S, D);
    std::vector<SparseVec> N = spanInDegree(R, q.N, D);
    Echelon nextN(F);
    for (const auto& v : spanInDegree(R, q.N, D + 1)) nextN.insert(v);
    // socle: z in S_D with x_v z in N_{D+1} for every v
    std::vector<SparseVec> phi;
    for (const auto& s : S) {
      SparseVec img;
      for (int v = 0; v < R.nvars(); ++v)
        for (const auto& [j, c] : nextN.reduceFully(multiplyVar(R, s, v))) img.emplace_back(v * G + j, c);
      phi.push_back(std::move(img));
    }
    Echelon E(F);
    for (const auto& s : prevS)
      for (int v = 0; v < R.nvars(); ++v) E.insert(multiplyVar(R, s, v));
    for (const auto& v : N) E.insert(v);
    const int base = E.rank();
    for (const auto& z : kernel(F, phi)) {
      std::map<int, u32> acc;
      for (const auto& [k, c] : z) addTo(acc, F, S[k], c);
      E.insert(SparseVec(acc.begin(), acc.end()));
    }
    total += E.rank() - base;
    prevS = std::move(S);
  }
  return total;
}

namespace {

Mat identity(const Ring& R, const std::vector<int>& deg) {
  Mat m{deg, deg, {}};
  const int one = R.find(Exps{});
  for (std::size_t j = 0; j < deg.size(); ++j) m.cols.push_back({{static_cast<int>(j) * R.size() + one, 1}});
  return m;
}

// Minimal generators of the submodule spanned by the columns of d.
Mat minimalGenerators(const Ring& R, const Mat& d) {
  Mat out{d.rowDeg, {}, {}};
  auto [lo, hi] = degreeRange(R, d.rowDeg);
  std::vector<SparseVec> prev;
  for (int D = lo; D <= hi; ++D) {
    Echelon E(R.field());
    std::vector<SparseVec> basis;
    for (const auto& s : prev)
      for (int v = 0; v < R.nvars(); ++v) {
        SparseVec w = multiplyVar(R, s, v);
        if (E.insert(w)) basis.push_back(std::move(w));
      }
    for (std::size_t c = 0; c < d.cols.size(); ++c)
      if (d.colDeg[c] == D && E.insert(d.cols[c])) {
        out.colDeg.push_back(D);
        out.cols.push_back(d.cols[c]);
        basis.push_back(d.cols[c]);
      }
    prev = std::move(basis);
  }
  return out;
}

// Next differential: minimal generators of ker d, as columns into the source of d.
Mat nextDifferential(const Ring& R, const Mat& d) {
  Mat out{d.colDeg, {}, {}};
  auto [lo, hi] = degreeRange(R, d.colDeg);
  const int n = R.size();
  std::vector<SparseVec> prevK;
  for (int D = lo; D <= hi; ++D) {
    std::vector<int> src;
    std::vector<SparseVec> imgs;
    for (std::size_t c = 0; c < d.cols.size(); ++c)
      for (int b : R.ofDegree(D - d.colDeg[c])) {
        src.push_back(static_cast<int>(c) * n + b);
        imgs.push_back(shift(R, d.cols[c], b));
      }
    std::vector<SparseVec> K;
    for (const auto& z : kernel(R.field(), imgs)) {
      SparseVec v;
      for (const auto& [k, c] : z) v.emplace_back(src[k], c);
      K.push_back(sorted(std::move(v)));
    }
    Echelon E(R.field());
    for (const auto& s : prevK)
      for (int v = 0; v < R.nvars(); ++v) E.insert(multiplyVar(R, s, v));
    for (const auto& k : K)
      if (E.insert(k)) {
        out.colDeg.push_back(D);
        out.cols.push_back(k);
      }
    prevK = std::move(K);
  }
  return out;
}

}  // namespace

SyzygyTable syzygies(const Ring& R, const std::vector<int>& genDeg, const Mat& rel, int upTo) {
  SyzygyTable t;
  t.betti.push_back(static_cast<int>(genDeg.size()));
  t.kRank.push_back(kRank(R, Subquotient{genDeg, identity(R, genDeg), rel}));
  if (upTo < 1) return t;
  Mat d = minimalGenerators(R, rel);
  for (int i = 1; i <= upTo; ++i) {
    t.betti.push_back(static_cast<int>(d.cols.size()));
    t.kRank.push_back(kRank(R, Subquotient{d.rowDeg, d, Mat{d.rowDeg, {}, {}}}));
    if (i < upTo) d = nextDifferential(R, d);
  }
  return t;
}

bool memberOf(const Exps& m, const std::vector<Exps>& gens) { return inIdeal(m, gens); }

std::vector<Exps> minimalize(std::vector<Exps> gens) {
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Exps> out;
  for (std::size_t a = 0; a < gens.size(); ++a) {
    bool redundant = false;
    for (std::size_t b = 0; b < gens.size() && !redundant; ++b)
      redundant = b != a && divides(gens[b], gens[a]);
    if (!redundant) out.push_back(gens[a]);
  }
  return out;
}

namespace {

std::vector<Exps> monomialsUpTo(int n, int B) {
  std::vector<Exps> out{Exps{}};
  for (std::size_t k = 0; k < out.size(); ++k) {
    const Exps e = out[k];
    int last = 0;
    for (int v = 0; v < n; ++v)
      if (e[v]) last = v;
    if (degOf(e) == B) continue;
    for (int v = last; v < n; ++v) {
      Exps f = e;
      ++f[v];
      out.push_back(f);
    }
  }
  return out;
}

int maxDegree(const std::vector<Exps>& I) {
  int m = 0;
  for (const auto& g : I) m = std::max(m, degOf(g));
  return m;
}

}  // namespace

std::vector<Exps> colonByMaximal(int n, const std::vector<Exps>& I) {
  std::vector<Exps> out;
  for (const auto& m : monomialsUpTo(n, n * maxDegree(I))) {
    bool in = true;
    for (int v = 0; v < n && in; ++v) {
      Exps f = m;
      ++f[v];
      in = inIdeal(f, I);
    }
    if (in) out.push_back(m);
  }
  return minimalize(out);
}

std::vector<Exps> burchIdeal(int n, const std::vector<Exps>& I) {
  std::vector<Exps> In;
  for (const auto& g : I)
    for (int v = 0; v < n; ++v) {
      Exps f = g;
      ++f[v];
      In.push_back(f);
    }
  const auto C = colonByMaximal(n, I);
  std::vector<Exps> out;
  for (const auto& m : monomialsUpTo(n, n * (maxDegree(I) + 1))) {
    bool in = true;
    for (const auto& c : C) {
      Exps f;
      for (int k = 0; k < 8; ++k) f[k] = m[k] + c[k];
      in = in && inIdeal(f, In);
    }
    if (in) out.push_back(m);
  }
  return minimalize(out);
}

int linearCodim(int n, const std::vector<Exps>& J) {
  int b = 0;
  for (int v = 0; v < n; ++v) {
    Exps e{};
    e[v] = 1;
    b += !inIdeal(e, J);
  }
  return b;
}

std::vector<long> barRankCount(const std::vector<int>& xRanks, const std::vector<int>& yRanks, int upTo) {
  // W(t) = sum_i rank X_i t^(i+1) for i >= 1; words of length p contribute W^p
  std::vector<long> W(upTo + 1, 0), power(upTo + 1, 0), words(upTo + 1, 0);
  for (std::size_t i = 1; i < xRanks.size(); ++i)
    if (static_cast<int>(i) + 1 <= upTo) W[i + 1] = xRanks[i];
  power[0] = 1;
  for (int p = 0; p <= upTo; ++p) {
    for (int d = 0; d <= upTo; ++d) words[d] += power[d];
    std::vector<long> next(upTo + 1, 0);
    for (int a = 0; a <= upTo; ++a)
      for (int b = 0; a + b <= upTo; ++b) next[a + b] += power[a] * W[b];
    power = std::move(next);
  }
  std::vector<long> out(upTo + 1, 0);
  for (int d = 0; d <= upTo; ++d)
    for (std::size_t j = 0; j < yRanks.size() && static_cast<int>(j) + d <= upTo; ++j) out[d + j] += words[d] * yRanks[j];
  return out;
}

Exps exps(burch::Monomial m, int n) {
  Exps e{};
  for (int k = 0; k < n; ++k) e[k] = m.exponent(k);
  return e;
}

std::vector<Exps> monomialGens(const burch::Ideal& I) {
  std::vector<Exps> out;
  const int n = I.ring()->nvars();
  for (const auto& g : I.gens()) {
    if (!g.isMonomial()) throw std::invalid_argument("oracle: monomial ideals only");
    out.push_back(exps(g.leading().m, n));
  }
  return out;
}

Ring ringOf(const burch::QuotientRing& R) {
  const auto& I = R.ideal();
  return Ring(I.ring()->nvars(), monomialGens(I), -1, I.ring()->field.prime());
}

SparseVec vecOf(const Ring& R, const burch::FreeElement& v) {
  SparseVec out;
  for (const auto& [j, p] : v.entries())
    for (const auto& t : p.terms()) {
      int b = R.find(exps(t.m, R.nvars()));
      if (b >= 0) out.emplace_back(j * R.size() + b, t.c % R.field().p);
    }
  return sorted(std::move(out));
}

Mat matOf(const Ring& R, const burch::PolyMatrix& d) {
  Mat m{d.rowDegrees(), d.colDegrees(), {}};
  for (const auto& c : d.columns()) m.cols.push_back(vecOf(R, c));
  return m;
}

SyzygyTable syzygies(const Ring& R, const burch::ModulePresentation& M, int upTo) {
  return syzygies(R, M.genDegrees, matOf(R, M.relations), upTo);
}

}  // namespace oracle

namespace oracle {

std::string contractionIdentities(const Ring& R, const burch::Contraction& c) {
  const Field& F = R.field();
  const int n = R.size();
  const int one = R.find(Exps{});
  const int top = c.big.top();
  burch::ChainMap P = c.projection();
  auto basis = [&](int j) { return SparseVec{{j * n + one, 1}}; };
  auto combine = [&](std::vector<std::pair<SparseVec, u32>> terms) {
    std::map<int, u32> acc;
    for (const auto& [v, s] : terms) addTo(acc, F, v, s);
    return SparseVec(acc.begin(), acc.end());
  };
  const u32 minus = F.p - 1;
  for (int k = 0; k <= top; ++k) {
    Mat i = matOf(R, c.incl.maps[k]);
    Mat p = matOf(R, P.maps[k]);
    for (int j = 0; j < c.small.rank(k); ++j)
      if (apply(R, p, i.cols[j]) != basis(j)) return "p i != id in degree " + std::to_string(k);
    if (!c.hasHomotopy()) continue;
    for (int b = 0; b < c.big.rank(k); ++b) {
      std::vector<std::pair<SparseVec, u32>> terms{{basis(b), 1}, {apply(R, i, p.cols[b]), minus}};
      if (k < top && k < static_cast<int>(c.htpy.size())) {
        Mat h = matOf(R, c.htpy[k]);
        terms.emplace_back(apply(R, matOf(R, c.big.diff(k + 1)), h.cols[b]), minus);
      }
      if (k >= 1) {
        Mat h = matOf(R, c.htpy[k - 1]);
        terms.emplace_back(apply(R, h, matOf(R, c.big.diff(k)).cols[b]), minus);
      }
      if (!combine(terms).empty()) return "id - i p != d h + h d in degree " + std::to_string(k);
    }
  }
  return "";
}

}  // namespace oracle
