#include "burch/bar.hpp"

#include "burch/error.hpp"
#include "burch/strand.hpp"

namespace burch {

const char* regimeName(BarRegime r) { return r == BarRegime::Dg ? "dg" : "ainf"; }

int BarWord::degree() const {
  int d = y.deg;
  for (const auto& x : xs) d += x.deg + 1;
  return d;
}

namespace {

std::vector<int> wordKey(const BarWord& w) {
  std::vector<int> k;
  k.reserve(2 * w.xs.size() + 3);
  k.push_back(static_cast<int>(w.xs.size()));
  for (const auto& x : w.xs) {
    k.push_back(x.deg);
    k.push_back(x.idx);
  }
  k.push_back(w.y.deg);
  k.push_back(w.y.idx);
  return k;
}

}  // namespace

BarComplex::BarComplex(std::shared_ptr<const AInfModule> Y, QuotientPtr R, int upTo)
    : Y_(std::move(Y)), R_(std::move(R)), C_(R_->ring(), R_) {
  if (upTo < 0) throw InputError("bar degree cap must be nonnegative");
  const GradedFreeComplex& X = Y_->algebra().complex();
  const GradedFreeComplex& YC = Y_->complex();
  words_.resize(upTo + 1);
  index_.resize(upTo + 1);

  for (int n = 0; n <= upTo; ++n) {
    auto& list = words_[n];
    std::vector<int> degs;
    // degree sequences for a fixed bar length, then basis indices
    auto emitIndices = [&](const std::vector<int>& ds, int j) {
      BarWord w;
      w.xs.resize(ds.size());
      for (std::size_t k = 0; k < ds.size(); ++k) w.xs[k] = {ds[k], 0};
      w.y = {j, 0};
      auto rec = [&](auto&& self, std::size_t k) -> void {
        if (k == ds.size()) {
          for (int yi = 0; yi < YC.rank(j); ++yi) {
            w.y.idx = yi;
            list.push_back(w);
          }
          return;
        }
        for (int i = 0; i < X.rank(ds[k]); ++i) {
          w.xs[k].idx = i;
          self(self, k + 1);
        }
      };
      rec(rec, 0);
    };
    for (int p = 0; 2 * p <= n; ++p) {
      auto rec = [&](auto&& self, int left) -> void {
        if (static_cast<int>(degs.size()) == p) {
          if (left <= YC.top()) emitIndices(degs, left);
          return;
        }
        for (int d = 1; d <= X.top() && d <= left; ++d) {
          degs.push_back(d);
          self(self, left - d);
          degs.pop_back();
        }
      };
      rec(rec, n - p);
    }
    std::vector<int> internal;
    internal.reserve(list.size());
    for (std::size_t k = 0; k < list.size(); ++k) {
      const BarWord& w = list[k];
      int d = YC.degrees(w.y.deg)[w.y.idx];
      for (const auto& x : w.xs) d += X.degrees(x.deg)[x.idx];
      internal.push_back(d);
      index_[n].emplace(wordKey(w), static_cast<int>(k));
    }
    C_.setModule(n, internal);
  }
  for (int n = 1; n <= upTo; ++n) {
    PolyMatrix d(C_.ring(), C_.degrees(n - 1), C_.degrees(n));
    for (std::size_t k = 0; k < words_[n].size(); ++k) d.setColumn(static_cast<int>(k), boundary(words_[n][k]));
    C_.setDiff(n, std::move(d));
  }
}

int BarComplex::indexOf(const BarWord& w) const {
  int n = w.degree();
  if (n < 0 || n > top()) return -1;
  auto it = index_[n].find(wordKey(w));
  return it == index_[n].end() ? -1 : it->second;
}

FreeElement BarComplex::boundary(const BarWord& w) const {
  const AInfAlgebra& A = Y_->algebra();
  const std::size_t p = w.xs.size();
  const int n = w.degree();
  std::vector<int> sign(p + 1, 0);
  for (std::size_t k = 0; k < p; ++k) sign[k + 1] = (sign[k] + w.xs[k].deg + 1) % 2;
  std::map<int, Polynomial> acc;
  auto add = [&](const BarWord& v, const Polynomial& c, bool negate) {
    Polynomial t = R_->reduce(c);
    if (t.isZero()) return;
    int idx = index_[n - 1].at(wordKey(v));
    if (negate) t = -t;
    auto [it, fresh] = acc.emplace(idx, t);
    if (!fresh) {
      it->second += t;
      if (it->second.isZero()) acc.erase(it);
    }
  };
  for (std::size_t j = 0; j < p; ++j)
    for (std::size_t s = 1; j + s <= p; ++s) {
      BasisTuple inner(w.xs.begin() + static_cast<long>(j), w.xs.begin() + static_cast<long>(j + s));
      FreeElement v = A.b(inner);
      if (v.isZero()) continue;
      int dv = static_cast<int>(s) - 2;
      for (const auto& x : inner) dv += x.deg;
      if (dv < 1) continue;  // lands in Q * 1 with coefficient in I
      for (const auto& [idx, c] : v.entries()) {
        BarWord u;
        u.xs.assign(w.xs.begin(), w.xs.begin() + static_cast<long>(j));
        u.xs.push_back({dv, idx});
        u.xs.insert(u.xs.end(), w.xs.begin() + static_cast<long>(j + s), w.xs.end());
        u.y = w.y;
        add(u, c, sign[j]);
      }
    }
  for (std::size_t j = 0; j <= p; ++j) {
    BasisTuple suffix(w.xs.begin() + static_cast<long>(j), w.xs.end());
    FreeElement v = Y_->b(suffix, w.y);
    if (v.isZero()) continue;
    int dv = w.y.deg + static_cast<int>(suffix.size()) - 1;
    for (const auto& x : suffix) dv += x.deg;
    for (const auto& [idx, c] : v.entries()) {
      BarWord u;
      u.xs.assign(w.xs.begin(), w.xs.begin() + static_cast<long>(j));
      u.y = {dv, idx};
      add(u, c, sign[j]);
    }
  }
  std::vector<FreeElement::Entry> out(acc.begin(), acc.end());
  return FreeElement::fromEntries(std::move(out));
}

FreeElement BarComplex::word(const std::vector<std::pair<int, FreeElement>>& xs, int ydeg,
                             const FreeElement& y) const {
  std::map<int, Polynomial> acc;
  BarWord w;
  w.xs.resize(xs.size());
  const RingPtr& r = C_.ring();
  auto rec = [&](auto&& self, std::size_t k, const Polynomial& coeff) -> void {
    if (k == xs.size()) {
      for (const auto& [yi, c] : y.entries()) {
        w.y = {ydeg, yi};
        Polynomial t = R_->reduce(coeff * c);
        if (t.isZero()) continue;
        int idx = indexOf(w);
        if (idx < 0) throw InputError("bar word outside the constructed range: " + describe(w));
        auto [it, fresh] = acc.emplace(idx, t);
        if (!fresh) {
          it->second += t;
          if (it->second.isZero()) acc.erase(it);
        }
      }
      return;
    }
    if (xs[k].first < 1) throw InputError("bar letters must have positive degree");
    for (const auto& [i, c] : xs[k].second.entries()) {
      w.xs[k] = {xs[k].first, i};
      self(self, k + 1, coeff * c);
    }
  };
  rec(rec, 0, Polynomial::constant(r, 1));
  std::vector<FreeElement::Entry> out(acc.begin(), acc.end());
  return FreeElement::fromEntries(std::move(out));
}

std::string BarComplex::describe(const BarWord& w) const {
  std::string s = "[";
  for (std::size_t k = 0; k < w.xs.size(); ++k) {
    if (k) s += "|";
    s += std::to_string(w.xs[k].deg) + ":" + std::to_string(w.xs[k].idx);
  }
  return s + "]" + std::to_string(w.y.deg) + ":" + std::to_string(w.y.idx);
}

std::vector<long> barRanksByCompositions(const std::vector<int>& xRanks, const std::vector<int>& yRanks, int upTo) {
  std::vector<long> out(upTo + 1, 0);
  const int xTop = static_cast<int>(xRanks.size()) - 1;
  const int yTop = static_cast<int>(yRanks.size()) - 1;
  for (int n = 0; n <= upTo; ++n) {
    // sum over bar lengths p and compositions i_1 + .. + i_p of n - p - j
    auto rec = [&](auto&& self, int left, long prod) -> void {
      if (left <= yTop) out[n] += prod * yRanks[left];
      for (int i = 1; i <= xTop && i + 1 <= left; ++i)
        if (xRanks[i] > 0) self(self, left - i - 1, prod * xRanks[i]);
    };
    rec(rec, n, 1);
  }
  return out;
}

std::vector<long> barRanksBySeries(const std::vector<int>& xRanks, const std::vector<int>& yRanks, int upTo) {
  // G = 1 / (1 - sum_{i>=1} x_i t^(i+1)), then P_Y * G
  std::vector<long> G(upTo + 1, 0), out(upTo + 1, 0);
  G[0] = 1;
  for (int n = 1; n <= upTo; ++n)
    for (int i = 1; i < static_cast<int>(xRanks.size()) && i + 1 <= n; ++i) G[n] += xRanks[i] * G[n - i - 1];
  for (int n = 0; n <= upTo; ++n)
    for (int j = 0; j < static_cast<int>(yRanks.size()) && j <= n; ++j) out[n] += yRanks[j] * G[n - j];
  return out;
}

BarReport verifyBar(const BarComplex& B, long expectedH0) {
  BarReport rep;
  const GradedFreeComplex& C = B.complex();
  for (int n = 0; n <= C.top(); ++n) rep.ranks.push_back(C.rank(n));
  try {
    C.checkSquareZero();
  } catch (const InternalError& e) {
    rep.squareZero = false;
    rep.failure = e.what();
  }
  auto formula = barRanksByCompositions(B.module().algebra().complex().ranks(), B.module().complex().ranks(), C.top());
  rep.ranksMatch = formula == rep.ranks;
  if (!rep.ranksMatch && rep.failure.empty()) rep.failure = "bar ranks differ from the composition count";
  if (B.ring().isArtinian()) {
    rep.homology = homologyDims(C);
    for (std::size_t n = 1; n < rep.homology.size(); ++n)
      if (rep.homology[n] != 0) {
        rep.exact = false;
        if (rep.failure.empty()) rep.failure = "homology in degree " + std::to_string(n);
      }
    if (expectedH0 >= 0 && !rep.homology.empty() && rep.homology[0] != expectedH0) {
      rep.augmentationOk = false;
      if (rep.failure.empty()) rep.failure = "H_0 has the wrong dimension";
    }
  } else {
    rep.exact = false;
    rep.failure = "exactness needs an Artinian quotient";
  }
  return rep;
}

}  // namespace burch
