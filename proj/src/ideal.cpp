#include "burch/ideal.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "burch/error.hpp"
#include "burch/linalg.hpp"

namespace burch {

Ideal::Ideal(RingPtr r, std::vector<Polynomial> gens) : ring_(std::move(r)) {
  if (!ring_) throw StructuralError("ideal without ring");
  for (auto& g : gens) {
    if (!sameRing(g.ring().get(), ring_.get()))
      throw StructuralError("ideal generator from a different ring");
    if (!g.isZero()) gens_.push_back(std::move(g));
  }
  std::vector<ModPoly> mp;
  for (const auto& g : gens_) mp.push_back(toModPoly(g));
  gbData_ = GroebnerBasis::compute(std::move(mp), ring_->field, {}, true);
  for (const auto& g : gbData_.elements()) gb_.push_back(modPolyToPolynomial(ring_, g));
}

Ideal Ideal::maximal(const RingPtr& r) {
  std::vector<Polynomial> g;
  for (int k = 0; k < r->nvars(); ++k) g.push_back(Polynomial::variable(r, k));
  return Ideal(r, std::move(g));
}

Ideal Ideal::parse(const RingPtr& r, const std::vector<std::string>& gens) {
  std::vector<Polynomial> g;
  for (const auto& s : gens) g.push_back(Polynomial::parse(r, s));
  return Ideal(r, std::move(g));
}

Polynomial Ideal::normalForm(const Polynomial& p) const {
  if (!sameRing(p.ring().get(), ring_.get())) throw StructuralError("polynomial from a different ring");
  if (gb_.empty() || p.isZero()) return p;
  return modPolyToPolynomial(ring_, gbData_.normalForm(toModPoly(p)));
}

bool Ideal::contains(const Ideal& J) const {
  for (const auto& g : J.gens_)
    if (!contains(g)) return false;
  return true;
}

bool Ideal::isUnit() const { return gb_.size() == 1 && gb_[0].degree() == 0; }

bool Ideal::isMonomial() const {
  for (const auto& g : gb_)
    if (!g.isMonomial()) return false;
  return true;
}

bool Ideal::isHomogeneous() const {
  for (const auto& g : gens_)
    if (!g.isHomogeneous()) return false;
  return true;
}

bool Ideal::insidePowerOfMaximal(int d) const {
  for (const auto& g : gens_)
    if (g.lowDegree() < d) return false;
  return true;
}

bool Ideal::isArtinian() const {
  for (int k = 0; k < ring_->nvars(); ++k) {
    bool found = false;
    for (const auto& g : gb_) {
      Monomial m = g.leading().m;
      if (m.exponent(k) > 0 && m == Monomial::var(k, m.exponent(k))) found = true;
    }
    if (!found) return false;
  }
  return true;
}

std::string Ideal::toString() const {
  std::string s = "(";
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i) s += ", ";
    s += gens_[i].toString();
  }
  return s + ")";
}

Ideal sum(const Ideal& I, const Ideal& J) {
  std::vector<Polynomial> g = I.gens();
  g.insert(g.end(), J.gens().begin(), J.gens().end());
  return Ideal(I.ring(), std::move(g));
}

Ideal product(const Ideal& I, const Ideal& J) {
  std::vector<Polynomial> g;
  for (const auto& a : I.gens())
    for (const auto& b : J.gens()) g.push_back(a * b);
  return Ideal(I.ring(), std::move(g));
}

namespace {

std::vector<Polynomial> monomialMinimize(const RingPtr& r, std::vector<Monomial> ms) {
  std::sort(ms.begin(), ms.end(), [](Monomial a, Monomial b) { return grevlex(a, b) < 0; });
  std::vector<Monomial> keep;
  for (Monomial m : ms) {
    bool red = false;
    for (Monomial k : keep)
      if (k.divides(m)) red = true;
    if (!red) keep.push_back(m);
  }
  std::vector<Polynomial> out;
  for (Monomial m : keep) out.push_back(Polynomial::monomial(r, m));
  return out;
}

std::vector<Monomial> leadMonomials(const Ideal& I) {
  std::vector<Monomial> ms;
  for (const auto& g : I.groebner()) ms.push_back(g.leading().m);
  return ms;
}

}  // namespace

Ideal intersect(const Ideal& I, const Ideal& J) {
  const RingPtr& r = I.ring();
  if (I.isZero() || J.isZero()) return Ideal(r, {});
  if (I.isMonomial() && J.isMonomial()) {
    std::vector<Monomial> ms;
    for (Monomial a : leadMonomials(I))
      for (Monomial b : leadMonomials(J)) ms.push_back(a.lcm(b));
    return Ideal(r, monomialMinimize(r, ms));
  }
  // syzygies of [g_1..g_a, h_1..h_b]; the intersection is sum c_i g_i
  const auto& gs = I.gens();
  const auto& hs = J.gens();
  PolyMatrix m(r, {0}, std::vector<int>(gs.size() + hs.size(), 0));
  for (std::size_t i = 0; i < gs.size(); ++i) m.setEntry(0, static_cast<int>(i), gs[i]);
  for (std::size_t i = 0; i < hs.size(); ++i) m.setEntry(0, static_cast<int>(gs.size() + i), hs[i]);
  TrackedGroebner tg(m);
  std::vector<Polynomial> out;
  for (const auto& s : tg.syzygies()) {
    Polynomial acc(r);
    for (const auto& [j, c] : s.entries())
      if (j < static_cast<int>(gs.size())) acc += c * gs[j];
    if (!acc.isZero()) out.push_back(acc);
  }
  return Ideal(r, std::move(out));
}

Ideal colon(const Ideal& I, const Polynomial& f) {
  const RingPtr& r = I.ring();
  if (f.isZero()) return Ideal(r, {Polynomial::constant(r, 1)});
  if (I.isZero()) return Ideal(r, {});
  PolyMatrix m(r, {0}, std::vector<int>(I.groebner().size() + 1, 0));
  m.setEntry(0, 0, f);
  for (std::size_t i = 0; i < I.groebner().size(); ++i)
    m.setEntry(0, static_cast<int>(i + 1), I.groebner()[i]);
  TrackedGroebner tg(m);
  std::vector<Polynomial> out;
  for (const auto& s : tg.syzygies()) {
    Polynomial c = s.at(0);
    if (!c.isZero()) out.push_back(c);
  }
  return Ideal(r, std::move(out));
}

Ideal colonGeneral(const Ideal& I, const Ideal& J) {
  const RingPtr& r = I.ring();
  if (J.isZero()) return Ideal(r, {Polynomial::constant(r, 1)});
  Ideal acc;
  bool first = true;
  for (const auto& g : J.gens()) {
    Ideal c = colon(I, g);
    acc = first ? c : intersect(acc, c);
    first = false;
  }
  return acc;
}

Ideal colonMonomial(const Ideal& I, const Ideal& J) {
  const RingPtr& r = I.ring();
  if (!I.isMonomial() || !J.isMonomial()) throw InputError("monomial colon needs monomial ideals");
  if (J.isZero()) return Ideal(r, {Polynomial::constant(r, 1)});
  Ideal acc;
  bool first = true;
  for (Monomial m : leadMonomials(J)) {
    std::vector<Monomial> ms;
    for (Monomial g : leadMonomials(I)) ms.push_back(g / g.gcd(m));
    Ideal c(r, monomialMinimize(r, ms));
    acc = first ? c : intersect(acc, c);
    first = false;
  }
  return acc;
}

Ideal colon(const Ideal& I, const Ideal& J) {
  if (I.isMonomial() && J.isMonomial()) return colonMonomial(I, J);
  return colonGeneral(I, J);
}

std::vector<Monomial> monomialsOfDegree(int nvars, int d) {
  std::vector<Monomial> out;
  std::vector<int> e(nvars, 0);
  // enumerate compositions of d into nvars parts
  auto rec = [&](auto&& self, int k, int left) -> void {
    if (k == nvars - 1) {
      e[k] = left;
      if (left <= kMaxExponent) out.push_back(Monomial::fromExponents(e.data(), nvars));
      return;
    }
    for (int a = left; a >= 0; --a) {
      e[k] = a;
      self(self, k + 1, left - a);
    }
  };
  if (nvars > 0 && d >= 0) rec(rec, 0, d);
  std::sort(out.begin(), out.end(), [](Monomial a, Monomial b) { return grevlex(a, b) > 0; });
  return out;
}

namespace {

struct KeyHash {
  std::size_t operator()(const std::pair<int, std::uint64_t>& k) const noexcept {
    return std::hash<std::uint64_t>()(k.second * 31 + static_cast<std::uint64_t>(k.first));
  }
};

/// Coordinates of homogeneous free-module elements as k-vectors.
class Vectorizer {
 public:
  SparseVec vec(const FreeElement& v) {
    std::vector<std::pair<int, Coeff>> raw;
    for (const auto& [j, p] : v.entries())
      for (const auto& t : p.terms()) raw.emplace_back(id(j, t.m), t.c);
    return canonicalVec(std::move(raw), F_);
  }
  explicit Vectorizer(const PrimeField& F) : F_(F) {}

 private:
  int id(int j, Monomial m) {
    auto key = std::make_pair(j, m.raw());
    auto it = ids_.find(key);
    if (it != ids_.end()) return it->second;
    int n = static_cast<int>(ids_.size());
    ids_.emplace(key, n);
    return n;
  }
  PrimeField F_;
  std::unordered_map<std::pair<int, std::uint64_t>, int, KeyHash> ids_;
};

}  // namespace

std::vector<int> minimalGeneratorIndices(const RingPtr& r, const std::vector<FreeElement>& gens,
                               const std::vector<int>& basisDegrees) {
  std::map<int, std::vector<int>> byDegree;
  for (int i = 0; i < static_cast<int>(gens.size()); ++i) {
    if (gens[i].isZero()) continue;
    int d = gens[i].degree(basisDegrees);  // throws on inhomogeneous input
    byDegree[d].push_back(i);
  }
  std::vector<int> accepted;
  const int n = r->nvars();
  for (const auto& [d, idx] : byDegree) {
    Vectorizer vz(r->field);
    Echelon ech(r->field);
    for (int a : accepted) {
      int e = d - gens[a].degree(basisDegrees);
      for (Monomial u : monomialsOfDegree(n, e)) ech.insert(vz.vec(gens[a].mulTerm(u, 1)));
    }
    for (int i : idx)
      if (ech.insert(vz.vec(gens[i]))) accepted.push_back(i);
  }
  std::sort(accepted.begin(), accepted.end());
  return accepted;
}

std::vector<Polynomial> minimalGenerators(const RingPtr& r, const std::vector<Polynomial>& gens) {
  std::vector<FreeElement> fe;
  for (const auto& g : gens) {
    if (!g.isHomogeneous()) throw InputError("minimal generators need homogeneous input");
    FreeElement e;
    e.add(0, g);
    fe.push_back(e);
  }
  std::vector<Polynomial> out;
  for (int i : minimalGeneratorIndices(r, fe, {0})) out.push_back(gens[i]);
  return out;
}

std::vector<Polynomial> minimalGenerators(const Ideal& I) { return minimalGenerators(I.ring(), I.gens()); }

Submodule::Submodule(RingPtr r, std::vector<int> basisDegrees, std::vector<FreeElement> gens)
    : ring_(std::move(r)), degrees_(std::move(basisDegrees)) {
  for (auto& g : gens) {
    if (g.support() > ambientRank()) throw StructuralError("generator outside the ambient free module");
    if (!g.isZero()) gens_.push_back(std::move(g));
  }
}

const GroebnerBasis& Submodule::groebnerBasis() const {
  if (!haveGb_) {
    std::vector<ModPoly> mp;
    for (const auto& g : gens_) mp.push_back(toModPoly(g));
    gb_ = GroebnerBasis::compute(std::move(mp), ring_->field, degrees_, false);
    haveGb_ = true;
  }
  return gb_;
}

std::vector<FreeElement> Submodule::groebner() const {
  std::vector<FreeElement> out;
  for (const auto& g : groebnerBasis().elements())
    out.push_back(modPolyToFree(ring_, g, 0, ambientRank()));
  return out;
}

bool Submodule::contains(const FreeElement& v) const {
  if (v.support() > ambientRank()) throw StructuralError("element outside the ambient free module");
  return groebnerBasis().reducesToZero(toModPoly(v));
}

bool Submodule::isZero() const { return gens_.empty(); }

std::vector<FreeElement> minimalGenerators(const Submodule& N) {
  std::vector<FreeElement> out;
  for (int i : minimalGeneratorIndices(N.ring(), N.gens(), N.basisDegrees())) out.push_back(N.gens()[i]);
  return out;
}

Submodule syzygies(const PolyMatrix& m) {
  TrackedGroebner tg(m);
  return Submodule(m.ring(), m.colDegrees(), tg.syzygies());
}

}  // namespace burch
