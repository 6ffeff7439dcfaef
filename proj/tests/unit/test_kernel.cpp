#include <map>
#include <random>

#include "burch/error.hpp"
#include "burch/free_module.hpp"
#include "burch/ideal.hpp"
#include "doctest.h"

using namespace burch;

namespace {

// independent schoolbook multiplier over exponent vectors
std::map<std::vector<int>, long> naiveMul(const Polynomial& a, const Polynomial& b, int n, long p) {
  std::map<std::vector<int>, long> acc;
  for (const auto& s : a.terms())
    for (const auto& t : b.terms()) {
      std::vector<int> e(n);
      for (int k = 0; k < n; ++k) e[k] = s.m.exponent(k) + t.m.exponent(k);
      acc[e] = (acc[e] + static_cast<long>(s.c) * t.c) % p;
    }
  for (auto it = acc.begin(); it != acc.end();)
    it = it->second == 0 ? acc.erase(it) : std::next(it);
  return acc;
}

Polynomial randomHomogeneous(const RingPtr& r, int d, std::mt19937& rng) {
  std::vector<Term> ts;
  for (Monomial m : monomialsOfDegree(r->nvars(), d))
    if (rng() % 2) ts.push_back({m, static_cast<Coeff>(rng() % r->field.prime())});
  return Polynomial::fromTerms(r, ts);
}

}  // namespace

TEST_CASE("field arithmetic") {
  PrimeField F(32003);
  std::mt19937 rng(7);
  for (int i = 0; i < 200; ++i) {
    Coeff a = rng() % 32003, b = rng() % 32003, c = rng() % 32003;
    CHECK(F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c)));
    CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
    if (a) CHECK(F.mul(a, F.inv(a)) == 1);
  }
  CHECK_THROWS_AS(PrimeField(32004), InputError);
}

TEST_CASE("monomial order and packing") {
  Monomial x = Monomial::var(0), y = Monomial::var(1), z = Monomial::var(2);
  CHECK(grevlex(x, y) > 0);
  CHECK(grevlex(y, z) > 0);
  CHECK(grevlex(x * z, y * y) < 0);  // grevlex: y^2 > xz
  CHECK(grevlex(x * x, x * y) > 0);
  CHECK((x * x * y).degree() == 3);
  CHECK(x.divides(x * y));
  CHECK_FALSE((x * x).divides(x * y));
  CHECK((x * x).lcm(x * y) == x * x * y);
  CHECK_THROWS_AS(Monomial::var(0, 100) * Monomial::var(0, 100), ResourceError);
}

TEST_CASE("polynomial arithmetic") {
  auto r = makeRing({"x", "y"});
  auto P = [&](const char* s) { return Polynomial::parse(r, s); };
  CHECK((P("x+y") * P("x-y")) == P("x^2-y^2"));
  CHECK((P("x^2+y") * Polynomial(r)).isZero());
  CHECK((P("x^2+y") * P("x^2+y")) == P("x^4+2*x^2*y+y^2"));
  CHECK(P("x^2*y - 3*x + 1").toString() == "x^2*y - 3*x + 1");
  CHECK(P("-(x+y)^2").toString() == "-x^2 - 2*x*y - y^2");
  CHECK_THROWS_AS(P("2x"), InputError);
  CHECK_THROWS_AS(P("x*z"), InputError);
  auto other = makeRing({"x", "y", "z"});
  CHECK_THROWS_AS(P("x") + Polynomial::parse(other, "x"), StructuralError);

  std::mt19937 rng(11);
  for (int i = 0; i < 30; ++i) {
    Polynomial a = randomHomogeneous(r, 1 + rng() % 3, rng);
    Polynomial b = randomHomogeneous(r, 1 + rng() % 3, rng);
    Polynomial c = randomHomogeneous(r, 1 + rng() % 3, rng);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    Polynomial ab = a * b;
    CHECK(ab.isHomogeneous());
    if (!ab.isZero()) CHECK(ab.degree() == a.degree() + b.degree());
    auto naive = naiveMul(a, b, 2, 32003);
    CHECK(naive.size() == ab.size());
    for (const auto& t : ab.terms()) {
      std::vector<int> e{t.m.exponent(0), t.m.exponent(1)};
      CHECK(naive[e] == static_cast<long>(t.c));
    }
  }
}

TEST_CASE("matrix application") {
  auto r = makeRing({"x"});
  PolyMatrix koszul(r, {0}, {2});
  koszul.setEntry(0, 0, Polynomial::parse(r, "x^2"));
  FreeElement e = FreeElement::basis(r, 0);
  CHECK(koszul.apply(e) == FreeElement::fromEntries({{0, Polynomial::parse(r, "x^2")}}));
  CHECK(koszul.isHomogeneous());
  PolyMatrix id = PolyMatrix::identity(r, {0, 1});
  FreeElement v = FreeElement::fromEntries({{0, Polynomial::parse(r, "x")}, {1, Polynomial::parse(r, "3")}});
  CHECK(id.apply(v) == v);
  PolyMatrix zero(r, {0, 1}, {0, 1});
  CHECK(zero.apply(v).isZero());
  CHECK_THROWS_AS(koszul.apply(v), StructuralError);

  auto r2 = makeRing({"x", "y"});
  std::mt19937 rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    PolyMatrix m1(r2, {0, 0}, {1, 1, 1}), m2(r2, {0}, {0, 0});
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 3; ++j) m1.setEntry(i, j, randomHomogeneous(r2, 1, rng));
    for (int j = 0; j < 2; ++j) m2.setEntry(0, j, randomHomogeneous(r2, 2, rng));
    FreeElement w;
    for (int j = 0; j < 3; ++j) w.add(j, randomHomogeneous(r2, 2, rng));
    CHECK(m2.apply(m1.apply(w)) == m2.compose(m1).apply(w));
  }
}
