#include "burch/burch.hpp"
#include "burch/error.hpp"
#include "doctest.h"

using namespace burch;

namespace {
Ideal mk(const RingPtr& r, std::initializer_list<const char*> xs) {
  std::vector<std::string> v(xs.begin(), xs.end());
  return Ideal::parse(r, v);
}
}  // namespace

TEST_CASE("burch ideal and index") {
  auto r = makeRing({"x", "y"});
  Ideal I = mk(r, {"x^4", "x^2*y", "y^2"});
  CHECK(burchIdeal(I) == mk(r, {"x^2", "y"}));
  CHECK(burchIndex(I) == 1);
  Ideal sq = mk(r, {"x^2", "x*y", "y^2"});
  CHECK(burchIdeal(sq) == mk(r, {"x^2", "x*y", "y^2"}));
  CHECK(burchIndex(sq) == 2);
  CHECK(burchIndex(mk(r, {"x^2"})) == 0);
  CHECK(burchIdeal(Ideal(r, {})) == Ideal::maximal(r));
  CHECK(burchIndex(mk(r, {"x^3", "x^2*y", "x*y^2", "y^3"})) == 2);
  CHECK_THROWS_AS(burchIdeal(mk(r, {"x", "y^2"})), InputError);
  // hand brute-force: n^2 is always inside BI
  auto r3 = makeRing({"x", "y", "z"});
  Ideal J = mk(r3, {"x^2", "y^3", "x*z", "z^2"});
  Ideal bi = burchIdeal(J);
  CHECK(bi.contains(product(Ideal::maximal(r3), Ideal::maximal(r3))));
}

TEST_CASE("burch data") {
  auto r = makeRing({"x", "y"});
  BurchData d = burchData(mk(r, {"x^4", "x^2*y", "y^2"}));
  CHECK(d.b == 1);
  CHECK(d.x[0] == Polynomial::parse(r, "x"));
  CHECK(d.s[0] == Polynomial::parse(r, "x*y"));
  CHECK(d.j[0] == 1);

  BurchData e = burchData(mk(r, {"x^2", "x*y", "y^2"}));
  REQUIRE(e.b == 2);
  CHECK(e.x[0] == Polynomial::parse(r, "x"));
  CHECK(e.x[1] == Polynomial::parse(r, "y"));
  CHECK(e.s[0] == Polynomial::parse(r, "x"));
  CHECK(e.s[1] == Polynomial::parse(r, "y"));
  CHECK(e.j[0] == 0);
  CHECK(e.j[1] == 2);

  BurchData f = burchData(mk(r, {"x^3", "x^2*y", "x*y^2", "y^3"}));
  CHECK(f.b == 2);
  CHECK_THROWS_AS(burchData(mk(r, {"x^2"})), InputError);

  // the checker rejects tampered data
  BurchData bad = e;
  bad.s[1] = Polynomial::parse(r, "x^2");
  CHECK_THROWS_AS(verifyBurchData(mk(r, {"x^2", "x*y", "y^2"}), bad), InternalError);
}

TEST_CASE("burch data for a non-monomial ideal") {
  auto r = makeRing({"x", "y"});
  Ideal I = mk(r, {"x^2+y^2", "x*y"});  // complete intersection, Burch index 0
  CHECK(burchIndex(I) == 0);
  Ideal J = mk(r, {"x^2+2*x*y+y^2", "x*y+y^2", "y^2"});
  BurchData d = burchData(J);
  CHECK(d.b == 2);
  verifyBurchData(J, d);
}
