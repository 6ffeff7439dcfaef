#include "burch/error.hpp"
#include "burch/taylor.hpp"
#include "doctest.h"

using namespace burch;

namespace {
Ideal mk(const RingPtr& r, std::initializer_list<const char*> xs) {
  std::vector<std::string> v(xs.begin(), xs.end());
  return Ideal::parse(r, v);
}
Polynomial P(const RingPtr& r, const char* s) { return Polynomial::parse(r, s); }
}  // namespace

TEST_CASE("taylor complex shapes and differentials") {
  auto r = makeRing({"x", "y"});
  auto K = TaylorAlgebra::ofIdeal(mk(r, {"x^2"}));
  CHECK(K->complex().ranks() == std::vector<int>{1, 1});
  CHECK(K->complex().diff(1).entry(0, 0) == P(r, "x^2"));

  auto T = TaylorAlgebra::ofIdeal(mk(r, {"x^2", "x*y", "y^2"}));
  const auto& C = T->complex();
  CHECK(C.ranks() == std::vector<int>{1, 3, 3, 1});
  CHECK(C.degrees(2) == std::vector<int>{3, 4, 3});
  // e_{12} -> x e_2 - y e_1
  FreeElement d = C.diff(2).column(0);
  CHECK(d.at(0) == P(r, "-y"));
  CHECK(d.at(1) == P(r, "x"));
  CHECK(d.at(2).isZero());
  CHECK_NOTHROW(C.checkSquareZero());
  CHECK(C.isHomogeneous());
  // the unit coefficient on e_13 in the top differential
  CHECK_FALSE(C.isMinimal());

  for (int n = 1; n <= 3; ++n)
    for (int i = 0; i < C.rank(n); ++i) CHECK(T->multiply(n, i, n, i).isZero());
}

TEST_CASE("taylor dg algebra and module checks") {
  auto r = makeRing({"x", "y", "z"});
  auto X = TaylorAlgebra::ofIdeal(mk(r, {"x^2", "x*y", "y^2", "y*z", "z^3"}));
  auto rep = checkDgAlgebra(*X);
  CHECK_MESSAGE(rep.ok, rep.firstFailure);
  CHECK(rep.checked > 100);

  auto Y = TaylorAlgebra::ofIdeal(mk(r, {"x^2", "x*y", "y^2", "y*z", "z^3", "x", "z"}));
  TaylorModule M(X, Y);
  auto rm = checkDgModule(M);
  CHECK_MESSAGE(rm.ok, rm.firstFailure);
  auto rp = checkDgModuleMap(M, M.inclusion());
  CHECK_MESSAGE(rp.ok, rp.firstFailure);
}

TEST_CASE("taylor guards") {
  auto r = makeRing({"x", "y"});
  std::vector<Monomial> many;
  for (int i = 0; i < 13; ++i) many.push_back(Monomial::var(0, i + 1) * Monomial::var(1, 13 - i));
  CHECK_THROWS_AS(TaylorAlgebra(r, many), ResourceError);
  CHECK_THROWS_AS(TaylorAlgebra::ofIdeal(mk(r, {"x^2+y^2"})), InputError);
}
