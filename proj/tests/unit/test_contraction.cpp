#include "burch/contraction.hpp"
#include "burch/taylor.hpp"
#include "doctest.h"

using namespace burch;

namespace {
Ideal mk(const RingPtr& r, std::initializer_list<const char*> xs) {
  std::vector<std::string> v(xs.begin(), xs.end());
  return Ideal::parse(r, v);
}
}  // namespace

TEST_CASE("minimalize on Taylor complexes") {
  auto r = makeRing({"x", "y"});
  SUBCASE("redundant generator cancels") {
    auto T = TaylorAlgebra::ofIdeal(mk(r, {"x^2", "x^2*y"}));
    Contraction c = minimalize(T->complex());
    CHECK(c.small.ranks() == std::vector<int>{1, 1, 0});
    CHECK(c.small.degrees(1) == std::vector<int>{2});
    auto rep = verifyContraction(c);
    CHECK_MESSAGE(rep.ok, rep.firstFailure);
  }
  SUBCASE("square of the maximal ideal") {
    auto T = TaylorAlgebra::ofIdeal(mk(r, {"x^2", "x*y", "y^2"}));
    Contraction c = minimalize(T->complex());
    CHECK(c.small.ranks() == std::vector<int>{1, 3, 2, 0});
    CHECK(c.steps.size() == 1);
    auto rep = verifyContraction(c);
    CHECK_MESSAGE(rep.ok, rep.firstFailure);
  }
  SUBCASE("minimal input gives the identity") {
    auto T = TaylorAlgebra::ofIdeal(mk(r, {"x^2", "y^3"}));
    Contraction c = minimalize(T->complex());
    CHECK(c.steps.empty());
    CHECK(c.small.ranks() == T->complex().ranks());
    auto rep = verifyContraction(c);
    CHECK_MESSAGE(rep.ok, rep.firstFailure);
  }
  SUBCASE("three variables") {
    auto r3 = makeRing({"x", "y", "z"});
    auto T = TaylorAlgebra::ofIdeal(mk(r3, {"x^2", "x*y", "y^2", "x*z", "y*z", "z^2"}));
    Contraction c = minimalize(T->complex());
    CHECK(c.small.ranks() == std::vector<int>{1, 6, 8, 3, 0, 0, 0});
    auto rep = verifyContraction(c);
    CHECK_MESSAGE(rep.ok, rep.firstFailure);
    MinimalizeOptions noH;
    noH.trackHomotopy = false;
    Contraction c2 = minimalize(T->complex(), noH);
    CHECK(c2.small.ranks() == c.small.ranks());
    CHECK(verifyContraction(c2).ok);
  }
}
