#include <algorithm>

#include "burch/error.hpp"
#include "burch/resolution.hpp"
#include "burch/strand.hpp"
#include "doctest.h"

using namespace burch;

namespace {
Ideal mk(const RingPtr& r, std::initializer_list<const char*> xs) {
  std::vector<std::string> v(xs.begin(), xs.end());
  return Ideal::parse(r, v);
}
Polynomial P(const RingPtr& r, const char* s) { return Polynomial::parse(r, s); }
}  // namespace

TEST_CASE("resolution over Q of Q/m^2") {
  auto r = makeRing({"x", "y"});
  Ideal I = mk(r, {"x^2", "x*y", "y^2"});
  PolyMatrix rel(r, {0}, {2, 2, 2});
  for (int c = 0; c < 3; ++c) rel.setColumn(c, FreeElement::fromEntries({{0, I.gens()[c]}}));
  GradedFreeComplex F = resolveOverQ(r, {0}, rel, 5);
  CHECK(F.ranks() == std::vector<int>{1, 3, 2});
  CHECK(F.degrees(2) == std::vector<int>{3, 3});
  CHECK(F.isMinimal());
  CHECK(exactOverQ(F, 1));
}

TEST_CASE("lifted and strand resolutions agree") {
  auto r = makeRing({"x", "y"});
  auto R = std::make_shared<QuotientRing>(mk(r, {"x^4", "x^2*y", "y^2"}));
  auto M = ModulePresentation::cyclic(R, {P(r, "x^2"), P(r, "y")});
  GradedFreeComplex A = resolveOverRLifted(M, 5);
  GradedFreeComplex B = resolveArtinian(R, M.genDegrees, M.relations, 5);
  CHECK(A.ranks() == B.ranks());
  for (int n = 0; n <= 5; ++n) {
    auto a = A.degrees(n), b = B.degrees(n);
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    CHECK(a == b);
  }
  CHECK(A.isMinimal());

  // a non-Artinian quotient goes through the lifting route
  auto S = std::make_shared<QuotientRing>(mk(r, {"x^2"}));
  auto k = ModulePresentation::residueField(S);
  GradedFreeComplex K = resolveOverR(k, 4);
  CHECK(K.ranks() == std::vector<int>{1, 2, 2, 2, 2});
}

TEST_CASE("taylor shortcut for monomial cyclic modules") {
  auto r = makeRing({"x", "y"});
  Ideal I = mk(r, {"x^2", "x*y", "y^2"});
  auto R = std::make_shared<QuotientRing>(I);
  auto X = TaylorAlgebra::ofIdeal(I);

  auto res = dgModuleResolution(ModulePresentation::residueField(R), X, 4);
  CHECK(res.taylorShortcut);
  CHECK(res.Y->complex().ranks() == std::vector<int>{1, 5, 10, 10, 5, 1});
  auto rep = checkSplitInjection(*res.Y, res.psi);
  CHECK_MESSAGE(rep.ok, rep.firstFailure);

  auto same = dgModuleResolution(ModulePresentation::cyclic(R, {}), X, 4);
  CHECK(same.Y->complex().ranks() == X->complex().ranks());
  for (const auto& m : same.psi.maps)
    for (int i = 0; i < m.cols(); ++i) CHECK(m.column(i) == FreeElement::basis(r, i));
}

TEST_CASE("semifree resolution of a two-generated module") {
  auto r = makeRing({"x", "y"});
  Ideal I = mk(r, {"x^2", "x*y", "y^2"});
  auto R = std::make_shared<QuotientRing>(I);
  auto X = TaylorAlgebra::ofIdeal(I);
  PolyMatrix rel(r, {0, 0}, {1, 1});
  rel.setColumn(0, FreeElement::fromEntries({{0, P(r, "x")}, {1, P(r, "y")}}));
  rel.setColumn(1, FreeElement::fromEntries({{0, P(r, "y")}, {1, P(r, "2*x+3*y")}}));
  ModulePresentation M{R, {0, 0}, rel};

  const int top = 4;
  auto res = dgModuleResolution(M, X, top);
  CHECK_FALSE(res.taylorShortcut);
  const auto& C = res.Y->complex();
  CHECK(C.top() == top);
  CHECK_NOTHROW(C.checkSquareZero());
  CHECK(C.isHomogeneous());
  for (int n = 1; n < top; ++n) CHECK(exactOverQ(C, n));
  auto rm = checkDgModule(*res.Y);
  CHECK_MESSAGE(rm.ok, rm.firstFailure);
  auto rp = checkSplitInjection(*res.Y, res.psi);
  CHECK_MESSAGE(rp.ok, rp.firstFailure);

  // H_0 is M: the cokernel of d_1 over Q agrees with R^2 / relations
  PolyMatrix full(r, {0, 0}, {1, 1, 2, 2, 2, 2, 2, 2});
  int c = 0;
  for (int j = 0; j < 2; ++j) full.setColumn(c++, rel.column(j));
  for (const auto& f : I.gens())
    for (int j = 0; j < 2; ++j) full.setColumn(c++, FreeElement::fromEntries({{j, f}}));
  Submodule a(r, {0, 0}, C.diff(1).columns()), b(r, {0, 0}, full.columns());
  for (const auto& v : full.columns()) CHECK(a.contains(v));
  for (const auto& v : C.diff(1).columns()) CHECK(b.contains(v));

  CHECK_THROWS_AS(semifreeResolution(M, X, 6, 10), ResourceError);
}
