#include "burch/ainfty.hpp"
#include "burch/error.hpp"
#include "burch/taylor.hpp"
#include "doctest.h"

using namespace burch;

namespace {
Ideal mk(const RingPtr& r, std::initializer_list<const char*> xs) {
  std::vector<std::string> v(xs.begin(), xs.end());
  return Ideal::parse(r, v);
}

void checkAll(const AInfAlgebra& A, int upTo) {
  for (int n = 1; n <= upTo; ++n) {
    auto s = stasheffCheck(A, n, SignConvention::Suspended);
    CHECK_MESSAGE(s.ok, s.firstFailure);
    auto u = stasheffCheck(A, n, SignConvention::Unsuspended);
    CHECK_MESSAGE(u.ok, u.firstFailure);
  }
  auto unit = checkStrictUnit(A, upTo);
  CHECK_MESSAGE(unit.ok, unit.firstFailure);
}

void checkAll(const AInfModule& M, int upTo) {
  for (int n = 1; n <= upTo; ++n) {
    auto s = stasheffCheck(M, n, SignConvention::Suspended);
    CHECK_MESSAGE(s.ok, s.firstFailure);
    auto u = stasheffCheck(M, n, SignConvention::Unsuspended);
    CHECK_MESSAGE(u.ok, u.firstFailure);
  }
  auto unit = checkStrictUnit(M, upTo);
  CHECK_MESSAGE(unit.ok, unit.firstFailure);
}
}  // namespace

TEST_CASE("identity transfer keeps the dg product") {
  auto r = makeRing({"x", "y"});
  auto T = TaylorAlgebra::ofIdeal(mk(r, {"x^2", "x*y", "y^2"}));
  auto A = AInfAlgebra::fromDg(T, 4);
  CHECK(A->isDg());
  const auto& C = A->complex();
  for (int n1 = 0; n1 <= C.top(); ++n1)
    for (int n2 = 0; n1 + n2 <= C.top(); ++n2)
      for (int i = 0; i < C.rank(n1); ++i)
        for (int j = 0; j < C.rank(n2); ++j) CHECK(A->m({{n1, i}, {n2, j}}) == T->multiply(n1, i, n2, j));
  for (const auto& xs : basisTuples(C, 3, 0, C.top())) CHECK(A->m(xs).isZero());
  checkAll(*A, 4);
}

TEST_CASE("transfer onto the Koszul complex of x^2") {
  auto r = makeRing({"x", "y"});
  auto T = TaylorAlgebra::ofIdeal(mk(r, {"x^2", "x^2*y"}));
  auto A = AInfAlgebra::transfer(T, 4);
  CHECK(A->complex().ranks() == std::vector<int>{1, 1, 0});
  CHECK(A->m({{1, 0}, {1, 0}}).isZero());
  CHECK(A->m({{0, 0}, {1, 0}}) == FreeElement::basis(r, 0));
  checkAll(*A, 4);
}

TEST_CASE("transfer onto minimal resolutions of monomial quotients") {
  auto r = makeRing({"x", "y"});
  for (auto I : {mk(r, {"x^2", "x*y", "y^2"}), mk(r, {"x^4", "x^2*y", "y^2"}), mk(r, {"x^3", "x*y", "y^2"})}) {
    auto T = TaylorAlgebra::ofIdeal(I);
    auto A = AInfAlgebra::transfer(T, 4);
    CHECK(A->complex().ranks() == std::vector<int>{1, 3, 2, 0});
    CHECK_FALSE(A->isDg());
    checkAll(*A, 4);
    auto mn = checkMinimalOps(*A, 4);
    CHECK_MESSAGE(mn.ok, mn.firstFailure);
  }
}

TEST_CASE("module transfer for the residue field") {
  auto r = makeRing({"x", "y", "z"});
  Ideal I = mk(r, {"x^2", "x*y", "x*z", "y^2", "y*z", "z^2"});
  auto T = TaylorAlgebra::ofIdeal(I);
  auto A = AInfAlgebra::transfer(T, 4);
  CHECK(A->complex().ranks() == std::vector<int>{1, 6, 8, 3, 0, 0, 0});
  checkAll(*A, 4);

  std::vector<Monomial> gens = T->generators();
  for (int v = 0; v < 3; ++v) gens.push_back(Monomial::var(v));
  auto Yb = std::make_shared<TaylorAlgebra>(r, gens);
  auto Y = std::make_shared<TaylorModule>(T, Yb);
  auto M = AInfModule::transfer(A, Y);
  CHECK(M->complex().ranks()[0] == 1);
  CHECK(M->complex().ranks()[1] == 3);
  CHECK(M->complex().ranks()[2] == 3);
  CHECK(M->complex().ranks()[3] == 1);
  checkAll(*M, 4);
  auto mn = checkMinimalOps(*M, 4);
  CHECK_MESSAGE(mn.ok, mn.firstFailure);

  // the dg module over the dg algebra passes as well
  auto D = AInfAlgebra::fromDg(T, 3);
  auto DM = AInfModule::fromDg(D, Y);
  CHECK(DM->isDg());
  auto s = stasheffCheck(*DM, 3);
  CHECK_MESSAGE(s.ok, s.firstFailure);
}

TEST_CASE("nonvanishing higher operations") {
  auto r = makeRing({"x", "y", "z", "w"});
  auto T = TaylorAlgebra::ofIdeal(mk(r, {"x^2", "x*y", "y*z", "z*w", "w^2"}));
  auto A = AInfAlgebra::transfer(T, 4);
  CHECK(A->complex().ranks() == std::vector<int>{1, 5, 7, 4, 1, 0});
  int m3 = 0;
  for (const auto& xs : basisTuples(A->complex(), 3, 1, 3)) m3 += !A->m(xs).isZero();
  CHECK(m3 > 0);
  checkAll(*A, 4);

  std::vector<Monomial> gens = T->generators();
  gens.push_back(Monomial::var(1));
  auto Y = std::make_shared<TaylorModule>(T, std::make_shared<TaylorAlgebra>(r, gens));
  auto M = AInfModule::transfer(A, Y);
  int mu3 = 0;
  for (const auto& xs : basisTuples(A->complex(), 2, 1, 4))
    for (int d = 0; d <= M->complex().top(); ++d)
      for (int i = 0; i < M->complex().rank(d); ++i) mu3 += !M->mu(xs, {d, i}).isZero();
  CHECK(mu3 > 0);
  checkAll(*M, 4);
}

TEST_CASE("arity cap") {
  auto r = makeRing({"x", "y", "z"});
  Ideal I = mk(r, {"x^2", "x*y", "x*z", "y^2", "y*z", "z^2"});
  auto T = TaylorAlgebra::ofIdeal(I);
  auto A = AInfAlgebra::transfer(T, 2);
  std::vector<Monomial> gens = T->generators();
  for (int v = 0; v < 3; ++v) gens.push_back(Monomial::var(v));
  auto Y = std::make_shared<TaylorModule>(T, std::make_shared<TaylorAlgebra>(r, gens));
  auto M = AInfModule::transfer(A, Y);
  // outputs above the top degree vanish without consulting the cap
  CHECK(A->b({{1, 0}, {1, 1}, {1, 2}}).isZero());
  CHECK_THROWS_AS(M->b({{1, 0}, {1, 1}}, {0, 0}), ResourceError);
  CHECK_THROWS_AS(AInfAlgebra::transfer(T, 1), InputError);
}
