#include "burch/error.hpp"
#include "burch/krank.hpp"
#include "burch/strand.hpp"
#include "doctest.h"

using namespace burch;

namespace {
QuotientPtr quot(const RingPtr& r, std::initializer_list<const char*> xs) {
  std::vector<std::string> v(xs.begin(), xs.end());
  return std::make_shared<QuotientRing>(Ideal::parse(r, v));
}
Polynomial P(const RingPtr& r, const char* s) { return Polynomial::parse(r, s); }
}  // namespace

TEST_CASE("quotient ring basis") {
  auto r = makeRing({"x", "y"});
  auto R = quot(r, {"x^4", "x^2*y", "y^2"});
  CHECK(R->isArtinian());
  CHECK(R->topDegree() == 3);
  CHECK(R->dimension() == 6);
  CHECK(R->basis(2).size() == 2);
  CHECK(R->normalFormOf(Monomial::var(0, 2) * Monomial::var(1)).empty());
  auto Rn = quot(r, {"x^2"});
  CHECK_FALSE(Rn->isArtinian());
}

TEST_CASE("resolutions over Artinian rings") {
  auto r = makeRing({"x", "y"});
  auto R = quot(r, {"x^2", "x*y", "y^2"});
  auto k = ModulePresentation::residueField(R);
  GradedFreeComplex F = resolveArtinian(R, k.genDegrees, k.relations, 8);
  std::vector<int> expect{1, 2, 4, 8, 16, 32, 64, 128, 256};
  CHECK(F.ranks() == expect);
  CHECK(F.isMinimal());
  CHECK_NOTHROW(F.checkSquareZero());
  auto h = homologyDims(F);
  CHECK(h[0] == 1);
  for (std::size_t n = 1; n < h.size(); ++n) CHECK(h[n] == 0);

  auto rows = syzygyKRanks(k, 6);
  for (const auto& row : rows) {
    CHECK(row.betti == (1 << row.i));
    CHECK(row.kRank == (row.i == 0 ? 1 : (1 << row.i)));
  }

  // non-minimal presentation: the unit relation is removed
  PolyMatrix rel(r, {0, 1}, {1, 1, 1});
  rel.setColumn(0, FreeElement::fromEntries({{0, P(r, "x")}, {1, P(r, "1")}}));
  rel.setColumn(1, FreeElement::fromEntries({{0, P(r, "y")}}));
  rel.setColumn(2, FreeElement::fromEntries({{1, P(r, "x")}}));
  GradedFreeComplex G = resolveArtinian(R, {0, 1}, rel, 3);
  CHECK(G.rank(0) == 1);
  CHECK(G.isMinimal());
}

TEST_CASE("k-rank routes") {
  auto r = makeRing({"x", "y"});
  auto R = quot(r, {"x^2", "x*y", "y^2"});
  auto k = ModulePresentation::residueField(R);
  auto free = ModulePresentation::freeModule(R, {0});
  CHECK(kRank(k) == 1);
  CHECK(kRankStrand(k) == 1);
  CHECK(kRankBruteForce(k) == 1);
  CHECK(kRank(free) == 0);
  CHECK(kRankStrand(free) == 0);
  CHECK(kRankBruteForce(free) == 0);
  auto sum = ModulePresentation::directSum(k, free);
  CHECK(kRank(sum) == 1);
  CHECK(kRankStrand(sum) == 1);
  CHECK(kRankBruteForce(sum) == 1);
  CHECK(moduleDim(sum) == 4);

  auto B = quot(r, {"x^4", "x^2*y", "y^2"});
  auto M = ModulePresentation::cyclic(B, {P(r, "x^2"), P(r, "y")});
  CHECK(kRank(M) == 0);
  CHECK(kRankBruteForce(M) == 0);
  CHECK(kRankStrand(M) == 0);
  auto rows = syzygyKRanks(M, 6);
  for (const auto& row : rows) CHECK(row.kRank == 0);

  // routes agree on another cyclic module
  auto M2 = ModulePresentation::cyclic(B, {P(r, "x*y")});
  CHECK(kRank(M2) == kRankBruteForce(M2));
  CHECK(kRankStrand(M2) == kRankBruteForce(M2));
}
