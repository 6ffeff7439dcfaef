#include "burch/error.hpp"
#include "burch/pipelines.hpp"
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

TEST_CASE("Burch cycle of the Burch index one example") {
  auto r = makeRing({"x", "y"});
  Ideal I = mk(r, {"x^4", "x^2*y", "y^2"});
  auto bd = burchData(I);
  auto X = TaylorAlgebra::ofIdeal(I);
  auto cycles = burchCycles(I, bd, X->complex());
  REQUIRE(cycles.size() == 1);
  const auto& c = cycles[0];
  CHECK_FALSE(c.certified);
  // e_1 -> x^4, e_2 -> x^2 y, e_3 -> y^2
  CHECK(c.omega == FreeElement::fromEntries({{1, P(r, "y")}, {2, P(r, "-x^2")}}));
  CHECK(verifyBurchCycles(I, X->complex(), cycles).ok);

  auto ctx = SplitContext::of(I);
  CHECK(ctx.socle.size() == 3);
  auto v = splittingCheck(c.f, X->complex().diff(2).apply(c.f), ctx);
  CHECK(v.mode == SplitMode::Fails);
  CHECK_FALSE(v.witness.has_value());
  CHECK(v.rejected.size() == 3);
}

TEST_CASE("Burch cycles for the square of the maximal ideal") {
  auto r = makeRing({"x", "y"});
  Ideal I = mk(r, {"x^2", "x*y", "y^2"});
  auto bd = burchData(I);
  auto X = TaylorAlgebra::ofIdeal(I);
  auto cycles = burchCycles(I, bd, X->complex());
  REQUIRE(cycles.size() == 1);
  CHECK(cycles[0].certified);
  CHECK(cycles[0].omega == FreeElement::fromEntries({{0, P(r, "y")}, {1, P(r, "-x")}}));
  CHECK(verifyBurchCycles(I, X->complex(), cycles).ok);

  // three variables: three certified pairs
  auto r3 = makeRing({"x", "y", "z"});
  Ideal I3 = mk(r3, {"x^2", "x*y", "x*z", "y^2", "y*z", "z^2"});
  auto X3 = TaylorAlgebra::ofIdeal(I3);
  auto c3 = burchCycles(I3, burchData(I3), X3->complex());
  CHECK(c3.size() == 3);
  auto rep = verifyBurchCycles(I3, X3->complex(), c3);
  CHECK_MESSAGE(rep.ok, rep.firstFailure);
}

TEST_CASE("splitting check modes") {
  auto r = makeRing({"x", "y"});
  Ideal I = mk(r, {"x^2", "x*y", "y^2"});
  auto ctx = SplitContext::of(I);
  FreeElement e0 = FreeElement::basis(r, 0);
  CHECK(splittingCheck(e0, FreeElement(), ctx).mode == SplitMode::ZeroBoundary);
  CHECK(splittingCheck(e0.times(P(r, "x")), e0, ctx).mode == SplitMode::NotBasis);
  CHECK(splittingCheck(e0, e0, ctx).mode == SplitMode::Fails);
  auto v = splittingCheck(e0, FreeElement::fromEntries({{0, P(r, "y")}, {1, P(r, "-x")}}), ctx);
  CHECK(v.mode == SplitMode::Splits);
  REQUIRE(v.witness.has_value());
  CHECK(*v.witness == P(r, "x"));
  // coefficients in BI = n^2
  CHECK(splittingCheck(e0, FreeElement::fromEntries({{0, P(r, "x^2")}}), ctx).mode == SplitMode::Fails);
}

TEST_CASE("Golod cycle family") {
  auto r = makeRing({"x", "y"});
  auto R = std::make_shared<QuotientRing>(mk(r, {"x^2", "x*y", "y^2"}));
  auto run = verifyGolod(ModulePresentation::residueField(R), 8);
  CHECK(run.golod.golod);
  CHECK(run.golod.ranks == std::vector<long>{1, 2, 4, 8, 16, 32, 64, 128, 256, 512});
  CHECK(run.m == 3);
  long expect[] = {1, 1, 3, 3, 9, 9};
  for (const auto& d : run.degrees) {
    CHECK(d.expected == expect[d.q - 3]);
    CHECK(d.emitted == d.expected);
    CHECK(d.certified == d.expected);
  }
  CHECK(run.ok());

  // q = 3 cycle s [f] y splits with witness x
  auto in = barInputs(ModulePresentation::residueField(R), 4);
  auto A = AInfAlgebra::transfer(in.X);
  BarComplex B(AInfModule::transfer(A, in.Y.Y), R, 4);
  auto cycles = burchCycles(R->ideal(), burchData(R->ideal()), A->complex());
  auto rc = rhoCyclesGolod(cycles, B, 3);
  REQUIRE(rc.size() == 1);
  auto v = splittingCheck(B, 3, rc[0].rho, SplitContext::of(R->ideal()));
  CHECK(v.mode == SplitMode::Splits);
  REQUIRE(v.witness.has_value());
  CHECK(*v.witness == P(r, "x"));
  // the dg bar complex is not minimal
  BarComplex D(AInfModule::fromDg(AInfAlgebra::fromDg(in.X), in.Y.Y), R, 4);
  CHECK_THROWS_AS(rhoCyclesGolod(cycles, D, 3), InputError);
}

TEST_CASE("projection survivors on boundaries") {
  auto r = makeRing({"x", "y"});
  auto R = std::make_shared<QuotientRing>(mk(r, {"x^3", "x*y", "y^2"}));
  auto M = ModulePresentation::residueField(R);
  auto in = barInputs(M, 6);
  BarComplex B(AInfModule::fromDg(AInfAlgebra::fromDg(in.X), in.Y.Y), R, 6);
  MinimalizeOptions opt;
  opt.trackHomotopy = false;
  opt.upTo = 6;
  Contraction ctr = minimalize(B.complex(), opt);
  auto betti = resolveOverR(M, 6).ranks();
  for (int q = 1; q <= 5; ++q) {
    // the columns of d_{q+1} generate Z_q; modulo m Z_q their projections
    // span a space of dimension beta_{q+1}
    std::vector<FreeElement> cols;
    for (int k = 0; k < B.complex().rank(q + 1); ++k) cols.push_back(B.complex().column(q + 1, k));
    auto rep = projectToMinimal(B, ctr, q, cols);
    CHECK(rep.survivors == betti[q + 1]);
    CHECK(rep.survivorsInBar >= rep.survivors);
  }
}

TEST_CASE("dg rho cycles over the square of the maximal ideal") {
  auto r = makeRing({"x", "y"});
  auto R = std::make_shared<QuotientRing>(mk(r, {"x^2", "x*y", "y^2"}));
  auto run = verifyGeneral(ModulePresentation::residueField(R), 4, 7);
  CHECK(run.burchCheck.ok);
  for (const auto& d : run.degrees) {
    REQUIRE(d.cycles.size() == 1);
    CHECK(d.allCycles);
    if (d.q % 2 == 0) {
      CHECK(d.splits[0].mode == SplitMode::Splits);
      // s [f|e..] psi(e) is s times a bar boundary with a unit coefficient,
      // so it lies in m Z_q
      CHECK(d.survival.inSocle[0]);
      CHECK(d.survival.survivors == 0);
    } else {
      // e f lies in n X_3, so rho is in m B_q and alpha vanishes
      CHECK(d.cycles[0].alphaZero);
      CHECK(d.splits[0].mode == SplitMode::NotBasis);
    }
  }
}

TEST_CASE("bound verdicts and growth") {
  auto r = makeRing({"x", "y"});
  {
    auto R = std::make_shared<QuotientRing>(mk(r, {"x^4", "x^2*y", "y^2"}));
    auto M = ModulePresentation::cyclic(R, {P(r, "x^2"), P(r, "y")});
    auto rep = boundVerdicts(M, 6, false);
    CHECK(rep.burchIndex == 1);
    CHECK(rep.holds());
    for (const auto& row : rep.rows) {
      CHECK(row.kRank == 0);
      CHECK(row.general == Verdict::Vacuous);
    }
  }
  {
    auto R = std::make_shared<QuotientRing>(mk(r, {"x^2", "x*y", "y^2"}));
    auto rep = boundVerdicts(ModulePresentation::residueField(R), 8, true);
    CHECK(rep.burchIndex == 2);
    CHECK(rep.m == 3);
    REQUIRE(rep.rows.size() == 8);
    for (const auto& row : rep.rows) CHECK(row.kRank == (1 << row.i));
    CHECK(rep.rows[7].golodBound == 9);
    CHECK(rep.rows[7].golod == Verdict::Pass);
    CHECK(rep.holds());
    auto g = growthCheck(rep, 2, 0);
    CHECK(g.applies);
    CHECK(g.start == 1);
    CHECK(g.bound == 6);
    CHECK(g.ok);
  }
}
