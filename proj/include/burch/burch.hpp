#pragma once

#include <string>
#include <vector>

#include "burch/ideal.hpp"

namespace burch {

/// Certified factorizations a_{j_i} = x_i * s_i of minimal generators by
/// linear forms independent modulo the Burch ideal and socle lifts.
struct BurchData {
  std::vector<Polynomial> a;  // minimal generators of I
  std::vector<Polynomial> x;  // linear forms x_1..x_b
  std::vector<int> xVar;      // variable index of each x_i
  std::vector<Polynomial> s;  // socle lifts, s_i in (I : n)
  std::vector<int> j;         // zero-based, a[j[i]] = x[i] * s[i]
  int b = 0;
};

/// I : n
Ideal socleLift(const Ideal& I);
/// I n : (I : n). Requires I inside n^2 and proper; the zero ideal gives n.
Ideal burchIdeal(const Ideal& I);
/// dim_k n / BI, read off from degree one.
int burchIndex(const Ideal& I);
int burchIndexOf(const Ideal& I, const Ideal& bi);
BurchData burchData(const Ideal& I);
/// Re-checks every invariant of BurchData by membership tests; throws
/// InternalError describing the first failure.
void verifyBurchData(const Ideal& I, const BurchData& d);

}  // namespace burch
