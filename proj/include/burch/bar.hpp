#pragma once

#include <map>
#include <memory>
#include <vector>

#include "burch/ainfty.hpp"

namespace burch {

enum class BarRegime { Dg, AInf };
const char* regimeName(BarRegime r);

/// [s x_1 | ... | s x_p] y with x_k basis elements of X_{>=1} and y of Y.
struct BarWord {
  BasisTuple xs;
  BasisRef y;
  int barLength() const { return static_cast<int>(xs.size()); }
  int degree() const;
  friend bool operator==(const BarWord&, const BarWord&) = default;
};

/// Bar resolution of M over R = Q/I built from an A-infinity X-module Y
/// resolving M over Q, through homological degree upTo. The differential
/// applies b_s to every substring of the x's and the module operations to
/// every suffix including y, with the Koszul sign of the suspended letters
/// passed over. Entries are reduced modulo I.
class BarComplex {
 public:
  BarComplex(std::shared_ptr<const AInfModule> Y, QuotientPtr R, int upTo);

  const GradedFreeComplex& complex() const { return C_; }
  BarRegime regime() const { return Y_->isDg() ? BarRegime::Dg : BarRegime::AInf; }
  const AInfModule& module() const { return *Y_; }
  const QuotientRing& ring() const { return *R_; }
  int top() const { return C_.top(); }
  const std::vector<BarWord>& words(int n) const { return words_[n]; }
  /// Index of w in B_{w.degree()}, or -1.
  int indexOf(const BarWord& w) const;
  /// Differential of one word in B_{n-1} coordinates, reduced.
  FreeElement boundary(const BarWord& w) const;
  /// Expands r * [a_1 | ... | a_p] c for elements a_k of X_{d_k} and c of
  /// Y_e into word coordinates (multilinearly).
  FreeElement word(const std::vector<std::pair<int, FreeElement>>& xs, int ydeg, const FreeElement& y) const;
  std::string describe(const BarWord& w) const;

 private:
  std::shared_ptr<const AInfModule> Y_;
  QuotientPtr R_;
  GradedFreeComplex C_;
  std::vector<std::vector<BarWord>> words_;
  std::vector<std::map<std::vector<int>, int>> index_;
};

/// Rank of B_n from the composition sum over i_1 + .. + i_p + j + p = n.
std::vector<long> barRanksByCompositions(const std::vector<int>& xRanks, const std::vector<int>& yRanks, int upTo);
/// Coefficients of P_Y(t) / (1 - t (P_X(t) - 1)) through t^upTo.
std::vector<long> barRanksBySeries(const std::vector<int>& xRanks, const std::vector<int>& yRanks, int upTo);

struct BarReport {
  bool squareZero = true;
  bool exact = true;
  bool ranksMatch = true;
  bool augmentationOk = true;
  std::vector<long> ranks;
  std::vector<long> homology;  // H_n for n < top
  std::string failure;
};
/// d^2 = 0, H_n = 0 for 1 <= n < top, H_0 of the expected dimension and the
/// rank formula. Exactness needs an Artinian quotient.
BarReport verifyBar(const BarComplex& B, long expectedH0);

}  // namespace burch
