#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "burch/field.hpp"
#include "burch/monomial.hpp"

namespace burch {

/// Ambient ring Q = k[x_1..x_n] with k = F_p, standard grading.
struct PolyRing {
  PrimeField field;
  std::vector<std::string> vars;

  PolyRing(std::vector<std::string> names, std::uint32_t p);
  int nvars() const { return static_cast<int>(vars.size()); }
  int varIndex(std::string_view name) const;
};

using RingPtr = std::shared_ptr<const PolyRing>;

RingPtr makeRing(std::vector<std::string> vars, std::uint32_t p = 32003);
bool sameRing(const PolyRing* a, const PolyRing* b);

struct Term {
  Monomial m;
  Coeff c;
};

/// Sparse polynomial; terms sorted by descending grevlex, no zero coefficients.
/// A default constructed polynomial is the zero of an unspecified ring and
/// adopts the ring of whatever it is combined with.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(RingPtr r) : ring_(std::move(r)) {}

  static Polynomial constant(RingPtr r, std::int64_t c);
  static Polynomial monomial(RingPtr r, Monomial m, Coeff c = 1);
  static Polynomial variable(RingPtr r, int k);
  /// Sorts, merges equal monomials and drops zeros.
  static Polynomial fromTerms(RingPtr r, std::vector<Term> terms);
  /// Builds from terms already sorted descending with nonzero distinct monomials.
  static Polynomial fromSortedTerms(RingPtr r, std::vector<Term> terms);
  /// Parses "x^2*y - 3*x + 1". Multiplication must be explicit.
  static Polynomial parse(RingPtr r, std::string_view text);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool isZero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Term& leading() const { return terms_.front(); }
  /// Largest total degree, -1 for zero.
  int degree() const { return terms_.empty() ? -1 : terms_.front().m.degree(); }
  int lowDegree() const;
  bool isHomogeneous() const;
  bool isMonomial() const { return terms_.size() == 1; }
  Coeff constantTerm() const;
  Coeff coeff(Monomial m) const;
  Polynomial homogeneousPart(int d) const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial scaled(Coeff c) const;
  Polynomial mulTerm(Monomial m, Coeff c) const;
  /// this + c * m * o, in one merge.
  Polynomial addMul(const Polynomial& o, Monomial m, Coeff c) const;

  std::string toString() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  const PrimeField& field() const;
  static const RingPtr& pickRing(const Polynomial& a, const Polynomial& b);

  RingPtr ring_;
  std::vector<Term> terms_;
};

std::string monomialToString(const PolyRing& r, Monomial m);

}  // namespace burch
