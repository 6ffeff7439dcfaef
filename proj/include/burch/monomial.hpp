#pragma once

#include <compare>
#include <cstdint>
#include <functional>

namespace burch {

constexpr int kMaxVars = 8;
constexpr int kMaxExponent = 127;

/// Exponent vector packed one byte per variable (byte k holds the exponent
/// of variable k). Exponents are kept below 128 so that comparisons and
/// divisibility can be done with word-parallel tricks.
class Monomial {
 public:
  constexpr Monomial() = default;

  static Monomial var(int k, int e = 1);
  static Monomial fromExponents(const int* e, int n);
  static constexpr Monomial fromRaw(std::uint64_t raw) {
    Monomial m;
    m.bits_ = raw;
    return m;
  }

  int exponent(int k) const { return static_cast<int>((bits_ >> (8 * k)) & 0xFF); }
  int degree() const;
  bool isOne() const { return bits_ == 0; }
  std::uint64_t raw() const { return bits_; }

  bool divides(Monomial other) const {
    constexpr std::uint64_t kHigh = 0x8080808080808080ULL;
    return (((other.bits_ | kHigh) - bits_) & kHigh) == kHigh;
  }
  /// True when the two monomials share no variable.
  bool coprime(Monomial other) const;

  Monomial operator*(Monomial other) const;
  /// Requires divisor.divides(*this).
  Monomial operator/(Monomial divisor) const { return fromRaw(bits_ - divisor.bits_); }
  Monomial lcm(Monomial other) const;
  Monomial gcd(Monomial other) const;

  friend bool operator==(Monomial a, Monomial b) { return a.bits_ == b.bits_; }

 private:
  std::uint64_t bits_ = 0;
};

/// Graded reverse lexicographic order with x_0 > x_1 > ... .
std::strong_ordering grevlex(Monomial a, Monomial b);

inline bool grevlexLess(Monomial a, Monomial b) { return grevlex(a, b) < 0; }

}  // namespace burch

template <>
struct std::hash<burch::Monomial> {
  std::size_t operator()(burch::Monomial m) const noexcept {
    std::uint64_t x = m.raw() * 0x9E3779B97F4A7C15ULL;
    return static_cast<std::size_t>(x ^ (x >> 29));
  }
};
