#pragma once

#include <cstdint>
#include <string>

namespace burch {

using Coeff = std::uint32_t;

/// Arithmetic in Z/p for a prime p < 2^31. Elements are canonical residues.
class PrimeField {
 public:
  explicit PrimeField(std::uint32_t p = 32003);

  std::uint32_t prime() const { return p_; }

  Coeff add(Coeff a, Coeff b) const {
    Coeff s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Coeff sub(Coeff a, Coeff b) const { return a >= b ? a - b : a + p_ - b; }
  Coeff neg(Coeff a) const { return a == 0 ? 0 : p_ - a; }
  Coeff mul(Coeff a, Coeff b) const {
    return static_cast<Coeff>((static_cast<std::uint64_t>(a) * b) % p_);
  }
  Coeff inv(Coeff a) const;
  Coeff div(Coeff a, Coeff b) const { return mul(a, inv(b)); }
  Coeff fromInt(std::int64_t v) const;
  /// Symmetric representative in (-p/2, p/2].
  std::int64_t toSigned(Coeff a) const {
    return a > p_ / 2 ? static_cast<std::int64_t>(a) - p_ : a;
  }

  friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p_ == b.p_; }

 private:
  std::uint32_t p_;
};

bool isPrime(std::uint64_t n);

}  // namespace burch
