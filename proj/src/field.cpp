#include "burch/field.hpp"

#include "burch/error.hpp"

namespace burch {

bool isPrime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p >= (1u << 31) || !isPrime(p))
    throw InputError("characteristic " + std::to_string(p) + " is not a prime below 2^31");
}

Coeff PrimeField::inv(Coeff a) const {
  if (a == 0) throw InternalError("division by zero in F_" + std::to_string(p_));
  // extended Euclid on signed 64-bit
  std::int64_t t = 0, newT = 1;
  std::int64_t r = p_, newR = a;
  while (newR != 0) {
    std::int64_t q = r / newR;
    std::int64_t tmp = t - q * newT;
    t = newT;
    newT = tmp;
    tmp = r - q * newR;
    r = newR;
    newR = tmp;
  }
  if (t < 0) t += p_;
  return static_cast<Coeff>(t);
}

Coeff PrimeField::fromInt(std::int64_t v) const {
  std::int64_t r = v % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return static_cast<Coeff>(r);
}

}  // namespace burch
