#include "burch/monomial.hpp"

#include <algorithm>

#include "burch/error.hpp"

namespace burch {

namespace {
constexpr std::uint64_t kHigh = 0x8080808080808080ULL;
}

Monomial Monomial::var(int k, int e) {
  if (k < 0 || k >= kMaxVars) throw StructuralError("variable index out of range");
  if (e < 0 || e > kMaxExponent) throw ResourceError("exponent exceeds 127");
  return fromRaw(static_cast<std::uint64_t>(e) << (8 * k));
}

Monomial Monomial::fromExponents(const int* e, int n) {
  if (n > kMaxVars) throw ResourceError("at most 8 variables are supported");
  std::uint64_t bits = 0;
  for (int k = 0; k < n; ++k) {
    if (e[k] < 0 || e[k] > kMaxExponent) throw ResourceError("exponent exceeds 127");
    bits |= static_cast<std::uint64_t>(e[k]) << (8 * k);
  }
  return fromRaw(bits);
}

int Monomial::degree() const {
  constexpr std::uint64_t kLow = 0x00FF00FF00FF00FFULL;
  std::uint64_t s = (bits_ & kLow) + ((bits_ >> 8) & kLow);
  return static_cast<int>((s * 0x0001000100010001ULL) >> 48);
}

bool Monomial::coprime(Monomial other) const {
  for (int k = 0; k < kMaxVars; ++k)
    if (exponent(k) && other.exponent(k)) return false;
  return true;
}

Monomial Monomial::operator*(Monomial other) const {
  std::uint64_t s = bits_ + other.bits_;
  if (s & kHigh) throw ResourceError("monomial exponent overflow (limit 127)");
  return fromRaw(s);
}

Monomial Monomial::lcm(Monomial other) const {
  std::uint64_t r = 0;
  for (int k = 0; k < kMaxVars; ++k)
    r |= static_cast<std::uint64_t>(std::max(exponent(k), other.exponent(k))) << (8 * k);
  return fromRaw(r);
}

Monomial Monomial::gcd(Monomial other) const {
  std::uint64_t r = 0;
  for (int k = 0; k < kMaxVars; ++k)
    r |= static_cast<std::uint64_t>(std::min(exponent(k), other.exponent(k))) << (8 * k);
  return fromRaw(r);
}

std::strong_ordering grevlex(Monomial a, Monomial b) {
  if (a == b) return std::strong_ordering::equal;
  int da = a.degree(), db = b.degree();
  if (da != db) return da <=> db;
  std::uint64_t diff = a.raw() ^ b.raw();
  int top = 63 - __builtin_clzll(diff);
  int k = top / 8;
  // smaller exponent in the last differing variable is the larger monomial
  return b.exponent(k) <=> a.exponent(k);
}

}  // namespace burch
