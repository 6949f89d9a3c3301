#include "gmlab/corealg/fp.hpp"

namespace gmlab {

FpField::FpField(std::uint32_t p) : p_(p) {
  if (p <= 2 || p >= (1u << 31) || !is_prime(p)) {
    throw InvalidModulus(p);
  }
}

bool FpField::is_prime(std::uint32_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

FpElt FpField::inv(FpElt a) const {
  if (a == 0) throw DivisionByZero();
  // extended Euclid on (a, p)
  long long r0 = a, r1 = p_, s0 = 1, s1 = 0;
  while (r1 != 0) {
    long long q = r0 / r1;
    long long r2 = r0 - q * r1;
    long long s2 = s0 - q * s1;
    r0 = r1;
    r1 = r2;
    s0 = s1;
    s1 = s2;
  }
  return reduce(s0);
}

FpElt FpField::pow(FpElt a, long long e) const {
  if (e < 0) return pow(inv(a), -e);
  FpElt base = a, result = 1;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

}  // namespace gmlab
