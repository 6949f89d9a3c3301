#ifndef GMLAB_COREALG_FP_HPP
#define GMLAB_COREALG_FP_HPP

#include <cstdint>

#include "gmlab/corealg/errors.hpp"
#include "gmlab/corealg/rng.hpp"

namespace gmlab {

// Elements are stored as canonical representatives in [0, p).
using FpElt = std::uint32_t;

// Arithmetic in Z/p for an odd prime p < 2^31, so products fit in 64 bits.
class FpField {
 public:
  static constexpr std::uint32_t kDefaultChar = 31991;

  explicit FpField(std::uint32_t p);

  std::uint32_t modulus() const { return p_; }

  FpElt reduce(long long v) const {
    long long r = v % static_cast<long long>(p_);
    if (r < 0) r += p_;
    return static_cast<FpElt>(r);
  }

  FpElt add(FpElt a, FpElt b) const {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }

  FpElt sub(FpElt a, FpElt b) const { return a >= b ? a - b : a + p_ - b; }

  FpElt neg(FpElt a) const { return a == 0 ? 0 : p_ - a; }

  FpElt mul(FpElt a, FpElt b) const {
    return static_cast<FpElt>(static_cast<std::uint64_t>(a) * b % p_);
  }

  FpElt inv(FpElt a) const;

  FpElt div(FpElt a, FpElt b) const { return mul(a, inv(b)); }

  FpElt pow(FpElt a, long long e) const;

  FpElt random(Rng& rng) const { return static_cast<FpElt>(rng.below(p_)); }

  FpElt random_nonzero(Rng& rng) const {
    return static_cast<FpElt>(1 + rng.below(p_ - 1));
  }

  bool operator==(const FpField& o) const { return p_ == o.p_; }
  bool operator!=(const FpField& o) const { return p_ != o.p_; }

  static bool is_prime(std::uint32_t n);

 private:
  std::uint32_t p_;
};

}  // namespace gmlab

#endif
