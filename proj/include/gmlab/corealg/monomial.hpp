#ifndef GMLAB_COREALG_MONOMIAL_HPP
#define GMLAB_COREALG_MONOMIAL_HPP

#include <cstdint>
#include <vector>

#include "gmlab/corealg/errors.hpp"

namespace gmlab {

// Exponent vector with cached weighted degree. The weights live in the ring;
// monomials are only combined within a single ring, so the cache stays
// consistent.
class Monomial {
 public:
  Monomial() : deg_(0) {}

  Monomial(std::vector<std::uint16_t> exps, const std::vector<int>& weights)
      : e_(std::move(exps)), deg_(0) {
    for (std::size_t i = 0; i < e_.size(); ++i) deg_ += weights[i] * e_[i];
  }

  static Monomial one(std::size_t nvars) {
    Monomial m;
    m.e_.assign(nvars, 0);
    m.deg_ = 0;
    return m;
  }

  static Monomial variable(std::size_t nvars, std::size_t i,
                           const std::vector<int>& weights) {
    Monomial m = one(nvars);
    m.e_[i] = 1;
    m.deg_ = weights[i];
    return m;
  }

  std::size_t nvars() const { return e_.size(); }
  int degree() const { return deg_; }
  std::uint16_t exponent(std::size_t i) const { return e_[i]; }
  const std::vector<std::uint16_t>& exponents() const { return e_; }

  bool is_one() const { return deg_ == 0 && *this == one(e_.size()); }

  Monomial operator*(const Monomial& o) const {
    Monomial r;
    r.e_.resize(e_.size());
    for (std::size_t i = 0; i < e_.size(); ++i)
      r.e_[i] = static_cast<std::uint16_t>(e_[i] + o.e_[i]);
    r.deg_ = deg_ + o.deg_;
    return r;
  }

  bool divides(const Monomial& o) const {
    if (deg_ > o.deg_) return false;
    for (std::size_t i = 0; i < e_.size(); ++i)
      if (e_[i] > o.e_[i]) return false;
    return true;
  }

  // this / o; requires o.divides(*this)
  Monomial quotient(const Monomial& o) const {
    Monomial r;
    r.e_.resize(e_.size());
    for (std::size_t i = 0; i < e_.size(); ++i)
      r.e_[i] = static_cast<std::uint16_t>(e_[i] - o.e_[i]);
    r.deg_ = deg_ - o.deg_;
    return r;
  }

  Monomial lcm(const Monomial& o, const std::vector<int>& weights) const {
    Monomial r;
    r.e_.resize(e_.size());
    r.deg_ = 0;
    for (std::size_t i = 0; i < e_.size(); ++i) {
      r.e_[i] = e_[i] > o.e_[i] ? e_[i] : o.e_[i];
      r.deg_ += weights[i] * r.e_[i];
    }
    return r;
  }

  bool coprime(const Monomial& o) const {
    for (std::size_t i = 0; i < e_.size(); ++i)
      if (e_[i] != 0 && o.e_[i] != 0) return false;
    return true;
  }

  bool operator==(const Monomial& o) const { return e_ == o.e_; }
  bool operator!=(const Monomial& o) const { return e_ != o.e_; }

  // Ring-independent total order, usable as a container key.
  bool operator<(const Monomial& o) const { return e_ < o.e_; }

 private:
  std::vector<std::uint16_t> e_;
  std::int32_t deg_;
};

}  // namespace gmlab

#endif
