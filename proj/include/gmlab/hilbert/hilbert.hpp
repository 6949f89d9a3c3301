#ifndef GMLAB_HILBERT_HILBERT_HPP
#define GMLAB_HILBERT_HILBERT_HPP

#include <numeric>

#include "gmlab/groebner/ops.hpp"

namespace gmlab {

// Exact rational scalar for Hilbert-polynomial coefficients (values here are
// tiny: half-integers and small binomial combinations).
struct Rat {
  long long num = 0;
  long long den = 1;

  Rat() = default;
  Rat(long long n) : num(n), den(1) {}
  Rat(long long n, long long d) : num(n), den(d) { normalize(); }

  void normalize() {
    if (den < 0) {
      num = -num;
      den = -den;
    }
    const long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
    if (num == 0) den = 1;
  }

  Rat operator+(const Rat& o) const {
    return Rat(num * o.den + o.num * den, den * o.den);
  }
  Rat operator-(const Rat& o) const {
    return Rat(num * o.den - o.num * den, den * o.den);
  }
  Rat operator*(const Rat& o) const { return Rat(num * o.num, den * o.den); }
  Rat operator/(const Rat& o) const { return Rat(num * o.den, den * o.num); }
  bool operator==(const Rat& o) const { return num == o.num && den == o.den; }
  bool is_integer() const { return den == 1; }

  std::string to_string() const {
    return is_integer() ? std::to_string(num)
                        : std::to_string(num) + "/" + std::to_string(den);
  }
};

// Numerator N(t) of the Hilbert series N(t)/(1-t)^nvars of R/M for the
// monomial ideal generated by `gens` (need not be minimal). Standard pivot
// recursion N(M) = N(M + (x)) + t * N(M : x).
std::vector<long long> hilbert_numerator(std::vector<Monomial> gens,
                                         std::size_t nvars);

// Series / polynomial data and the derived projective invariants.
class HilbertData {
 public:
  HilbertData(std::vector<long long> numerator, std::size_t nvars);

  const std::vector<long long>& numerator() const { return numerator_; }

  // Krull dimension of the affine cone R/I.
  int cone_dimension() const { return cone_dim_; }
  // Dimension of the projective scheme (-1 when empty).
  int proj_dim() const { return cone_dim_ - 1; }

  long long degree() const { return degree_; }

  // Hilbert polynomial coefficients, constant term first; empty when the
  // scheme is projectively empty.
  const std::vector<Rat>& hilbert_polynomial() const { return hp_; }

  Rat hp_eval(long long t) const;

  // Exact Hilbert function of R/I at degree d.
  long long hilbert_function(long long d) const;

  // chi = P(0).
  long long chi() const;

  // For surfaces, P(t) = (d/2) t^2 + (d/2 + 1 - g) t + chi.
  long long sectional_genus() const;

  std::string hp_to_string() const;

 private:
  std::vector<long long> numerator_;
  std::size_t nvars_;
  std::vector<long long> reduced_;  // numerator with all (1-t) factors removed
  int cone_dim_;
  long long degree_;
  std::vector<Rat> hp_;
};

// Invariants of a homogeneous ideal through its degrevlex lead-term ideal.
HilbertData invariants(const Ideal& I,
                       const Budget& budget = Budget::standard());

// Degree of a zero-dimensional projective scheme (its length).
long long scheme_length(const Ideal& I,
                        const Budget& budget = Budget::standard());

}  // namespace gmlab

#endif
