#ifndef GMLAB_COREALG_POLYNOMIAL_HPP
#define GMLAB_COREALG_POLYNOMIAL_HPP

#include <string>
#include <vector>

#include "gmlab/corealg/monomial.hpp"
#include "gmlab/corealg/ring.hpp"

namespace gmlab {

struct Term {
  Monomial mon;
  FpElt coeff;
};

// A point of projective space, one field element per ring variable.
using Point = std::vector<FpElt>;

// Sparse multivariate polynomial. Terms are kept sorted in descending active
// order of the ring, with no zero coefficients.
class Polynomial {
 public:
  explicit Polynomial(Ring ring) : ring_(std::move(ring)) {}

  // Normalizes: sorts, merges equal monomials, drops zeros.
  static Polynomial from_terms(Ring ring, std::vector<Term> terms);

  static Polynomial zero(Ring ring) { return Polynomial(std::move(ring)); }
  static Polynomial constant(Ring ring, FpElt c);
  static Polynomial variable(Ring ring, std::size_t i);
  static Polynomial monomial_term(Ring ring, Monomial m, FpElt c);

  const Ring& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  const Term& lead() const { return terms_.front(); }
  const Monomial& lead_monomial() const { return terms_.front().mon; }
  FpElt lead_coeff() const { return terms_.front().coeff; }

  // Polynomial minus its lead term.
  Polynomial tail() const;

  // Weighted total degree; -1 for the zero polynomial.
  int degree() const;
  bool is_homogeneous() const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator-() const;

  Polynomial scaled(FpElt c) const;
  Polynomial monic() const;

  // *this + c * m * g, the elementary reduction step.
  Polynomial axpy(FpElt c, const Monomial& m, const Polynomial& g) const;

  Polynomial derivative(std::size_t var) const;

  FpElt evaluate(const Point& pt) const;

  // Substitute variable i by images[i]; all images share one target ring.
  Polynomial substitute(const std::vector<Polynomial>& images) const;

  // Re-sorts the terms into a ring with a different active order
  // (same base ring).
  Polynomial in_ring(const Ring& target) const;

  // Homogeneous component of the given weighted degree.
  Polynomial homogeneous_component(int deg) const;

  // Exact division by a single monomial; requires divisibility of each term.
  Polynomial divide_by_monomial(const Monomial& m) const;

  // Largest power of variable `var` dividing every term (0 for zero poly).
  int min_exponent(std::size_t var) const;

  bool operator==(const Polynomial& o) const;
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  Ring ring_;
  std::vector<Term> terms_;
};

}  // namespace gmlab

#endif
