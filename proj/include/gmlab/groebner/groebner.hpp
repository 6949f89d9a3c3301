#ifndef GMLAB_GROEBNER_GROEBNER_HPP
#define GMLAB_GROEBNER_GROEBNER_HPP

#include <vector>

#include "gmlab/corealg/polynomial.hpp"

namespace gmlab {

// Pair/basis limits for Groebner computations. The defaults absorb the
// GMLAB_BUDGET environment multiplier once at startup so heavy runs can be
// scaled without recompiling.
struct Budget {
  long max_pairs = 0;
  long max_basis = 0;

  static Budget standard();
  static Budget scaled(double factor);
};

enum class GBAlgorithm {
  buchberger,  // Gebauer-Moeller pair pruning, sugar selection
  linalg,      // batched per-degree linear-algebra reduction, same output
};

// Reduced Groebner basis: monic elements, pairwise irreducible lead terms,
// tails fully reduced, sorted by ascending lead monomial. Unique for
// (ideal, order), so recomputation from shuffled generators is bit-identical.
class GroebnerBasis {
 public:
  GroebnerBasis(Ring ring, std::vector<Polynomial> polys, int truncation = -1)
      : ring_(std::move(ring)), polys_(std::move(polys)),
        truncation_(truncation) {}

  const Ring& ring() const { return ring_; }
  const MonomialOrder& order() const { return ring_->order(); }
  const std::vector<Polynomial>& polys() const { return polys_; }
  std::size_t size() const { return polys_.size(); }

  // -1 when the basis is complete; otherwise lead terms are only valid up to
  // this weighted degree.
  int truncation() const { return truncation_; }
  bool complete() const { return truncation_ < 0; }

  bool is_unit() const {
    return polys_.size() == 1 && polys_[0].size() == 1 &&
           polys_[0].lead_monomial().is_one();
  }

 private:
  Ring ring_;
  std::vector<Polynomial> polys_;
  int truncation_;
};

// Full tail reduction of f against `basis` (scanned in order for the first
// dividing lead). Result has no term divisible by any lead of the basis.
Polynomial normal_form(const Polynomial& f,
                       const std::vector<Polynomial>& basis);

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb);

// Buchberger / linear-algebra engine. Input polynomials are re-sorted into
// `ring`'s active order. If max_degree >= 0, only S-pairs of sugar degree
// <= max_degree are processed; for homogeneous input the resulting lead
// terms agree with the full basis up to that degree.
std::vector<Polynomial> compute_groebner(
    const Ring& ring, std::vector<Polynomial> gens, const Budget& budget,
    int max_degree = -1, GBAlgorithm algo = GBAlgorithm::buchberger);

// Interreduction: drops elements with redundant leads, reduces every tail
// against the others, normalizes monic, sorts by ascending lead.
std::vector<Polynomial> interreduce(const Ring& ring,
                                    std::vector<Polynomial> basis);

}  // namespace gmlab

#endif
