#ifndef GMLAB_GROEBNER_POINTS_HPP
#define GMLAB_GROEBNER_POINTS_HPP

#include "gmlab/groebner/ops.hpp"

namespace gmlab {

// Canonical projective representative: first nonzero coordinate scaled to 1.
Point normalize_point(const Ring& ring, Point p);

bool vanishes_at(const Ideal& I, const Point& p);

// A rational point of V(I): slice with random linear forms down to dimension
// zero, pass to a random affine chart, and scan the eliminant for roots in
// F_p. Retries with fresh seeds; throws NoRationalPoint when exhausted.
Point random_point_on(const Ideal& I, std::uint64_t seed,
                      const Budget& budget = Budget::standard(),
                      int max_attempts = 40);

// Length of a zero-dimensional affine system as the number of standard
// monomials; helper shared with the fiber/line counters. Returns -1 when the
// standard monomial count exceeds `limit` (not zero-dimensional or too big).
long affine_quotient_size(const Ring& affine_ring,
                          const std::vector<Polynomial>& affine_gens,
                          const Budget& budget, long limit = 100000);

}  // namespace gmlab

#endif
