#ifndef GMLAB_COREALG_LINEAR_CHANGE_HPP
#define GMLAB_COREALG_LINEAR_CHANGE_HPP

#include <cstdint>

#include "gmlab/corealg/linalg.hpp"
#include "gmlab/corealg/polynomial.hpp"

namespace gmlab {

// Invertible change of projective coordinates. apply(f) substitutes
// x_i <- sum_j M[i][j] x_j, i.e. computes f(M x), so the zero set of the
// result is the preimage M^{-1} V(f). Realizes every "general" choice of
// hyperplane, point or projectivity.
class LinearChange {
 public:
  LinearChange(Ring ring, FpMatrix mat);

  const Ring& ring() const { return ring_; }
  const FpMatrix& matrix() const { return mat_; }
  const FpMatrix& inverse_matrix() const { return inv_; }

  Polynomial apply(const Polynomial& f) const;
  Polynomial apply_inverse(const Polynomial& f) const;

  // Coordinates of a source point in the new system: x with M x = p.
  Point pull_point(const Point& p) const { return inv_.apply(p); }
  // Image of a new-system point back in the original coordinates.
  Point push_point(const Point& p) const { return mat_.apply(p); }

  // Seeded random invertible change; resamples until invertible.
  static LinearChange random(Ring ring, std::uint64_t seed);

  // A change whose application moves `p` to the coordinate point e_0
  // (first column of M equals p, random invertible completion).
  static LinearChange sending_e0_to(Ring ring, const Point& p,
                                    std::uint64_t seed);

  // A change after which the hyperplane {h = 0} becomes {x_last = 0}:
  // h(M x) = x_last. Requires h linear and nonzero.
  static LinearChange hyperplane_to_last(Ring ring, const Polynomial& h,
                                         std::uint64_t seed);

 private:
  Ring ring_;
  FpMatrix mat_, inv_;
};

}  // namespace gmlab

#endif
