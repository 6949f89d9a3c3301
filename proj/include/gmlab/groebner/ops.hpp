#ifndef GMLAB_GROEBNER_OPS_HPP
#define GMLAB_GROEBNER_OPS_HPP

#include <cstdint>
#include <functional>

#include "gmlab/corealg/linear_change.hpp"
#include "gmlab/corealg/rng.hpp"
#include "gmlab/groebner/ideal.hpp"

namespace gmlab {

Ideal ideal_sum(const Ideal& I, const Ideal& J);
Ideal ideal_product(const Ideal& I, const Ideal& J);

// Via the tag-variable elimination I cap J = (t I + (1-t) J) cap R.
Ideal ideal_intersection(const Ideal& I, const Ideal& J,
                         const Budget& budget = Budget::standard());

// (I : J) = intersection of (I : f) over generators f of J.
Ideal ideal_quotient(const Ideal& I, const Ideal& J,
                     const Budget& budget = Budget::standard());

// I : J^infinity by iterated quotient until stabilization.
Ideal saturate(const Ideal& I, const Ideal& J,
               const Budget& budget = Budget::standard());

// I : f^infinity through one tagged elimination.
Ideal saturate_by_form(const Ideal& I, const Polynomial& f,
                       const Budget& budget = Budget::standard());

// Saturation by the irrelevant ideal: generic coordinate change plus the
// degrevlex last-variable strip, certified by a second independent change.
Ideal saturate_irrelevant(const Ideal& I, std::uint64_t seed,
                          const Budget& budget = Budget::standard());

// Probabilistic saturation I : J^infinity by general degree-d members of J
// (all generators of J must share one degree). Iterates until two successive
// results agree; each member only removes components w.h.p., so agreement
// certifies the result up to the usual finite-field genericity caveat.
Ideal saturate_fast(const Ideal& I, const Ideal& J, std::uint64_t seed,
                    const Budget& budget = Budget::standard());

// Polynomials of I not involving the first k variables (block(k) basis),
// returned in the same ring.
Ideal eliminate(const Ideal& I, std::size_t first_k,
                const Budget& budget = Budget::standard());

// dim_F (I_d) = #monomials of degree d - #standard monomials of degree d.
// Requires unit weights.
long graded_dimension(const Ideal& I, int d,
                      const Budget& budget = Budget::standard());

long monomial_count(const Ring& ring, int d);

// Deterministic basis of the degree-d slice of I.
std::vector<Polynomial> degree_slice_basis(
    const Ideal& I, int d, const Budget& budget = Budget::standard());

// Krull dimension of R/I (affine cone); -1 for the unit ideal.
int quotient_dimension(const Ideal& I,
                       const Budget& budget = Budget::standard());

// Dimension of the projective scheme; -1 when empty.
int projective_dimension(const Ideal& I,
                         const Budget& budget = Budget::standard());

bool is_empty_projective(const Ideal& I,
                         const Budget& budget = Budget::standard());

Polynomial random_linear_form(const Ring& ring, Rng& rng);

// I plus k seeded random linear forms.
Ideal generic_linear_section(const Ideal& I, std::size_t k,
                             std::uint64_t seed);

Ideal apply_change(const LinearChange& C, const Ideal& I);
Ideal apply_change_inverse(const LinearChange& C, const Ideal& I);

// Restriction to the hyperplane {h = 0}: coordinates change so the
// hyperplane becomes {x_last = 0}, then the last variable is dropped. The
// subring is F_p[x0..x_{n-2}].
struct HyperplaneRestriction {
  Ring subring;
  Ideal restricted;
  LinearChange change;  // acts in the parent ring

  // Restrict a further polynomial of the parent ring to the hyperplane.
  Polynomial restrict_poly(const Polynomial& f) const;
  // Parent-ring coordinates of a subring point.
  Point embed_point(const Point& p) const;
};
HyperplaneRestriction restrict_to_hyperplane(
    const Ideal& I, const Polynomial& h, std::uint64_t seed);

// I + (codim x codim minors of the Jacobian), saturated by the irrelevant
// ideal. codim < 0 means "compute from the lead ideal". In probabilistic
// mode random minors are accumulated until the locus is certified empty or
// the sample budget runs out (exact=false in that case).
struct SingularLocus {
  Ideal locus;
  bool exact;
};
SingularLocus singular_locus(const Ideal& I, int codim = -1,
                             bool probabilistic = false,
                             std::uint64_t seed = 0,
                             const Budget& budget = Budget::standard());

// Sampling smoothness check: true once a random batch of minors certifies
// the singular locus empty. False is inconclusive.
bool certify_smooth(const Ideal& I, int codim, std::uint64_t seed,
                    const Budget& budget = Budget::standard(),
                    int max_batches = 4);

// Enumerates exponent vectors of total degree d (unit weights).
void for_each_monomial(std::size_t nvars, int d,
                       const std::function<void(const std::vector<std::uint16_t>&)>& fn);

}  // namespace gmlab

#endif
