#ifndef GMLAB_GRASS_GRASSMANNIAN_HPP
#define GMLAB_GRASS_GRASSMANNIAN_HPP

#include <optional>

#include "gmlab/grass/schubert.hpp"
#include "gmlab/groebner/points.hpp"
#include "gmlab/hilbert/hilbert.hpp"

namespace gmlab {

// The five Pluecker relations of G(1,4) in F_p[p01..p34].
Ideal plucker_ideal(std::uint32_t p);
Ideal plucker_ideal(const Ring& pluecker);

// Pluecker coordinates of the line spanned by u, v in P^4.
Point plucker_of_span(const FpField& F, const std::array<FpElt, 5>& u,
                      const std::array<FpElt, 5>& v);

// The projectivity of P^9 induced on Pluecker coordinates by A in GL(5).
LinearChange induced_plucker_change(const Ring& pluecker, const FpMatrix& A);

// The four independent linear forms cutting the lines contained in the
// hyperplane {sum a_i x_i = 0} of P^4: contractions sum_i a_i p_{ij}.
std::vector<Polynomial> sigma11_linear_forms(const Ring& pluecker,
                                             const std::array<FpElt, 5>& a);

// General translate of the sigma_{1,1} Schubert variety (a G(1,3) in G(1,4)):
// Pluecker ideal plus the contraction forms of a seeded random hyperplane.
Ideal schubert_sigma11_variety(const Ring& pluecker, std::uint64_t seed);

// del Pezzo fivefold Y = G(1,4) cap P^8, carried in its own 9-variable ring
// together with the restriction data from the Pluecker P^9.
struct DelPezzoFivefold {
  Ring p9;                  // Pluecker ring
  Polynomial hyperplane;    // the section cut in P^9
  HyperplaneRestriction restriction;
  Ideal ideal;              // I_Y in F_p[x0..x8]
  std::uint64_t seed = 0;

  const Ring& p8() const { return restriction.subring; }
};

DelPezzoFivefold del_pezzo_fivefold(std::uint32_t p, std::uint64_t seed,
                                    bool verify_smooth = false,
                                    const Budget& budget = Budget::standard());

// A surface S inside a del Pezzo fivefold Y, tracked both in the Pluecker
// ring (for class computations) and restricted to Y's P^8.
struct SurfaceInFivefold {
  DelPezzoFivefold fivefold;
  Ideal surface_p9;
  Ideal surface_p8;
};

// tau-quadric: sigma_{1,1} translate cut by two general hyperplanes, inside
// a general del Pezzo fivefold through it.
SurfaceInFivefold tau_quadric(std::uint32_t p, std::uint64_t seed,
                              bool verify_smooth = false,
                              const Budget& budget = Budget::standard());

// Quintic del Pezzo surface: G(1,4) cap general P^5, inside Y = G cap P^8.
SurfaceInFivefold quintic_del_pezzo(std::uint32_t p, std::uint64_t seed,
                                    bool verify_smooth = false,
                                    const Budget& budget = Budget::standard());

// GM fourfold X = Y cap Q. When `through` is given (an ideal in Y's P^8
// ring), Q is a random quadric through that surface modulo I_Y; family_dim
// reports the projective dimension of that quadric family.
struct GMFourfold {
  Ideal ideal;     // in Y's P^8 ring
  long family_dim; // -1 when `through` was not given
};
GMFourfold gm_fourfold(const DelPezzoFivefold& Y,
                       const std::optional<Ideal>& through,
                       std::uint64_t seed,
                       const Budget& budget = Budget::standard());

// (a, b) with [S] = a sigma_{3,1} + b sigma_{2,2}: b is the length of the
// intersection with a general sigma_{1,1} translate, a = deg(S) - b.
// Majority vote over three seeds.
SurfaceClass surface_class(const Ideal& surface_p9, std::uint64_t seed,
                           const Budget& budget = Budget::standard());

// Restriction of a variety to its linear span; used for exact smoothness
// checks of low-dimensional sections.
struct SpanRestriction {
  Ring ring;
  Ideal ideal;
};
SpanRestriction restrict_to_span(const Ideal& I,
                                 const Budget& budget = Budget::standard());

}  // namespace gmlab

#endif
