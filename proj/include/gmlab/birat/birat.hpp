#ifndef GMLAB_BIRAT_BIRAT_HPP
#define GMLAB_BIRAT_BIRAT_HPP

#include <optional>

#include "gmlab/groebner/points.hpp"
#include "gmlab/hilbert/hilbert.hpp"

namespace gmlab {

// Rational map V(source) -> P^m given by equal-degree forms.
struct RationalMap {
  Ideal source;                   // variety ideal (zero ideal for P^n)
  std::vector<Polynomial> forms;  // homogeneous, one common degree
  Ring target;                    // F_p[x0..xm]

  int form_degree() const { return forms.front().degree(); }
};

RationalMap make_map(Ideal source, std::vector<Polynomial> forms);

// Base condition of a linear system: vanishing along a center to a given
// order. Multiplicity 2 along a subscheme uses the Jacobian criterion
// (the form and all first partials lie in the center's ideal); multiplicity
// 3 is supported for point centers only.
struct FatBaseCondition {
  std::optional<Point> point;
  std::optional<Ideal> center;
  int multiplicity = 1;

  static FatBaseCondition at_point(Point p, int mult) {
    return {std::move(p), std::nullopt, mult};
  }
  static FatBaseCondition along(Ideal I, int mult) {
    return {std::nullopt, std::move(I), mult};
  }
};

// Basis of degree-d forms satisfying the conditions, reduced to a maximal
// subset independent modulo I_V. Throws EmptySystem when empty.
std::vector<Polynomial> linear_system(
    const Ideal& I_V, int degree,
    const std::vector<FatBaseCondition>& conditions,
    const Budget& budget = Budget::standard());

// Projective evaluation; BasePoint when every form vanishes.
Point apply_map(const RationalMap& m, const Point& p);

// Closure of the image: graph ideal (y_i - F_i with deg y_i = deg F) plus
// elimination of the source variables.
Ideal image_ideal(const RationalMap& m,
                  const Budget& budget = Budget::standard());

// Saturated fiber over a target point: source ideal plus the 2x2 minors of
// the (form values | point) matrix, with the base locus removed.
Ideal fiber_ideal(const RationalMap& m, const Point& q, std::uint64_t seed,
                  const Budget& budget = Budget::standard());

// Length of the saturated fiber over the image of a random source point;
// majority over three points. PositiveDimensionalFiber when not finite.
long map_degree(const RationalMap& m, std::uint64_t seed,
                const Budget& budget = Budget::standard());

// Lines on a variety cut by quadrics and linear forms, passing through z.
struct LineCount {
  long count = 0;
  Ideal scheme;
};
LineCount lines_through_point(const Ideal& I_W, const Point& z,
                              std::uint64_t seed,
                              const Budget& budget = Budget::standard());

// Lines l with p in l, l inside Y, and l meeting S. The returned value is a
// scheme length; NonGenericPoint asks the caller to resample p.
long secant_lines_through_point(const Ideal& I_S, const Ideal& I_Y,
                                const Point& p, std::uint64_t seed,
                                const Budget& budget = Budget::standard());

// Samples general points of Y (off S) until the secant count is computable.
long count_secant_lines(const Ideal& I_S, const Ideal& I_Y,
                        std::uint64_t seed,
                        const Budget& budget = Budget::standard(),
                        int max_attempts = 5);

// Linear projection away from p; for internal projections (p on V(I)) the
// image ideal is saturated.
struct Projection {
  Ring target;  // F_p[x0..x_{n-2}]
  Ideal image;
};
Projection project_from_point(const Ideal& I, const Point& p, bool internal,
                              std::uint64_t seed,
                              const Budget& budget = Budget::standard());

// The map given by linear forms vanishing to order m at p along V(I_T)
// (sections of the saturation of I_T + I_p^m in degree one).
RationalMap fat_point_projection(const Ideal& I_T, const Point& p, int mult,
                                 std::uint64_t seed,
                                 const Budget& budget = Budget::standard());

// Ideal of a single point (the n independent linear forms through it).
Ideal point_ideal(const Ring& ring, const Point& p);

}  // namespace gmlab

#endif
