#include "gmlab/birat/birat.hpp"

namespace gmlab {

namespace {

// B(z, v) = sum_i z_i (dq/dx_i)(v), the polar linear form of a quadric.
Polynomial polar_at(const Polynomial& q, const Point& z) {
  const Ring& ring = q.ring();
  Polynomial acc = Polynomial::zero(ring);
  for (std::size_t i = 0; i < ring->nvars(); ++i) {
    if (z[i] == 0) continue;
    acc = acc + q.derivative(i).scaled(z[i]);
  }
  return acc;
}

}  // namespace

LineCount lines_through_point(const Ideal& I_W, const Point& z,
                              std::uint64_t seed, const Budget& budget) {
  const Ring& ring = I_W.ring();
  Rng rng(seed);
  std::vector<Polynomial> gens;
  for (const auto& g : I_W.gens()) {
    if (g.degree() > 2)
      throw InvalidInput("lines_through_point needs generators of degree <= 2");
    if (g.evaluate(z) != 0)
      throw InvalidInput("base point must lie on the variety");
    if (g.degree() == 2) {
      Polynomial polar = polar_at(g, z);
      if (!polar.is_zero()) gens.push_back(std::move(polar));
      gens.push_back(g);
    } else {
      gens.push_back(g);
    }
  }
  // normalization hyperplane avoiding z kills the trivial direction v = z
  Polynomial ell0 = Polynomial::zero(ring);
  while (ell0.is_zero() || ell0.evaluate(z) == 0)
    ell0 = random_linear_form(ring, rng);
  gens.push_back(std::move(ell0));
  Ideal scheme = saturate_irrelevant(Ideal(ring, std::move(gens)),
                                     rng.fork(), budget);
  const int dim = projective_dimension(scheme, budget);
  if (dim > 0) throw PositiveDimensionalFamily();
  if (dim < 0) return {0, scheme};
  return {static_cast<long>(scheme_length(scheme, budget)), scheme};
}

long secant_lines_through_point(const Ideal& I_S, const Ideal& I_Y,
                                const Point& p, std::uint64_t seed,
                                const Budget& budget) {
  const Ring& ring = I_Y.ring();
  require_same_ring(ring, I_S.ring(), "secant line count");
  if (!vanishes_at(I_Y, p))
    throw InvalidInput("secant count: point must lie on the fivefold");
  if (vanishes_at(I_S, p))
    throw NonGenericPoint("secant count: point lies on the surface");
  if (I_S.is_zero_ideal()) return 0;
  Rng rng(seed);
  LinearChange C = LinearChange::sending_e0_to(ring, p, rng.fork());
  Ideal Y = apply_change(C, I_Y);
  Ideal S = apply_change(C, I_S);

  std::vector<Polynomial> gens;
  for (const auto& g : Y.gens()) {
    if (g.degree() > 2)
      throw InvalidInput("secant count needs a fivefold cut by quadrics");
    if (g.degree() == 2) {
      Polynomial polar = g.derivative(0);  // B(e_0, v)
      if (!polar.is_zero()) gens.push_back(std::move(polar));
    }
    gens.push_back(g);
  }
  // normalize directions against the v = e_0 ambiguity
  gens.push_back(Polynomial::variable(ring, 0));
  // cone over S with vertex e_0: the part of I_S' free of x_0
  Ideal cone = eliminate(S, 1, budget);
  if (cone.is_zero_ideal())
    throw NonGenericPoint("secant count: cone over the surface is trivial");
  for (const auto& g : cone.gens()) gens.push_back(g);

  Ideal scheme = saturate_irrelevant(Ideal(ring, std::move(gens)),
                                     rng.fork(), budget);
  const int dim = projective_dimension(scheme, budget);
  if (dim > 0) throw PositiveDimensionalFamily();
  if (dim < 0) return 0;
  return static_cast<long>(scheme_length(scheme, budget));
}

long count_secant_lines(const Ideal& I_S, const Ideal& I_Y,
                        std::uint64_t seed, const Budget& budget,
                        int max_attempts) {
  Rng rng(seed);
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    try {
      Point p = random_point_on(I_Y, rng.fork(), budget);
      return secant_lines_through_point(I_S, I_Y, p, rng.fork(), budget);
    } catch (const NonGenericPoint&) {
      continue;
    }
  }
  throw NonGenericPoint("secant count: no usable point after retries");
}

}  // namespace gmlab
