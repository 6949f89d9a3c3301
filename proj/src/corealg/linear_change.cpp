#include "gmlab/corealg/linear_change.hpp"

#include "gmlab/corealg/rng.hpp"

namespace gmlab {

namespace {

std::vector<Polynomial> row_images(const Ring& ring, const FpMatrix& m) {
  std::vector<Polynomial> images;
  images.reserve(ring->nvars());
  for (std::size_t i = 0; i < ring->nvars(); ++i) {
    std::vector<Term> ts;
    for (std::size_t j = 0; j < ring->nvars(); ++j) {
      if (m.at(i, j) != 0)
        ts.push_back({Monomial::variable(ring->nvars(), j, ring->weights()),
                      m.at(i, j)});
    }
    images.push_back(Polynomial::from_terms(ring, std::move(ts)));
  }
  return images;
}

// Coefficient vector of a linear form.
std::vector<FpElt> linear_coeffs(const Polynomial& h) {
  const Ring& ring = h.ring();
  if (h.is_zero() || h.degree() != 1 || !h.is_homogeneous())
    throw InvalidInput("expected a nonzero linear form");
  std::vector<FpElt> a(ring->nvars(), 0);
  for (const auto& t : h.terms()) {
    for (std::size_t i = 0; i < ring->nvars(); ++i) {
      if (t.mon.exponent(i) == 1) {
        a[i] = t.coeff;
        break;
      }
    }
  }
  return a;
}

}  // namespace

LinearChange::LinearChange(Ring ring, FpMatrix mat)
    : ring_(std::move(ring)), mat_(std::move(mat)), inv_(mat_.inverse()) {}

Polynomial LinearChange::apply(const Polynomial& f) const {
  require_same_ring(ring_, f.ring(), "linear change application");
  return f.substitute(row_images(ring_, mat_));
}

Polynomial LinearChange::apply_inverse(const Polynomial& f) const {
  require_same_ring(ring_, f.ring(), "linear change application");
  return f.substitute(row_images(ring_, inv_));
}

LinearChange LinearChange::random(Ring ring, std::uint64_t seed) {
  Rng rng(seed);
  const FpField& F = ring->field();
  const std::size_t n = ring->nvars();
  for (;;) {
    FpMatrix m(F, n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m.at(i, j) = F.random(rng);
    if (m.det() != 0) return LinearChange(std::move(ring), std::move(m));
  }
}

LinearChange LinearChange::sending_e0_to(Ring ring, const Point& p,
                                         std::uint64_t seed) {
  Rng rng(seed);
  const FpField& F = ring->field();
  const std::size_t n = ring->nvars();
  if (p.size() != n) throw RingMismatch("point size in coordinate change");
  for (;;) {
    FpMatrix m(F, n, n);
    for (std::size_t i = 0; i < n; ++i) {
      m.at(i, 0) = p[i];
      for (std::size_t j = 1; j < n; ++j) m.at(i, j) = F.random(rng);
    }
    if (m.det() != 0) return LinearChange(std::move(ring), std::move(m));
  }
}

LinearChange LinearChange::hyperplane_to_last(Ring ring, const Polynomial& h,
                                              std::uint64_t seed) {
  Rng rng(seed);
  const FpField& F = ring->field();
  const std::size_t n = ring->nvars();
  const std::vector<FpElt> a = linear_coeffs(h);
  std::size_t k = 0;
  while (a[k] == 0) ++k;
  const FpElt ak_inv = F.inv(a[k]);
  for (;;) {
    FpMatrix m(F, n, n);
    // columns 0..n-2 span the hyperplane a^T x = 0; last column meets a at 1
    for (std::size_t j = 0; j < n; ++j) {
      FpElt dot = 0;
      for (std::size_t i = 0; i < n; ++i) {
        if (i == k) continue;
        m.at(i, j) = F.random(rng);
        dot = F.add(dot, F.mul(a[i], m.at(i, j)));
      }
      const FpElt target = (j + 1 == n) ? 1 : 0;
      m.at(k, j) = F.mul(F.sub(target, dot), ak_inv);
    }
    if (m.det() != 0) return LinearChange(std::move(ring), std::move(m));
  }
}

}  // namespace gmlab
