#include "gmlab/groebner/points.hpp"

#include <algorithm>
#include <map>

namespace gmlab {

Point normalize_point(const Ring& ring, Point p) {
  const FpField& F = ring->field();
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] != 0) {
      const FpElt inv = F.inv(p[i]);
      for (auto& c : p) c = F.mul(c, inv);
      return p;
    }
  }
  throw InvalidInput("zero vector is not a projective point");
}

bool vanishes_at(const Ideal& I, const Point& p) {
  for (const auto& g : I.gens())
    if (g.evaluate(p) != 0) return false;
  return true;
}

namespace {

// Affine chart: substitute the last variable by 1 and drop it.
std::vector<Polynomial> dehomogenize_last(const Ring& sub,
                                          const std::vector<Polynomial>& gens) {
  std::vector<Polynomial> out;
  for (const auto& g : gens) {
    std::vector<Term> ts;
    for (const auto& t : g.terms()) {
      std::vector<std::uint16_t> e;
      e.reserve(sub->nvars());
      for (std::size_t i = 0; i < sub->nvars(); ++i)
        e.push_back(t.mon.exponent(i));
      ts.push_back({Monomial(std::move(e), sub->weights()), t.coeff});
    }
    Polynomial p = Polynomial::from_terms(sub, std::move(ts));
    if (!p.is_zero()) out.push_back(std::move(p));
  }
  return out;
}

// Standard monomials of a zero-dimensional affine basis; empty optional when
// the count exceeds `limit`.
std::optional<std::vector<Monomial>> standard_monomials(
    const Ring& ring, const std::vector<Polynomial>& gb, long limit) {
  std::vector<const Monomial*> leads;
  for (const auto& g : gb) leads.push_back(&g.lead_monomial());
  auto reducible = [&](const Monomial& m) {
    for (auto* l : leads)
      if (l->divides(m)) return true;
    return false;
  };
  std::vector<Monomial> result;
  std::vector<Monomial> frontier{Monomial::one(ring->nvars())};
  std::map<Monomial, bool> seen;
  seen[frontier.front()] = true;
  while (!frontier.empty()) {
    Monomial m = frontier.back();
    frontier.pop_back();
    if (reducible(m)) continue;
    result.push_back(m);
    if (static_cast<long>(result.size()) > limit) return std::nullopt;
    for (std::size_t i = 0; i < ring->nvars(); ++i) {
      Monomial ext =
          m * Monomial::variable(ring->nvars(), i, ring->weights());
      if (!seen[ext]) {
        seen[ext] = true;
        frontier.push_back(ext);
      }
    }
  }
  std::sort(result.begin(), result.end(),
            [&](const Monomial& a, const Monomial& b) {
              return ring->compare(a, b) < 0;
            });
  return result;
}

}  // namespace

long affine_quotient_size(const Ring& affine_ring,
                          const std::vector<Polynomial>& affine_gens,
                          const Budget& budget, long limit) {
  auto gb = compute_groebner(affine_ring, affine_gens, budget);
  if (gb.size() == 1 && gb[0].lead_monomial().is_one()) return 0;
  auto sm = standard_monomials(affine_ring, gb, limit);
  if (!sm) return -1;
  return static_cast<long>(sm->size());
}

namespace {

struct AffineSolveResult {
  bool found = false;
  Point affine;  // coordinates in the chart
};

// Finds one rational point of a zero-dimensional affine system by scanning
// the roots of the minimal polynomial of a random coordinate form.
AffineSolveResult solve_affine(const Ring& ring,
                               const std::vector<Polynomial>& gens,
                               Rng& rng, const Budget& budget) {
  auto gb = compute_groebner(ring, gens, budget);
  if (gb.size() == 1 && gb[0].lead_monomial().is_one()) return {};
  auto smopt = standard_monomials(ring, gb, 4000);
  if (!smopt) return {};
  const std::vector<Monomial>& sm = *smopt;
  const std::size_t L = sm.size();
  const FpField& F = ring->field();
  std::map<Monomial, std::size_t> index;
  for (std::size_t i = 0; i < L; ++i) index[sm[i]] = i;

  auto coords_of = [&](const Polynomial& f) {
    std::vector<FpElt> v(L, 0);
    for (const auto& t : f.terms()) v[index.at(t.mon)] = t.coeff;
    return v;
  };

  Polynomial ell = random_linear_form(ring, rng);

  // Krylov sequence of multiplication by ell applied to 1.
  std::vector<std::vector<FpElt>> krylov;
  Polynomial cur = normal_form(Polynomial::constant(ring, 1), gb);
  krylov.push_back(coords_of(cur));
  for (std::size_t step = 0; step <= L; ++step) {
    cur = normal_form(cur * ell, gb);
    krylov.push_back(coords_of(cur));
    // look for a linear dependence among krylov vectors
    FpMatrix m(F, L, krylov.size());
    for (std::size_t j = 0; j < krylov.size(); ++j)
      for (std::size_t i = 0; i < L; ++i) m.at(i, j) = krylov[j][i];
    auto kernel = m.kernel_basis();
    if (kernel.empty()) continue;
    // minimal polynomial h(T) with h(M_ell) * 1 = 0
    const std::vector<FpElt>& h = kernel.front();
    // scan F_p for roots of h
    for (std::uint64_t t0 = 0; t0 < F.modulus(); ++t0) {
      const FpElt t = static_cast<FpElt>(t0);
      FpElt acc = 0, tp = 1;
      for (std::size_t i = 0; i < h.size(); ++i) {
        acc = F.add(acc, F.mul(h[i], tp));
        tp = F.mul(tp, t);
      }
      if (acc != 0) continue;
      // candidate value of ell; localize the point
      std::vector<Polynomial> extended = gens;
      extended.push_back(ell - Polynomial::constant(ring, t));
      auto gb2 = compute_groebner(ring, extended, budget);
      if (gb2.size() == 1 && gb2[0].lead_monomial().is_one()) continue;
      auto sm2 = standard_monomials(ring, gb2, 64);
      if (!sm2) continue;
      if (sm2->size() == 1) {
        // quotient is one point: coordinates are NF(x_i)
        Point pt(ring->nvars(), 0);
        bool ok = true;
        for (std::size_t i = 0; i < ring->nvars(); ++i) {
          Polynomial nf = normal_form(Polynomial::variable(ring, i), gb2);
          if (nf.is_zero()) {
            pt[i] = 0;
          } else if (nf.size() == 1 && nf.lead_monomial().is_one()) {
            pt[i] = nf.lead_coeff();
          } else {
            ok = false;
            break;
          }
        }
        if (ok) return {true, pt};
      }
    }
    return {};  // dependence found but no rational root: give up this chart
  }
  return {};
}

}  // namespace

Point random_point_on(const Ideal& I, std::uint64_t seed,
                      const Budget& budget, int max_attempts) {
  const Ring& ring = I.ring();
  if (!ring->unit_weights())
    throw InvalidInput("point search needs unit weights");
  Rng rng(seed);
  const int dim = projective_dimension(I, budget);
  if (dim < 0) throw NoRationalPoint("variety is empty");
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    const std::uint64_t s = rng.fork();
    Rng local(s);
    // random coordinates, then slice down to projective dimension 0
    LinearChange C = LinearChange::random(ring, local.fork());
    Ideal moved = apply_change(C, I);
    std::vector<Polynomial> gens = moved.gens();
    for (int i = 0; i < dim; ++i)
      gens.push_back(random_linear_form(ring, local));
    Ring sub = pn_ring(ring->characteristic(), ring->nvars() - 2);
    auto affine = dehomogenize_last(sub, gens);
    AffineSolveResult res = solve_affine(sub, affine, local, budget);
    if (!res.found) continue;
    Point hom = res.affine;
    hom.push_back(1);
    Point original = C.push_point(hom);
    Point p = normalize_point(ring, std::move(original));
    if (vanishes_at(I, p)) return p;
  }
  throw NoRationalPoint("after " + std::to_string(max_attempts) +
                        " attempts");
}

}  // namespace gmlab
