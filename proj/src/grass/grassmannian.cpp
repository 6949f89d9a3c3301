#include "gmlab/grass/grassmannian.hpp"

#include <algorithm>

namespace gmlab {

namespace {

std::array<FpElt, 5> random_p4_hyperplane(const FpField& F, Rng& rng) {
  std::array<FpElt, 5> a{};
  bool nonzero = false;
  while (!nonzero) {
    for (auto& v : a) {
      v = F.random(rng);
      if (v != 0) nonzero = true;
    }
  }
  return a;
}

Polynomial random_combination(const std::vector<Polynomial>& basis,
                              Rng& rng) {
  const Ring& ring = basis.front().ring();
  const FpField& F = ring->field();
  for (;;) {
    Polynomial acc = Polynomial::zero(ring);
    for (const auto& b : basis) acc = acc + b.scaled(F.random(rng));
    if (!acc.is_zero()) return acc;
  }
}

}  // namespace

Ideal plucker_ideal(const Ring& pluecker) {
  const FpField& F = pluecker->field();
  std::vector<Polynomial> gens;
  auto var = [&](std::size_t i, std::size_t j) {
    return Polynomial::variable(pluecker, plucker_index(i, j));
  };
  // for each 4-subset {i<j<k<l}: p_ij p_kl - p_ik p_jl + p_il p_jk
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = i + 1; j < 5; ++j)
      for (std::size_t k = j + 1; k < 5; ++k)
        for (std::size_t l = k + 1; l < 5; ++l) {
          Polynomial rel = var(i, j) * var(k, l) - var(i, k) * var(j, l) +
                           var(i, l) * var(j, k);
          gens.push_back(std::move(rel));
        }
  (void)F;
  return Ideal(pluecker, std::move(gens));
}

Ideal plucker_ideal(std::uint32_t p) { return plucker_ideal(plucker_ring(p)); }

Point plucker_of_span(const FpField& F, const std::array<FpElt, 5>& u,
                      const std::array<FpElt, 5>& v) {
  Point p;
  p.reserve(10);
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = i + 1; j < 5; ++j)
      p.push_back(F.sub(F.mul(u[i], v[j]), F.mul(u[j], v[i])));
  return p;
}

LinearChange induced_plucker_change(const Ring& pluecker, const FpMatrix& A) {
  const FpField& F = pluecker->field();
  FpMatrix W(F, 10, 10);
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = i + 1; j < 5; ++j)
      for (std::size_t k = 0; k < 5; ++k)
        for (std::size_t l = k + 1; l < 5; ++l) {
          // wedge-square entry: A_ik A_jl - A_il A_jk
          const FpElt e = F.sub(F.mul(A.at(i, k), A.at(j, l)),
                                F.mul(A.at(i, l), A.at(j, k)));
          W.at(plucker_index(i, j), plucker_index(k, l)) = e;
        }
  return LinearChange(pluecker, std::move(W));
}

std::vector<Polynomial> sigma11_linear_forms(const Ring& pluecker,
                                             const std::array<FpElt, 5>& a) {
  const FpField& F = pluecker->field();
  std::size_t j0 = 0;
  while (j0 < 5 && a[j0] == 0) ++j0;
  if (j0 == 5) throw InvalidInput("zero hyperplane for sigma_{1,1}");
  std::vector<Polynomial> forms;
  for (std::size_t j = 0; j < 5; ++j) {
    if (j == j0) continue;  // the contraction at j0 is a combination
    std::vector<Term> ts;
    for (std::size_t i = 0; i < 5; ++i) {
      if (i == j || a[i] == 0) continue;
      // coefficient of p_{min,max} with sign from p_{ij} = -p_{ji}
      const FpElt c = i < j ? a[i] : F.neg(a[i]);
      ts.push_back({Monomial::variable(10, plucker_index(std::min(i, j),
                                                         std::max(i, j)),
                                       pluecker->weights()),
                    c});
    }
    forms.push_back(Polynomial::from_terms(pluecker, std::move(ts)));
  }
  return forms;
}

Ideal schubert_sigma11_variety(const Ring& pluecker, std::uint64_t seed) {
  Rng rng(seed);
  const auto a = random_p4_hyperplane(pluecker->field(), rng);
  std::vector<Polynomial> gens = plucker_ideal(pluecker).gens();
  for (auto& f : sigma11_linear_forms(pluecker, a)) gens.push_back(f);
  return Ideal(pluecker, std::move(gens));
}

DelPezzoFivefold del_pezzo_fivefold(std::uint32_t p, std::uint64_t seed,
                                    bool verify_smooth, const Budget& budget) {
  Rng rng(seed);
  Ring p9 = plucker_ring(p);
  Ideal G = plucker_ideal(p9);
  for (int attempt = 0; attempt < 8; ++attempt) {
    Rng local(rng.fork());
    Polynomial h = random_linear_form(p9, local);
    HyperplaneRestriction r = restrict_to_hyperplane(G, h, local.fork());
    DelPezzoFivefold Y{p9, h, r, r.restricted, seed};
    if (verify_smooth &&
        !certify_smooth(Y.ideal, 3, local.fork(), budget)) {
      continue;
    }
    return Y;
  }
  throw NonGenericPoint("del Pezzo fivefold: no smooth section found");
}

namespace {

// Shared tail of the tau-quadric / quintic del Pezzo constructions: a linear
// section S of G(1,4) spanned inside a hyperplane section Y.
SurfaceInFivefold section_in_fivefold(std::uint64_t seed,
                                      const std::vector<Polynomial>& span_forms,
                                      const Ideal& surface_p9,
                                      bool verify_smooth,
                                      const Budget& budget) {
  Rng rng(seed);
  Ring p9 = surface_p9.ring();
  Ideal G = plucker_ideal(p9);
  for (int attempt = 0; attempt < 8; ++attempt) {
    Rng local(rng.fork());
    Polynomial h = random_combination(span_forms, local);
    HyperplaneRestriction r = restrict_to_hyperplane(G, h, local.fork());
    DelPezzoFivefold Y{p9, h, r, r.restricted, seed};
    if (verify_smooth && !certify_smooth(Y.ideal, 3, local.fork(), budget))
      continue;
    std::vector<Polynomial> s8_gens;
    for (const auto& g : surface_p9.gens()) {
      Polynomial rg = Y.restriction.restrict_poly(g);
      if (!rg.is_zero()) s8_gens.push_back(std::move(rg));
    }
    Ideal S8(Y.p8(), std::move(s8_gens));
    return SurfaceInFivefold{std::move(Y), surface_p9, std::move(S8)};
  }
  throw NonGenericPoint("no smooth fivefold through the surface");
}

}  // namespace

SurfaceInFivefold tau_quadric(std::uint32_t p, std::uint64_t seed,
                              bool verify_smooth, const Budget& budget) {
  Rng rng(seed);
  Ring p9 = plucker_ring(p);
  const FpField& F = p9->field();
  const auto a = random_p4_hyperplane(F, rng);
  std::vector<Polynomial> span_forms = sigma11_linear_forms(p9, a);
  Rng cut_rng(rng.fork());
  span_forms.push_back(random_linear_form(p9, cut_rng));
  span_forms.push_back(random_linear_form(p9, cut_rng));
  std::vector<Polynomial> s_gens = plucker_ideal(p9).gens();
  for (const auto& f : span_forms) s_gens.push_back(f);
  Ideal S9(p9, std::move(s_gens));
  SurfaceInFivefold s = section_in_fivefold(rng.fork(), span_forms, S9,
                                            verify_smooth, budget);
  if (verify_smooth) {
    SpanRestriction sp = restrict_to_span(S9, budget);
    auto sing = singular_locus(sp.ideal, -1, false, rng.fork(), budget);
    if (!sing.locus.is_unit(budget))
      throw NonGenericPoint("tau-quadric section is singular");
  }
  return s;
}

SurfaceInFivefold quintic_del_pezzo(std::uint32_t p, std::uint64_t seed,
                                    bool verify_smooth, const Budget& budget) {
  Rng rng(seed);
  Ring p9 = plucker_ring(p);
  std::vector<Polynomial> span_forms;
  for (int i = 0; i < 4; ++i) span_forms.push_back(random_linear_form(p9, rng));
  std::vector<Polynomial> s_gens = plucker_ideal(p9).gens();
  for (const auto& f : span_forms) s_gens.push_back(f);
  Ideal S9(p9, std::move(s_gens));
  SurfaceInFivefold s = section_in_fivefold(rng.fork(), span_forms, S9,
                                            verify_smooth, budget);
  if (verify_smooth) {
    SpanRestriction sp = restrict_to_span(S9, budget);
    auto sing = singular_locus(sp.ideal, -1, false, rng.fork(), budget);
    if (!sing.locus.is_unit(budget))
      throw NonGenericPoint("quintic del Pezzo section is singular");
  }
  return s;
}

namespace {

// Rows of `candidates` that stay independent modulo span(reducers), found by
// elimination over the degree-d monomial coordinates.
std::vector<std::size_t> independent_mod(const Ring& ring, int d,
                                         const std::vector<Polynomial>& reducers,
                                         const std::vector<Polynomial>& candidates) {
  std::vector<Monomial> monoms;
  for_each_monomial(ring->nvars(), d,
                    [&](const std::vector<std::uint16_t>& e) {
                      monoms.emplace_back(e, ring->weights());
                    });
  std::map<Monomial, std::size_t> index;
  for (std::size_t i = 0; i < monoms.size(); ++i) index[monoms[i]] = i;
  const FpField& F = ring->field();
  const std::size_t cols = monoms.size();
  std::vector<std::vector<FpElt>> rows;  // echelonized reducer+candidate rows
  std::vector<std::size_t> picked;

  auto reduce_insert = [&](std::vector<FpElt> v, bool record,
                           std::size_t cand_index) {
    for (const auto& r : rows) {
      std::size_t lead = 0;
      while (lead < cols && r[lead] == 0) ++lead;
      if (lead < cols && v[lead] != 0) {
        const FpElt f = v[lead];
        for (std::size_t c = lead; c < cols; ++c)
          v[c] = F.sub(v[c], F.mul(f, r[c]));
      }
    }
    std::size_t lead = 0;
    while (lead < cols && v[lead] == 0) ++lead;
    if (lead == cols) return;
    const FpElt inv = F.inv(v[lead]);
    for (std::size_t c = lead; c < cols; ++c) v[c] = F.mul(v[c], inv);
    rows.push_back(std::move(v));
    if (record) picked.push_back(cand_index);
  };

  auto coords = [&](const Polynomial& f) {
    std::vector<FpElt> v(cols, 0);
    for (const auto& t : f.terms()) v[index.at(t.mon)] = t.coeff;
    return v;
  };

  for (const auto& r : reducers) reduce_insert(coords(r), false, 0);
  for (std::size_t i = 0; i < candidates.size(); ++i)
    reduce_insert(coords(candidates[i]), true, i);
  return picked;
}

}  // namespace

GMFourfold gm_fourfold(const DelPezzoFivefold& Y,
                       const std::optional<Ideal>& through,
                       std::uint64_t seed, const Budget& budget) {
  Rng rng(seed);
  const Ring& ring = Y.p8();
  const FpField& F = ring->field();
  Polynomial quadric = Polynomial::zero(ring);
  long family_dim = -1;
  if (through) {
    require_same_ring(ring, through->ring(), "gm_fourfold through-surface");
    std::vector<Polynomial> WS = degree_slice_basis(*through, 2, budget);
    std::vector<Polynomial> UY = degree_slice_basis(Y.ideal, 2, budget);
    auto picked = independent_mod(ring, 2, UY, WS);
    if (picked.empty()) throw NoQuadric();
    family_dim = static_cast<long>(picked.size()) - 1;
    // any nonzero coefficient vector stays outside I_Y by independence
    for (;;) {
      bool nonzero = false;
      Polynomial acc = Polynomial::zero(ring);
      for (auto idx : picked) {
        const FpElt c = F.random(rng);
        if (c != 0) nonzero = true;
        acc = acc + WS[idx].scaled(c);
      }
      if (nonzero) {
        quadric = std::move(acc);
        break;
      }
    }
  } else {
    std::vector<Term> ts;
    for_each_monomial(ring->nvars(), 2,
                      [&](const std::vector<std::uint16_t>& e) {
                        const FpElt c = F.random(rng);
                        if (c != 0)
                          ts.push_back({Monomial(e, ring->weights()), c});
                      });
    quadric = Polynomial::from_terms(ring, std::move(ts));
  }
  std::vector<Polynomial> gens = Y.ideal.gens();
  gens.push_back(std::move(quadric));
  return GMFourfold{Ideal(ring, std::move(gens)), family_dim};
}

SurfaceClass surface_class(const Ideal& surface_p9, std::uint64_t seed,
                           const Budget& budget) {
  Rng rng(seed);
  const Ring& p9 = surface_p9.ring();
  const long long deg = invariants(surface_p9, budget).degree();

  auto one_vote = [&](Rng& vote_rng) -> long long {
    for (int attempt = 0; attempt < 5; ++attempt) {
      Rng local(vote_rng.fork());
      const auto a = random_p4_hyperplane(p9->field(), local);
      std::vector<Polynomial> gens = surface_p9.gens();
      for (auto& f : sigma11_linear_forms(p9, a)) gens.push_back(f);
      Ideal cut = saturate_irrelevant(Ideal(p9, std::move(gens)),
                                      local.fork(), budget);
      const int dim = projective_dimension(cut, budget);
      if (dim < 0) return 0;
      if (dim == 0) return scheme_length(cut, budget);
    }
    throw NonGenericIntersection("sigma_{1,1} translate");
  };

  std::array<long long, 3> votes{};
  for (auto& v : votes) {
    Rng vote_rng(rng.fork());
    v = one_vote(vote_rng);
  }
  long long b;
  if (votes[0] == votes[1] || votes[0] == votes[2]) {
    b = votes[0];
  } else if (votes[1] == votes[2]) {
    b = votes[1];
  } else {
    throw NonGenericIntersection("sigma_{1,1} votes disagree: " +
                                 std::to_string(votes[0]) + "," +
                                 std::to_string(votes[1]) + "," +
                                 std::to_string(votes[2]));
  }
  return SurfaceClass{deg - b, b};
}

SpanRestriction restrict_to_span(const Ideal& I, const Budget& budget) {
  const Ring& ring = I.ring();
  std::vector<Polynomial> linear = degree_slice_basis(I, 1, budget);
  if (linear.empty()) return {ring, I};
  const FpField& F = ring->field();
  const std::size_t n = ring->nvars();
  FpMatrix W(F, linear.size(), n);
  for (std::size_t r = 0; r < linear.size(); ++r)
    for (const auto& t : linear[r].terms())
      for (std::size_t i = 0; i < n; ++i)
        if (t.mon.exponent(i) == 1) W.at(r, i) = t.coeff;
  auto kernel = W.kernel_basis();
  if (kernel.empty())
    throw InvalidInput("variety spans nothing: ideal contains all coordinates");
  Ring target = pn_ring(ring->characteristic(), kernel.size() - 1);
  std::vector<Polynomial> images;
  images.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Term> ts;
    for (std::size_t t = 0; t < kernel.size(); ++t) {
      if (kernel[t][i] != 0)
        ts.push_back({Monomial::variable(target->nvars(), t,
                                         target->weights()),
                      kernel[t][i]});
    }
    images.push_back(Polynomial::from_terms(target, std::move(ts)));
  }
  std::vector<Polynomial> gens;
  for (const auto& g : I.gens()) {
    Polynomial s = g.substitute(images);
    if (!s.is_zero()) gens.push_back(std::move(s));
  }
  return {target, Ideal(target, std::move(gens))};
}

}  // namespace gmlab
