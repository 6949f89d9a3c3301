#include "gmlab/groebner/ops.hpp"

#include <algorithm>

namespace gmlab {

namespace {

// Ring with one auxiliary variable "t#" in front, block(1) elimination
// order. Used by the intersection / Rabinowitsch tricks; never printed.
Ring tagged_ring(const Ring& ring) {
  std::vector<std::string> names;
  names.reserve(ring->nvars() + 1);
  names.push_back("t#");
  for (const auto& v : ring->var_names()) names.push_back(v);
  std::vector<int> weights;
  weights.reserve(ring->nvars() + 1);
  weights.push_back(1);
  for (int w : ring->weights()) weights.push_back(w);
  return make_ring(ring->characteristic(), std::move(names),
                   MonomialOrder::block(1), std::move(weights));
}

Polynomial lift_tagged(const Ring& tring, const Polynomial& f, int tpow) {
  std::vector<Term> ts;
  ts.reserve(f.size());
  for (const auto& t : f.terms()) {
    std::vector<std::uint16_t> e;
    e.reserve(tring->nvars());
    e.push_back(static_cast<std::uint16_t>(tpow));
    for (std::size_t i = 0; i < t.mon.nvars(); ++i)
      e.push_back(t.mon.exponent(i));
    ts.push_back({Monomial(std::move(e), tring->weights()), t.coeff});
  }
  return Polynomial::from_terms(tring, std::move(ts));
}

Polynomial drop_tag(const Ring& ring, const Polynomial& f) {
  std::vector<Term> ts;
  ts.reserve(f.size());
  for (const auto& t : f.terms()) {
    std::vector<std::uint16_t> e;
    e.reserve(ring->nvars());
    for (std::size_t i = 1; i < t.mon.nvars(); ++i)
      e.push_back(t.mon.exponent(i));
    ts.push_back({Monomial(std::move(e), ring->weights()), t.coeff});
  }
  return Polynomial::from_terms(ring, std::move(ts));
}

bool involves_first(const Polynomial& f, std::size_t k) {
  for (const auto& t : f.terms())
    for (std::size_t i = 0; i < k; ++i)
      if (t.mon.exponent(i) != 0) return true;
  return false;
}

// Splits generators into homogeneous components; valid when the generated
// ideal is homogeneous.
std::vector<Polynomial> homogeneous_parts(const std::vector<Polynomial>& gens) {
  std::vector<Polynomial> out;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    if (g.is_homogeneous()) {
      out.push_back(g);
      continue;
    }
    std::vector<int> degs;
    for (const auto& t : g.terms()) degs.push_back(t.mon.degree());
    std::sort(degs.begin(), degs.end());
    degs.erase(std::unique(degs.begin(), degs.end()), degs.end());
    for (int d : degs) out.push_back(g.homogeneous_component(d));
  }
  return out;
}

// Exact division by a polynomial; the divisions performed here are exact by
// construction (generators of I cap (f) are multiples of f).
Polynomial divide_exact(const Polynomial& g, const Polynomial& f) {
  const Ring& ring = g.ring();
  const FpField& F = ring->field();
  Polynomial rem = g;
  std::vector<Term> quot;
  while (!rem.is_zero()) {
    if (!f.lead_monomial().divides(rem.lead_monomial()))
      throw InvalidInput("inexact polynomial division");
    const Monomial m = rem.lead_monomial().quotient(f.lead_monomial());
    const FpElt c = F.div(rem.lead_coeff(), f.lead_coeff());
    quot.push_back({m, c});
    rem = rem.axpy(F.neg(c), m, f);
  }
  return Polynomial::from_terms(ring, std::move(quot));
}

Polynomial one_minus_t(const Ring& tring) {
  std::vector<Term> ts;
  ts.push_back({Monomial::one(tring->nvars()), 1});
  ts.push_back({Monomial::variable(tring->nvars(), 0, tring->weights()),
                tring->field().neg(1)});
  return Polynomial::from_terms(tring, std::move(ts));
}

std::vector<Polynomial> intersection_gens(const Ideal& I, const Ideal& J,
                                          const Budget& budget) {
  const Ring& ring = I.ring();
  Ring tring = tagged_ring(ring);
  std::vector<Polynomial> gens;
  const Polynomial omt = one_minus_t(tring);
  for (const auto& g : I.gens()) gens.push_back(lift_tagged(tring, g, 1));
  for (const auto& h : J.gens())
    gens.push_back(omt * lift_tagged(tring, h, 0));
  auto basis = compute_groebner(tring, std::move(gens), budget);
  std::vector<Polynomial> result;
  for (const auto& b : basis) {
    if (!involves_first(b, 1)) result.push_back(drop_tag(ring, b));
  }
  return homogeneous_parts(result);
}

}  // namespace

Ideal ideal_sum(const Ideal& I, const Ideal& J) {
  require_same_ring(I.ring(), J.ring(), "ideal sum");
  std::vector<Polynomial> gens = I.gens();
  for (const auto& g : J.gens()) gens.push_back(g);
  return Ideal(I.ring(), std::move(gens));
}

Ideal ideal_product(const Ideal& I, const Ideal& J) {
  require_same_ring(I.ring(), J.ring(), "ideal product");
  std::vector<Polynomial> gens;
  for (const auto& f : I.gens())
    for (const auto& g : J.gens()) gens.push_back(f * g);
  return Ideal(I.ring(), std::move(gens));
}

Ideal ideal_intersection(const Ideal& I, const Ideal& J,
                         const Budget& budget) {
  require_same_ring(I.ring(), J.ring(), "ideal intersection");
  if (I.is_zero_ideal() || J.is_zero_ideal()) return Ideal::zero(I.ring());
  return Ideal(I.ring(), intersection_gens(I, J, budget));
}

Ideal ideal_quotient(const Ideal& I, const Ideal& J, const Budget& budget) {
  require_same_ring(I.ring(), J.ring(), "ideal quotient");
  if (J.is_zero_ideal()) return Ideal::unit(I.ring());
  bool first = true;
  Ideal acc = Ideal::zero(I.ring());
  for (const auto& f : J.gens()) {
    // (I : f) = (I cap (f)) / f
    Ideal with_f = ideal_intersection(I, Ideal(I.ring(), {f}), budget);
    std::vector<Polynomial> divided;
    for (const auto& g : with_f.gens()) divided.push_back(divide_exact(g, f));
    Ideal qf(I.ring(), std::move(divided));
    acc = first ? qf : ideal_intersection(acc, qf, budget);
    first = false;
  }
  return acc;
}

Ideal saturate(const Ideal& I, const Ideal& J, const Budget& budget) {
  Ideal current = I;
  for (;;) {
    Ideal next = ideal_quotient(current, J, budget);
    if (next.equals(current, budget)) return current;
    current = next;
  }
}

Ideal saturate_by_form(const Ideal& I, const Polynomial& f,
                       const Budget& budget) {
  require_same_ring(I.ring(), f.ring(), "saturation by a form");
  if (f.is_zero()) throw InvalidInput("saturation by the zero form");
  const Ring& ring = I.ring();
  Ring tring = tagged_ring(ring);
  std::vector<Polynomial> gens;
  for (const auto& g : I.gens()) gens.push_back(lift_tagged(tring, g, 0));
  // t*f - 1
  Polynomial tf = lift_tagged(tring, f, 1);
  gens.push_back(tf - Polynomial::constant(tring, 1));
  auto basis = compute_groebner(tring, std::move(gens), budget);
  std::vector<Polynomial> result;
  for (const auto& b : basis)
    if (!involves_first(b, 1)) result.push_back(drop_tag(ring, b));
  return Ideal(ring, homogeneous_parts(result));
}

namespace {

Ideal strip_last_variable(const Ideal& I, const Budget& budget) {
  auto gb = I.groebner(MonomialOrder::degrevlex(), budget);
  const std::size_t last = I.ring()->nvars() - 1;
  std::vector<Polynomial> gens;
  std::vector<int> weights = I.ring()->weights();
  for (const auto& g : gb->polys()) {
    const int e = g.min_exponent(last);
    if (e == 0) {
      gens.push_back(g.in_ring(I.ring()));
    } else {
      std::vector<std::uint16_t> exps(I.ring()->nvars(), 0);
      exps[last] = static_cast<std::uint16_t>(e);
      gens.push_back(
          g.in_ring(I.ring()).divide_by_monomial(Monomial(exps, weights)));
    }
  }
  return Ideal(I.ring(), std::move(gens));
}

Ideal saturate_irrelevant_once(const Ideal& I, std::uint64_t seed,
                               const Budget& budget) {
  LinearChange C = LinearChange::random(I.ring(), seed);
  Ideal moved = apply_change(C, I);
  Ideal stripped = strip_last_variable(moved, budget);
  return apply_change_inverse(C, stripped);
}

}  // namespace

Ideal saturate_irrelevant(const Ideal& I, std::uint64_t seed,
                          const Budget& budget) {
  if (I.is_zero_ideal()) return I;
  Rng rng(seed);
  Ideal r1 = saturate_irrelevant_once(I, rng.fork(), budget);
  for (int attempt = 0; attempt < 3; ++attempt) {
    Ideal r2 = saturate_irrelevant_once(r1, rng.fork(), budget);
    if (r2.equals(r1, budget)) return r1;
    r1 = r2;
  }
  // fall back to the exact quotient loop against (x0..xn)
  std::vector<Polynomial> vars;
  for (std::size_t i = 0; i < I.ring()->nvars(); ++i)
    vars.push_back(Polynomial::variable(I.ring(), i));
  return saturate(r1, Ideal(I.ring(), std::move(vars)), budget);
}

Ideal saturate_fast(const Ideal& I, const Ideal& J, std::uint64_t seed,
                    const Budget& budget) {
  require_same_ring(I.ring(), J.ring(), "saturation");
  if (J.is_zero_ideal()) return Ideal::unit(I.ring());
  int d = J.gens().front().degree();
  for (const auto& g : J.gens())
    if (g.degree() != d)
      return saturate(I, J, budget);  // mixed degrees: exact route
  Rng rng(seed);
  const FpField& F = I.ring()->field();
  auto random_member = [&]() {
    Polynomial m = Polynomial::zero(I.ring());
    while (m.is_zero()) {
      m = Polynomial::zero(I.ring());
      for (const auto& g : J.gens()) m = m + g.scaled(F.random(rng));
    }
    return m;
  };
  Ideal current = saturate_by_form(I, random_member(), budget);
  for (int i = 0; i < 6; ++i) {
    Ideal next = saturate_by_form(current, random_member(), budget);
    if (next.equals(current, budget)) return current;
    current = next;
  }
  return saturate(current, J, budget);
}

Ideal eliminate(const Ideal& I, std::size_t first_k, const Budget& budget) {
  if (first_k == 0) return I;
  if (first_k >= I.ring()->nvars())
    throw InvalidInput("cannot eliminate every variable");
  auto gb = I.groebner(MonomialOrder::block(first_k), budget);
  std::vector<Polynomial> kept;
  for (const auto& g : gb->polys())
    if (!involves_first(g, first_k)) kept.push_back(g.in_ring(I.ring()));
  return Ideal(I.ring(), std::move(kept));
}

void for_each_monomial(
    std::size_t nvars, int d,
    const std::function<void(const std::vector<std::uint16_t>&)>& fn) {
  std::vector<std::uint16_t> e(nvars, 0);
  // lexicographic enumeration of compositions of d into nvars parts
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int rest) {
    if (i + 1 == nvars) {
      e[i] = static_cast<std::uint16_t>(rest);
      fn(e);
      e[i] = 0;
      return;
    }
    for (int v = rest; v >= 0; --v) {
      e[i] = static_cast<std::uint16_t>(v);
      rec(i + 1, rest - v);
    }
    e[i] = 0;
  };
  if (nvars == 0) return;
  rec(0, d);
}

long monomial_count(const Ring& ring, int d) {
  if (!ring->unit_weights())
    throw InvalidInput("graded counts need unit weights");
  // C(d + n - 1, n - 1)
  const long n = static_cast<long>(ring->nvars());
  long long num = 1, den = 1;
  for (long i = 1; i < n; ++i) {
    num *= d + i;
    den *= i;
  }
  return static_cast<long>(num / den);
}

long graded_dimension(const Ideal& I, int d, const Budget& budget) {
  if (d < 0) return 0;
  if (!I.ring()->unit_weights())
    throw InvalidInput("graded_dimension needs unit weights");
  if (I.is_zero_ideal()) return 0;
  auto gb = I.groebner_truncated(d, MonomialOrder::degrevlex(), budget);
  std::vector<const Monomial*> leads;
  for (const auto& g : gb->polys())
    if (g.lead_monomial().degree() <= d) leads.push_back(&g.lead_monomial());
  long count = 0;
  const std::vector<int>& w = I.ring()->weights();
  for_each_monomial(I.ring()->nvars(), d,
                    [&](const std::vector<std::uint16_t>& e) {
                      Monomial m(e, w);
                      for (const Monomial* l : leads) {
                        if (l->divides(m)) {
                          ++count;
                          break;
                        }
                      }
                    });
  return count;
}

std::vector<Polynomial> degree_slice_basis(const Ideal& I, int d,
                                           const Budget& budget) {
  if (!I.ring()->unit_weights())
    throw InvalidInput("degree slice needs unit weights");
  std::vector<Polynomial> out;
  if (I.is_zero_ideal() || d < 0) return out;
  auto gb = I.groebner_truncated(d, MonomialOrder::degrevlex(), budget);
  const Ring gb_ring = gb->ring();
  const std::vector<int>& w = gb_ring->weights();
  // one basis element per reducible monomial of degree d, with that monomial
  // as its lead
  for_each_monomial(
      gb_ring->nvars(), d, [&](const std::vector<std::uint16_t>& e) {
        Monomial m(e, w);
        for (const auto& g : gb->polys()) {
          if (g.lead_monomial().degree() > d) continue;
          if (g.lead_monomial().divides(m)) {
            Polynomial mult = Polynomial::monomial_term(
                gb_ring, m.quotient(g.lead_monomial()), 1);
            out.push_back((mult * g).in_ring(I.ring()));
            break;
          }
        }
      });
  return out;
}

int quotient_dimension(const Ideal& I, const Budget& budget) {
  const std::size_t n = I.ring()->nvars();
  if (I.is_zero_ideal()) return static_cast<int>(n);
  auto gb = I.groebner(MonomialOrder::degrevlex(), budget);
  if (gb->is_unit()) return -1;
  std::vector<std::uint32_t> supports;
  for (const auto& g : gb->polys()) {
    std::uint32_t mask = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (g.lead_monomial().exponent(i) != 0) mask |= (1u << i);
    supports.push_back(mask);
  }
  // max independent set: S with no lead-term support inside S
  int best = 0;
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    const int size = __builtin_popcount(s);
    if (size <= best) continue;
    bool ok = true;
    for (std::uint32_t m : supports) {
      if ((m & ~s) == 0) {
        ok = false;
        break;
      }
    }
    if (ok) best = size;
  }
  return best;
}

int projective_dimension(const Ideal& I, const Budget& budget) {
  return quotient_dimension(I, budget) - 1;
}

bool is_empty_projective(const Ideal& I, const Budget& budget) {
  return quotient_dimension(I, budget) <= 0;
}

Polynomial random_linear_form(const Ring& ring, Rng& rng) {
  const FpField& F = ring->field();
  for (;;) {
    std::vector<Term> ts;
    for (std::size_t i = 0; i < ring->nvars(); ++i) {
      FpElt c = F.random(rng);
      if (c != 0)
        ts.push_back(
            {Monomial::variable(ring->nvars(), i, ring->weights()), c});
    }
    if (!ts.empty()) return Polynomial::from_terms(ring, std::move(ts));
  }
}

Ideal generic_linear_section(const Ideal& I, std::size_t k,
                             std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Polynomial> gens = I.gens();
  for (std::size_t i = 0; i < k; ++i)
    gens.push_back(random_linear_form(I.ring(), rng));
  return Ideal(I.ring(), std::move(gens));
}

Ideal apply_change(const LinearChange& C, const Ideal& I) {
  std::vector<Polynomial> gens;
  gens.reserve(I.gens().size());
  for (const auto& g : I.gens()) gens.push_back(C.apply(g));
  return Ideal(I.ring(), std::move(gens));
}

Ideal apply_change_inverse(const LinearChange& C, const Ideal& I) {
  std::vector<Polynomial> gens;
  gens.reserve(I.gens().size());
  for (const auto& g : I.gens()) gens.push_back(C.apply_inverse(g));
  return Ideal(I.ring(), std::move(gens));
}

Polynomial HyperplaneRestriction::restrict_poly(const Polynomial& f) const {
  Polynomial moved = change.apply(f);
  const std::size_t last = change.ring()->nvars() - 1;
  std::vector<Term> ts;
  for (const auto& t : moved.terms()) {
    if (t.mon.exponent(last) != 0) continue;
    std::vector<std::uint16_t> e;
    e.reserve(last);
    for (std::size_t i = 0; i < last; ++i) e.push_back(t.mon.exponent(i));
    ts.push_back({Monomial(std::move(e), subring->weights()), t.coeff});
  }
  return Polynomial::from_terms(subring, std::move(ts));
}

Point HyperplaneRestriction::embed_point(const Point& p) const {
  Point ext = p;
  ext.push_back(0);
  return change.push_point(ext);
}

HyperplaneRestriction restrict_to_hyperplane(const Ideal& I,
                                             const Polynomial& h,
                                             std::uint64_t seed) {
  const Ring& ring = I.ring();
  LinearChange C = LinearChange::hyperplane_to_last(ring, h, seed);
  Ring sub = pn_ring(ring->characteristic(), ring->nvars() - 2);
  HyperplaneRestriction r{sub, Ideal::zero(sub), C};
  std::vector<Polynomial> gens;
  for (const auto& g : I.gens()) {
    Polynomial rg = r.restrict_poly(g);
    if (!rg.is_zero()) gens.push_back(std::move(rg));
  }
  r.restricted = Ideal(sub, std::move(gens));
  return r;
}

namespace {

// Determinant of a small polynomial matrix by cofactor expansion.
Polynomial poly_det(const Ring& ring,
                    const std::vector<std::vector<Polynomial>>& m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  Polynomial acc = Polynomial::zero(ring);
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j].is_zero()) continue;
    std::vector<std::vector<Polynomial>> sub;
    sub.reserve(n - 1);
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<Polynomial> row;
      row.reserve(n - 1);
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(m[i][k]);
      sub.push_back(std::move(row));
    }
    Polynomial term = m[0][j] * poly_det(ring, sub);
    acc = (j % 2 == 0) ? acc + term : acc - term;
  }
  return acc;
}

std::vector<std::vector<Polynomial>> jacobian(const Ideal& I) {
  const Ring& ring = I.ring();
  std::vector<std::vector<Polynomial>> rows;
  for (const auto& g : I.gens()) {
    std::vector<Polynomial> row;
    for (std::size_t j = 0; j < ring->nvars(); ++j)
      row.push_back(g.derivative(j));
    rows.push_back(std::move(row));
  }
  return rows;
}

Polynomial jacobian_minor(const Ring& ring,
                          const std::vector<std::vector<Polynomial>>& jac,
                          const std::vector<std::size_t>& rows,
                          const std::vector<std::size_t>& cols) {
  std::vector<std::vector<Polynomial>> m;
  for (auto r : rows) {
    std::vector<Polynomial> row;
    for (auto c : cols) row.push_back(jac[r][c]);
    m.push_back(std::move(row));
  }
  return poly_det(ring, m);
}

void all_subsets(std::size_t n, std::size_t k,
                 const std::function<void(const std::vector<std::size_t>&)>& fn) {
  std::vector<std::size_t> idx(k);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t start,
                                                          std::size_t pos) {
    if (pos == k) {
      fn(idx);
      return;
    }
    for (std::size_t i = start; i + (k - pos) <= n; ++i) {
      idx[pos] = i;
      rec(i + 1, pos + 1);
    }
  };
  rec(0, 0);
}

long long binomial_ll(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  long long r = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    r = r * static_cast<long long>(n - k + i) / static_cast<long long>(i);
    if (r > (1LL << 40)) return 1LL << 40;
  }
  return r;
}

}  // namespace

SingularLocus singular_locus(const Ideal& I, int codim, bool probabilistic,
                             std::uint64_t seed, const Budget& budget) {
  const Ring& ring = I.ring();
  if (codim < 0) {
    codim = static_cast<int>(ring->nvars()) - quotient_dimension(I, budget);
  }
  if (codim <= 0) throw InvalidInput("singular locus needs codimension >= 1");
  const auto jac = jacobian(I);
  const std::size_t g = I.gens().size();
  const std::size_t n = ring->nvars();
  const std::size_t c = static_cast<std::size_t>(codim);
  if (g < c) throw InvalidInput("fewer generators than the codimension");

  std::vector<Polynomial> gens = I.gens();
  if (!probabilistic) {
    all_subsets(g, c, [&](const std::vector<std::size_t>& rows) {
      all_subsets(n, c, [&](const std::vector<std::size_t>& cols) {
        Polynomial d = jacobian_minor(ring, jac, rows, cols);
        if (!d.is_zero()) gens.push_back(std::move(d));
      });
    });
    Ideal locus = saturate_irrelevant(Ideal(ring, std::move(gens)), seed ^ 1,
                                      budget);
    if (is_empty_projective(locus, budget)) locus = Ideal::unit(ring);
    return {locus, true};
  }

  // probabilistic mode: add random minors until the locus is certified empty
  Rng rng(seed);
  const long long total = binomial_ll(g, c) * binomial_ll(n, c);
  const int batch = 24;
  const int max_batches = 6;
  for (int round = 0; round < max_batches; ++round) {
    for (int s = 0; s < batch; ++s) {
      std::vector<std::size_t> rows(c), cols(c);
      // random strictly increasing index tuples
      auto pick = [&](std::size_t limit, std::vector<std::size_t>& out) {
        for (;;) {
          for (auto& v : out) v = static_cast<std::size_t>(rng.below(limit));
          std::sort(out.begin(), out.end());
          bool distinct = true;
          for (std::size_t i = 1; i < out.size(); ++i)
            if (out[i] == out[i - 1]) distinct = false;
          if (distinct) return;
        }
      };
      pick(g, rows);
      pick(n, cols);
      Polynomial d = jacobian_minor(ring, jac, rows, cols);
      if (!d.is_zero()) gens.push_back(std::move(d));
    }
    Ideal candidate(ring, gens);
    if (quotient_dimension(candidate, budget) <= 0)
      return {Ideal::unit(ring), true};
    if ((round + 1) * batch >= total) break;
  }
  Ideal locus =
      saturate_irrelevant(Ideal(ring, std::move(gens)), seed ^ 1, budget);
  if (is_empty_projective(locus, budget)) locus = Ideal::unit(ring);
  return {locus, false};
}

bool certify_smooth(const Ideal& I, int codim, std::uint64_t seed,
                    const Budget& budget, int max_batches) {
  const Ring& ring = I.ring();
  if (codim < 0)
    codim = static_cast<int>(ring->nvars()) - quotient_dimension(I, budget);
  const auto jac = jacobian(I);
  const std::size_t g = I.gens().size();
  const std::size_t n = ring->nvars();
  const std::size_t c = static_cast<std::size_t>(codim);
  if (g < c) return false;
  Rng rng(seed);
  std::vector<Polynomial> gens = I.gens();
  for (int round = 0; round < max_batches; ++round) {
    for (int s = 0; s < 16; ++s) {
      std::vector<std::size_t> rows(c), cols(c);
      auto pick = [&](std::size_t limit, std::vector<std::size_t>& out) {
        for (;;) {
          for (auto& v : out) v = static_cast<std::size_t>(rng.below(limit));
          std::sort(out.begin(), out.end());
          bool distinct = true;
          for (std::size_t i = 1; i < out.size(); ++i)
            if (out[i] == out[i - 1]) distinct = false;
          if (distinct) return;
        }
      };
      pick(g, rows);
      pick(n, cols);
      Polynomial d = jacobian_minor(ring, jac, rows, cols);
      if (!d.is_zero()) gens.push_back(std::move(d));
    }
    if (quotient_dimension(Ideal(ring, gens), budget) <= 0) return true;
  }
  return false;
}

}  // namespace gmlab
