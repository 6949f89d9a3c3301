#include <map>

#include "gmlab/birat/birat.hpp"

namespace gmlab {

namespace {

// Multi-indexed partial derivative D^alpha m as a polynomial.
Polynomial monomial_partial(const Ring& ring, const Monomial& m,
                            const std::vector<int>& alpha) {
  Polynomial p = Polynomial::monomial_term(ring, m, 1);
  for (std::size_t i = 0; i < alpha.size(); ++i)
    for (int k = 0; k < alpha[i]; ++k) p = p.derivative(i);
  return p;
}

void multi_indices(std::size_t nvars, int total,
                   const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> alpha(nvars, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int rest) {
    if (i + 1 == nvars) {
      alpha[i] = rest;
      fn(alpha);
      alpha[i] = 0;
      return;
    }
    for (int v = 0; v <= rest; ++v) {
      alpha[i] = v;
      rec(i + 1, rest - v);
    }
    alpha[i] = 0;
  };
  if (nvars == 0) return;
  rec(0, total);
}

}  // namespace

std::vector<Polynomial> linear_system(
    const Ideal& I_V, int degree,
    const std::vector<FatBaseCondition>& conditions, const Budget& budget) {
  const Ring& ring = I_V.ring();
  if (degree < 1) throw InvalidInput("linear system degree must be >= 1");
  if (!ring->unit_weights())
    throw InvalidInput("linear systems need unit weights");
  const FpField& F = ring->field();

  std::vector<Monomial> monoms;
  for_each_monomial(ring->nvars(), degree,
                    [&](const std::vector<std::uint16_t>& e) {
                      monoms.emplace_back(e, ring->weights());
                    });
  const std::size_t cols = monoms.size();

  // rows of the constraint matrix, one per scalar condition
  std::vector<std::vector<FpElt>> rows;

  auto add_evaluation_rows = [&](const Point& p, int mult) {
    for (int total = 0; total < mult; ++total) {
      multi_indices(ring->nvars(), total, [&](const std::vector<int>& alpha) {
        std::vector<FpElt> row(cols, 0);
        bool nonzero = false;
        for (std::size_t j = 0; j < cols; ++j) {
          Polynomial d = monomial_partial(ring, monoms[j], alpha);
          const FpElt v = d.evaluate(p);
          row[j] = v;
          if (v != 0) nonzero = true;
        }
        if (nonzero) rows.push_back(std::move(row));
      });
    }
  };

  auto add_membership_rows = [&](const Ideal& center, int mult) {
    auto add_for = [&](const std::function<Polynomial(const Monomial&)>& op,
                       int op_degree) {
      auto gb = center.groebner_truncated(op_degree,
                                          MonomialOrder::degrevlex(), budget);
      // rows indexed by the standard monomials that occur in the normal forms
      std::map<Monomial, std::size_t> row_of;
      for (std::size_t j = 0; j < cols; ++j) {
        Polynomial nf = normal_form(op(monoms[j]), *gb);
        for (const auto& t : nf.terms()) {
          auto [it, inserted] = row_of.emplace(t.mon, rows.size());
          if (inserted) rows.emplace_back(cols, 0);
          rows[it->second][j] = F.add(rows[it->second][j], t.coeff);
        }
      }
    };
    add_for([&](const Monomial& mo) {
      return Polynomial::monomial_term(ring, mo, 1);
    }, degree);
    if (mult == 2) {
      for (std::size_t i = 0; i < ring->nvars(); ++i) {
        add_for([&, i](const Monomial& mo) {
          return Polynomial::monomial_term(ring, mo, 1).derivative(i);
        }, degree - 1);
      }
    }
  };

  for (const auto& c : conditions) {
    if (c.multiplicity < 1) throw InvalidInput("multiplicity must be >= 1");
    if (c.point) {
      if (c.multiplicity > 3)
        throw InvalidInput("point multiplicity at most 3");
      add_evaluation_rows(*c.point, c.multiplicity);
    } else if (c.center) {
      if (c.multiplicity > 2)
        throw InvalidInput("subscheme multiplicity at most 2");
      require_same_ring(ring, c.center->ring(), "base condition center");
      add_membership_rows(*c.center, c.multiplicity);
    } else {
      throw InvalidInput("base condition without a center");
    }
  }

  FpMatrix M(F, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t j = 0; j < cols; ++j) M.at(r, j) = rows[r][j];
  auto kernel = rows.empty()
                    ? FpMatrix::identity(F, cols).kernel_basis()
                    : M.kernel_basis();
  if (rows.empty()) {
    kernel.clear();
    for (std::size_t j = 0; j < cols; ++j) {
      std::vector<FpElt> v(cols, 0);
      v[j] = 1;
      kernel.push_back(std::move(v));
    }
  }

  std::vector<Polynomial> forms;
  for (const auto& v : kernel) {
    std::vector<Term> ts;
    for (std::size_t j = 0; j < cols; ++j)
      if (v[j] != 0) ts.push_back({monoms[j], v[j]});
    Polynomial f = Polynomial::from_terms(ring, std::move(ts));
    if (!f.is_zero()) forms.push_back(std::move(f));
  }

  // keep a maximal subset independent modulo I_V
  if (!I_V.is_zero_ideal() && !forms.empty()) {
    auto gb = I_V.groebner_truncated(degree, MonomialOrder::degrevlex(),
                                     budget);
    std::map<Monomial, std::size_t> col_of;
    std::vector<std::vector<FpElt>> echelon;
    std::vector<Polynomial> independent;
    std::vector<std::vector<FpElt>> vecs;
    std::size_t width = 0;
    std::vector<Polynomial> nfs;
    for (const auto& f : forms) {
      Polynomial nf = normal_form(f, *gb);
      for (const auto& t : nf.terms())
        if (col_of.emplace(t.mon, width).second) ++width;
      nfs.push_back(std::move(nf));
    }
    for (std::size_t i = 0; i < nfs.size(); ++i) {
      std::vector<FpElt> v(width, 0);
      for (const auto& t : nfs[i].terms()) v[col_of[t.mon]] = t.coeff;
      // reduce against the echelon rows
      for (const auto& r : echelon) {
        std::size_t lead = 0;
        while (lead < width && r[lead] == 0) ++lead;
        if (lead < width && v[lead] != 0) {
          const FpElt c = v[lead];
          for (std::size_t k = lead; k < width; ++k)
            v[k] = F.sub(v[k], F.mul(c, r[k]));
        }
      }
      std::size_t lead = 0;
      while (lead < width && v[lead] == 0) ++lead;
      if (lead == width) continue;
      const FpElt inv = F.inv(v[lead]);
      for (std::size_t k = lead; k < width; ++k) v[k] = F.mul(v[k], inv);
      echelon.push_back(std::move(v));
      independent.push_back(forms[i]);
    }
    forms = std::move(independent);
  }

  if (forms.empty()) throw EmptySystem();
  return forms;
}

Ideal point_ideal(const Ring& ring, const Point& p) {
  const FpField& F = ring->field();
  FpMatrix row(F, 1, ring->nvars());
  for (std::size_t i = 0; i < ring->nvars(); ++i) row.at(0, i) = p[i];
  auto kernel = row.kernel_basis();
  std::vector<Polynomial> gens;
  for (const auto& v : kernel) {
    std::vector<Term> ts;
    for (std::size_t i = 0; i < ring->nvars(); ++i)
      if (v[i] != 0)
        ts.push_back(
            {Monomial::variable(ring->nvars(), i, ring->weights()), v[i]});
    gens.push_back(Polynomial::from_terms(ring, std::move(ts)));
  }
  return Ideal(ring, std::move(gens));
}

Projection project_from_point(const Ideal& I, const Point& p, bool internal,
                              std::uint64_t seed, const Budget& budget) {
  const Ring& ring = I.ring();
  if (internal && !vanishes_at(I, p))
    throw InvalidInput("internal projection center must lie on the variety");
  Rng rng(seed);
  LinearChange C = LinearChange::sending_e0_to(ring, p, rng.fork());
  Ideal moved = apply_change(C, I);
  Ideal eliminated = eliminate(moved, 1, budget);
  Ring target = pn_ring(ring->characteristic(), ring->nvars() - 2);
  std::vector<Polynomial> gens;
  for (const auto& g : eliminated.gens()) {
    std::vector<Term> ts;
    for (const auto& t : g.terms()) {
      std::vector<std::uint16_t> e(target->nvars(), 0);
      for (std::size_t i = 0; i < target->nvars(); ++i)
        e[i] = t.mon.exponent(i + 1);
      ts.push_back({Monomial(std::move(e), target->weights()), t.coeff});
    }
    gens.push_back(Polynomial::from_terms(target, std::move(ts)));
  }
  Ideal image(target, std::move(gens));
  if (internal) image = saturate_irrelevant(image, rng.fork(), budget);
  return {target, std::move(image)};
}

RationalMap fat_point_projection(const Ideal& I_T, const Point& p, int mult,
                                 std::uint64_t seed, const Budget& budget) {
  if (mult < 1 || mult > 3)
    throw InvalidInput("fat point multiplicity must be 1, 2 or 3");
  const Ring& ring = I_T.ring();
  if (!vanishes_at(I_T, p))
    throw InvalidInput("projection center must lie on the variety");
  Ideal Ip = point_ideal(ring, p);
  Ideal power = Ip;
  for (int i = 1; i < mult; ++i) power = ideal_product(power, Ip);
  Ideal fat = ideal_sum(I_T, power);
  Ideal sat = saturate_irrelevant(fat, seed, budget);
  std::vector<Polynomial> forms = degree_slice_basis(sat, 1, budget);
  if (forms.empty()) throw EmptySystem();
  return make_map(I_T, std::move(forms));
}

}  // namespace gmlab
