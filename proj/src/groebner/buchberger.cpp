#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>
#include <string>

#include "gmlab/groebner/groebner.hpp"

namespace gmlab {

namespace {

double budget_env_factor() {
  static const double factor = [] {
    const char* env = std::getenv("GMLAB_BUDGET");
    if (!env) return 1.0;
    char* end = nullptr;
    double v = std::strtod(env, &end);
    if (end == env || v <= 0) return 1.0;
    return v;
  }();
  return factor;
}

}  // namespace

Budget Budget::standard() { return scaled(1.0); }

Budget Budget::scaled(double factor) {
  const double f = factor * budget_env_factor();
  Budget b;
  b.max_pairs = static_cast<long>(500000 * f);
  b.max_basis = static_cast<long>(20000 * f);
  return b;
}

Polynomial normal_form(const Polynomial& f,
                       const std::vector<Polynomial>& basis) {
  const Ring& ring = f.ring();
  const FpField& F = ring->field();
  Polynomial work = f;
  std::vector<Term> out;
  while (!work.is_zero()) {
    const Monomial& lm = work.lead_monomial();
    const Polynomial* reducer = nullptr;
    for (const auto& g : basis) {
      if (!g.is_zero() && g.lead_monomial().divides(lm)) {
        reducer = &g;
        break;
      }
    }
    if (reducer) {
      const FpElt c =
          F.neg(F.div(work.lead_coeff(), reducer->lead_coeff()));
      work = work.axpy(c, lm.quotient(reducer->lead_monomial()), *reducer);
    } else {
      out.push_back(work.lead());
      work = work.tail();
    }
  }
  return Polynomial::from_terms(ring, std::move(out));
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb) {
  if (!f.ring()->same_base(*gb.ring()))
    throw RingMismatch("normal form across rings");
  Polynomial g = (*f.ring() == *gb.ring()) ? f : f.in_ring(gb.ring());
  Polynomial r = normal_form(g, gb.polys());
  return (*f.ring() == *gb.ring()) ? r : r.in_ring(f.ring());
}

namespace {

struct PairRec {
  long sugar;
  Monomial lcm;
  std::size_t i, j;  // i < j, indices into the basis
};

struct PairCmp {
  const RingData* ring;
  bool operator()(const PairRec& a, const PairRec& b) const {
    if (a.sugar != b.sugar) return a.sugar < b.sugar;
    int c = ring->compare(a.lcm, b.lcm);
    if (c != 0) return c < 0;
    if (a.j != b.j) return a.j < b.j;
    return a.i < b.i;
  }
};

class Engine {
 public:
  Engine(const Ring& ring, const Budget& budget, int max_degree,
         GBAlgorithm algo)
      : ring_(ring),
        budget_(budget),
        max_degree_(max_degree),
        algo_(algo),
        pairs_(PairCmp{ring.get()}) {}

  std::vector<Polynomial> run(std::vector<Polynomial> gens) {
    // deterministic seeding order: sort the (nonzero, monic) generators
    std::vector<Polynomial> seed;
    for (auto& g : gens)
      if (!g.is_zero()) seed.push_back(g.in_ring(ring_).monic());
    std::sort(seed.begin(), seed.end(),
              [&](const Polynomial& a, const Polynomial& b) {
                int c = ring_->compare(a.lead_monomial(), b.lead_monomial());
                if (c != 0) return c < 0;
                return less_canonical(a, b);
              });
    for (auto& g : seed) {
      Polynomial r = normal_form(g, basis_);
      if (!r.is_zero()) add_element(r.monic(), r.degree());
    }
    while (!pairs_.empty()) {
      if (algo_ == GBAlgorithm::linalg) {
        process_degree_batch();
      } else {
        process_single_pair();
      }
    }
    return interreduce(ring_, basis_);
  }

 private:
  static bool less_canonical(const Polynomial& a, const Polynomial& b) {
    return a.to_string() < b.to_string();
  }

  long pair_sugar(std::size_t i, std::size_t j, const Monomial& l) const {
    const long si =
        sugar_[i] + (l.degree() - basis_[i].lead_monomial().degree());
    const long sj =
        sugar_[j] + (l.degree() - basis_[j].lead_monomial().degree());
    return std::max(si, sj);
  }

  Polynomial spoly(std::size_t i, std::size_t j) const {
    const Polynomial& f = basis_[i];
    const Polynomial& g = basis_[j];
    const Monomial l =
        f.lead_monomial().lcm(g.lead_monomial(), ring_->weights());
    const FpField& F = ring_->field();
    Polynomial a = Polynomial::monomial_term(
        ring_, l.quotient(f.lead_monomial()), F.inv(f.lead_coeff()));
    Polynomial s = (a * f).axpy(F.neg(F.inv(g.lead_coeff())),
                                l.quotient(g.lead_monomial()), g);
    return s;
  }

  // Gebauer-Moeller update: prune new and old pairs, then install h.
  void add_element(const Polynomial& h, long sugar_h) {
    if (static_cast<long>(basis_.size()) >= budget_.max_basis)
      throw BudgetExceeded("basis size limit " +
                           std::to_string(budget_.max_basis));
    const std::size_t t = basis_.size();
    const Monomial& lh = h.lead_monomial();

    struct Cand {
      Monomial lcm;
      std::size_t i;
      bool keep = true;
    };
    std::vector<Cand> cand;
    cand.reserve(t);
    for (std::size_t i = 0; i < t; ++i)
      cand.push_back(
          {basis_[i].lead_monomial().lcm(lh, ring_->weights()), i, true});

    // criterion M: drop candidates whose lcm is a proper multiple of another
    for (auto& a : cand) {
      for (const auto& b : cand) {
        if (!b.keep || a.i == b.i) continue;
        if (b.lcm.divides(a.lcm) && b.lcm != a.lcm) {
          a.keep = false;
          break;
        }
      }
    }
    // criterion F: among equal lcms keep the first
    for (std::size_t x = 0; x < cand.size(); ++x) {
      if (!cand[x].keep) continue;
      for (std::size_t y = x + 1; y < cand.size(); ++y) {
        if (cand[y].keep && cand[y].lcm == cand[x].lcm) cand[y].keep = false;
      }
    }
    // criterion B: coprime lead terms reduce to zero
    for (auto& a : cand) {
      if (a.keep &&
          basis_[a.i].lead_monomial().coprime(lh))
        a.keep = false;
    }

    // chain criterion on the old pair set
    for (auto it = pairs_.begin(); it != pairs_.end();) {
      const Monomial& l = it->lcm;
      if (lh.divides(l)) {
        const Monomial li =
            basis_[it->i].lead_monomial().lcm(lh, ring_->weights());
        const Monomial lj =
            basis_[it->j].lead_monomial().lcm(lh, ring_->weights());
        if (li != l && lj != l) {
          it = pairs_.erase(it);
          continue;
        }
      }
      ++it;
    }

    basis_.push_back(h);
    sugar_.push_back(sugar_h);
    for (const auto& a : cand) {
      if (!a.keep) continue;
      PairRec p{pair_sugar(a.i, t, a.lcm), a.lcm, a.i, t};
      if (max_degree_ >= 0 && p.sugar > max_degree_) continue;
      pairs_.insert(std::move(p));
    }
  }

  void charge_pair() {
    if (++pairs_done_ > budget_.max_pairs)
      throw BudgetExceeded("pair limit " + std::to_string(budget_.max_pairs) +
                           ", basis size " + std::to_string(basis_.size()));
  }

  void process_single_pair() {
    PairRec p = *pairs_.begin();
    pairs_.erase(pairs_.begin());
    charge_pair();
    Polynomial s = spoly(p.i, p.j);
    Polynomial r = normal_form(s, basis_);
    if (!r.is_zero()) add_element(r.monic(), p.sugar);
  }

  // Matrix-style fast path: reduce all S-polynomials of the current sugar
  // degree together, reusing reduced rows as additional reducers.
  void process_degree_batch() {
    const long d = pairs_.begin()->sugar;
    std::vector<PairRec> batch;
    while (!pairs_.empty() && pairs_.begin()->sugar == d) {
      batch.push_back(*pairs_.begin());
      pairs_.erase(pairs_.begin());
    }
    std::vector<Polynomial> reduced_rows;
    for (const auto& p : batch) {
      charge_pair();
      Polynomial s = spoly(p.i, p.j);
      Polynomial r = normal_form(s, basis_);
      if (r.is_zero()) continue;
      r = normal_form(r, reduced_rows);
      if (!r.is_zero()) reduced_rows.push_back(r.monic());
    }
    // rows entering the basis in deterministic (lead-ascending) order
    std::sort(reduced_rows.begin(), reduced_rows.end(),
              [&](const Polynomial& a, const Polynomial& b) {
                return ring_->compare(a.lead_monomial(), b.lead_monomial()) <
                       0;
              });
    for (auto& r : reduced_rows) {
      Polynomial rr = normal_form(r, basis_);
      if (!rr.is_zero()) add_element(rr.monic(), d);
    }
  }

  Ring ring_;
  Budget budget_;
  int max_degree_;
  GBAlgorithm algo_;
  std::vector<Polynomial> basis_;
  std::vector<long> sugar_;
  std::set<PairRec, PairCmp> pairs_;
  long pairs_done_ = 0;
};

}  // namespace

std::vector<Polynomial> compute_groebner(const Ring& ring,
                                         std::vector<Polynomial> gens,
                                         const Budget& budget, int max_degree,
                                         GBAlgorithm algo) {
  Engine engine(ring, budget, max_degree, algo);
  return engine.run(std::move(gens));
}

std::vector<Polynomial> interreduce(const Ring& ring,
                                    std::vector<Polynomial> basis) {
  std::vector<Polynomial> work;
  for (auto& g : basis)
    if (!g.is_zero()) work.push_back(g.monic());
  std::sort(work.begin(), work.end(),
            [&](const Polynomial& a, const Polynomial& b) {
              return ring->compare(a.lead_monomial(), b.lead_monomial()) < 0;
            });
  // drop elements whose lead is divisible by an earlier kept lead
  std::vector<Polynomial> kept;
  for (const auto& g : work) {
    bool redundant = false;
    for (const auto& h : kept) {
      if (h.lead_monomial().divides(g.lead_monomial())) {
        redundant = true;
        break;
      }
    }
    if (!redundant) kept.push_back(g);
  }
  // reduce every tail against the rest until stable
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < kept.size(); ++i) {
      std::vector<Polynomial> others;
      others.reserve(kept.size() - 1);
      for (std::size_t j = 0; j < kept.size(); ++j)
        if (j != i) others.push_back(kept[j]);
      Polynomial r = normal_form(kept[i], others);
      if (r.is_zero()) {
        kept.erase(kept.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
        break;
      }
      r = r.monic();
      if (r != kept[i]) {
        kept[i] = r;
        changed = true;
      }
    }
  }
  std::sort(kept.begin(), kept.end(),
            [&](const Polynomial& a, const Polynomial& b) {
              return ring->compare(a.lead_monomial(), b.lead_monomial()) < 0;
            });
  return kept;
}

}  // namespace gmlab
