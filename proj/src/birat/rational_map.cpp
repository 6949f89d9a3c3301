#include "gmlab/birat/birat.hpp"

namespace gmlab {

RationalMap make_map(Ideal source, std::vector<Polynomial> forms) {
  if (forms.empty()) throw EmptySystem();
  const Ring& ring = source.ring();
  const int d = forms.front().degree();
  for (const auto& f : forms) {
    require_same_ring(ring, f.ring(), "rational map forms");
    if (f.is_zero() || !f.is_homogeneous() || f.degree() != d)
      throw InvalidInput("map forms must be nonzero homogeneous of one degree");
  }
  Ring target = pn_ring(ring->characteristic(), forms.size() - 1);
  return RationalMap{std::move(source), std::move(forms), std::move(target)};
}

Point apply_map(const RationalMap& m, const Point& p) {
  Point q;
  q.reserve(m.forms.size());
  bool nonzero = false;
  for (const auto& f : m.forms) {
    q.push_back(f.evaluate(p));
    if (q.back() != 0) nonzero = true;
  }
  if (!nonzero) throw BasePoint();
  return normalize_point(m.target, std::move(q));
}

namespace {

// Graph ring [source vars | y#0..y#m] with deg y#i = deg of the forms and a
// block order eliminating the source block.
Ring graph_ring(const Ring& source, std::size_t m_plus_1, int d) {
  std::vector<std::string> names = source->var_names();
  std::vector<int> weights = source->weights();
  for (std::size_t i = 0; i < m_plus_1; ++i) {
    names.push_back("y#" + std::to_string(i));
    weights.push_back(d);
  }
  return make_ring(source->characteristic(), std::move(names),
                   MonomialOrder::block(source->nvars()), std::move(weights));
}

Polynomial lift_to_graph(const Ring& graph, const Polynomial& f,
                         std::size_t nsrc) {
  std::vector<Term> ts;
  ts.reserve(f.size());
  for (const auto& t : f.terms()) {
    std::vector<std::uint16_t> e(graph->nvars(), 0);
    for (std::size_t i = 0; i < nsrc; ++i) e[i] = t.mon.exponent(i);
    ts.push_back({Monomial(std::move(e), graph->weights()), t.coeff});
  }
  return Polynomial::from_terms(graph, std::move(ts));
}

Polynomial drop_to_target(const Ring& target, const Polynomial& f,
                          std::size_t nsrc) {
  std::vector<Term> ts;
  ts.reserve(f.size());
  for (const auto& t : f.terms()) {
    std::vector<std::uint16_t> e(target->nvars(), 0);
    for (std::size_t i = 0; i < target->nvars(); ++i)
      e[i] = t.mon.exponent(nsrc + i);
    ts.push_back({Monomial(std::move(e), target->weights()), t.coeff});
  }
  return Polynomial::from_terms(target, std::move(ts));
}

bool touches_source(const Polynomial& f, std::size_t nsrc) {
  for (const auto& t : f.terms())
    for (std::size_t i = 0; i < nsrc; ++i)
      if (t.mon.exponent(i) != 0) return true;
  return false;
}

}  // namespace

Ideal image_ideal(const RationalMap& m, const Budget& budget) {
  const Ring& src = m.source.ring();
  const std::size_t nsrc = src->nvars();
  Ring graph = graph_ring(src, m.forms.size(), m.form_degree());
  std::vector<Polynomial> gens;
  for (const auto& g : m.source.gens())
    gens.push_back(lift_to_graph(graph, g, nsrc));
  for (std::size_t i = 0; i < m.forms.size(); ++i) {
    Polynomial yi = Polynomial::variable(graph, nsrc + i);
    gens.push_back(yi - lift_to_graph(graph, m.forms[i], nsrc));
  }
  auto basis = compute_groebner(graph, std::move(gens), budget);
  std::vector<Polynomial> image;
  for (const auto& b : basis)
    if (!touches_source(b, nsrc))
      image.push_back(drop_to_target(m.target, b, nsrc));
  return Ideal(m.target, std::move(image));
}

Ideal fiber_ideal(const RationalMap& m, const Point& q, std::uint64_t seed,
                  const Budget& budget) {
  const Ring& ring = m.source.ring();
  if (q.size() != m.forms.size())
    throw RingMismatch("fiber point has wrong coordinate count");
  std::vector<Polynomial> gens = m.source.gens();
  for (std::size_t i = 0; i < m.forms.size(); ++i)
    for (std::size_t j = i + 1; j < m.forms.size(); ++j) {
      Polynomial minor =
          m.forms[i].scaled(q[j]) - m.forms[j].scaled(q[i]);
      if (!minor.is_zero()) gens.push_back(std::move(minor));
    }
  Ideal cut(ring, std::move(gens));
  Ideal base(ring, m.forms);
  return saturate_fast(cut, base, seed, budget);
}

long map_degree(const RationalMap& m, std::uint64_t seed,
                const Budget& budget) {
  Rng rng(seed);
  std::array<long, 3> votes{};
  for (auto& vote : votes) {
    for (int attempt = 0;; ++attempt) {
      if (attempt >= 5)
        throw NonGenericPoint("map_degree: no usable source point");
      Point p = random_point_on(m.source, rng.fork(), budget);
      Point q;
      try {
        q = apply_map(m, p);
      } catch (const BasePoint&) {
        continue;
      }
      Ideal fib = fiber_ideal(m, q, rng.fork(), budget);
      Ideal sat = saturate_irrelevant(fib, rng.fork(), budget);
      const int dim = projective_dimension(sat, budget);
      if (dim > 0) throw PositiveDimensionalFiber();
      if (dim < 0) continue;  // fiber vanished: degenerate point
      vote = scheme_length(sat, budget);
      break;
    }
  }
  if (votes[0] == votes[1] || votes[0] == votes[2]) return votes[0];
  if (votes[1] == votes[2]) return votes[1];
  throw NonGenericPoint("map_degree votes disagree");
}

}  // namespace gmlab
