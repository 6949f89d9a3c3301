#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "gmlab/groebner/points.hpp"

using namespace gmlab;

namespace {

Polynomial random_homog(const Ring& ring, Rng& rng, int deg, int nterms) {
  std::vector<Term> ts;
  for (int t = 0; t < nterms; ++t) {
    std::vector<std::uint16_t> e(ring->nvars(), 0);
    for (int d = 0; d < deg; ++d) e[rng.below(ring->nvars())] += 1;
    ts.push_back({Monomial(e, ring->weights()), ring->field().random(rng)});
  }
  return Polynomial::from_terms(ring, std::move(ts));
}

// Brute-force membership through the degree-d slice spanned by monomial
// multiples of the generators; independent of the division machinery.
bool brute_force_member(const Polynomial& f,
                        const std::vector<Polynomial>& gens) {
  const Ring& ring = f.ring();
  const FpField& F = ring->field();
  const int d = f.degree();
  std::vector<Monomial> monoms;
  for_each_monomial(ring->nvars(), d,
                    [&](const std::vector<std::uint16_t>& e) {
                      monoms.emplace_back(e, ring->weights());
                    });
  std::map<Monomial, std::size_t> col;
  for (std::size_t i = 0; i < monoms.size(); ++i) col[monoms[i]] = i;
  std::vector<std::vector<FpElt>> rows;
  auto coords = [&](const Polynomial& p) {
    std::vector<FpElt> v(monoms.size(), 0);
    for (const auto& t : p.terms()) v[col.at(t.mon)] = t.coeff;
    return v;
  };
  for (const auto& g : gens) {
    if (g.degree() > d) continue;
    for_each_monomial(ring->nvars(), d - g.degree(),
                      [&](const std::vector<std::uint16_t>& e) {
                        Polynomial m = Polynomial::monomial_term(
                            ring, Monomial(e, ring->weights()), 1);
                        rows.push_back(coords(m * g));
                      });
  }
  FpMatrix without(F, rows.size(), monoms.size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < monoms.size(); ++c)
      without.at(r, c) = rows[r][c];
  FpMatrix with(F, rows.size() + 1, monoms.size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < monoms.size(); ++c)
      with.at(r, c) = rows[r][c];
  auto fv = coords(f);
  for (std::size_t c = 0; c < monoms.size(); ++c)
    with.at(rows.size(), c) = fv[c];
  return with.rank() == without.rank();
}

Ideal parse_ideal(const std::string& text) {
  return load_ideal_text(text).ideal;
}

}  // namespace

TEST_CASE("basic reduced bases") {
  SUBCASE("principal ideal is its own monic basis") {
    Ideal I = parse_ideal("ring p=7 vars x,y\nideal\n3*x^2-3*y^2\n");
    auto gb = I.groebner();
    REQUIRE(gb->size() == 1);
    CHECK(gb->polys()[0] ==
          parse_polynomial(I.ring(), "x^2+6*y^2").in_ring(gb->ring()));
  }

  SUBCASE("hand-reduced lex basis") {
    Ideal I = parse_ideal("ring p=31991 vars x,y,z\nideal\nx-y\ny-z\n");
    auto gb = I.groebner(MonomialOrder::lex());
    REQUIRE(gb->size() == 2);
    Ring lexring = gb->ring();
    CHECK(gb->polys()[0] ==
          parse_polynomial(I.ring(), "y-z").in_ring(lexring));
    CHECK(gb->polys()[1] ==
          parse_polynomial(I.ring(), "x-z").in_ring(lexring));
  }

  SUBCASE("reduced basis invariant under generator shuffling") {
    Ring R = make_ring(31991, {"x", "y", "z", "w"});
    Rng rng(17);
    std::vector<Polynomial> gens;
    for (int i = 0; i < 4; ++i) gens.push_back(random_homog(R, rng, 2, 4));
    Ideal I1(R, gens);
    std::reverse(gens.begin(), gens.end());
    std::swap(gens[0], gens[1]);
    Ideal I2(R, gens);
    auto a = I1.groebner();
    auto b = I2.groebner();
    REQUIRE(a->size() == b->size());
    for (std::size_t i = 0; i < a->size(); ++i)
      CHECK(a->polys()[i] == b->polys()[i]);
  }
}

TEST_CASE("normal form contract") {
  Ring R = make_ring(31991, {"x", "y", "z"});
  Rng rng(23);
  std::vector<Polynomial> gens;
  for (int i = 0; i < 3; ++i) gens.push_back(random_homog(R, rng, 2, 3));
  Ideal I(R, gens);
  auto gb = I.groebner();
  for (const auto& g : gens) CHECK(normal_form(g, *gb).is_zero());
  for (int i = 0; i < 20; ++i) {
    Polynomial f = random_homog(R, rng, 4, 5);
    Polynomial nf = normal_form(f, *gb);
    // f - nf lies in the ideal
    CHECK(I.contains(f - nf));
    // no term of nf is divisible by a lead term
    for (const auto& t : nf.terms())
      for (const auto& g : gb->polys())
        CHECK_FALSE(g.lead_monomial().divides(t.mon));
  }
}

TEST_CASE("groebner membership oracle against linear algebra") {
  Rng rng(41);
  int ideals_checked = 0;
  while (ideals_checked < 110) {
    Ring R = make_ring(31991, {"x", "y", "z"});
    std::vector<Polynomial> gens;
    const int ngens = 1 + static_cast<int>(rng.below(3));
    for (int i = 0; i < ngens; ++i) {
      const int d = 1 + static_cast<int>(rng.below(3));
      Polynomial g = random_homog(R, rng, d, 3);
      if (!g.is_zero()) gens.push_back(g);
    }
    if (gens.empty()) continue;
    ++ideals_checked;
    Ideal I(R, gens);

    // guaranteed members: monomial combinations of the generators
    for (int trial = 0; trial < 2; ++trial) {
      Polynomial member = Polynomial::zero(R);
      int target = 4;
      for (const auto& g : gens) {
        if (g.degree() > target) continue;
        std::vector<std::uint16_t> e(R->nvars(), 0);
        for (int d = 0; d < target - g.degree(); ++d)
          e[rng.below(R->nvars())] += 1;
        member = member + Polynomial::monomial_term(
                              R, Monomial(e, R->weights()),
                              R->field().random(rng)) *
                              g;
      }
      if (member.is_zero()) continue;
      CHECK(I.contains(member));
      CHECK(brute_force_member(member, gens));
    }

    // random polynomials: both deciders must agree
    for (int trial = 0; trial < 3; ++trial) {
      const int d = 1 + static_cast<int>(rng.below(6));
      Polynomial f = random_homog(R, rng, d, 4);
      if (f.is_zero()) continue;
      CHECK(I.contains(f) == brute_force_member(f, gens));
    }
  }
}

TEST_CASE("groebner property: every S-polynomial reduces to zero") {
  Rng rng(59);
  for (int round = 0; round < 12; ++round) {
    Ring R = make_ring(31991, {"x", "y", "z", "w"});
    std::vector<Polynomial> gens;
    for (int i = 0; i < 3; ++i)
      gens.push_back(random_homog(R, rng, 1 + rng.below(2), 3));
    Ideal I(R, gens);
    auto gb = I.groebner();
    const auto& polys = gb->polys();
    const FpField& F = R->field();
    for (std::size_t i = 0; i < polys.size(); ++i)
      for (std::size_t j = i + 1; j < polys.size(); ++j) {
        const Monomial l = polys[i].lead_monomial().lcm(
            polys[j].lead_monomial(), gb->ring()->weights());
        Polynomial a = Polynomial::monomial_term(
            gb->ring(), l.quotient(polys[i].lead_monomial()),
            F.inv(polys[i].lead_coeff()));
        Polynomial s = (a * polys[i])
                           .axpy(F.neg(F.inv(polys[j].lead_coeff())),
                                 l.quotient(polys[j].lead_monomial()),
                                 polys[j]);
        CHECK(normal_form(s, polys).is_zero());
      }
  }
}

TEST_CASE("linear algebra path produces the identical reduced basis") {
  Rng rng(71);
  for (int round = 0; round < 8; ++round) {
    Ring R = make_ring(31991, {"x", "y", "z", "w"});
    std::vector<Polynomial> gens;
    for (int i = 0; i < 3; ++i)
      gens.push_back(random_homog(R, rng, 2, 4));
    Ideal I1(R, gens), I2(R, gens);
    auto a = I1.groebner(MonomialOrder::degrevlex(), Budget::standard(),
                         GBAlgorithm::buchberger);
    auto b = I2.groebner(MonomialOrder::degrevlex(), Budget::standard(),
                         GBAlgorithm::linalg);
    REQUIRE(a->size() == b->size());
    for (std::size_t i = 0; i < a->size(); ++i)
      CHECK(a->polys()[i] == b->polys()[i]);
  }
}

TEST_CASE("elimination") {
  SUBCASE("twisted cubic graph -> Hankel quadrics") {
    // graph of (s:t) -> (s^3 : s^2 t : s t^2 : t^3) with weights 3 on the
    // target block; eliminating s,t leaves the twisted cubic
    Ring graph = make_ring(31991, {"s", "t", "x0", "x1", "x2", "x3"},
                           MonomialOrder::block(2), {1, 1, 3, 3, 3, 3});
    auto v = [&](std::size_t i) { return Polynomial::variable(graph, i); };
    std::vector<Polynomial> gens = {
        v(2) - v(0) * v(0) * v(0), v(3) - v(0) * v(0) * v(1),
        v(4) - v(0) * v(1) * v(1), v(5) - v(1) * v(1) * v(1)};
    auto basis = compute_groebner(graph, gens, Budget::standard());
    std::vector<Polynomial> image;
    for (const auto& b : basis) {
      bool touches = false;
      for (const auto& t : b.terms())
        if (t.mon.exponent(0) || t.mon.exponent(1)) touches = true;
      if (!touches) image.push_back(b);
    }
    REQUIRE(image.size() == 3);
    // compare against the classical 2x2 minors of the Hankel matrix
    Ring P3 = pn_ring(31991, 3);
    auto x = [&](std::size_t i) { return Polynomial::variable(P3, i); };
    std::vector<Polynomial> hankel = {x(0) * x(2) - x(1) * x(1),
                                      x(0) * x(3) - x(1) * x(2),
                                      x(1) * x(3) - x(2) * x(2)};
    Ideal H(P3, hankel);
    for (const auto& g : image) {
      std::vector<Term> ts;
      for (const auto& t : g.terms()) {
        std::vector<std::uint16_t> e(4, 0);
        for (std::size_t i = 0; i < 4; ++i) e[i] = t.mon.exponent(i + 2);
        ts.push_back({Monomial(e, P3->weights()), t.coeff});
      }
      CHECK(H.contains(Polynomial::from_terms(P3, ts)));
    }
  }

  SUBCASE("eliminate zero variables returns the ideal") {
    Ideal I = parse_ideal("ring p=7 vars x,y\nideal\nx^2-y^2\n");
    CHECK(eliminate(I, 0).equals(I));
  }

  SUBCASE("plane conic from its parametrization") {
    Ring graph = make_ring(31991, {"s", "t", "x0", "x1", "x2"},
                           MonomialOrder::block(2), {1, 1, 2, 2, 2});
    auto v = [&](std::size_t i) { return Polynomial::variable(graph, i); };
    std::vector<Polynomial> gens = {v(2) - v(0) * v(0), v(3) - v(0) * v(1),
                                    v(4) - v(1) * v(1)};
    auto basis = compute_groebner(graph, gens, Budget::standard());
    int image_count = 0;
    for (const auto& b : basis) {
      bool touches = false;
      for (const auto& t : b.terms())
        if (t.mon.exponent(0) || t.mon.exponent(1)) touches = true;
      if (!touches) {
        ++image_count;
        CHECK(b.degree() == 4);  // weighted degree of a target quadric
      }
    }
    CHECK(image_count == 1);
  }

  SUBCASE("elimination containment invariant") {
    Rng rng(88);
    Ring R = make_ring(31991, {"a", "b", "c", "d"});
    for (int i = 0; i < 5; ++i) {
      std::vector<Polynomial> gens;
      for (int k = 0; k < 3; ++k) gens.push_back(random_homog(R, rng, 2, 3));
      Ideal I(R, gens);
      Ideal E = eliminate(I, 2);
      for (const auto& g : E.gens()) {
        CHECK(I.contains(g));
        for (const auto& t : g.terms()) {
          CHECK(t.mon.exponent(0) == 0);
          CHECK(t.mon.exponent(1) == 0);
        }
      }
    }
  }
}

TEST_CASE("ideal arithmetic") {
  Ideal xy = parse_ideal("ring p=31991 vars x,y\nideal\nx*y\n");
  Ideal x = parse_ideal("ring p=31991 vars x,y\nideal\nx\n");
  Ideal y = parse_ideal("ring p=31991 vars x,y\nideal\ny\n");
  Ideal x2 = parse_ideal("ring p=31991 vars x,y\nideal\nx^2\n");

  SUBCASE("sum and product") {
    Ideal s = ideal_sum(x, y);
    CHECK(s.gens().size() == 2);
    CHECK(s.contains(parse_polynomial(x.ring(), "x")));
    Ideal pr = ideal_product(x2, y);
    for (const auto& g : pr.gens()) CHECK(g.degree() == 3);
  }

  SUBCASE("quotients") {
    Ideal q = ideal_quotient(xy, y);
    CHECK(q.equals(x));
    Ideal q2 = ideal_quotient(x2, x);
    CHECK(q2.equals(x));
    // (I : J) * J is contained in I
    Ideal prod = ideal_product(q, y);
    for (const auto& g : prod.gens()) CHECK(xy.contains(g));
  }

  SUBCASE("intersection") {
    Ideal inter = ideal_intersection(x, y);
    CHECK(inter.equals(xy));
  }

  SUBCASE("saturations") {
    CHECK(saturate(x2, x).is_unit());
    CHECK(saturate(xy, x).equals(y));
    // mismatched rings are rejected
    Ideal other = parse_ideal("ring p=7 vars x,y\nideal\nx\n");
    CHECK_THROWS_AS(ideal_sum(x, other), RingMismatch);
  }

  SUBCASE("saturation idempotence and monotonicity on random ideals") {
    Rng rng(97);
    Ring R = make_ring(31991, {"x", "y", "z"});
    int done = 0;
    while (done < 50) {
      std::vector<Polynomial> gens;
      for (int k = 0; k < 2; ++k)
        gens.push_back(random_homog(R, rng, 1 + rng.below(2), 2));
      Ideal I(R, gens);
      Ideal J(R, {Polynomial::variable(R, rng.below(3))});
      Ideal s1 = saturate(I, J);
      // I is contained in the saturation
      for (const auto& g : I.gens()) CHECK(s1.contains(g));
      CHECK(saturate(s1, J).equals(s1));
      ++done;
    }
  }

  SUBCASE("irrelevant saturation matches the exact route") {
    // (x^2, x y) = (x) cap (x^2, y): saturating the irrelevant part leaves (x)
    Ideal I = parse_ideal("ring p=31991 vars x,y\nideal\nx^2\nx*y\n");
    Ideal expected = parse_ideal("ring p=31991 vars x,y\nideal\nx\n");
    CHECK(saturate_irrelevant(I, 5).equals(expected));
    Ideal vars(I.ring(), {Polynomial::variable(I.ring(), 0),
                          Polynomial::variable(I.ring(), 1)});
    CHECK(saturate(I, vars).equals(expected));
    // fast member-based saturation agrees as well
    CHECK(saturate_fast(I, vars, 9).equals(expected));
  }
}

TEST_CASE("graded dimension") {
  Ideal G = parse_ideal(
      "ring p=31991 vars x,y,z\nideal\n");
  CHECK(graded_dimension(G, 3) == 0);  // zero ideal
  Ideal I = parse_ideal("ring p=31991 vars x,y,z\nideal\nx^2\nx*y\n");
  // degree 2: x^2, xy
  CHECK(graded_dimension(I, 2) == 2);
  // degree 3: x^3, x^2 y, x^2 z, x y^2, x y z: 5 of 10
  CHECK(graded_dimension(I, 3) == 5);
  CHECK(monomial_count(I.ring(), 3) == 10);
  // slice basis elements lie in the ideal and are independent
  auto slice = degree_slice_basis(I, 3);
  CHECK(slice.size() == 5);
  for (const auto& f : slice) {
    CHECK(f.degree() == 3);
    CHECK(I.contains(f));
  }
}

TEST_CASE("dimension bookkeeping") {
  Ideal I = parse_ideal("ring p=31991 vars x,y,z,w\nideal\nx*w-y*z\n");
  CHECK(quotient_dimension(I) == 3);
  CHECK(projective_dimension(I) == 2);
  CHECK_FALSE(is_empty_projective(I));
  Ideal unit = Ideal::unit(I.ring());
  CHECK(is_empty_projective(unit));
  CHECK(quotient_dimension(unit) == -1);
}

TEST_CASE("budget limits raise structured errors") {
  Rng rng(123);
  Ring R = make_ring(31991, {"x", "y", "z", "w"});
  std::vector<Polynomial> gens;
  for (int i = 0; i < 4; ++i) gens.push_back(random_homog(R, rng, 3, 6));
  Ideal I(R, gens);
  Budget tiny;
  tiny.max_pairs = 2;
  tiny.max_basis = 100;
  CHECK_THROWS_AS(I.groebner(MonomialOrder::degrevlex(), tiny),
                  BudgetExceeded);
}

TEST_CASE("singular locus") {
  SUBCASE("smooth quadric surface in P^3") {
    Ideal I = parse_ideal("ring p=31991 vars x,y,z,w\nideal\nx*w-y*z\n");
    auto s = singular_locus(I, 1, false, 3);
    CHECK(s.exact);
    CHECK(s.locus.is_unit());
  }

  SUBCASE("nodal plane cubic has exactly the node") {
    Ideal I = parse_ideal("ring p=31991 vars x,y,z\nideal\ny^2*z-x^3-x^2*z\n");
    auto s = singular_locus(I, 1, false, 3);
    CHECK(s.exact);
    CHECK_FALSE(s.locus.is_unit());
    CHECK(projective_dimension(s.locus) == 0);
    // the node is (0:0:1)
    Point node{0, 0, 1};
    CHECK(vanishes_at(s.locus, node));
  }
}

TEST_CASE("random points") {
  SUBCASE("point on a plane conic satisfies the quadric") {
    Ideal I = parse_ideal(
        "ring p=31991 vars x,y,z\nideal\nx^2+3*y^2+31989*z^2\n");
    Point p = random_point_on(I, 2024);
    CHECK(vanishes_at(I, p));
  }

  SUBCASE("empty variety raises NoRationalPoint") {
    Ideal I = Ideal::unit(pn_ring(31991, 2));
    CHECK_THROWS_AS(random_point_on(I, 7), NoRationalPoint);
  }

  SUBCASE("determinism for a fixed seed") {
    Ideal I = parse_ideal("ring p=31991 vars x,y,z\nideal\nx^2-y*z\n");
    Point a = random_point_on(I, 55);
    Point b = random_point_on(I, 55);
    CHECK(a == b);
  }
}
