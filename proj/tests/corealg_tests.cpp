#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "gmlab/corealg/io.hpp"
#include "gmlab/corealg/linear_change.hpp"
#include "gmlab/corealg/polynomial.hpp"

using namespace gmlab;

namespace {

Polynomial random_poly(const Ring& ring, Rng& rng, int max_deg, int nterms) {
  std::vector<Term> ts;
  for (int t = 0; t < nterms; ++t) {
    std::vector<std::uint16_t> e(ring->nvars(), 0);
    int deg = static_cast<int>(rng.below(max_deg + 1));
    for (int d = 0; d < deg; ++d)
      e[rng.below(ring->nvars())] += 1;
    ts.push_back({Monomial(e, ring->weights()),
                  ring->field().random(rng)});
  }
  return Polynomial::from_terms(ring, std::move(ts));
}

// textbook comparator used as an independent oracle
int oracle_degrevlex(const Monomial& a, const Monomial& b) {
  int da = 0, db = 0;
  for (std::size_t i = 0; i < a.nvars(); ++i) {
    da += a.exponent(i);
    db += b.exponent(i);
  }
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = a.nvars(); i-- > 0;) {
    if (a.exponent(i) != b.exponent(i))
      return a.exponent(i) > b.exponent(i) ? -1 : 1;
  }
  return 0;
}

}  // namespace

TEST_CASE("prime field arithmetic") {
  FpField F7(7);
  CHECK(F7.add(3, 5) == 1);
  CHECK(F7.mul(3, 5) == 1);
  CHECK(F7.neg(0) == 0);
  CHECK(F7.neg(2) == 5);

  FpField F(31991);
  CHECK(F.inv(2) == 15996);
  // extended Euclid oracle: the inverse really multiplies to 1
  CHECK(F.mul(2, F.inv(2)) == 1);
  for (FpElt x : {3u, 12345u, 31990u}) CHECK(F.mul(x, F.inv(x)) == 1);
  CHECK(F.inv(F.inv(12345)) == 12345);

  CHECK_THROWS_AS(F.inv(0), DivisionByZero);
  CHECK_THROWS_AS(FpField(31989), InvalidModulus);  // 3 * 10663
  CHECK_THROWS_AS(FpField(1), InvalidModulus);
  CHECK(FpField::is_prime(10007));

  CHECK(F.pow(5, 0) == 1);
  CHECK(F.pow(5, 3) == F.mul(5, F.mul(5, 5)));
  CHECK(F.pow(5, static_cast<long long>(F.modulus()) - 1) == 1);
}

TEST_CASE("monomial orders") {
  Ring R = make_ring(7, {"x", "y", "z"});
  auto mon = [&](std::uint16_t a, std::uint16_t b, std::uint16_t c) {
    return Monomial({a, b, c}, R->weights());
  };
  // x*z < y^2 under degrevlex
  CHECK(compare(MonomialOrder::degrevlex(), mon(1, 0, 1), mon(0, 2, 0),
                R->weights()) < 0);
  // reflexivity
  CHECK(compare(MonomialOrder::degrevlex(), mon(2, 1, 0), mon(2, 1, 0),
                R->weights()) == 0);

  // all degree-2 monomials in 3 variables against the textbook oracle
  std::vector<Monomial> deg2;
  for (std::uint16_t a = 0; a <= 2; ++a)
    for (std::uint16_t b = 0; a + b <= 2; ++b)
      deg2.push_back(mon(a, b, static_cast<std::uint16_t>(2 - a - b)));
  for (const auto& m1 : deg2)
    for (const auto& m2 : deg2)
      CHECK(compare(MonomialOrder::degrevlex(), m1, m2, R->weights()) ==
            oracle_degrevlex(m1, m2));

  // lex ignores degree: x > y^3
  Ring R2 = make_ring(7, {"x", "y"});
  CHECK(compare(MonomialOrder::lex(), Monomial({1, 0}, R2->weights()),
                Monomial({0, 3}, R2->weights()), R2->weights()) > 0);

  // block order elimination property: any monomial with block-1 content
  // beats any monomial without it
  Ring R3 = make_ring(7, {"a", "b", "c", "d"});
  Monomial with_a({1, 0, 0, 0}, R3->weights());
  Monomial without({0, 3, 3, 3}, R3->weights());
  CHECK(compare(MonomialOrder::block(1), with_a, without, R3->weights()) > 0);

  CHECK_THROWS_AS(compare(MonomialOrder::lex(), Monomial({1, 0}, {1, 1}),
                          Monomial({1, 0, 0}, {1, 1, 1}), {1, 1}),
                  RingMismatch);
}

TEST_CASE("monomial order axioms on random triples") {
  Ring R = make_ring(31991, {"x", "y", "z", "w"});
  Rng rng(7);
  auto random_mon = [&]() {
    std::vector<std::uint16_t> e(4);
    for (auto& v : e) v = static_cast<std::uint16_t>(rng.below(4));
    return Monomial(e, R->weights());
  };
  for (const auto order : {MonomialOrder::degrevlex(), MonomialOrder::lex(),
                           MonomialOrder::block(2)}) {
    for (int i = 0; i < 300; ++i) {
      Monomial m1 = random_mon(), m2 = random_mon(), n = random_mon();
      const int c = compare(order, m1, m2, R->weights());
      // totality + antisymmetry
      CHECK(compare(order, m2, m1, R->weights()) == -c);
      // multiplicativity: m1 < m2 => m1*n < m2*n
      if (c < 0)
        CHECK(compare(order, m1 * n, m2 * n, R->weights()) < 0);
      // 1 is smallest
      if (!m1.is_one())
        CHECK(compare(order, m1, Monomial::one(4), R->weights()) > 0);
    }
  }
}

TEST_CASE("polynomial ring axioms on random triples") {
  Ring R = make_ring(31991, {"x", "y", "z"});
  Rng rng(11);
  for (int i = 0; i < 1000; ++i) {
    Polynomial f = random_poly(R, rng, 3, 4);
    Polynomial g = random_poly(R, rng, 3, 4);
    Polynomial h = random_poly(R, rng, 3, 4);
    CHECK((f + g) + h == f + (g + h));
    CHECK(f + g == g + f);
    CHECK(f * g == g * f);
    CHECK(f * (g + h) == f * g + f * h);
    if (i < 60) CHECK((f * g) * h == f * (g * h));
    // canonical form stores no zero coefficients
    for (const auto& t : (f - f).terms()) CHECK(t.coeff != 0);
    CHECK((f - f).is_zero());
  }
}

TEST_CASE("polynomial helpers") {
  Ring R = make_ring(7, {"x", "y"});
  Polynomial f = parse_polynomial(R, "x^2+3*x*y+y^2");
  CHECK(f.degree() == 2);
  CHECK(f.is_homogeneous());
  CHECK(f.derivative(0) == parse_polynomial(R, "2*x+3*y"));
  Point p{2, 3};
  // 4 + 18 + 9 = 31 = 3 mod 7
  CHECK(f.evaluate(p) == 3);
  Polynomial g = parse_polynomial(R, "x^2+x");
  CHECK_FALSE(g.is_homogeneous());
  CHECK(g.homogeneous_component(1) == parse_polynomial(R, "x"));
}

TEST_CASE("linear change of coordinates") {
  Ring R = make_ring(31991, {"x0", "x1", "x2"});
  Rng rng(5);

  SUBCASE("round trip and determinant") {
    std::set<std::string> reprs;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      LinearChange C = LinearChange::random(R, seed);
      CHECK(C.matrix().det() != 0);
      std::string repr;
      for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
          repr += std::to_string(C.matrix().at(i, j)) + ",";
      reprs.insert(repr);
    }
    CHECK(reprs.size() >= 99);
    for (int i = 0; i < 20; ++i) {
      LinearChange C = LinearChange::random(R, 1000 + i);
      Polynomial f = random_poly(R, rng, 3, 5);
      CHECK(C.apply_inverse(C.apply(f)) == f);
      CHECK(C.apply(f).degree() == f.degree());
    }
  }

  SUBCASE("determinant nonzero for 1000 seeds") {
    for (std::uint64_t seed = 0; seed < 1000; ++seed)
      CHECK(LinearChange::random(R, seed).matrix().det() != 0);
  }

  SUBCASE("point to e0") {
    Point p{5, 11, 31990};
    LinearChange C = LinearChange::sending_e0_to(R, p, 77);
    Point e0{1, 0, 0};
    Point img = C.push_point(e0);
    // img is proportional to p
    const FpField& F = R->field();
    FpElt ratio = F.div(img[0], p[0]);
    for (int i = 0; i < 3; ++i) CHECK(img[i] == F.mul(ratio, p[i]));
  }

  SUBCASE("hyperplane to last coordinate") {
    Polynomial h = parse_polynomial(R, "x0+2*x1+3*x2");
    LinearChange C = LinearChange::hyperplane_to_last(R, h, 13);
    Polynomial moved = C.apply(h);
    CHECK(moved == Polynomial::variable(R, 2));
  }
}

TEST_CASE("ideal file parsing") {
  SUBCASE("simple file") {
    auto parsed = parse_ideal_text("ring p=7 vars x,y\nideal\n x^2-y\n");
    CHECK(parsed.ring->characteristic() == 7);
    CHECK(parsed.ring->nvars() == 2);
    REQUIRE(parsed.generators.size() == 1);
    CHECK(parsed.generators[0].degree() == 2);
    CHECK(parsed.generators[0] ==
          parse_polynomial(parsed.ring, "x^2+6*y"));
  }

  SUBCASE("comments, blanks, signs, optional pieces") {
    auto parsed = parse_ideal_text(
        "# leading comment\n"
        "ring p=11 vars x,y,z\n"
        "ideal\n"
        "\n"
        "-x^2+3*x*y-y^2  # trailing comment\n"
        "x*y^1*z\n"
        "10\n");
    CHECK(parsed.generators.size() == 3);
    CHECK(parsed.generators[0] ==
          parse_polynomial(parsed.ring, "10*x^2+3*x*y+10*y^2"));
    CHECK(parsed.generators[2].degree() == 0);
  }

  SUBCASE("empty generator list accepted") {
    auto parsed = parse_ideal_text("ring p=7 vars x\nideal\n");
    CHECK(parsed.generators.empty());
  }

  SUBCASE("unknown variable is a parse error with position") {
    try {
      parse_ideal_text("ring p=7 vars x\nideal\nx^2-w\n");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.line == 3);
      CHECK(e.col > 1);
    }
  }

  SUBCASE("nonprime characteristic") {
    CHECK_THROWS_AS(parse_ideal_text("ring p=9 vars x\nideal\n"),
                    InvalidModulus);
  }

  SUBCASE("print/parse round trip is the identity on canonical form") {
    Ring R = make_ring(31991, {"x0", "x1", "x2"});
    Rng rng(3);
    std::vector<Polynomial> gens;
    for (int i = 0; i < 5; ++i) gens.push_back(random_poly(R, rng, 3, 6));
    std::string text = print_ideal_text(R, gens);
    auto parsed = parse_ideal_text(text);
    CHECK(print_ideal_text(parsed.ring, parsed.generators) == text);
  }
}
