#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gmlab/grass/grassmannian.hpp"

using namespace gmlab;

TEST_CASE("schubert ring structure") {
  const SchubertClass s1 = SchubertClass::sigma(1);
  const SchubertClass s11 = SchubertClass::sigma(1, 1);
  const SchubertClass s2 = SchubertClass::sigma(2);

  SUBCASE("paper products") {
    // sigma_1^2 . sigma_{1,1} = sigma_{3,1} + sigma_{2,2}
    SchubertClass tau = s1 * s1 * s11;
    CHECK(tau == SchubertClass::sigma(3, 1) + SchubertClass::sigma(2, 2));
    // sigma_1^4 = 3 sigma_{3,1} + 2 sigma_{2,2}
    SchubertClass quartic = s1.pow(4);
    CHECK(quartic == SchubertClass::sigma(3, 1).scaled(3) +
                         SchubertClass::sigma(2, 2).scaled(2));
    // sigma_1^6 = 5 sigma_{3,3}: the degree of G(1,4)
    CHECK(s1.pow(6) == SchubertClass::sigma(3, 3).scaled(5));
    CHECK(s1.pow(6).integral() == 5);
    // sigma_1^7 falls out of the box
    CHECK(s1.pow(7).is_zero());
  }

  SUBCASE("ring axioms on all basis pairs and triples") {
    const auto& parts = SchubertClass::partitions();
    std::vector<SchubertClass> basis;
    for (auto [a, b] : parts) basis.push_back(SchubertClass::sigma(a, b));
    for (const auto& u : basis)
      for (const auto& v : basis) CHECK(u * v == v * u);
    for (const auto& u : basis) {
      CHECK(SchubertClass::one() * u == u);
      for (const auto& v : basis)
        for (const auto& w : basis)
          CHECK((u * v) * w == u * (v * w));
    }
  }

  SUBCASE("duality pairing is a permutation matrix") {
    const auto& parts = SchubertClass::partitions();
    for (std::size_t i = 0; i < parts.size(); ++i) {
      int ones = 0;
      for (std::size_t j = 0; j < parts.size(); ++j) {
        const long long p =
            SchubertClass::sigma(parts[i].first, parts[i].second)
                .pairing(
                    SchubertClass::sigma(parts[j].first, parts[j].second));
        const auto comp = box_complement(parts[i].first, parts[i].second);
        const bool expected =
            parts[j].first == comp.first && parts[j].second == comp.second;
        CHECK(p == (expected ? 1 : 0));
        ones += static_cast<int>(p != 0);
      }
      CHECK(ones == 1);
    }
  }

  SUBCASE("grading") {
    CHECK((s2 + s11).is_homogeneous());
    CHECK_FALSE((s1 + s11).is_homogeneous());
  }
}

TEST_CASE("plucker ideal of G(1,4)") {
  Ideal G = plucker_ideal(31991);

  SUBCASE("five quadrics forming their own reduced basis") {
    CHECK(G.gens().size() == 5);
    for (const auto& g : G.gens()) CHECK(g.degree() == 2);
    auto gb = G.groebner();
    CHECK(gb->size() == 5);
    for (const auto& b : gb->polys()) CHECK(b.degree() == 2);
    CHECK(graded_dimension(G, 2) == 5);
  }

  SUBCASE("projective dimension six, degree five") {
    HilbertData h = invariants(G);
    CHECK(h.proj_dim() == 6);
    CHECK(h.degree() == 5);
  }

  SUBCASE("independent degree check: six generic hyperplane slices") {
    Ideal sliced = generic_linear_section(G, 6, 4242);
    Ideal pts = saturate_irrelevant(sliced, 11);
    CHECK(scheme_length(pts) == 5);
  }

  SUBCASE("spans of random point pairs satisfy the relations") {
    Rng rng(7);
    const FpField& F = G.ring()->field();
    for (int i = 0; i < 10; ++i) {
      std::array<FpElt, 5> u{}, v{};
      for (auto& c : u) c = F.random(rng);
      for (auto& c : v) c = F.random(rng);
      Point p = plucker_of_span(F, u, v);
      bool zero = true;
      for (auto c : p) zero &= (c == 0);
      if (zero) continue;
      CHECK(vanishes_at(G, p));
    }
  }

  SUBCASE("normal form of a pluecker relation is zero, linear forms survive") {
    auto gb = G.groebner();
    CHECK(normal_form(G.gens()[0], *gb).is_zero());
    Rng rng(9);
    Polynomial ell = random_linear_form(G.ring(), rng);
    CHECK(normal_form(ell, *gb) == ell);
  }

  SUBCASE("induced projectivities preserve the ideal") {
    Rng rng(13);
    const FpField& F = G.ring()->field();
    FpMatrix A(F, 5, 5);
    for (std::size_t i = 0; i < 5; ++i)
      for (std::size_t j = 0; j < 5; ++j) A.at(i, j) = F.random(rng);
    REQUIRE(A.det() != 0);
    LinearChange W = induced_plucker_change(G.ring(), A);
    for (const auto& g : G.gens()) CHECK(G.contains(W.apply(g)));
  }
}

TEST_CASE("random point on G(1,4) satisfies all five quadrics") {
  Ideal G = plucker_ideal(31991);
  Point p = random_point_on(G, 31337);
  CHECK(vanishes_at(G, p));
}

TEST_CASE("sigma_{1,1} translate is a G(1,3)") {
  Ring p9 = plucker_ring(31991);
  Ideal S = schubert_sigma11_variety(p9, 2718);
  HilbertData h = invariants(S);
  CHECK(h.proj_dim() == 4);
  CHECK(h.degree() == 2);
}

TEST_CASE("del pezzo fivefold") {
  DelPezzoFivefold Y = del_pezzo_fivefold(31991, 1001, true);
  HilbertData h = invariants(Y.ideal);
  CHECK(h.proj_dim() == 5);
  CHECK(h.degree() == 5);
  CHECK(graded_dimension(Y.ideal, 2) == 5);

  // projective equivalence: a second seed gives identical invariants
  DelPezzoFivefold Y2 = del_pezzo_fivefold(31991, 2002, false);
  HilbertData h2 = invariants(Y2.ideal);
  CHECK(h2.proj_dim() == 5);
  CHECK(h2.degree() == 5);
  CHECK(h2.hilbert_polynomial() == h.hilbert_polynomial());
}

TEST_CASE("tau quadric surface") {
  SurfaceInFivefold s = tau_quadric(31991, 4001, true);

  SUBCASE("invariants: a degree-2 genus-0 surface") {
    HilbertData h = invariants(s.surface_p9);
    CHECK(h.proj_dim() == 2);
    CHECK(h.degree() == 2);
    CHECK(h.sectional_genus() == 0);
    HilbertData h8 = invariants(s.surface_p8);
    CHECK(h8.proj_dim() == 2);
    CHECK(h8.degree() == 2);
  }

  SUBCASE("contained in its fivefold") {
    for (const auto& g : s.fivefold.ideal.gens())
      CHECK(s.surface_p8.contains(g));
  }

  SUBCASE("surface class (1,1)") {
    SurfaceClass c = surface_class(s.surface_p9, 555);
    CHECK(c.a == 1);
    CHECK(c.b == 1);
  }

  SUBCASE("intersection with a tau-quadric: length 1") {
    Ring p9 = s.surface_p9.ring();
    Ideal sigma = schubert_sigma11_variety(p9, 9999);
    Ideal cut = saturate_irrelevant(ideal_sum(s.surface_p9, sigma), 77);
    CHECK(projective_dimension(cut) == 0);
    CHECK(scheme_length(cut) == 1);
  }
}

TEST_CASE("quintic del pezzo surface") {
  SurfaceInFivefold s = quintic_del_pezzo(31991, 5001, true);

  SUBCASE("invariants: degree 5, genus 1, chi 1") {
    HilbertData h = invariants(s.surface_p9);
    CHECK(h.proj_dim() == 2);
    CHECK(h.degree() == 5);
    CHECK(h.sectional_genus() == 1);
    CHECK(h.chi() == 1);
    // P(t) = (5/2) t^2 + (5/2) t + 1 and P(1) = 6 coordinates of its span
    CHECK(h.hilbert_polynomial() ==
          std::vector<Rat>{Rat(1), Rat(5, 2), Rat(5, 2)});
    CHECK(h.hp_eval(1).num == 6);
  }

  SUBCASE("surface class (3,2)") {
    SurfaceClass c = surface_class(s.surface_p9, 666);
    CHECK(c.a == 3);
    CHECK(c.b == 2);
  }

  SUBCASE("quadrics through S modulo the fivefold") {
    const long qS = graded_dimension(s.surface_p8, 2);
    const long qY = graded_dimension(s.fivefold.ideal, 2);
    CHECK(qY == 5);
    CHECK(qS > qY);
  }
}

TEST_CASE("gm fourfold through a surface") {
  SurfaceInFivefold s = tau_quadric(31991, 6001, false);
  GMFourfold X = gm_fourfold(s.fivefold, s.surface_p8, 31);

  SUBCASE("degree ten fourfold") {
    HilbertData h = invariants(X.ideal);
    CHECK(h.proj_dim() == 4);
    CHECK(h.degree() == 10);
  }

  SUBCASE("containment of the surface by construction") {
    for (const auto& g : X.ideal.gens()) CHECK(s.surface_p8.contains(g));
  }

  SUBCASE("random quadric section also has degree ten") {
    GMFourfold X2 = gm_fourfold(s.fivefold, std::nullopt, 32);
    CHECK(X2.family_dim == -1);
    HilbertData h = invariants(X2.ideal);
    CHECK(h.proj_dim() == 4);
    CHECK(h.degree() == 10);
  }
}

TEST_CASE("span restriction") {
  SurfaceInFivefold s = tau_quadric(31991, 7001, false);
  SpanRestriction sp = restrict_to_span(s.surface_p9);
  // a quadric surface spans a P^3
  CHECK(sp.ring->nvars() == 4);
  HilbertData h = invariants(sp.ideal);
  CHECK(h.proj_dim() == 2);
  CHECK(h.degree() == 2);
}
