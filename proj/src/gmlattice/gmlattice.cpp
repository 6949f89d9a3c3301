#include "gmlab/gmlattice/gmlattice.hpp"

#include "gmlab/corealg/errors.hpp"

namespace gmlab {

long long self_intersection(const SurfaceInvariants& inv) {
  return 3 * inv.a + 4 * inv.b + 2 * inv.KH + 2 * inv.K2 - 12 * inv.chi;
}

std::array<std::array<long long, 3>, 3> gram_matrix(long long a, long long b,
                                                    long long s2) {
  return {{{2, 0, b}, {0, 2, a - b}, {b, a - b, s2}}};
}

namespace {

long long det3(const std::array<std::array<long long, 3>, 3>& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

}  // namespace

DiscriminantResult discriminant(long long a, long long b, long long s2) {
  DiscriminantResult r;
  r.self_intersection = s2;
  r.gram = gram_matrix(a, b, s2);
  const long long det = det3(r.gram);
  const long long closed = 4 * s2 - 2 * (b * b + (a - b) * (a - b));
  if (det != closed)
    throw Error("gram determinant disagrees with its closed form");
  r.d = det < 0 ? -det : det;
  r.mod8 = static_cast<int>(r.d % 8);
  for (long long v : known_k3_values())
    if (v == r.d) r.has_associated_k3_known = true;
  return r;
}

DiscriminantResult discriminant(const SurfaceInvariants& inv) {
  return discriminant(inv.a, inv.b, self_intersection(inv));
}

Classification classify(long long d) {
  if (d <= 0) throw InvalidInput("discriminant must be positive");
  Classification c;
  const int m = static_cast<int>(d % 8);
  c.admissible_mod8 = (m == 0 || m == 2 || m == 4);
  for (long long v : known_k3_values())
    if (v == d) c.known_k3 = true;
  return c;
}

const std::vector<long long>& known_k3_values() {
  static const std::vector<long long> values = {2, 4, 10, 20, 26, 34};
  return values;
}

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = {
      {"tau-quadric",
       {1, 1, -4, 8, 1},
       "smooth quadric surface, a linear section of G(1,3) in G(1,4); "
       "K = -2H on P^1 x P^1",
       10},
      {"quintic-del-pezzo",
       {3, 2, -5, 5, 1},
       "two-dimensional linear section of G(1,4); del Pezzo of degree 5 "
       "with K = -H",
       10},
      {"degree9-genus2",
       {6, 3, -7, 5, 1},
       "plane blown up in 3 simple points and 1 double point, embedded by "
       "quartics: H = 4L - E1 - E2 - E3 - 2E4, K = -3L + sum Ei",
       20},
  };
  return entries;
}

const CatalogEntry& catalog_lookup(const std::string& name) {
  for (const auto& e : catalog())
    if (e.name == name) return e;
  throw InvalidInput("unknown catalog entry: " + name);
}

}  // namespace gmlab
