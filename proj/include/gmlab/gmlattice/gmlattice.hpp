#ifndef GMLAB_GMLATTICE_GMLATTICE_HPP
#define GMLAB_GMLATTICE_GMLATTICE_HPP

#include <array>
#include <string>
#include <vector>

namespace gmlab {

// Integer invariants of a surface S inside a GM fourfold X:
// class [S] = a sigma_{3,1} + b sigma_{2,2}, KH = K_S . sigma_1|_S,
// K2 = K_S^2, chi = chi(O_S).
struct SurfaceInvariants {
  long long a = 0;
  long long b = 0;
  long long KH = 0;
  long long K2 = 0;
  long long chi = 0;
};

// Rank-3 intersection matrix in the basis
// (sigma_{1,1}|_X, sigma_2|_X - sigma_{1,1}|_X, [S]) and the derived
// discriminant data.
struct DiscriminantResult {
  long long self_intersection = 0;       // (S)^2_X
  std::array<std::array<long long, 3>, 3> gram{};
  long long d = 0;                       // |det gram|
  int mod8 = 0;
  bool has_associated_k3_known = false;  // membership in the listed values
};

// (S)^2_X = 3a + 4b + 2 KH + 2 K2 - 12 chi.
long long self_intersection(const SurfaceInvariants& inv);

std::array<std::array<long long, 3>, 3> gram_matrix(long long a, long long b,
                                                    long long s2);

// Evaluates both determinant expressions (cofactor expansion and the closed
// form 4 s2 - 2 (b^2 + (a-b)^2)) and asserts they agree.
DiscriminantResult discriminant(long long a, long long b, long long s2);

DiscriminantResult discriminant(const SurfaceInvariants& inv);

struct Classification {
  bool admissible_mod8 = false;  // d = 0, 2 or 4 (mod 8)
  bool known_k3 = false;         // in the listed initial values
};

// Throws InvalidInput for d <= 0.
Classification classify(long long d);

// The initial discriminants with a known associated K3 surface.
const std::vector<long long>& known_k3_values();

struct CatalogEntry {
  std::string name;
  SurfaceInvariants invariants;
  std::string provenance;
  long long expected_d;
};

// The three bundled surface types: tau-quadric, quintic del Pezzo and the
// degree-9 sectional-genus-2 rational surface.
const std::vector<CatalogEntry>& catalog();

const CatalogEntry& catalog_lookup(const std::string& name);

}  // namespace gmlab

#endif
