#ifndef GMLAB_GRASS_SCHUBERT_HPP
#define GMLAB_GRASS_SCHUBERT_HPP

#include <array>
#include <cstddef>
#include <string>
#include <utility>

namespace gmlab {

// Integer class in the Schubert basis of H*(G(1,4)): the ten partitions
// (l1 >= l2) with l1 <= 3 fitting in the 2x3 box, graded by |lambda|.
class SchubertClass {
 public:
  static constexpr std::size_t kBasisSize = 10;

  // basis order: {}, (1), (2), (1,1), (3), (2,1), (3,1), (2,2), (3,2), (3,3)
  static const std::array<std::pair<int, int>, kBasisSize>& partitions();
  static std::size_t index_of(int l1, int l2);

  SchubertClass() { c_.fill(0); }

  // sigma_{l1, l2}
  static SchubertClass sigma(int l1, int l2 = 0);
  static SchubertClass one() { return sigma(0, 0); }

  long long coeff(int l1, int l2) const { return c_[index_of(l1, l2)]; }
  long long& raw(std::size_t i) { return c_[i]; }
  long long raw(std::size_t i) const { return c_[i]; }

  bool is_zero() const;
  // Homogeneous iff all nonzero coefficients share one codimension.
  bool is_homogeneous() const;

  SchubertClass operator+(const SchubertClass& o) const;
  SchubertClass operator-(const SchubertClass& o) const;
  SchubertClass operator*(const SchubertClass& o) const;
  SchubertClass scaled(long long k) const;
  SchubertClass pow(int e) const;

  bool operator==(const SchubertClass& o) const { return c_ == o.c_; }
  bool operator!=(const SchubertClass& o) const { return c_ != o.c_; }

  // Integral over G(1,4): the coefficient of sigma_{3,3}.
  long long integral() const { return c_[kBasisSize - 1]; }

  // Poincare pairing <u, v> = integral of u * v.
  long long pairing(const SchubertClass& o) const {
    return (*this * o).integral();
  }

  std::string to_string() const;

 private:
  std::array<long long, kBasisSize> c_{};
};

// Box complement: the unique mu with <sigma_lambda, sigma_mu> = 1.
std::pair<int, int> box_complement(int l1, int l2);

// Class of a surface in G(1,4): [S] = a sigma_{3,1} + b sigma_{2,2}.
struct SurfaceClass {
  long long a = 0;
  long long b = 0;
  SchubertClass to_schubert() const {
    return SchubertClass::sigma(3, 1).scaled(a) +
           SchubertClass::sigma(2, 2).scaled(b);
  }
  bool operator==(const SurfaceClass& o) const {
    return a == o.a && b == o.b;
  }
};

}  // namespace gmlab

#endif
