#ifndef GMLAB_COREALG_LINALG_HPP
#define GMLAB_COREALG_LINALG_HPP

#include <optional>
#include <vector>

#include "gmlab/corealg/fp.hpp"

namespace gmlab {

// Dense row-major matrix over F_p. Sizes here are small (tens to a few
// hundred rows), so plain Gaussian elimination with first-nonzero pivoting
// is enough and keeps results deterministic.
class FpMatrix {
 public:
  FpMatrix(const FpField& field, std::size_t rows, std::size_t cols)
      : field_(field), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const FpField& field() const { return field_; }

  FpElt& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  FpElt at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  FpMatrix multiply(const FpMatrix& o) const;
  std::vector<FpElt> apply(const std::vector<FpElt>& v) const;

  // Reduced row echelon form in place; returns pivot column per pivot row.
  std::vector<std::size_t> rref();

  std::size_t rank() const;
  FpElt det() const;

  // Throws InvalidInput when singular.
  FpMatrix inverse() const;

  // Basis of the right kernel {v : A v = 0}, deterministic echelon basis.
  std::vector<std::vector<FpElt>> kernel_basis() const;

  static FpMatrix identity(const FpField& field, std::size_t n);

 private:
  FpField field_;
  std::size_t rows_, cols_;
  std::vector<FpElt> a_;
};

}  // namespace gmlab

#endif
