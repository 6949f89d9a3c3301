#include "gmlab/corealg/linalg.hpp"

#include "gmlab/corealg/errors.hpp"

namespace gmlab {

FpMatrix FpMatrix::multiply(const FpMatrix& o) const {
  if (cols_ != o.rows_) throw InvalidInput("matrix shape mismatch");
  FpMatrix r(field_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const FpElt aik = at(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        r.at(i, j) = field_.add(r.at(i, j), field_.mul(aik, o.at(k, j)));
      }
    }
  }
  return r;
}

std::vector<FpElt> FpMatrix::apply(const std::vector<FpElt>& v) const {
  if (v.size() != cols_) throw InvalidInput("matrix/vector size mismatch");
  std::vector<FpElt> r(rows_, 0);
  for (std::size_t i = 0; i < rows_; ++i) {
    FpElt acc = 0;
    for (std::size_t j = 0; j < cols_; ++j)
      acc = field_.add(acc, field_.mul(at(i, j), v[j]));
    r[i] = acc;
  }
  return r;
}

std::vector<std::size_t> FpMatrix::rref() {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
    std::size_t pivot = row;
    while (pivot < rows_ && at(pivot, col) == 0) ++pivot;
    if (pivot == rows_) continue;
    if (pivot != row)
      for (std::size_t j = 0; j < cols_; ++j)
        std::swap(at(pivot, j), at(row, j));
    const FpElt inv = field_.inv(at(row, col));
    for (std::size_t j = 0; j < cols_; ++j)
      at(row, j) = field_.mul(at(row, j), inv);
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == row) continue;
      const FpElt f = at(i, col);
      if (f == 0) continue;
      for (std::size_t j = 0; j < cols_; ++j)
        at(i, j) = field_.sub(at(i, j), field_.mul(f, at(row, j)));
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::size_t FpMatrix::rank() const {
  FpMatrix copy = *this;
  return copy.rref().size();
}

FpElt FpMatrix::det() const {
  if (rows_ != cols_) throw InvalidInput("determinant of non-square matrix");
  FpMatrix m = *this;
  FpElt d = 1;
  for (std::size_t col = 0; col < cols_; ++col) {
    std::size_t pivot = col;
    while (pivot < rows_ && m.at(pivot, col) == 0) ++pivot;
    if (pivot == rows_) return 0;
    if (pivot != col) {
      for (std::size_t j = 0; j < cols_; ++j)
        std::swap(m.at(pivot, j), m.at(col, j));
      d = field_.neg(d);
    }
    d = field_.mul(d, m.at(col, col));
    const FpElt inv = field_.inv(m.at(col, col));
    for (std::size_t i = col + 1; i < rows_; ++i) {
      const FpElt f = field_.mul(m.at(i, col), inv);
      if (f == 0) continue;
      for (std::size_t j = col; j < cols_; ++j)
        m.at(i, j) = field_.sub(m.at(i, j), field_.mul(f, m.at(col, j)));
    }
  }
  return d;
}

FpMatrix FpMatrix::inverse() const {
  if (rows_ != cols_) throw InvalidInput("inverse of non-square matrix");
  FpMatrix aug(field_, rows_, 2 * cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
    aug.at(i, cols_ + i) = 1;
  }
  auto pivots = aug.rref();
  if (pivots.size() != rows_ || pivots.back() >= cols_)
    throw InvalidInput("matrix is singular");
  FpMatrix inv(field_, rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) inv.at(i, j) = aug.at(i, cols_ + j);
  return inv;
}

std::vector<std::vector<FpElt>> FpMatrix::kernel_basis() const {
  FpMatrix m = *this;
  const auto pivots = m.rref();
  std::vector<bool> is_pivot(cols_, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<FpElt>> basis;
  for (std::size_t free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    std::vector<FpElt> v(cols_, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r)
      v[pivots[r]] = field_.neg(m.at(r, free));
    basis.push_back(std::move(v));
  }
  return basis;
}

FpMatrix FpMatrix::identity(const FpField& field, std::size_t n) {
  FpMatrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

}  // namespace gmlab
