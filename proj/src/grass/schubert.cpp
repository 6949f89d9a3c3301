#include "gmlab/grass/schubert.hpp"

#include "gmlab/corealg/errors.hpp"

namespace gmlab {

const std::array<std::pair<int, int>, SchubertClass::kBasisSize>&
SchubertClass::partitions() {
  static const std::array<std::pair<int, int>, kBasisSize> table = {
      {{0, 0},
       {1, 0},
       {2, 0},
       {1, 1},
       {3, 0},
       {2, 1},
       {3, 1},
       {2, 2},
       {3, 2},
       {3, 3}}};
  return table;
}

std::size_t SchubertClass::index_of(int l1, int l2) {
  const auto& parts = partitions();
  for (std::size_t i = 0; i < kBasisSize; ++i)
    if (parts[i].first == l1 && parts[i].second == l2) return i;
  throw InvalidInput("not a partition in the 2x3 box: (" +
                     std::to_string(l1) + "," + std::to_string(l2) + ")");
}

SchubertClass SchubertClass::sigma(int l1, int l2) {
  SchubertClass s;
  s.c_[index_of(l1, l2)] = 1;
  return s;
}

bool SchubertClass::is_zero() const {
  for (long long v : c_)
    if (v != 0) return false;
  return true;
}

bool SchubertClass::is_homogeneous() const {
  int codim = -1;
  const auto& parts = partitions();
  for (std::size_t i = 0; i < kBasisSize; ++i) {
    if (c_[i] == 0) continue;
    const int d = parts[i].first + parts[i].second;
    if (codim == -1) codim = d;
    if (d != codim) return false;
  }
  return true;
}

SchubertClass SchubertClass::operator+(const SchubertClass& o) const {
  SchubertClass r;
  for (std::size_t i = 0; i < kBasisSize; ++i) r.c_[i] = c_[i] + o.c_[i];
  return r;
}

SchubertClass SchubertClass::operator-(const SchubertClass& o) const {
  SchubertClass r;
  for (std::size_t i = 0; i < kBasisSize; ++i) r.c_[i] = c_[i] - o.c_[i];
  return r;
}

SchubertClass SchubertClass::scaled(long long k) const {
  SchubertClass r;
  for (std::size_t i = 0; i < kBasisSize; ++i) r.c_[i] = c_[i] * k;
  return r;
}

namespace {

// Pieri: sigma_m * sigma_{a,b} = sum of sigma_{c,d} over horizontal strips
// c >= a >= d >= b, c + d = a + b + m, c <= 3.
SchubertClass pieri(int m, const SchubertClass& u) {
  if (m == 0) return u;
  SchubertClass r;
  const auto& parts = SchubertClass::partitions();
  for (std::size_t i = 0; i < SchubertClass::kBasisSize; ++i) {
    const long long coeff = u.raw(i);
    if (coeff == 0) continue;
    const int a = parts[i].first, b = parts[i].second;
    for (int c = a; c <= 3; ++c) {
      const int d = a + b + m - c;
      if (d < b || d > a || d > c) continue;
      r.raw(SchubertClass::index_of(c, d)) += coeff;
    }
  }
  return r;
}

// Product with a basis class via Giambelli:
// sigma_{c,d} = sigma_c sigma_d - sigma_{c+1} sigma_{d-1}, with sigma_m = 0
// for m > 3 in this ring.
SchubertClass mul_basis(const SchubertClass& u, int c, int d) {
  if (d == 0) return pieri(c, u);
  SchubertClass main = pieri(d, pieri(c, u));
  if (c + 1 > 3) return main;
  return main - pieri(d - 1, pieri(c + 1, u));
}

}  // namespace

SchubertClass SchubertClass::operator*(const SchubertClass& o) const {
  SchubertClass r;
  const auto& parts = partitions();
  for (std::size_t j = 0; j < kBasisSize; ++j) {
    if (o.c_[j] == 0) continue;
    SchubertClass t = mul_basis(*this, parts[j].first, parts[j].second);
    r = r + t.scaled(o.c_[j]);
  }
  return r;
}

SchubertClass SchubertClass::pow(int e) const {
  SchubertClass r = one();
  for (int i = 0; i < e; ++i) r = r * (*this);
  return r;
}

std::string SchubertClass::to_string() const {
  if (is_zero()) return "0";
  std::string s;
  const auto& parts = partitions();
  for (std::size_t i = 0; i < kBasisSize; ++i) {
    if (c_[i] == 0) continue;
    if (!s.empty()) s += " + ";
    if (c_[i] != 1) s += std::to_string(c_[i]) + "*";
    if (parts[i].first == 0) {
      if (c_[i] == 1) s += "1";
      else s.pop_back();  // drop the '*' after the bare coefficient
      continue;
    }
    s += "s(" + std::to_string(parts[i].first);
    if (parts[i].second != 0) s += "," + std::to_string(parts[i].second);
    s += ")";
  }
  return s;
}

std::pair<int, int> box_complement(int l1, int l2) {
  return {3 - l2, 3 - l1};
}

}  // namespace gmlab
