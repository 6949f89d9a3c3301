#include "gmlab/corealg/order.hpp"

namespace gmlab {

namespace {

// degrevlex on the index range [lo, hi): higher weighted degree wins; on a
// tie the monomial with the smaller exponent at the last differing variable
// is the larger one.
int cmp_degrevlex_range(const Monomial& a, const Monomial& b, std::size_t lo,
                        std::size_t hi, const std::vector<int>& weights) {
  long da = 0, db = 0;
  for (std::size_t i = lo; i < hi; ++i) {
    da += static_cast<long>(weights[i]) * a.exponent(i);
    db += static_cast<long>(weights[i]) * b.exponent(i);
  }
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = hi; i-- > lo;) {
    if (a.exponent(i) != b.exponent(i))
      return a.exponent(i) > b.exponent(i) ? -1 : 1;
  }
  return 0;
}

int cmp_lex(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.nvars(); ++i) {
    if (a.exponent(i) != b.exponent(i))
      return a.exponent(i) < b.exponent(i) ? -1 : 1;
  }
  return 0;
}

}  // namespace

int compare(const MonomialOrder& order, const Monomial& a, const Monomial& b,
            const std::vector<int>& weights) {
  if (a.nvars() != b.nvars())
    throw RingMismatch("comparing monomials with different variable counts");
  switch (order.kind) {
    case MonomialOrder::Kind::degrevlex: {
      if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
      return cmp_degrevlex_range(a, b, 0, a.nvars(), weights);
    }
    case MonomialOrder::Kind::lex:
      return cmp_lex(a, b);
    case MonomialOrder::Kind::block: {
      const std::size_t k = order.block_size;
      int c = cmp_degrevlex_range(a, b, 0, k, weights);
      if (c != 0) return c;
      return cmp_degrevlex_range(a, b, k, a.nvars(), weights);
    }
  }
  return 0;
}

}  // namespace gmlab
