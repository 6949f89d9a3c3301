#ifndef GMLAB_COREALG_RING_HPP
#define GMLAB_COREALG_RING_HPP

#include <memory>
#include <string>
#include <vector>

#include "gmlab/corealg/fp.hpp"
#include "gmlab/corealg/order.hpp"

namespace gmlab {

// A polynomial ring F_p[vars] with per-variable weights and an active term
// order. Immutable; shared by all values built over it.
class RingData {
 public:
  RingData(FpField field, std::vector<std::string> vars, MonomialOrder order,
           std::vector<int> weights)
      : field_(field),
        vars_(std::move(vars)),
        order_(order),
        weights_(std::move(weights)) {}

  const FpField& field() const { return field_; }
  std::uint32_t characteristic() const { return field_.modulus(); }
  std::size_t nvars() const { return vars_.size(); }
  const std::vector<std::string>& var_names() const { return vars_; }
  const std::string& var_name(std::size_t i) const { return vars_[i]; }
  const MonomialOrder& order() const { return order_; }
  const std::vector<int>& weights() const { return weights_; }

  bool unit_weights() const {
    for (int w : weights_)
      if (w != 1) return false;
    return true;
  }

  int compare(const Monomial& a, const Monomial& b) const {
    return gmlab::compare(order_, a, b, weights_);
  }

  // Same field, variables and weights; the active order may differ.
  bool same_base(const RingData& o) const {
    return field_ == o.field_ && vars_ == o.vars_ && weights_ == o.weights_;
  }

  bool operator==(const RingData& o) const {
    return same_base(o) && order_ == o.order_;
  }

 private:
  FpField field_;
  std::vector<std::string> vars_;
  MonomialOrder order_;
  std::vector<int> weights_;
};

using Ring = std::shared_ptr<const RingData>;

Ring make_ring(std::uint32_t p, std::vector<std::string> vars,
               MonomialOrder order = MonomialOrder::degrevlex(),
               std::vector<int> weights = {});

// Same base ring, different active order.
Ring with_order(const Ring& ring, MonomialOrder order);

// F_p[x0..xn], the coordinate ring of P^n.
Ring pn_ring(std::uint32_t p, std::size_t n);

// F_p[p01..p34], Pluecker coordinates of G(1,4) in P^9 (lexicographic index
// pairs 0<=i<j<=4).
Ring plucker_ring(std::uint32_t p);

// Index of p_{ij} in the Pluecker ring, i < j <= 4.
std::size_t plucker_index(std::size_t i, std::size_t j);

inline void require_same_ring(const Ring& a, const Ring& b,
                              const char* ctx) {
  if (a != b && !(*a == *b)) throw RingMismatch(ctx);
}

}  // namespace gmlab

#endif
