#include "gmlab/corealg/ring.hpp"

namespace gmlab {

Ring make_ring(std::uint32_t p, std::vector<std::string> vars,
               MonomialOrder order, std::vector<int> weights) {
  if (weights.empty()) weights.assign(vars.size(), 1);
  if (weights.size() != vars.size())
    throw InvalidInput("weights/variables size mismatch");
  for (int w : weights)
    if (w <= 0) throw InvalidInput("variable weights must be positive");
  return std::make_shared<RingData>(FpField(p), std::move(vars), order,
                                    std::move(weights));
}

Ring with_order(const Ring& ring, MonomialOrder order) {
  if (ring->order() == order) return ring;
  return std::make_shared<RingData>(ring->field(), ring->var_names(), order,
                                    ring->weights());
}

Ring pn_ring(std::uint32_t p, std::size_t n) {
  std::vector<std::string> vars;
  vars.reserve(n + 1);
  for (std::size_t i = 0; i <= n; ++i) vars.push_back("x" + std::to_string(i));
  return make_ring(p, std::move(vars));
}

Ring plucker_ring(std::uint32_t p) {
  std::vector<std::string> vars;
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = i + 1; j < 5; ++j)
      vars.push_back("p" + std::to_string(i) + std::to_string(j));
  return make_ring(p, std::move(vars));
}

std::size_t plucker_index(std::size_t i, std::size_t j) {
  // offsets of the (i, *) runs in the lexicographic pair list
  static const std::size_t base[5] = {0, 4, 7, 9, 10};
  return base[i] + (j - i - 1);
}

}  // namespace gmlab
