#include "gmlab/groebner/ideal.hpp"

namespace gmlab {

Ideal::Ideal(Ring ring, std::vector<Polynomial> gens) {
  auto impl = std::make_shared<Impl>();
  impl->ring = std::move(ring);
  for (auto& g : gens) {
    if (g.is_zero()) continue;
    require_same_ring(impl->ring, g.ring(), "ideal generator ring");
    if (!g.is_homogeneous())
      throw InvalidInput("ideal generators must be homogeneous: " +
                         g.to_string());
    impl->gens.push_back(*impl->ring == *g.ring() ? g
                                                  : g.in_ring(impl->ring));
  }
  impl_ = std::move(impl);
}

std::shared_ptr<const GroebnerBasis> Ideal::groebner(MonomialOrder order,
                                                     const Budget& budget,
                                                     GBAlgorithm algo) const {
  const auto key = std::make_pair(order, -1);
  {
    std::lock_guard<std::mutex> lock(impl_->mu);
    auto it = impl_->cache.find(key);
    if (it != impl_->cache.end()) return it->second;
  }
  Ring gb_ring = with_order(impl_->ring, order);
  auto basis = compute_groebner(gb_ring, impl_->gens, budget, -1, algo);
  auto gb = std::make_shared<const GroebnerBasis>(gb_ring, std::move(basis));
  {
    std::lock_guard<std::mutex> lock(impl_->mu);
    auto [it, inserted] = impl_->cache.emplace(key, gb);
    return it->second;
  }
}

std::shared_ptr<const GroebnerBasis> Ideal::groebner_truncated(
    int max_degree, MonomialOrder order, const Budget& budget) const {
  {
    std::lock_guard<std::mutex> lock(impl_->mu);
    // a full basis, or any truncation at least as deep, answers the query
    auto full = impl_->cache.find(std::make_pair(order, -1));
    if (full != impl_->cache.end()) return full->second;
    for (auto& [key, gb] : impl_->cache) {
      if (key.first == order && key.second >= max_degree) return gb;
    }
  }
  Ring gb_ring = with_order(impl_->ring, order);
  auto basis =
      compute_groebner(gb_ring, impl_->gens, budget, max_degree);
  auto gb = std::make_shared<const GroebnerBasis>(gb_ring, std::move(basis),
                                                  max_degree);
  {
    std::lock_guard<std::mutex> lock(impl_->mu);
    auto [it, inserted] =
        impl_->cache.emplace(std::make_pair(order, max_degree), gb);
    return it->second;
  }
}

bool Ideal::contains(const Polynomial& f, const Budget& budget) const {
  if (f.is_zero()) return true;
  if (f.is_homogeneous()) {
    auto gb = groebner_truncated(f.degree(), MonomialOrder::degrevlex(),
                                 budget);
    return normal_form(f, *gb).is_zero();
  }
  auto gb = groebner(MonomialOrder::degrevlex(), budget);
  return normal_form(f, *gb).is_zero();
}

bool Ideal::contains(const Ideal& other, const Budget& budget) const {
  for (const auto& g : other.gens())
    if (!contains(g, budget)) return false;
  return true;
}

bool Ideal::equals(const Ideal& other, const Budget& budget) const {
  if (!ring()->same_base(*other.ring())) return false;
  auto a = groebner(MonomialOrder::degrevlex(), budget);
  auto b = other.groebner(MonomialOrder::degrevlex(), budget);
  if (a->size() != b->size()) return false;
  for (std::size_t i = 0; i < a->size(); ++i)
    if (a->polys()[i] != b->polys()[i]) return false;
  return true;
}

LoadedIdeal load_ideal_text(const std::string& text) {
  ParsedIdeal parsed = parse_ideal_text(text);
  return {parsed.ring, Ideal(parsed.ring, std::move(parsed.generators))};
}

LoadedIdeal load_ideal_file(const std::string& path) {
  ParsedIdeal parsed = parse_ideal_file(path);
  return {parsed.ring, Ideal(parsed.ring, std::move(parsed.generators))};
}

}  // namespace gmlab
