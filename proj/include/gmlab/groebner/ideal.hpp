#ifndef GMLAB_GROEBNER_IDEAL_HPP
#define GMLAB_GROEBNER_IDEAL_HPP

#include <map>
#include <memory>
#include <mutex>

#include "gmlab/corealg/io.hpp"
#include "gmlab/groebner/groebner.hpp"

namespace gmlab {

// Homogeneous ideal with cached Groebner bases per (order, truncation).
// Value-semantic handle over immutable shared state; copies share the cache.
// The cache tolerates concurrent readers and redundant writers because
// reduced bases are unique.
class Ideal {
 public:
  Ideal(Ring ring, std::vector<Polynomial> gens);

  static Ideal zero(Ring ring) { return Ideal(std::move(ring), {}); }
  static Ideal unit(Ring ring) {
    return Ideal(ring, {Polynomial::constant(ring, 1)});
  }
  static Ideal span(Ring ring, std::vector<Polynomial> gens) {
    return Ideal(std::move(ring), std::move(gens));
  }

  const Ring& ring() const { return impl_->ring; }
  const std::vector<Polynomial>& gens() const { return impl_->gens; }
  bool is_zero_ideal() const { return impl_->gens.empty(); }

  // Full reduced Groebner basis for the given order.
  std::shared_ptr<const GroebnerBasis> groebner(
      MonomialOrder order = MonomialOrder::degrevlex(),
      const Budget& budget = Budget::standard(),
      GBAlgorithm algo = GBAlgorithm::buchberger) const;

  // Basis with lead terms valid up to weighted degree max_degree; may return
  // a cached full basis.
  std::shared_ptr<const GroebnerBasis> groebner_truncated(
      int max_degree, MonomialOrder order = MonomialOrder::degrevlex(),
      const Budget& budget = Budget::standard()) const;

  // Membership test; uses a truncated basis for homogeneous f.
  bool contains(const Polynomial& f,
                const Budget& budget = Budget::standard()) const;

  bool contains(const Ideal& other,
                const Budget& budget = Budget::standard()) const;

  // True when the ideal is (1).
  bool is_unit(const Budget& budget = Budget::standard()) const {
    return groebner(MonomialOrder::degrevlex(), budget)->is_unit();
  }

  // Identical reduced degrevlex bases <=> equal ideals.
  bool equals(const Ideal& other,
              const Budget& budget = Budget::standard()) const;

  std::string to_text() const {
    return print_ideal_text(ring(), gens());
  }

 private:
  struct Impl {
    Ring ring;
    std::vector<Polynomial> gens;
    mutable std::mutex mu;
    mutable std::map<std::pair<MonomialOrder, int>,
                     std::shared_ptr<const GroebnerBasis>>
        cache;
  };
  std::shared_ptr<Impl> impl_;
};

// Parses the ideal-file grammar and wraps the result.
struct LoadedIdeal {
  Ring ring;
  Ideal ideal;
};
LoadedIdeal load_ideal_text(const std::string& text);
LoadedIdeal load_ideal_file(const std::string& path);

}  // namespace gmlab

#endif
