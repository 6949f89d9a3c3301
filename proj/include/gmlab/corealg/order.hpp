#ifndef GMLAB_COREALG_ORDER_HPP
#define GMLAB_COREALG_ORDER_HPP

#include <cstddef>
#include <string>

#include "gmlab/corealg/monomial.hpp"

namespace gmlab {

// Supported term orders. block(k) is the elimination order for the first k
// variables: weighted degrevlex on the leading block, ties broken by weighted
// degrevlex on the tail block. Any polynomial whose lead monomial avoids the
// first k variables has all monomials in the tail subring.
struct MonomialOrder {
  enum class Kind { degrevlex, lex, block };

  Kind kind = Kind::degrevlex;
  std::size_t block_size = 0;

  static MonomialOrder degrevlex() { return {Kind::degrevlex, 0}; }
  static MonomialOrder lex() { return {Kind::lex, 0}; }
  static MonomialOrder block(std::size_t k) { return {Kind::block, k}; }

  bool operator==(const MonomialOrder& o) const {
    return kind == o.kind && block_size == o.block_size;
  }
  bool operator!=(const MonomialOrder& o) const { return !(*this == o); }
  bool operator<(const MonomialOrder& o) const {
    if (kind != o.kind) return kind < o.kind;
    return block_size < o.block_size;
  }

  std::string to_string() const {
    switch (kind) {
      case Kind::degrevlex:
        return "degrevlex";
      case Kind::lex:
        return "lex";
      case Kind::block:
        return "block(" + std::to_string(block_size) + ")";
    }
    return "?";
  }
};

// Returns -1, 0, +1 for a < b, a == b, a > b under `order`.
// `weights` are the ring's variable weights (all 1 in standard rings).
int compare(const MonomialOrder& order, const Monomial& a, const Monomial& b,
            const std::vector<int>& weights);

}  // namespace gmlab

#endif
