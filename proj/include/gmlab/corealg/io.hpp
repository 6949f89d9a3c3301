#ifndef GMLAB_COREALG_IO_HPP
#define GMLAB_COREALG_IO_HPP

#include <string>
#include <vector>

#include "gmlab/corealg/polynomial.hpp"

namespace gmlab {

struct ParsedIdeal {
  Ring ring;
  std::vector<Polynomial> generators;
};

// Ideal file grammar (UTF-8, line oriented):
//   line 1: ring p=<prime> vars <name>(,<name>)*
//   line 2: ideal
//   following lines: one polynomial per line; terms c*v1^e1*...*vk^ek,
//   +/- separators, ^1 optional, coefficient 1 optional; '#' starts a
//   comment; blank lines are skipped.
ParsedIdeal parse_ideal_text(const std::string& text);

ParsedIdeal parse_ideal_file(const std::string& path);

// Canonical form: header, then one generator per line, terms in descending
// active order with coefficients in [1, p-1]. parse(print(I)) == I.
std::string print_ideal_text(const Ring& ring,
                             const std::vector<Polynomial>& gens);

void write_ideal_file(const std::string& path, const Ring& ring,
                      const std::vector<Polynomial>& gens);

// Parses a single polynomial in an existing ring (same term grammar).
Polynomial parse_polynomial(const Ring& ring, const std::string& text);

}  // namespace gmlab

#endif
