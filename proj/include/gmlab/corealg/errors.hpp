#ifndef GMLAB_COREALG_ERRORS_HPP
#define GMLAB_COREALG_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gmlab {

// Base class for all engine errors.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct DivisionByZero : Error {
  DivisionByZero() : Error("division by zero in prime field") {}
};

struct InvalidModulus : Error {
  explicit InvalidModulus(long long p)
      : Error("invalid field characteristic: " + std::to_string(p)) {}
};

struct RingMismatch : Error {
  explicit RingMismatch(const std::string& ctx)
      : Error("ring mismatch: " + ctx) {}
};

struct ParseError : Error {
  std::size_t line;
  std::size_t col;
  ParseError(std::size_t line_, std::size_t col_, const std::string& msg)
      : Error("parse error at " + std::to_string(line_) + ":" +
              std::to_string(col_) + ": " + msg),
        line(line_),
        col(col_) {}
};

// Raised when a Groebner computation exceeds its pair/basis budget.
// `diagnostics` carries the partial state summary for the caller.
struct BudgetExceeded : Error {
  std::string diagnostics;
  explicit BudgetExceeded(const std::string& diag)
      : Error("computation budget exceeded: " + diag), diagnostics(diag) {}
};

struct NoRationalPoint : Error {
  explicit NoRationalPoint(const std::string& ctx)
      : Error("no rational point found: " + ctx) {}
};

struct NotASurface : Error {
  explicit NotASurface(long long dim)
      : Error("sectional genus requested for projective dimension " +
              std::to_string(dim)) {}
};

struct NonGenericIntersection : Error {
  explicit NonGenericIntersection(const std::string& ctx)
      : Error("intersection not zero-dimensional after reseeding: " + ctx) {}
};

struct NonGenericPoint : Error {
  explicit NonGenericPoint(const std::string& ctx)
      : Error("point choice degenerate: " + ctx) {}
};

struct EmptySystem : Error {
  EmptySystem() : Error("linear system is empty") {}
};

struct BasePoint : Error {
  BasePoint() : Error("evaluation at a base point of the map") {}
};

struct PositiveDimensionalFiber : Error {
  PositiveDimensionalFiber()
      : Error("fiber is positive-dimensional; map not generically finite") {}
};

struct PositiveDimensionalFamily : Error {
  PositiveDimensionalFamily()
      : Error("family of lines is positive-dimensional") {}
};

struct NoQuadric : Error {
  NoQuadric() : Error("no quadric available in the requested linear system") {}
};

struct InvalidInput : Error {
  explicit InvalidInput(const std::string& msg)
      : Error("invalid input: " + msg) {}
};

struct UsageError : Error {
  explicit UsageError(const std::string& msg) : Error("usage: " + msg) {}
};

}  // namespace gmlab

#endif
