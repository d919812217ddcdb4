// Error types shared across the library. All are thrown by value and derive
// from Error so callers can catch the whole family at the CLI boundary.
#pragma once

#include <stdexcept>
#include <string>

namespace flatcycle {

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct ChiNonZero : Error {
  explicit ChiNonZero(const std::string& what) : Error(what) {}
};

struct OutOfCube : Error {
  explicit OutOfCube(const std::string& what) : Error(what) {}
};

struct DimensionMismatch : Error {
  explicit DimensionMismatch(const std::string& what) : Error(what) {}
};

struct BadEps : Error {
  explicit BadEps(const std::string& what) : Error(what) {}
};

struct BadParams : Error {
  explicit BadParams(const std::string& what) : Error(what) {}
};

struct SizeOverflow : Error {
  explicit SizeOverflow(const std::string& what) : Error(what) {}
};

// Iteration cap hit before the optimality tolerance was reached. Carries the
// best primal/dual bounds seen so far.
struct SolverStall : Error {
  double best_primal;
  double best_dual;
  SolverStall(const std::string& what, double primal, double dual)
      : Error(what), best_primal(primal), best_dual(dual) {}
};

struct ParseError : Error {
  explicit ParseError(const std::string& what) : Error(what) {}
};

}  // namespace flatcycle
