// Exact arithmetic layer: rationals for weights and coordinates, big integers
// for counting. Euclidean lengths are irrational, so distances are double;
// everything that must cancel exactly (χ, lattice membership, marginals) is
// kept rational.
#pragma once

#include <gmpxx.h>

#include <cmath>
#include <cstdint>
#include <string>

#include "flatcycle/errors.hpp"

namespace flatcycle {

using Rat = mpq_class;
using Int = mpz_class;

inline double to_double(const Rat& q) { return q.get_d(); }

// Every finite double is a dyadic rational; the conversion is exact.
inline Rat rat_of_double(double x) {
  if (!std::isfinite(x)) throw BadParams("non-finite number");
  return Rat(x);
}

inline Rat rat_abs(const Rat& q) { return q < 0 ? Rat(-q) : q; }

// The two-argument mpq constructor does not reduce the fraction, which breaks
// mpq_equal-based comparison downstream. All p/q construction goes through
// here.
inline Rat rat_make(long num, long den) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

inline Rat rat_make(const Int& num, const Int& den) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

// Parses "p/q" or "p". Used by the JSON layer for rational-mode payloads.
Rat rat_of_string(const std::string& s);

std::string rat_to_string(const Rat& q);

// floor(p/q) as an exact integer.
Int rat_floor(const Rat& q);

// Nearest integer, ties toward zero (used for lattice rounding).
Int round_nearest_tie_to_zero(const Rat& q);

// Nearest integer, ties toward -inf (used for vertex snapping).
Int round_nearest_tie_down(const Rat& q);

// Natural log of a positive big integer, via the top 64 bits plus the bit
// length. Accurate to ~1e-15 relative, well inside the 1e-9 contract.
double ln_of_int(const Int& n);

// Exact binomial coefficient by multiplicative accumulation; every division
// along the way is exact.
Int binomial(long n, long k);

// ipow for small exact powers.
Int int_pow(long base, long exp);

}  // namespace flatcycle
