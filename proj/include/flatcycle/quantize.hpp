// The quantized class P(n,k,ε): grid-supported cycles whose weights are
// integer multiples of ε̂ = ε/(2n(2k+1)^n), with zero augmentation and mass at
// most k·ε. Multiplicity rounding with exact χ-correction, the full cycle →
// class-member deformation pipeline with a certified error bound, and the
// explicit constants table.
#pragma once

#include <optional>

#include "flatcycle/grid.hpp"
#include "flatcycle/kappa.hpp"

namespace flatcycle {

struct QuantLattice {
  int n = 1;
  long k = 1;
  Rat eps;      // ∈ (0,1]
  Rat eps_hat;  // ε/(2n(2k+1)^n), exact

  GridSpec grid() const { return GridSpec{n, k}; }
  Rat mass_cap() const { return Rat(k) * eps; }
};

QuantLattice make_lattice(int n, long k, const Rat& eps);

// ε̂(n,k,ε), exact when eps is.
Rat eps_hat(int n, long k, const Rat& eps);

struct QuantizedCycle {
  QuantLattice lattice;
  std::map<GridIndex, Int> mult;  // weight = mult·ε̂

  Int chi_mult() const;  // Σ mult; χ = chi_mult·ε̂
  Rat mass() const;
  bool is_member() const;  // χ = 0 and mass ≤ k·ε
  GridCycle to_grid() const;
  ZeroCycle to_cycle(Mode mode = Mode::Rational) const;
  bool operator==(const QuantizedCycle& o) const {
    return lattice.n == o.lattice.n && lattice.k == o.lattice.k &&
           lattice.eps == o.lattice.eps && mult == o.mult;
  }
};

// Rounds each weight to the nearest lattice multiple (ties toward zero, so
// mass never grows past a half step per atom), then restores χ = 0 exactly by
// dumping the rounded total at x0. mass(P − R) ≤ ε/n.
QuantizedCycle quantize_multiplicities(const GridCycle& r,
                                       const QuantLattice& lattice,
                                       const GridIndex& x0);

// Explicit constants: c_def = 2n⁴ (deformation), c_95 = 4n⁴ (pipeline
// feasibility), c_92 (sandwich), c_94 = 1/(2n·3^n·c_92) (class separation).
struct ConstantsTable {
  int n = 1;
  double c_def = 2.0;
  double c_95 = 4.0;
  double c_92 = 3.0;
  double c_94 = 1.0 / 18.0;

  static ConstantsTable make(int n);
};

// Pipeline feasibility test: c_95(n)·(G + κ) < k·ε.
bool check_condition_A(int n, long k, double eps, double gnorm_value,
                       double kappa_value);

struct DeformResult {
  QuantizedCycle P;
  double error = 0.0;  // certified bound on gnorm(T − P), sum of the stages
  double stage_reduce = 0.0;  // gnorm(T − witness)
  double stage_snap = 0.0;    // gnorm(witness − snapped)
  double stage_round = 0.0;   // gnorm(snapped − P)
  double gnorm_t = 0.0;
  double kappa_value = 0.0;
  bool condition_a = false;
  bool membership = false;  // mass(P) ≤ k·ε; can only fail without condition A
  bool shortcut = false;    // input was already a class member
};

// T → class member in three certified stages: mass-reduce via the κ witness,
// snap to the lattice, round multiplicities with χ-correction at the smallest
// occupied index. Under condition A the certified error stays below 3ε and
// membership holds.
DeformResult deform(const ZeroCycle& t, long k, const Rat& eps,
                    double tol = 1e-9);

struct ConsequenceCheck {
  bool holds = false;
  double lhs = 0.0;  // G(T) + κ(T, 3ε)
  double rhs = 0.0;  // (√n + 4)·k·ε
  double g_t = 0.0;
  double kappa_3eps = 0.0;
  double g_t_minus_p = 0.0;  // certified distance to the provided member
};

// Given a class member P near T, evaluates the coarser feasibility estimate
// G(T) + κ(T,3ε) < (√n+4)·k·ε that a successful deformation implies.
ConsequenceCheck check_B_implies_C(const ZeroCycle& t, long k, const Rat& eps,
                                   const QuantizedCycle& p, double tol = 1e-9);

// Membership test for an arbitrary cycle: grid-supported, lattice-valued,
// χ = 0, mass ≤ k·ε. Returns the member when it is one.
std::optional<QuantizedCycle> as_class_member(const ZeroCycle& t,
                                              const QuantLattice& lattice);

// Samples class members (rejection with χ-correction) and checks the three
// class bounds: the mass cap by construction, the norm bound via the solver,
// and the pairwise separation floor on random distinct pairs.
PropertyReport verify_94(const QuantLattice& lattice, int samples,
                         uint64_t seed, double tol = 1e-9);

}  // namespace flatcycle
