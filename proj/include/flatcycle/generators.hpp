// Seeded instance generators: dipole clouds, the truncated harmonic cycle,
// and random grid cycles. Deterministic given the seed.
#pragma once

#include <random>

#include "flatcycle/grid.hpp"
#include "flatcycle/quantize.hpp"

namespace flatcycle {

using Rng = std::mt19937_64;

// count dipoles ±w at uniform random cube positions, one cycle per dipole
// pair merged into a single cycle.
ZeroCycle gen_dipoles(int n, int count, Rng& rng, Mode mode = Mode::Rational);

// T_J = Σ_{j≤J} ([[x_j]] − [[0]]) with x_j = (j⁻², 0, …): mass 2J and 1d norm
// Σ_{j≤J} j⁻² (exact rational coordinates).
ZeroCycle gen_harmonic(int n, int terms, Mode mode = Mode::Rational);

// Random grid cycle: `atoms` occupied indices with integer weights in
// [−max_mult, max_mult], balanced to χ = 0.
GridCycle gen_grid_random(const GridSpec& spec, int atoms, long max_mult,
                          Rng& rng);

// Random member of the quantized class by rejection: random multiplicities,
// χ-correction, integer rescale under the mass cap.
QuantizedCycle gen_class_member(const QuantLattice& lattice, int atoms,
                                Rng& rng);

// Random cycle with rational coordinates on a fine dyadic mesh (generic
// positions but exact arithmetic).
ZeroCycle gen_random_cycle(int n, int atoms, Rng& rng,
                           Mode mode = Mode::Rational, int denom_bits = 10,
                           long max_weight = 4);

}  // namespace flatcycle
