#pragma once

#include "ecsim/hamiltonian.hpp"
#include "ecsim/types.hpp"

namespace ecsim {

// Single-mode JC layout for the elimination checks: index 2 n + s, s = 0 for |->.
struct JcOperators {
    ComplexMatrix a, sp, sm, sz;
};

JcOperators jc_operators(int dim);

// (Delta/2) sz + g (a^dag s- + a s+)
ComplexMatrix jc_hamiltonian(double g, double delta, int dim);

/// S = lambda (a s+ - a^dag s-) with lambda = g/Delta; exp(S) cancels the first-order coupling.
ComplexMatrix elimination_generator(double g, double delta, int dim);

// H' = (Delta/2) sz + (g^2/Delta) a^dag a sz + shift s+ s-
ComplexMatrix eliminated_hamiltonian(double g, double delta, int dim, ShiftConvention shift = ShiftConvention::derived);

// Photon-number rows kept above n_max so the projected block is unaffected by truncation.
inline constexpr int kEliminationBuffer = 2;

/// || P (e^S H e^-S - H') P || with P the projector onto photon numbers <= n_max.
/// O(g^3/Delta^2) for the derived shift.
double adiabatic_residual(double g, double delta, int dim, int n_max, ShiftConvention shift = ShiftConvention::derived);

/// Projected residuals of the transformed-operator expansions:
///   e^S a e^-S   vs a + lambda s-                                       O(lambda^2)
///   e^S s- e^-S  vs s- + lambda a sz                                    O(lambda^2)
///   e^S sz e^-S  vs sz - 2 lambda (a^dag s- + a s+) - 2 lambda^2 a^dag a sz - c lambda^2 s+ s-
/// with c = 2 (derived) or 1 (halved); O(lambda^3) for c = 2.
struct TransformResiduals {
    double annihilation = 0.0;
    double lowering = 0.0;
    double inversion = 0.0;
};

TransformResiduals transform_residuals(double g, double delta, int dim, int n_max,
                                       ShiftConvention shift = ShiftConvention::derived);

}  // namespace ecsim
