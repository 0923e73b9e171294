#pragma once

#include <string_view>
#include <variant>

#include "ecsim/modemap.hpp"
#include "ecsim/state.hpp"
#include "ecsim/types.hpp"

namespace ecsim {

/// Coefficient of the sigma+ sigma- term left by adiabatic elimination.
/// derived: g^2/Delta from the second-order expansion (sum_i g_i^2/Delta_i for two modes).
/// halved:  g^2/(2 Delta), the coefficient as usually quoted; leaves an O(g^2/Delta) residual.
enum class ShiftConvention { derived, halved };

// Full two-mode Hamiltonian, lab frame.
struct LabModel {
    double omega_atom = 0.0;  // Omega
    double omega1 = 0.0;
    double omega2 = 0.0;
    double g1 = 0.0;
    double g2 = 0.0;
};

// Interaction picture w.r.t. omega N for omega1 = omega2: (Delta/2) sz + (g1 a + g2 b) s+ + h.c.
struct InteractionModel {
    double delta = 0.0;
    double g1 = 0.0;
    double g2 = 0.0;
};

// (Delta/2) sz + g (A^dag s- + A s+), acting on quasi mode I (slot 1).
struct QuasiJcModel {
    double delta = 0.0;
    double g = 0.0;
};

// [Delta/2 + (g^2/Delta) A^dag A] sz + shift s+ s-, quasi basis.
struct EffectiveEqualFreqModel {
    double delta = 0.0;
    double g = 0.0;
    ShiftConvention shift = ShiftConvention::derived;
};

// (g1^2/D1) a^dag a sz + (g2^2/D2) b^dag b sz, physical basis.
struct EffectiveFalseModel {
    double delta1 = 0.0;
    double delta2 = 0.0;
    double g1 = 0.0;
    double g2 = 0.0;
    double atomic_splitting = 0.0;  // optional (s/2) sz, zero by default
};

// False model plus the a^dag b + a b^dag cross term and the sigma+ sigma- shift.
struct EffectiveCorrectModel {
    double delta1 = 0.0;
    double delta2 = 0.0;
    double g1 = 0.0;
    double g2 = 0.0;
    double atomic_splitting = 0.0;
    ShiftConvention shift = ShiftConvention::derived;
};

// (lambda At^dag At + zeta Bt^dag Bt) sz + shift s+ s-, in the eta-rotated oscillator basis.
struct DecoupledModel {
    double delta1 = 0.0;
    double delta2 = 0.0;
    double g1 = 0.0;
    double g2 = 0.0;
    double atomic_splitting = 0.0;
    ShiftConvention shift = ShiftConvention::derived;
};

using HamiltonianSpec = std::variant<LabModel, InteractionModel, QuasiJcModel, EffectiveEqualFreqModel,
                                     EffectiveFalseModel, EffectiveCorrectModel, DecoupledModel>;

std::string_view variant_name(const HamiltonianSpec& spec);

// Lowest |Delta|/g for which the dispersive variants are trusted without comment.
inline constexpr double kRatioMin = 10.0;
// Below this ratio the dispersive variants are rejected.
inline constexpr double kRatioReject = 5.0;

enum class DetuningRegime { dispersive, marginal, invalid };

DetuningRegime detuning_regime(double delta, double g);

// dispersive for non-effective variants.
DetuningRegime effective_validity(const HamiltonianSpec& spec);

/// Dense matrix on mode1 (x) mode2 (x) atom (index (n dim2 + m) 2 + s, s = 0 for |->).
/// Throws InvalidVariantParams or DimTooSmall.
ComplexMatrix build_hamiltonian(const HamiltonianSpec& spec, int dim1, int dim2);

// Operators on the same layout.
ComplexMatrix mode_one_annihilation(int dim1, int dim2);
ComplexMatrix mode_two_annihilation(int dim1, int dim2);
ComplexMatrix atom_raising(int dim1, int dim2);
ComplexMatrix atom_inversion(int dim1, int dim2);
// N = sz/2 + a^dag a + b^dag b
ComplexMatrix excitation_matrix(int dim1, int dim2);

double shift_coefficient(double g_squared_over_delta, ShiftConvention convention);

}  // namespace ecsim
