#pragma once

#include "ecsim/fock.hpp"
#include "ecsim/modemap.hpp"
#include "ecsim/state.hpp"

namespace ecsim {

/// Relative sign between the two branches of a cat.
/// minus: e^{i pi N}|i mu> - e^{-i pi N}|-i mu>
/// plus:  e^{i pi N}|i mu> + e^{-i pi N}|-i mu>
enum class CatConvention { minus, plus };

const char* to_string(CatConvention c);

/// Large-amplitude approximation to the zero-detuning evolution of |mu>_I (gamma|-> + delta|+>),
/// quasi mode II held in `mode_two`. Uses C_{N+1} ~ e^{-i phi} C_N and the linearized
/// sqrt(N) ~ sqrt(N)/2 + N/(2 sqrt(N)), so each branch is a coherent state with amplitude
/// mu e^{-+i g t/(2 sqrt(nbar))}. The general atomic state is the superposition of the
/// gamma = 1 and delta = 1 solutions. Convention e^{-iHt}.
SystemState large_amplitude_state(double t, Complex mu, double nbar, Complex gamma, Complex delta, double g,
                                 int dim, const FockVector& mode_two, double leak_tol = kDefaultLeakTol);

// Atomic purity bound at the preparation time: purity >= 1 - kCatPurityConstant / sqrt(nbar).
inline constexpr double kCatPurityConstant = 0.25;

/// Normalized single-mode cat, norm computed with the branch overlap included.
/// Throws DegenerateCat when the unnormalized norm^2 is below 1e-12.
FockVector cat_target(Complex mu, double nbar, CatConvention convention, int dim,
                      double leak_tol = kDefaultLeakTol);

/// Two-mode entangled coherent state e^{i pi N}|a'>|b'> -+ e^{-i pi N}|a''>|b''>, where the branch
/// amplitudes come from quasi_phase_amplitudes with phases +i and -i. Field-only, physical basis.
SystemState two_mode_cat_target(Complex alpha, Complex beta, const ModeRotation& rot, double nbar, int dim1,
                                int dim2, CatConvention convention = CatConvention::minus,
                                double leak_tol = kDefaultLeakTol);

}  // namespace ecsim
