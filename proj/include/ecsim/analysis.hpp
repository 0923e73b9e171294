#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "ecsim/fock.hpp"
#include "ecsim/state.hpp"
#include "ecsim/types.hpp"

namespace ecsim {

enum class Subsystem { mode1, mode2, atom };

const char* to_string(Subsystem s);

/// Density matrix over an ordered list of subsystems (row-major tensor index, first slowest).
struct DensityMatrix {
    ComplexMatrix rho;
    std::vector<Subsystem> subsystems;
    std::vector<int> dims;

    std::string label() const;
};

DensityMatrix density_matrix(const SystemState& state);
DensityMatrix density_matrix(const FockVector& psi, Subsystem as = Subsystem::mode1);

// Throws BadSubsystem on labels the input does not carry or on an empty keep set.
DensityMatrix partial_trace(const SystemState& state, std::initializer_list<Subsystem> keep);
DensityMatrix partial_trace(const SystemState& state, const std::vector<Subsystem>& keep);
DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<Subsystem>& keep);

// Nats; eigenvalues below 1e-14 contribute zero.
double entropy(const DensityMatrix& rho);
double purity(const DensityMatrix& rho);

// |<a|b>|^2 of normalized pure states.
double fidelity(const FockVector& a, const FockVector& b);
double fidelity(const SystemState& a, const SystemState& b);
// <psi| rho |psi>
double fidelity(const DensityMatrix& rho, const FockVector& psi);

/// <psi| Tr_atom |Psi><Psi| |psi> for a field-only target, without forming the field density matrix.
double field_fidelity(const SystemState& with_atom, const SystemState& field_target);

// <sz>
double atomic_inversion(const SystemState& state);

struct AxisSpec {
    double min = 0.0;
    double max = 0.0;
    int count = 0;

    double step() const { return count > 1 ? (max - min) / (count - 1) : 0.0; }
    double at(int i) const { return min + i * step(); }
};

/// Q(alpha) = <alpha|rho|alpha>/pi sampled on a rectangular grid; values(row = im index, col = re index).
struct PhaseSpaceGrid {
    AxisSpec re;
    AxisSpec im;
    RealMatrix values;

    double integral() const;
    // Grid points strictly above their 8 neighbours and above `min_fraction` of the global maximum.
    std::vector<Complex> local_maxima(double min_fraction = 0.05) const;
};

// Square grid of `count` points per axis over [-1.5 (|mu| + 2), +1.5 (|mu| + 2)].
std::pair<AxisSpec, AxisSpec> default_grid(double mu_magnitude, int count = 101);

PhaseSpaceGrid husimi_q(const DensityMatrix& rho, const AxisSpec& re, const AxisSpec& im);
PhaseSpaceGrid husimi_q(const FockVector& psi, const AxisSpec& re, const AxisSpec& im);

}  // namespace ecsim
