#pragma once

#include <vector>

#include "ecsim/hamiltonian.hpp"
#include "ecsim/state.hpp"
#include "ecsim/types.hpp"

namespace ecsim {

/// Brute-force exp(-i H t) from the Hermitian eigendecomposition of H.
///
/// H is split into the connected components of its nonzero pattern and each block is
/// diagonalized on its own; eigenpairs are kept so repeated times cost one matvec per block.
class EvolutionOracle {
public:
    explicit EvolutionOracle(const ComplexMatrix& h, double hermitian_tol = 1e-12);

    int dim() const { return dim_; }
    int block_count() const { return static_cast<int>(blocks_.size()); }

    ComplexVector evolve(const ComplexVector& psi, double t) const;
    SystemState evolve(const SystemState& state, double t) const;

    // <psi|H|psi>
    double energy(const ComplexVector& psi) const;

private:
    struct Block {
        std::vector<int> index;
        Eigen::VectorXd energies;
        ComplexMatrix vectors;
    };
    int dim_;
    std::vector<Block> blocks_;
};

SystemState evolve_oracle(const ComplexMatrix& h, const SystemState& state, double t);

/// Closed-form evolution under the quasi-mode JC Hamiltonian (Delta/2) sz + g (A^dag s- + A s+).
///
/// Each pair {|N>|+>, |N+1>|->} (quasi mode II index untouched) evolves as
/// cos(W t) - i sin(W t) h_N / W with W = sqrt(Delta^2/4 + g^2 (N+1)); at Delta = 0 the
/// eigenvectors are the dressed states (|N,+> +- |N+1,->)/sqrt(2). |0,-> and the truncation
/// edge |dim1-1, +> are single levels, matching the truncated matrix exactly.
SystemState evolve_exact_jc(const SystemState& state, double t, double g, double delta);

/// Number-diagonal evolution under [Delta/2 + (g^2/Delta) A^dag A] sz + shift s+s- (quasi basis).
/// |mu>|-> -> |mu e^{+i g^2 t/Delta}>|->, |mu>|+> -> |mu e^{-i g^2 t/Delta}>|+> up to phases.
SystemState evolve_effective(const SystemState& state, double t, double g, double delta,
                             ShiftConvention shift = ShiftConvention::derived);

/// 2 pi sqrt(nbar)/g, the JC revival time (the protocol acts at half of it).
double half_revival_time(double nbar, double g);

// half_revival_time / 2, where atom and field separate and the field is a cat.
double preparation_time(double nbar, double g);

}  // namespace ecsim
