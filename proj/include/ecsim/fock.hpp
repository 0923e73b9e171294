#pragma once

#include <vector>

#include "ecsim/types.hpp"

namespace ecsim {

/// Probability bookkeeping for a state truncated to a finite number basis.
struct TruncationReport {
    std::vector<Complex> requested;  // amplitude(s) the constructor was asked for
    int dim = 0;
    double tail_mass = 0.0;          // weight beyond n = dim-1 before renormalizing
};

/// Amplitudes over |0>, ..., |dim-1> of a single bosonic mode.
class FockVector {
public:
    explicit FockVector(ComplexVector amps, TruncationReport report = {});

    static FockVector number_state(int n, int dim);

    int dim() const { return static_cast<int>(amps_.size()); }
    const ComplexVector& amps() const { return amps_; }
    Complex operator[](int n) const { return amps_(n); }
    const TruncationReport& truncation() const { return report_; }

    double norm() const { return amps_.norm(); }
    double mean_photon_number() const;
    // <psi|a|psi>
    Complex mean_annihilation() const;

private:
    ComplexVector amps_;
    TruncationReport report_;
};

// Heuristic dimension for a coherent amplitude: |a|^2 + 5|a| + 10.
int recommended_dim(double amplitude_magnitude);
// Smallest dim >= recommended_dim whose coherent tail mass is below leak_tol.
int coherent_dim(double amplitude_magnitude, double leak_tol = kDefaultLeakTol);

// Largest |z| accepted by squeezed_vacuum / squeeze_matrix. The tail of S(z)|0>
// decays like tanh(|z|)^dim, so at |z| = 1.5 a 1e-10 leak needs dim of about 130.
inline constexpr double kMaxSqueeze = 1.5;

/// |alpha> on dim levels, c_n = exp(-|a|^2/2) a^n / sqrt(n!), renormalized after truncation.
/// Throws DimTooSmall when the discarded tail mass reaches leak_tol.
FockVector coherent_state(Complex alpha, int dim, double leak_tol = kDefaultLeakTol);

// Exact tail mass sum_{n >= dim} |c_n|^2 of a coherent state.
double coherent_tail_mass(Complex alpha, int dim);

/// S(z)|0> with S(z) = exp[(z* a^2 - z a^dag^2)/2]; only even photon numbers populated.
FockVector squeezed_vacuum(Complex z, int dim, double leak_tol = kDefaultLeakTol);

double squeezed_tail_mass(Complex z, int dim);

// Annihilation operator; entries sqrt(n) at (n-1, n).
ComplexMatrix ladder_matrix(int dim);
ComplexMatrix number_matrix(int dim);

/// D(alpha) = exp(alpha a^dag - alpha* a) of the truncated generator. Exactly unitary;
/// agrees with the untruncated operator on columns n < dim - gate_trust_buffer(|alpha|).
ComplexMatrix displacement_matrix(Complex alpha, int dim, double leak_tol = kDefaultLeakTol);

/// S(z) = exp[(z* a^2 - z a^dag^2)/2] of the truncated generator.
ComplexMatrix squeeze_matrix(Complex z, int dim, double leak_tol = kDefaultLeakTol);

// Rows/columns near n = dim-1 excluded from operator identities on truncated gates.
int gate_trust_buffer(double amplitude_magnitude);

// <beta|alpha> = exp(-|alpha|^2/2 - |beta|^2/2 + conj(beta) alpha)
Complex coherent_overlap(Complex alpha, Complex beta);

// <psi|phi>
Complex inner(const FockVector& psi, const FockVector& phi);

}  // namespace ecsim
