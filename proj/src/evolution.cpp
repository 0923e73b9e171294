#include "ecsim/evolution.hpp"

#include <cmath>

#include <Eigen/Eigenvalues>

#include "ecsim/errors.hpp"
#include "ecsim/linalg.hpp"

namespace ecsim {

EvolutionOracle::EvolutionOracle(const ComplexMatrix& h, double hermitian_tol) : dim_(static_cast<int>(h.rows())) {
    if (!linalg::is_hermitian(h, hermitian_tol)) fail(ErrorCode::NotHermitian, "oracle needs a Hermitian matrix");
    for (std::vector<int>& index : linalg::connected_blocks(h)) {
        const int n = static_cast<int>(index.size());
        ComplexMatrix sub(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) sub(i, j) = h(index[i], index[j]);
        sub = 0.5 * (sub + sub.adjoint()).eval();
        Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(sub);
        blocks_.push_back({std::move(index), es.eigenvalues(), es.eigenvectors()});
    }
}

ComplexVector EvolutionOracle::evolve(const ComplexVector& psi, double t) const {
    if (psi.size() != dim_) fail(ErrorCode::DimensionMismatch, "state size does not match Hamiltonian");
    ComplexVector out(dim_);
    for (const Block& b : blocks_) {
        const int n = static_cast<int>(b.index.size());
        ComplexVector local(n);
        for (int i = 0; i < n; ++i) local(i) = psi(b.index[i]);
        ComplexVector coeff = b.vectors.adjoint() * local;
        for (int k = 0; k < n; ++k) coeff(k) *= std::polar(1.0, -b.energies(k) * t);
        local = b.vectors * coeff;
        for (int i = 0; i < n; ++i) out(b.index[i]) = local(i);
    }
    return out;
}

SystemState EvolutionOracle::evolve(const SystemState& state, double t) const {
    return SystemState::normalized(evolve(state.amps(), t), state.space(), state.basis());
}

double EvolutionOracle::energy(const ComplexVector& psi) const {
    if (psi.size() != dim_) fail(ErrorCode::DimensionMismatch, "state size does not match Hamiltonian");
    double e = 0.0;
    for (const Block& b : blocks_) {
        const int n = static_cast<int>(b.index.size());
        ComplexVector local(n);
        for (int i = 0; i < n; ++i) local(i) = psi(b.index[i]);
        ComplexVector coeff = b.vectors.adjoint() * local;
        e += (coeff.cwiseAbs2().array() * b.energies.array()).sum();
    }
    return e;
}

SystemState evolve_oracle(const ComplexMatrix& h, const SystemState& state, double t) {
    if (h.rows() != state.space().size()) fail(ErrorCode::DimensionMismatch, "Hamiltonian size does not match state");
    return EvolutionOracle(h).evolve(state, t);
}

SystemState evolve_exact_jc(const SystemState& state, double t, double g, double delta) {
    if (state.basis() != ModeBasis::quasi) fail(ErrorCode::BasisMismatch, "exact JC evolution runs in the quasi basis");
    if (!state.has_atom()) fail(ErrorCode::DimensionMismatch, "exact JC evolution needs the atom");
    const SystemSpace& sp = state.space();
    const ComplexVector& in = state.amps();
    ComplexVector out(in.size());
    const Complex ground_phase = std::polar(1.0, 0.5 * delta * t);   // E = -Delta/2
    const Complex excited_phase = std::polar(1.0, -0.5 * delta * t); // E = +Delta/2

    for (int m = 0; m < sp.dim2; ++m) {
        out(sp.index(0, m, kGround)) = ground_phase * in(sp.index(0, m, kGround));
        for (int n = 0; n + 1 < sp.dim1; ++n) {
            // h = [[Delta/2, c], [c, -Delta/2]] on (|n,+>, |n+1,->), c = g sqrt(n+1)
            const int ie = sp.index(n, m, kExcited), ig = sp.index(n + 1, m, kGround);
            const double c = g * std::sqrt(double(n + 1));
            const double w = std::sqrt(0.25 * delta * delta + c * c);
            const double cw = std::cos(w * t);
            const double sinc = w == 0.0 ? t : std::sin(w * t) / w;
            const Complex ue = in(ie), ug = in(ig);
            out(ie) = (cw - kI * sinc * 0.5 * delta) * ue - kI * sinc * c * ug;
            out(ig) = -kI * sinc * c * ue + (cw + kI * sinc * 0.5 * delta) * ug;
        }
        const int edge = sp.index(sp.dim1 - 1, m, kExcited);
        out(edge) = excited_phase * in(edge);
    }
    return SystemState::normalized(std::move(out), sp, ModeBasis::quasi);
}

SystemState evolve_effective(const SystemState& state, double t, double g, double delta, ShiftConvention shift) {
    if (state.basis() != ModeBasis::quasi) fail(ErrorCode::BasisMismatch, "effective evolution runs in the quasi basis");
    if (!state.has_atom()) fail(ErrorCode::DimensionMismatch, "effective evolution needs the atom");
    if (delta == 0.0 || detuning_regime(delta, g) == DetuningRegime::invalid) {
        fail(ErrorCode::DetuningTooSmall, "|Delta|/g below the dispersive threshold");
    }
    const SystemSpace& sp = state.space();
    const double chi = g * g / delta;
    const double s = shift_coefficient(chi, shift);
    ComplexVector out = state.amps();
    for (int n = 0; n < sp.dim1; ++n) {
        const Complex pg = std::polar(1.0, (0.5 * delta + chi * n) * t);
        const Complex pe = std::polar(1.0, -(0.5 * delta + chi * n + s) * t);
        for (int m = 0; m < sp.dim2; ++m) {
            out(sp.index(n, m, kGround)) *= pg;
            out(sp.index(n, m, kExcited)) *= pe;
        }
    }
    return SystemState::normalized(std::move(out), sp, ModeBasis::quasi);
}

double half_revival_time(double nbar, double g) {
    if (!(nbar > 0.0) || !(g > 0.0)) fail(ErrorCode::NonPositiveInput, "nbar and g must be positive");
    return 2.0 * kPi * std::sqrt(nbar) / g;
}

double preparation_time(double nbar, double g) { return 0.5 * half_revival_time(nbar, g); }

}  // namespace ecsim
