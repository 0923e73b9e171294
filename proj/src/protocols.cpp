#include "ecsim/protocols.hpp"

#include <cmath>

#include "ecsim/errors.hpp"

namespace ecsim {

namespace {

void require_nbar(Complex mu, double nbar) {
    if (std::abs(std::norm(mu) - nbar) > 1e-9 * std::max(1.0, nbar)) {
        fail(ErrorCode::ParameterOutOfRange, "nbar must equal |mu|^2");
    }
}

ComplexVector kron_vec(const ComplexVector& a, const ComplexVector& b) {
    ComplexVector out(a.size() * b.size());
    for (Eigen::Index i = 0; i < a.size(); ++i) out.segment(i * b.size(), b.size()) = a(i) * b;
    return out;
}

}  // namespace

const char* to_string(CatConvention c) { return c == CatConvention::minus ? "minus" : "plus"; }

SystemState large_amplitude_state(double t, Complex mu, double nbar, Complex gamma, Complex delta, double g,
                                 int dim, const FockVector& mode_two, double leak_tol) {
    if (std::abs(std::norm(gamma) + std::norm(delta) - 1.0) > 1e-10) {
        fail(ErrorCode::NormViolation, "|gamma|^2 + |delta|^2 != 1");
    }
    if (!(nbar > 0.0) || !(g > 0.0)) fail(ErrorCode::NonPositiveInput, "nbar and g must be positive");
    require_nbar(mu, nbar);

    const double root = std::sqrt(nbar);
    const double omega_t = g * t / (2.0 * root);  // per-photon phase
    const double chi_t = 0.5 * g * t * root;      // common phase
    const Complex e_phi = mu / std::abs(mu);      // e^{-i phi}
    const Complex minus = std::polar(1.0, -omega_t), plus = std::polar(1.0, omega_t);

    // Branch fields |mu e^{-i w t}> (carries e^{-i chi}) and |mu e^{+i w t}> (carries e^{+i chi}).
    const ComplexVector f1 = coherent_state(mu * minus, dim, leak_tol).amps();
    const ComplexVector f2 = coherent_state(mu * plus, dim, leak_tol).amps();
    const Complex c1 = std::polar(1.0, -chi_t), c2 = std::polar(1.0, chi_t);

    // Atomic vectors (|->, |+>) for each branch, gamma = 1 and delta = 1 solutions combined.
    Eigen::Vector2cd a1, a2;
    a1 << gamma + delta * std::conj(e_phi), gamma * e_phi * minus + delta * minus;
    a2 << gamma - delta * std::conj(e_phi), -gamma * e_phi * plus + delta * plus;

    SystemSpace sp{dim, mode_two.dim(), 2};
    ComplexVector amps(sp.size());
    const ComplexVector& two = mode_two.amps();
    for (int n = 0; n < dim; ++n)
        for (int m = 0; m < mode_two.dim(); ++m)
            for (int s = 0; s < 2; ++s)
                amps(sp.index(n, m, s)) = 0.5 * two(m) * (c1 * f1(n) * a1(s) + c2 * f2(n) * a2(s));
    return SystemState::normalized(std::move(amps), sp, ModeBasis::quasi);
}

FockVector cat_target(Complex mu, double nbar, CatConvention convention, int dim, double leak_tol) {
    require_nbar(mu, nbar);
    const double sign = convention == CatConvention::minus ? -1.0 : 1.0;
    const Complex w1 = std::polar(1.0, kPi * nbar), w2 = sign * std::polar(1.0, -kPi * nbar);
    const FockVector up = coherent_state(kI * mu, dim, leak_tol);
    const FockVector down = coherent_state(-kI * mu, dim, leak_tol);
    ComplexVector amps = w1 * up.amps() + w2 * down.amps();
    const double norm2 = amps.squaredNorm();
    if (!(norm2 > 1e-12)) fail(ErrorCode::DegenerateCat, "cat branches cancel");
    amps /= std::sqrt(norm2);
    TruncationReport report{{kI * mu, -kI * mu}, dim, std::max(up.truncation().tail_mass, down.truncation().tail_mass)};
    return FockVector(std::move(amps), std::move(report));
}

SystemState two_mode_cat_target(Complex alpha, Complex beta, const ModeRotation& rot, double nbar, int dim1,
                                int dim2, CatConvention convention, double leak_tol) {
    const AmplitudePair physical{alpha, beta, ModeBasis::physical};
    const AmplitudePair quasi = rotate_amplitudes(rot, physical, Direction::forward);
    require_nbar(quasi.first, nbar);
    const AmplitudePair first = quasi_phase_amplitudes(rot, kI, physical);
    const AmplitudePair second = quasi_phase_amplitudes(rot, -kI, physical);
    const double sign = convention == CatConvention::minus ? -1.0 : 1.0;
    const Complex w1 = std::polar(1.0, kPi * nbar), w2 = sign * std::polar(1.0, -kPi * nbar);
    ComplexVector amps = w1 * kron_vec(coherent_state(first.first, dim1, leak_tol).amps(),
                                       coherent_state(first.second, dim2, leak_tol).amps()) +
                         w2 * kron_vec(coherent_state(second.first, dim1, leak_tol).amps(),
                                       coherent_state(second.second, dim2, leak_tol).amps());
    if (!(amps.squaredNorm() > 1e-12)) fail(ErrorCode::DegenerateCat, "cat branches cancel");
    return SystemState::normalized(std::move(amps), SystemSpace{dim1, dim2, 1}, ModeBasis::physical);
}

}  // namespace ecsim
