#include "ecsim/elimination.hpp"

#include <cmath>

#include "ecsim/errors.hpp"
#include "ecsim/fock.hpp"
#include "ecsim/linalg.hpp"
#include "ecsim/state.hpp"

namespace ecsim {

namespace {

void check(double g, double delta, int dim, int n_max) {
    if (n_max < 0 || n_max + kEliminationBuffer >= dim) {
        fail(ErrorCode::DimTooSmall, "need n_max + buffer < dim for the projected block");
    }
    if (delta == 0.0 || detuning_regime(delta, g) == DetuningRegime::invalid) {
        fail(ErrorCode::DetuningTooSmall, "|Delta|/g below the dispersive threshold");
    }
}

double projected_norm(const ComplexMatrix& m, int n_max) {
    const int k = 2 * (n_max + 1);
    return linalg::operator_norm(m.topLeftCorner(k, k));
}

struct Transform {
    ComplexMatrix u, u_inv;
    ComplexMatrix conj(const ComplexMatrix& x) const { return u * x * u_inv; }
};

Transform make_transform(double g, double delta, int dim) {
    const ComplexMatrix s = elimination_generator(g, delta, dim);
    return {linalg::expm_antihermitian(s), linalg::expm_antihermitian(-s)};
}

}  // namespace

JcOperators jc_operators(int dim) {
    ComplexMatrix sp = ComplexMatrix::Zero(2, 2), sz = ComplexMatrix::Zero(2, 2);
    sp(kExcited, kGround) = 1.0;
    sz(kGround, kGround) = -1.0;
    sz(kExcited, kExcited) = 1.0;
    const ComplexMatrix id_f = ComplexMatrix::Identity(dim, dim), id_a = ComplexMatrix::Identity(2, 2);
    JcOperators o;
    o.a = linalg::kron(ladder_matrix(dim), id_a);
    o.sp = linalg::kron(id_f, sp);
    o.sm = o.sp.adjoint();
    o.sz = linalg::kron(id_f, sz);
    return o;
}

ComplexMatrix jc_hamiltonian(double g, double delta, int dim) {
    const JcOperators o = jc_operators(dim);
    return 0.5 * delta * o.sz + g * (o.a.adjoint() * o.sm + o.a * o.sp);
}

ComplexMatrix elimination_generator(double g, double delta, int dim) {
    if (delta == 0.0) fail(ErrorCode::ZeroDetuning, "elimination needs nonzero detuning");
    const JcOperators o = jc_operators(dim);
    const double lambda = g / delta;
    return lambda * (o.a * o.sp - o.a.adjoint() * o.sm);
}

ComplexMatrix eliminated_hamiltonian(double g, double delta, int dim, ShiftConvention shift) {
    if (delta == 0.0) fail(ErrorCode::ZeroDetuning, "elimination needs nonzero detuning");
    const JcOperators o = jc_operators(dim);
    const double chi = g * g / delta;
    return 0.5 * delta * o.sz + chi * o.a.adjoint() * o.a * o.sz + shift_coefficient(chi, shift) * o.sp * o.sm;
}

double adiabatic_residual(double g, double delta, int dim, int n_max, ShiftConvention shift) {
    check(g, delta, dim, n_max);
    const Transform t = make_transform(g, delta, dim);
    const ComplexMatrix diff = t.conj(jc_hamiltonian(g, delta, dim)) - eliminated_hamiltonian(g, delta, dim, shift);
    return projected_norm(diff, n_max);
}

TransformResiduals transform_residuals(double g, double delta, int dim, int n_max, ShiftConvention shift) {
    check(g, delta, dim, n_max);
    const Transform t = make_transform(g, delta, dim);
    const JcOperators o = jc_operators(dim);
    const double lambda = g / delta;
    const double c = shift == ShiftConvention::derived ? 2.0 : 1.0;
    const ComplexMatrix ad = o.a.adjoint();

    TransformResiduals r;
    r.annihilation = projected_norm(t.conj(o.a) - (o.a + lambda * o.sm), n_max);
    r.lowering = projected_norm(t.conj(o.sm) - (o.sm + lambda * o.a * o.sz), n_max);
    const ComplexMatrix sz_expected = o.sz - 2.0 * lambda * (ad * o.sm + o.a * o.sp) -
                                      2.0 * lambda * lambda * ad * o.a * o.sz - c * lambda * lambda * o.sp * o.sm;
    r.inversion = projected_norm(t.conj(o.sz) - sz_expected, n_max);
    return r;
}

}  // namespace ecsim
