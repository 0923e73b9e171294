#include "ecsim/hamiltonian.hpp"

#include <cmath>

#include "ecsim/errors.hpp"
#include "ecsim/fock.hpp"
#include "ecsim/linalg.hpp"

namespace ecsim {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};

ComplexMatrix eye(int n) { return ComplexMatrix::Identity(n, n); }

ComplexMatrix sigma_plus() {
    ComplexMatrix s = ComplexMatrix::Zero(2, 2);
    s(kExcited, kGround) = 1.0;
    return s;
}

ComplexMatrix sigma_z() {
    ComplexMatrix s = ComplexMatrix::Zero(2, 2);
    s(kGround, kGround) = -1.0;
    s(kExcited, kExcited) = 1.0;
    return s;
}

void require(bool ok, const char* what) {
    if (!ok) fail(ErrorCode::InvalidVariantParams, what);
}

void require_finite(std::initializer_list<double> values) {
    for (double v : values) require(std::isfinite(v), "non-finite Hamiltonian parameter");
}

void require_dispersive(double delta, double g) {
    require(delta != 0.0, "dispersive variant needs nonzero detuning");
    require(detuning_regime(delta, g) != DetuningRegime::invalid,
            "detuning too small for a dispersive variant (|Delta|/g < 5)");
}

struct Ops {
    ComplexMatrix a, b, sp, sz, excited;
    ComplexMatrix id;
};

Ops make_ops(int dim1, int dim2) {
    Ops o;
    o.a = mode_one_annihilation(dim1, dim2);
    o.b = mode_two_annihilation(dim1, dim2);
    o.sp = atom_raising(dim1, dim2);
    o.sz = atom_inversion(dim1, dim2);
    o.excited = o.sp * o.sp.adjoint();
    o.id = eye(dim1 * dim2 * 2);
    return o;
}

// Dispersive two-mode form (a^dag, b^dag) M (a, b)^T sz + shift s+s- + (split/2) sz.
ComplexMatrix dispersive(const Ops& o, double m11, double m12, double m22, double shift, double split) {
    ComplexMatrix ad = o.a.adjoint(), bd = o.b.adjoint();
    ComplexMatrix quad = m11 * ad * o.a + m22 * bd * o.b + m12 * (ad * o.b + o.a * bd);
    return quad * o.sz + shift * o.excited + 0.5 * split * o.sz;
}

}  // namespace

std::string_view variant_name(const HamiltonianSpec& spec) {
    return std::visit(overloaded{
                          [](const LabModel&) { return std::string_view("lab"); },
                          [](const InteractionModel&) { return std::string_view("interaction"); },
                          [](const QuasiJcModel&) { return std::string_view("quasiJC"); },
                          [](const EffectiveEqualFreqModel&) { return std::string_view("effectiveEqualFreq"); },
                          [](const EffectiveFalseModel&) { return std::string_view("effectiveFalse"); },
                          [](const EffectiveCorrectModel&) { return std::string_view("effectiveCorrect"); },
                          [](const DecoupledModel&) { return std::string_view("decoupled"); },
                      },
                      spec);
}

DetuningRegime detuning_regime(double delta, double g) {
    if (g == 0.0) return DetuningRegime::dispersive;
    const double ratio = std::abs(delta) / std::abs(g);
    if (ratio >= kRatioMin) return DetuningRegime::dispersive;
    if (ratio >= kRatioReject) return DetuningRegime::marginal;
    return DetuningRegime::invalid;
}

DetuningRegime effective_validity(const HamiltonianSpec& spec) {
    auto worst = [](DetuningRegime x, DetuningRegime y) { return static_cast<int>(x) > static_cast<int>(y) ? x : y; };
    auto two_mode = [&](double d1, double d2, double g1, double g2) {
        const double g = std::hypot(g1, g2);
        return worst(detuning_regime(d1, g), detuning_regime(d2, g));
    };
    return std::visit(overloaded{
                          [](const EffectiveEqualFreqModel& m) { return detuning_regime(m.delta, m.g); },
                          [&](const EffectiveFalseModel& m) { return two_mode(m.delta1, m.delta2, m.g1, m.g2); },
                          [&](const EffectiveCorrectModel& m) { return two_mode(m.delta1, m.delta2, m.g1, m.g2); },
                          [&](const DecoupledModel& m) { return two_mode(m.delta1, m.delta2, m.g1, m.g2); },
                          [](const auto&) { return DetuningRegime::dispersive; },
                      },
                      spec);
}

double shift_coefficient(double g_squared_over_delta, ShiftConvention convention) {
    return convention == ShiftConvention::derived ? g_squared_over_delta : 0.5 * g_squared_over_delta;
}

ComplexMatrix mode_one_annihilation(int dim1, int dim2) {
    return linalg::kron(ladder_matrix(dim1), eye(dim2), eye(2));
}

ComplexMatrix mode_two_annihilation(int dim1, int dim2) {
    return linalg::kron(eye(dim1), ladder_matrix(dim2), eye(2));
}

ComplexMatrix atom_raising(int dim1, int dim2) { return linalg::kron(eye(dim1), eye(dim2), sigma_plus()); }

ComplexMatrix atom_inversion(int dim1, int dim2) { return linalg::kron(eye(dim1), eye(dim2), sigma_z()); }

ComplexMatrix excitation_matrix(int dim1, int dim2) {
    ComplexMatrix a = mode_one_annihilation(dim1, dim2), b = mode_two_annihilation(dim1, dim2);
    return 0.5 * atom_inversion(dim1, dim2) + a.adjoint() * a + b.adjoint() * b;
}

ComplexMatrix build_hamiltonian(const HamiltonianSpec& spec, int dim1, int dim2) {
    if (dim1 < 2 || dim2 < 2) fail(ErrorCode::DimTooSmall, "Hamiltonian needs mode dims >= 2");
    const Ops o = make_ops(dim1, dim2);
    const ComplexMatrix ad = o.a.adjoint(), bd = o.b.adjoint(), sm = o.sp.adjoint();

    return std::visit(
        overloaded{
            [&](const LabModel& m) -> ComplexMatrix {
                require_finite({m.omega_atom, m.omega1, m.omega2, m.g1, m.g2});
                ComplexMatrix coupling = (m.g1 * o.a + m.g2 * o.b) * o.sp;
                return 0.5 * m.omega_atom * o.sz + m.omega1 * ad * o.a + m.omega2 * bd * o.b + coupling +
                       coupling.adjoint();
            },
            [&](const InteractionModel& m) -> ComplexMatrix {
                require_finite({m.delta, m.g1, m.g2});
                ComplexMatrix coupling = (m.g1 * o.a + m.g2 * o.b) * o.sp;
                return 0.5 * m.delta * o.sz + coupling + coupling.adjoint();
            },
            [&](const QuasiJcModel& m) -> ComplexMatrix {
                require_finite({m.delta, m.g});
                ComplexMatrix coupling = m.g * o.a * o.sp;
                return 0.5 * m.delta * o.sz + coupling + coupling.adjoint();
            },
            [&](const EffectiveEqualFreqModel& m) -> ComplexMatrix {
                require_finite({m.delta, m.g});
                require_dispersive(m.delta, m.g);
                const double chi = m.g * m.g / m.delta;
                return (0.5 * m.delta * o.id + chi * ad * o.a) * o.sz + shift_coefficient(chi, m.shift) * o.excited;
            },
            [&](const EffectiveFalseModel& m) -> ComplexMatrix {
                require_finite({m.delta1, m.delta2, m.g1, m.g2, m.atomic_splitting});
                require_dispersive(m.delta1, std::hypot(m.g1, m.g2));
                require_dispersive(m.delta2, std::hypot(m.g1, m.g2));
                return dispersive(o, m.g1 * m.g1 / m.delta1, 0.0, m.g2 * m.g2 / m.delta2, 0.0, m.atomic_splitting);
            },
            [&](const EffectiveCorrectModel& m) -> ComplexMatrix {
                require_finite({m.delta1, m.delta2, m.g1, m.g2, m.atomic_splitting});
                require_dispersive(m.delta1, std::hypot(m.g1, m.g2));
                require_dispersive(m.delta2, std::hypot(m.g1, m.g2));
                const double m11 = m.g1 * m.g1 / m.delta1, m22 = m.g2 * m.g2 / m.delta2;
                const double m12 = 0.5 * (m.g1 * m.g2 / m.delta1 + m.g1 * m.g2 / m.delta2);
                return dispersive(o, m11, m12, m22, shift_coefficient(m11 + m22, m.shift), m.atomic_splitting);
            },
            [&](const DecoupledModel& m) -> ComplexMatrix {
                require_finite({m.delta1, m.delta2, m.g1, m.g2, m.atomic_splitting});
                require_dispersive(m.delta1, std::hypot(m.g1, m.g2));
                require_dispersive(m.delta2, std::hypot(m.g1, m.g2));
                const DecoupleParams p = decouple_params(m.g1, m.g2, m.delta1, m.delta2);
                return dispersive(o, p.lambda_mode, 0.0, p.zeta_mode,
                                  shift_coefficient(p.lambda_mode + p.zeta_mode, m.shift), m.atomic_splitting);
            },
        },
        spec);
}

}  // namespace ecsim
