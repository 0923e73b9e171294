#include "ecsim/state.hpp"

#include <cmath>
#include <string>

#include "ecsim/errors.hpp"

namespace ecsim {

namespace {

void check_space(const SystemSpace& space, Eigen::Index size) {
    if (space.dim1 < 1 || space.dim2 < 1 || (space.atom_dim != 1 && space.atom_dim != 2)) {
        fail(ErrorCode::DimensionMismatch, "invalid system layout");
    }
    if (size != space.size()) fail(ErrorCode::DimensionMismatch, "amplitude count does not match layout");
}

}  // namespace

SystemState::SystemState(ComplexVector amps, SystemSpace space, ModeBasis basis)
    : amps_(std::move(amps)), space_(space), basis_(basis) {
    check_space(space_, amps_.size());
    const double norm = amps_.norm();
    if (!(std::abs(norm - 1.0) <= 1e-10)) {
        fail(ErrorCode::NormViolation, "state norm " + std::to_string(norm) + " differs from 1");
    }
}

SystemState SystemState::normalized(ComplexVector amps, SystemSpace space, ModeBasis basis) {
    check_space(space, amps.size());
    const double norm = amps.norm();
    if (!(norm > 0.0) || !std::isfinite(norm)) fail(ErrorCode::NormViolation, "cannot normalize state");
    amps /= norm;
    return SystemState(std::move(amps), space, basis);
}

SystemState SystemState::product(const FockVector& m1, const FockVector& m2, Complex gamma, Complex delta,
                                 ModeBasis basis) {
    const double atom_norm = std::norm(gamma) + std::norm(delta);
    if (std::abs(atom_norm - 1.0) > 1e-10) fail(ErrorCode::NormViolation, "|gamma|^2 + |delta|^2 != 1");
    SystemSpace space{m1.dim(), m2.dim(), 2};
    ComplexVector amps(space.size());
    for (int n = 0; n < m1.dim(); ++n)
        for (int m = 0; m < m2.dim(); ++m) {
            const Complex f = m1[n] * m2[m];
            amps(space.index(n, m, kGround)) = f * gamma;
            amps(space.index(n, m, kExcited)) = f * delta;
        }
    return normalized(std::move(amps), space, basis);
}

SystemState SystemState::field_product(const FockVector& m1, const FockVector& m2, ModeBasis basis) {
    SystemSpace space{m1.dim(), m2.dim(), 1};
    ComplexVector amps(space.size());
    for (int n = 0; n < m1.dim(); ++n)
        for (int m = 0; m < m2.dim(); ++m) amps(space.index(n, m)) = m1[n] * m2[m];
    return normalized(std::move(amps), space, basis);
}

Complex inner(const SystemState& a, const SystemState& b) {
    if (!(a.space() == b.space())) fail(ErrorCode::DimensionMismatch, "states live in different spaces");
    if (a.basis() != b.basis()) fail(ErrorCode::BasisMismatch, "states are tagged with different bases");
    return a.amps().dot(b.amps());
}

SystemState to_quasi(const SystemState& state, const BeamSplitter& rotation) {
    if (state.basis() != ModeBasis::physical) fail(ErrorCode::BasisMismatch, "to_quasi expects a physical state");
    if (state.dim1() != rotation.dim1() || state.dim2() != rotation.dim2()) {
        fail(ErrorCode::DimensionMismatch, "rotation grid does not match state");
    }
    return SystemState::normalized(rotation.apply(state.amps(), state.space().atom_dim), state.space(),
                                   ModeBasis::quasi);
}

SystemState to_physical(const SystemState& state, const BeamSplitter& rotation) {
    if (state.basis() != ModeBasis::quasi) fail(ErrorCode::BasisMismatch, "to_physical expects a quasi state");
    if (state.dim1() != rotation.dim1() || state.dim2() != rotation.dim2()) {
        fail(ErrorCode::DimensionMismatch, "rotation grid does not match state");
    }
    return SystemState::normalized(rotation.apply(state.amps(), state.space().atom_dim, true), state.space(),
                                   ModeBasis::physical);
}

}  // namespace ecsim
