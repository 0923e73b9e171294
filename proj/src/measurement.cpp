#include "ecsim/measurement.hpp"

#include <cmath>

#include "ecsim/errors.hpp"

namespace ecsim {

namespace {

MeasurementOutcome project(const SystemState& state, OutcomeLabel label, Complex on_ground, Complex on_excited) {
    const SystemSpace& sp = state.space();
    SystemSpace field{sp.dim1, sp.dim2, 1};
    ComplexVector amps(field.size());
    for (int n = 0; n < sp.dim1; ++n)
        for (int m = 0; m < sp.dim2; ++m)
            amps(field.index(n, m)) = std::conj(on_ground) * state.at(n, m, kGround) +
                                      std::conj(on_excited) * state.at(n, m, kExcited);
    MeasurementOutcome out{label, amps.squaredNorm(), std::nullopt};
    if (out.probability > 1e-14) out.post_state = SystemState::normalized(std::move(amps), field, state.basis());
    return out;
}

}  // namespace

std::pair<MeasurementOutcome, MeasurementOutcome> measure_atom(const SystemState& state, MeasurementBasis basis) {
    if (!state.has_atom()) fail(ErrorCode::DimensionMismatch, "state has no atom to measure");
    if (std::abs(state.amps().norm() - 1.0) > 1e-10) fail(ErrorCode::NormViolation, "state is not normalized");
    if (basis == MeasurementBasis::energy) {
        return {project(state, OutcomeLabel::plus, 0.0, 1.0), project(state, OutcomeLabel::minus, 1.0, 0.0)};
    }
    const double r = 1.0 / std::sqrt(2.0);
    return {project(state, OutcomeLabel::plus, r, r), project(state, OutcomeLabel::minus, r, -r)};
}

}  // namespace ecsim
