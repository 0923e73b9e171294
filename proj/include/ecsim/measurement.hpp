#pragma once

#include <optional>
#include <utility>

#include "ecsim/state.hpp"

namespace ecsim {

// plusminus: (|-> +- |+>)/sqrt(2); energy: |-> and |+> themselves.
enum class MeasurementBasis { plusminus, energy };

enum class OutcomeLabel { plus, minus };

struct MeasurementOutcome {
    OutcomeLabel label;
    double probability = 0.0;
    // Field-only state after projection; empty when the outcome has zero probability.
    std::optional<SystemState> post_state;
};

// Returns (plus, minus). In the energy basis "plus" is |+> and "minus" is |->.
std::pair<MeasurementOutcome, MeasurementOutcome> measure_atom(const SystemState& state, MeasurementBasis basis);

}  // namespace ecsim
