#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ecsim/analysis.hpp"
#include "ecsim/config.hpp"
#include "ecsim/measurement.hpp"
#include "ecsim/modemap.hpp"
#include "ecsim/state.hpp"

namespace ecsim {

struct Check {
    std::string name;
    double value = 0.0;
    double threshold = 0.0;
    std::string relation;  // ">=", "<=", "in"
    bool pass = false;
    double upper = 0.0;    // used when relation == "in"
};

struct RunReport {
    Scenario scenario = Scenario::validate;
    std::map<std::string, std::string> config;
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
    std::vector<std::pair<std::string, double>> scalars;
    std::vector<Check> checks;
    std::optional<PhaseSpaceGrid> qgrid;
    double wall_clock_seconds = 0.0;

    bool passed() const;
    // Throws ConfigInvalid for unknown names.
    double scalar(const std::string& name) const;
};

// Validates cfg, runs the scenario. Module errors propagate with the scenario name prefixed.
RunReport run_scenario(ScenarioConfig cfg);

/// Zero-detuning preparation in the quasi basis on a square dim x dim grid.
struct CatPreparation {
    ModeRotation rot;
    Complex mu, nu;
    double nbar = 0.0;
    double time = 0.0;  // preparation time, half the revival time
    int dim = 0;
    SystemState initial;   // quasi basis
    SystemState prepared;  // quasi basis, at `time`
    double atom_purity = 0.0;
    double fidelity_minus = 0.0;
    double fidelity_plus = 0.0;
};

// dim = 0 picks the smallest grid holding the total photon distribution within leak_tol.
CatPreparation prepare_cat(Complex alpha, Complex beta, double g1, double g2, Complex gamma, Complex atom_delta,
                           int dim = 0, double leak_tol = kDefaultLeakTol);

/// Large-detuning preparation: full interaction Hamiltonian (oracle) vs the effective model.
struct DispersivePreparation {
    ModeRotation rot;
    Complex mu, nu;
    double delta = 0.0;
    double time = 0.0;  // pi Delta / (2 g^2) unless given
    int dim = 0;
    SystemState full;       // physical basis
    SystemState effective;  // physical basis
    double fidelity = 0.0;  // |<effective|full>|^2
    double branch_overlap = 0.0;  // |<i mu|-i mu>|
    std::pair<MeasurementOutcome, MeasurementOutcome> measured_effective;
    std::pair<MeasurementOutcome, MeasurementOutcome> measured_full;
};

DispersivePreparation prepare_dispersive(Complex alpha, Complex beta, double g1, double g2, double delta,
                                         Complex gamma, Complex atom_delta,
                                         MeasurementBasis basis = MeasurementBasis::plusminus, int dim = 0,
                                         double time = -1.0, ShiftConvention shift = ShiftConvention::derived,
                                         double leak_tol = kDefaultLeakTol);

// |<a|b>| of two outcome post-states; 0 if either is missing.
double post_state_overlap(const std::pair<MeasurementOutcome, MeasurementOutcome>& outcomes);

/// Position of the largest deviation of <sz> from its collapse-plateau mean in [t_R/2, 3 t_R/2],
/// sampled at `samples` points, for |mu>_I |nu>_II |->.
double revival_peak_time(Complex mu, double g, int samples = 2001, double leak_tol = kDefaultLeakTol);

}  // namespace ecsim
