#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "ecsim/hamiltonian.hpp"
#include "ecsim/measurement.hpp"
#include "ecsim/types.hpp"

namespace ecsim {

enum class Scenario { validate, zero_detuning, large_detuning, adiabatic_sweep, qfunc };

const char* to_string(Scenario s);
// Accepts the CLI spelling ("zero-detuning"); throws ConfigInvalid otherwise.
Scenario parse_scenario(const std::string& name);

// Which cat branch sign a zero-detuning run scores against; best takes the larger fidelity.
enum class ConventionChoice { best, minus, plus };

/// Everything a run needs. Units: g = 1 by default, times in 1/g.
struct ScenarioConfig {
    Scenario scenario = Scenario::validate;

    // g1 = g2 = 1/sqrt(2), so the quasi-mode coupling g is 1
    double g1 = 0.70710678118654752;
    double g2 = 0.70710678118654752;
    double delta = 0.0;
    // If both are set, delta = omega_atom - omega.
    double omega_atom = 0.0;
    double omega = 0.0;

    double alpha_re = 0.0, alpha_im = 0.0;
    double beta_re = 0.0, beta_im = 0.0;
    // Atomic amplitudes on |-> and |+>; normalized before use.
    double gamma_re = 1.0, gamma_im = 0.0;
    double atom_delta_re = 0.0, atom_delta_im = 0.0;
    double z1_re = 0.0, z1_im = 0.0;
    double z2_re = 0.0, z2_im = 0.0;

    // 0 picks a dimension from the amplitudes.
    int dim1 = 0;
    int dim2 = 0;
    double leak_tol = kDefaultLeakTol;
    // 0 picks a scenario default.
    double t_end = 0.0;
    int t_steps = 201;
    MeasurementBasis measure_basis = MeasurementBasis::plusminus;
    ConventionChoice convention = ConventionChoice::best;
    ShiftConvention shift = ShiftConvention::derived;

    std::uint64_t seed = 1;
    int cases = 10;
    int n_max = 10;
    std::vector<double> sweep_deltas = {25.0, 50.0, 100.0, 200.0};
    int grid_count = 101;
    // 0 uses the default half-width 1.5 (|mu| + 2).
    double grid_extent = 0.0;

    std::filesystem::path out = "out";

    Complex alpha() const { return {alpha_re, alpha_im}; }
    Complex beta() const { return {beta_re, beta_im}; }
    Complex gamma() const { return {gamma_re, gamma_im}; }
    Complex atom_delta() const { return {atom_delta_re, atom_delta_im}; }
    Complex z1() const { return {z1_re, z1_im}; }
    Complex z2() const { return {z2_re, z2_im}; }
};

// Scenario-specific starting values (before file and flags).
ScenarioConfig default_config(Scenario s);

/// One settable key. `key` is the file spelling; the CLI flag is --key with '_' -> '-'.
struct ParameterInfo {
    std::string key;
    std::string help;
};

const std::vector<ParameterInfo>& parameter_table();
std::string flag_name(const std::string& key);

// Throws ConfigInvalid on unknown keys or unparsable values.
void set_parameter(ScenarioConfig& cfg, const std::string& key, const std::string& value);

// Flat "key = value" lines; '#' starts a comment. Returns the pairs in file order.
std::vector<std::pair<std::string, std::string>> parse_config_text(const std::string& text);
std::vector<std::pair<std::string, std::string>> read_config_file(const std::filesystem::path& path);

// All parameters as strings, keyed by file spelling (for echoing into reports).
std::map<std::string, std::string> echo(const ScenarioConfig& cfg);

// Range and consistency checks; throws ConfigInvalid.
void validate_config(ScenarioConfig& cfg);

}  // namespace ecsim
