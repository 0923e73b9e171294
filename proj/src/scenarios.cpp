#include "ecsim/scenarios.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <random>

#include "ecsim/errors.hpp"
#include "ecsim/evolution.hpp"
#include "ecsim/hamiltonian.hpp"
#include "ecsim/elimination.hpp"
#include "ecsim/linalg.hpp"
#include "ecsim/protocols.hpp"

namespace ecsim {

namespace {

std::vector<double> time_grid(double t_end, int steps) {
    std::vector<double> t(steps);
    for (int k = 0; k < steps; ++k) t[k] = steps == 1 ? t_end : t_end * k / (steps - 1);
    return t;
}

Check at_least(std::string name, double value, double threshold) {
    return {std::move(name), value, threshold, ">=", value >= threshold, 0.0};
}

Check at_most(std::string name, double value, double threshold) {
    return {std::move(name), value, threshold, "<=", value <= threshold, 0.0};
}

Check within(std::string name, double value, double lo, double hi) {
    return {std::move(name), value, lo, "in", value >= lo && value <= hi, hi};
}

// Atomic amplitudes normalized to unit weight.
std::pair<Complex, Complex> atom_amplitudes(const ScenarioConfig& cfg) {
    const double n = std::sqrt(std::norm(cfg.gamma()) + std::norm(cfg.atom_delta()));
    return {cfg.gamma() / n, cfg.atom_delta() / n};
}

int square_dim(const ScenarioConfig& cfg, double magnitude) {
    if (cfg.dim1 != cfg.dim2) fail(ErrorCode::ConfigInvalid, "this scenario needs dim1 = dim2");
    return cfg.dim1 > 0 ? cfg.dim1 : coherent_dim(magnitude, cfg.leak_tol);
}

double total_magnitude(Complex a, Complex b) { return std::sqrt(std::norm(a) + std::norm(b)); }

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}
    // [0, 1) from the top 53 bits; independent of the standard library's distributions.
    double uniform() { return double(engine_() >> 11) * 0x1.0p-53; }
    double symmetric() { return 2.0 * uniform() - 1.0; }
    template <class T>
    T pick(const std::vector<T>& items) {
        return items[static_cast<std::size_t>(uniform() * items.size())];
    }

private:
    std::mt19937_64 engine_;
};

// Random normalized state supported on excitation number n + m + s <= dim - 1.
SystemState random_state(Rng& rng, int dim) {
    SystemSpace sp{dim, dim, 2};
    ComplexVector v = ComplexVector::Zero(sp.size());
    for (int n = 0; n < dim; ++n)
        for (int m = 0; n + m < dim; ++m)
            for (int s = 0; s < 2; ++s)
                if (n + m + s <= dim - 1) v(sp.index(n, m, s)) = Complex(rng.symmetric(), rng.symmetric());
    return SystemState::normalized(std::move(v), sp, ModeBasis::physical);
}

double expectation(const ComplexMatrix& op, const ComplexVector& v) { return std::real(v.dot(op * v)); }

RunReport run_validate(const ScenarioConfig& cfg) {
    RunReport rep;
    rep.columns = {"case", "g1", "g2", "delta", "t", "fidelity", "excitation_drift", "excitation_sq_drift"};
    Rng rng(cfg.seed);
    const int dim = cfg.dim1 > 0 ? cfg.dim1 : 8;
    const std::vector<double> g_grid = {0.0, 0.5, 1.0, 2.0};
    const std::vector<double> delta_factor = {0.0, 0.5, 5.0};
    const ComplexMatrix n_op = excitation_matrix(dim, dim);
    const ComplexMatrix n2_op = n_op * n_op;
    double worst_fid = 1.0, worst_drift = 0.0;
    for (int k = 0; k < cfg.cases; ++k) {
        double g1 = rng.pick(g_grid), g2 = rng.pick(g_grid);
        if (g1 == 0.0 && g2 == 0.0) g1 = 1.0;
        const ModeRotation rot = rotation_params(g1, g2);
        const double delta = rng.pick(delta_factor) * rot.g;
        const double t = cfg.t_end * rng.uniform();
        const SystemState psi = random_state(rng, dim);

        const ComplexMatrix h = build_hamiltonian(InteractionModel{delta, g1, g2}, dim, dim);
        const SystemState direct = evolve_oracle(h, psi, t);
        const BeamSplitter r(rot.theta, dim, dim);
        const SystemState routed = to_physical(evolve_exact_jc(to_quasi(psi, r), t, rot.g, delta), r);
        const double fid = fidelity(direct, routed);
        const double drift = std::abs(expectation(n_op, direct.amps()) - expectation(n_op, psi.amps()));
        const double drift2 = std::abs(expectation(n2_op, direct.amps()) - expectation(n2_op, psi.amps()));
        worst_fid = std::min(worst_fid, fid);
        worst_drift = std::max({worst_drift, drift, drift2});
        rep.rows.push_back({double(k), g1, g2, delta, t, fid, drift, drift2});
    }
    rep.checks.push_back(at_least("basis_equivalence_fidelity", worst_fid, 1.0 - 1e-9));
    rep.checks.push_back(at_most("excitation_conservation", worst_drift, 1e-9));

    const ModeRotation rot = rotation_params(cfg.g1, cfg.g2);
    {
        const int d = 40;
        const BeamSplitter r(rot.theta, d, d);
        const AmplitudePair q = rotate_amplitudes(rot, {cfg.alpha(), cfg.beta(), ModeBasis::physical}, Direction::forward);
        const SystemState phys = SystemState::field_product(coherent_state(cfg.alpha(), d, cfg.leak_tol),
                                                            coherent_state(cfg.beta(), d, cfg.leak_tol),
                                                            ModeBasis::physical);
        const SystemState quasi = SystemState::field_product(coherent_state(q.first, d, cfg.leak_tol),
                                                             coherent_state(q.second, d, cfg.leak_tol), ModeBasis::quasi);
        const double f = fidelity(to_quasi(phys, r), quasi);
        rep.scalars.push_back({"mu_re", q.first.real()});
        rep.scalars.push_back({"mu_im", q.first.imag()});
        rep.scalars.push_back({"nu_re", q.second.real()});
        rep.scalars.push_back({"nu_im", q.second.imag()});
        rep.checks.push_back(at_least("coherent_factorization_fidelity", f, 1.0 - 1e-8));
    }
    {
        const SqueezeForm form = cfg.z1() == cfg.z2() ? SqueezeForm::product : SqueezeForm::exponent;
        const double res = squeeze_identity_residual(rot, cfg.z1(), cfg.z2(), 60, kSqueezeCheckTotal, form);
        rep.checks.push_back(at_most(form == SqueezeForm::product ? "squeeze_product_residual"
                                                                  : "squeeze_exponent_residual",
                                     res, 1e-6));
    }
    {
        // quasi-mode II reduced state under the quasi JC evolution
        const int d = dim;
        Rng local(cfg.seed ^ 0x9e3779b97f4a7c15ULL);
        const SystemState psi = random_state(local, d);
        const BeamSplitter r(rot.theta, d, d);
        const SystemState q0 = to_quasi(psi, r);
        const SystemState q1 = evolve_exact_jc(q0, cfg.t_end, rot.g, cfg.delta);
        const ComplexMatrix rho0 = partial_trace(q0, {Subsystem::mode2}).rho;
        const ComplexMatrix rho1 = partial_trace(q1, {Subsystem::mode2}).rho;
        const Eigen::VectorXd ev = Eigen::SelfAdjointEigenSolver<ComplexMatrix>(rho1 - rho0).eigenvalues();
        rep.checks.push_back(at_most("mode_two_trace_distance", 0.5 * ev.cwiseAbs().sum(), 1e-10));
    }
    rep.scalars.push_back({"cases", double(cfg.cases)});
    rep.scalars.push_back({"dim", double(dim)});
    return rep;
}

RunReport run_zero_detuning(const ScenarioConfig& cfg) {
    RunReport rep;
    const auto [gamma, atom_delta] = atom_amplitudes(cfg);
    const ModeRotation rot = rotation_params(cfg.g1, cfg.g2);
    const int dim = square_dim(cfg, total_magnitude(cfg.alpha(), cfg.beta()));
    const CatPreparation cat = prepare_cat(cfg.alpha(), cfg.beta(), cfg.g1, cfg.g2, gamma, atom_delta, dim, cfg.leak_tol);
    const double t_rev = half_revival_time(cat.nbar, rot.g);

    rep.columns = {"t", "gt", "inversion", "atom_purity", "atom_entropy"};
    for (double t : time_grid(cfg.t_end > 0.0 ? cfg.t_end : 1.5 * t_rev, cfg.t_steps)) {
        const SystemState s = evolve_exact_jc(cat.initial, t, rot.g, 0.0);
        const DensityMatrix atom = partial_trace(s, {Subsystem::atom});
        rep.rows.push_back({t, rot.g * t, atomic_inversion(s), purity(atom), entropy(atom)});
    }
    const DensityMatrix atom = partial_trace(cat.prepared, {Subsystem::atom});
    double fid = std::max(cat.fidelity_minus, cat.fidelity_plus);
    if (cfg.convention == ConventionChoice::minus) fid = cat.fidelity_minus;
    if (cfg.convention == ConventionChoice::plus) fid = cat.fidelity_plus;

    rep.scalars = {{"nbar", cat.nbar},
                   {"mu_re", cat.mu.real()},
                   {"mu_im", cat.mu.imag()},
                   {"nu_re", cat.nu.real()},
                   {"nu_im", cat.nu.imag()},
                   {"dim", double(cat.dim)},
                   {"revival_time", t_rev},
                   {"preparation_time", cat.time},
                   {"atom_purity", cat.atom_purity},
                   {"atom_entropy", entropy(atom)},
                   {"field_fidelity_minus", cat.fidelity_minus},
                   {"field_fidelity_plus", cat.fidelity_plus},
                   {"field_fidelity", fid},
                   {"purity_bound", 1.0 - kCatPurityConstant / std::sqrt(cat.nbar)}};
    const double peak = revival_peak_time(cat.mu, rot.g, 2001, cfg.leak_tol);
    rep.scalars.push_back({"revival_peak_time", peak});
    rep.checks.push_back(at_most("revival_relative_error", std::abs(peak - t_rev) / t_rev, 0.05));
    return rep;
}

RunReport run_large_detuning(const ScenarioConfig& cfg) {
    RunReport rep;
    const auto [gamma, atom_delta] = atom_amplitudes(cfg);
    const ModeRotation rot = rotation_params(cfg.g1, cfg.g2);
    if (detuning_regime(cfg.delta, rot.g) == DetuningRegime::invalid) {
        fail(ErrorCode::DetuningTooSmall, "|delta|/g must be at least 5 for the dispersive protocol");
    }
    const int dim = square_dim(cfg, total_magnitude(cfg.alpha(), cfg.beta()));
    const double t_prime = kPi * cfg.delta / (2.0 * rot.g * rot.g);
    const double t_end = cfg.t_end > 0.0 ? cfg.t_end : t_prime;
    const DispersivePreparation prep = prepare_dispersive(cfg.alpha(), cfg.beta(), cfg.g1, cfg.g2, cfg.delta, gamma,
                                                          atom_delta, cfg.measure_basis, dim, t_end, cfg.shift,
                                                          cfg.leak_tol);

    const BeamSplitter r(rot.theta, dim, dim);
    const SystemState initial = SystemState::product(coherent_state(cfg.alpha(), dim, cfg.leak_tol),
                                                     coherent_state(cfg.beta(), dim, cfg.leak_tol), gamma, atom_delta,
                                                     ModeBasis::physical);
    const SystemState initial_quasi = to_quasi(initial, r);
    const EvolutionOracle oracle(build_hamiltonian(InteractionModel{cfg.delta, cfg.g1, cfg.g2}, dim, dim));
    rep.columns = {"t", "gt", "inversion_full", "inversion_effective", "fidelity_effective_full", "atom_purity_full"};
    for (double t : time_grid(t_end, cfg.t_steps)) {
        const SystemState full = oracle.evolve(initial, t);
        const SystemState eff = to_physical(evolve_effective(initial_quasi, t, rot.g, cfg.delta, cfg.shift), r);
        rep.rows.push_back({t, rot.g * t, atomic_inversion(full), atomic_inversion(eff), fidelity(full, eff),
                            purity(partial_trace(full, {Subsystem::atom}))});
    }

    const auto& [e_plus, e_minus] = prep.measured_effective;
    const auto& [f_plus, f_minus] = prep.measured_full;
    const double overlap_eff = post_state_overlap(prep.measured_effective);
    rep.scalars = {{"delta_over_g", cfg.delta / rot.g},
                   {"t_prime", t_prime},
                   {"t_measure", prep.time},
                   {"dim", double(dim)},
                   {"mu_re", prep.mu.real()},
                   {"mu_im", prep.mu.imag()},
                   {"p_plus_effective", e_plus.probability},
                   {"p_minus_effective", e_minus.probability},
                   {"p_plus_full", f_plus.probability},
                   {"p_minus_full", f_minus.probability},
                   {"post_overlap_effective", overlap_eff},
                   {"post_overlap_full", post_state_overlap(prep.measured_full)},
                   {"branch_overlap", prep.branch_overlap},
                   {"fidelity_effective_full", prep.fidelity}};
    if (cfg.t_end == 0.0 && cfg.measure_basis == MeasurementBasis::plusminus) {
        rep.checks.push_back(within("p_plus_effective", e_plus.probability, 0.48, 0.52));
        rep.checks.push_back(within("p_plus_full", f_plus.probability, 0.48, 0.52));
        rep.checks.push_back(at_most("post_overlap_effective", overlap_eff, prep.branch_overlap + 1e-6));
    }
    rep.checks.push_back(at_least("fidelity_effective_full", prep.fidelity, 0.99));
    return rep;
}

RunReport run_adiabatic_sweep(const ScenarioConfig& cfg) {
    RunReport rep;
    const double g = rotation_params(cfg.g1, cfg.g2).g;
    const int dim = cfg.dim1 > 0 ? cfg.dim1 : cfg.n_max + kEliminationBuffer + 8;
    rep.columns = {"delta", "residual", "relative_residual", "reduction_factor", "annihilation_residual",
                   "lowering_residual", "inversion_residual"};
    double prev = 0.0;
    const int keep = 2 * (cfg.n_max + 1);
    std::vector<double> factors;
    for (std::size_t k = 0; k < cfg.sweep_deltas.size(); ++k) {
        const double d = cfg.sweep_deltas[k];
        const double res = adiabatic_residual(g, d, dim, cfg.n_max, cfg.shift);
        const double hnorm =
            linalg::operator_norm(eliminated_hamiltonian(g, d, dim, cfg.shift).topLeftCorner(keep, keep));
        const TransformResiduals tr = transform_residuals(g, d, dim, cfg.n_max, cfg.shift);
        const double factor = k == 0 ? 0.0 : prev / res;
        if (k > 0) factors.push_back(factor);
        rep.rows.push_back({d, res, res / hnorm, factor, tr.annihilation, tr.lowering, tr.inversion});
        prev = res;
    }
    rep.scalars = {{"g", g}, {"n_max", double(cfg.n_max)}, {"dim", double(dim)}};
    for (std::size_t k = 0; k < factors.size(); ++k) {
        const double ratio = cfg.sweep_deltas[k + 1] / cfg.sweep_deltas[k];
        // residual ~ Delta^-2: expected factor ratio^2, band +-25 %
        const double expect = ratio * ratio;
        rep.checks.push_back(within("reduction_factor_" + std::to_string(k + 1), factors[k], 0.75 * expect,
                                    1.25 * expect));
    }
    return rep;
}

RunReport run_qfunc(const ScenarioConfig& cfg) {
    RunReport rep;
    const auto [gamma, atom_delta] = atom_amplitudes(cfg);
    const ModeRotation rot = rotation_params(cfg.g1, cfg.g2);
    const int dim = square_dim(cfg, total_magnitude(cfg.alpha(), cfg.beta()));
    const CatPreparation cat = prepare_cat(cfg.alpha(), cfg.beta(), cfg.g1, cfg.g2, gamma, atom_delta, dim, cfg.leak_tol);
    const double t = cfg.t_end > 0.0 ? cfg.t_end : cat.time;
    const SystemState s = cfg.t_end > 0.0 ? evolve_exact_jc(cat.initial, t, rot.g, 0.0) : cat.prepared;
    const DensityMatrix field = partial_trace(s, {Subsystem::mode1});
    auto [re, im] = default_grid(std::abs(cat.mu), cfg.grid_count);
    if (cfg.grid_extent > 0.0) re = im = AxisSpec{-cfg.grid_extent, cfg.grid_extent, cfg.grid_count};
    PhaseSpaceGrid grid = husimi_q(field, re, im);
    const std::vector<Complex> peaks = grid.local_maxima();

    rep.columns = {"t", "gt", "inversion", "atom_purity", "mode_one_purity"};
    rep.rows.push_back({t, rot.g * t, atomic_inversion(s), purity(partial_trace(s, {Subsystem::atom})), purity(field)});
    rep.scalars = {{"t", t},
                   {"mu_re", cat.mu.real()},
                   {"mu_im", cat.mu.imag()},
                   {"dim", double(dim)},
                   {"q_integral", grid.integral()},
                   {"q_max", grid.values.maxCoeff()},
                   {"peak_count", double(peaks.size())}};
    for (std::size_t k = 0; k < peaks.size(); ++k) {
        rep.scalars.push_back({"peak_" + std::to_string(k) + "_re", peaks[k].real()});
        rep.scalars.push_back({"peak_" + std::to_string(k) + "_im", peaks[k].imag()});
    }
    rep.checks.push_back(within("q_integral", grid.integral(), 0.98, 1.02));
    rep.qgrid = std::move(grid);
    return rep;
}

void check_finite(const RunReport& rep) {
    for (const auto& row : rep.rows)
        for (double v : row)
            if (!std::isfinite(v)) fail(ErrorCode::NonFinite, "non-finite value in time series");
    for (const auto& [name, v] : rep.scalars)
        if (!std::isfinite(v)) fail(ErrorCode::NonFinite, "non-finite summary value " + name);
    for (const auto& c : rep.checks)
        if (!std::isfinite(c.value)) fail(ErrorCode::NonFinite, "non-finite check value " + c.name);
}

}  // namespace

bool RunReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

double RunReport::scalar(const std::string& name) const {
    for (const auto& [k, v] : scalars)
        if (k == name) return v;
    fail(ErrorCode::ConfigInvalid, "no summary value named " + name);
}

CatPreparation prepare_cat(Complex alpha, Complex beta, double g1, double g2, Complex gamma, Complex atom_delta,
                           int dim, double leak_tol) {
    const ModeRotation rot = rotation_params(g1, g2);
    const AmplitudePair q = rotate_amplitudes(rot, {alpha, beta, ModeBasis::physical}, Direction::forward);
    if (dim == 0) dim = coherent_dim(total_magnitude(alpha, beta), leak_tol);
    const double nbar = std::norm(q.first);
    const double t = preparation_time(nbar, rot.g);
    const SystemState initial = SystemState::product(coherent_state(q.first, dim, leak_tol),
                                                     coherent_state(q.second, dim, leak_tol), gamma, atom_delta,
                                                     ModeBasis::quasi);
    SystemState prepared = evolve_exact_jc(initial, t, rot.g, 0.0);
    const BeamSplitter r(rot.theta, dim, dim);
    auto score = [&](CatConvention c) {
        const SystemState target = to_quasi(two_mode_cat_target(alpha, beta, rot, nbar, dim, dim, c, leak_tol), r);
        return field_fidelity(prepared, target);
    };
    const double purity_atom = purity(partial_trace(prepared, {Subsystem::atom}));
    const double fp = score(CatConvention::minus);
    const double ff = score(CatConvention::plus);
    return CatPreparation{rot, q.first, q.second, nbar, t, dim, initial, std::move(prepared), purity_atom, fp, ff};
}

DispersivePreparation prepare_dispersive(Complex alpha, Complex beta, double g1, double g2, double delta,
                                         Complex gamma, Complex atom_delta, MeasurementBasis basis, int dim,
                                         double time, ShiftConvention shift, double leak_tol) {
    const ModeRotation rot = rotation_params(g1, g2);
    const AmplitudePair q = rotate_amplitudes(rot, {alpha, beta, ModeBasis::physical}, Direction::forward);
    if (dim == 0) dim = coherent_dim(total_magnitude(alpha, beta), leak_tol);
    if (time < 0.0) time = kPi * delta / (2.0 * rot.g * rot.g);
    const double an = std::sqrt(std::norm(gamma) + std::norm(atom_delta));
    const SystemState initial = SystemState::product(coherent_state(alpha, dim, leak_tol),
                                                     coherent_state(beta, dim, leak_tol), gamma / an,
                                                     atom_delta / an, ModeBasis::physical);
    const BeamSplitter r(rot.theta, dim, dim);
    SystemState full = evolve_oracle(build_hamiltonian(InteractionModel{delta, g1, g2}, dim, dim), initial, time);
    SystemState eff = to_physical(evolve_effective(to_quasi(initial, r), time, rot.g, delta, shift), r);
    const double fid = fidelity(full, eff);
    const double overlap = std::abs(coherent_overlap(Complex(0, 1) * q.first, Complex(0, -1) * q.first));
    auto me = measure_atom(eff, basis);
    auto mf = measure_atom(full, basis);
    return DispersivePreparation{rot, q.first, q.second, delta, time, dim, std::move(full), std::move(eff),
                                 fid, overlap, std::move(me), std::move(mf)};
}

double post_state_overlap(const std::pair<MeasurementOutcome, MeasurementOutcome>& outcomes) {
    if (!outcomes.first.post_state || !outcomes.second.post_state) return 0.0;
    return std::abs(inner(*outcomes.first.post_state, *outcomes.second.post_state));
}

double revival_peak_time(Complex mu, double g, int samples, double leak_tol) {
    const double nbar = std::norm(mu);
    const double t_rev = half_revival_time(nbar, g);
    const int dim = coherent_dim(std::abs(mu), leak_tol);
    const SystemState initial = SystemState::product(coherent_state(mu, dim, leak_tol), FockVector::number_state(0, 1),
                                                     1.0, 0.0, ModeBasis::quasi);
    // plateau: between the collapse and the start of the revival
    double plateau = 0.0;
    const int plateau_samples = 200;
    for (int k = 0; k < plateau_samples; ++k) {
        const double t = t_rev * (0.25 + 0.25 * k / (plateau_samples - 1));
        plateau += atomic_inversion(evolve_exact_jc(initial, t, g, 0.0));
    }
    plateau /= plateau_samples;
    double best = -1.0, best_t = t_rev;
    for (int k = 0; k < samples; ++k) {
        const double t = t_rev * (0.5 + double(k) / (samples - 1));
        const double w = std::abs(atomic_inversion(evolve_exact_jc(initial, t, g, 0.0)) - plateau);
        if (w > best) {
            best = w;
            best_t = t;
        }
    }
    return best_t;
}

RunReport run_scenario(ScenarioConfig cfg) {
    validate_config(cfg);
    const auto start = std::chrono::steady_clock::now();
    RunReport rep;
    try {
        switch (cfg.scenario) {
        case Scenario::validate: rep = run_validate(cfg); break;
        case Scenario::zero_detuning: rep = run_zero_detuning(cfg); break;
        case Scenario::large_detuning: rep = run_large_detuning(cfg); break;
        case Scenario::adiabatic_sweep: rep = run_adiabatic_sweep(cfg); break;
        case Scenario::qfunc: rep = run_qfunc(cfg); break;
        }
    } catch (const Error& e) {
        throw Error(e.code(), std::string(to_string(cfg.scenario)) + ": " + e.what());
    }
    check_finite(rep);
    rep.scenario = cfg.scenario;
    rep.config = echo(cfg);
    rep.wall_clock_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

}  // namespace ecsim
