#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ecsim/analysis.hpp"
#include "ecsim/config.hpp"
#include "ecsim/elimination.hpp"
#include "ecsim/errors.hpp"
#include "ecsim/evolution.hpp"
#include "ecsim/fock.hpp"
#include "ecsim/modemap.hpp"
#include "ecsim/protocols.hpp"
#include "ecsim/report.hpp"
#include "ecsim/scenarios.hpp"

namespace py = pybind11;
using namespace ecsim;

namespace {

ModeBasis parse_basis(const std::string& s) {
    if (s == "physical") return ModeBasis::physical;
    if (s == "quasi") return ModeBasis::quasi;
    throw Error(ErrorCode::ConfigInvalid, "basis must be 'physical' or 'quasi'");
}

CatConvention parse_convention(const std::string& s) {
    if (s == "minus") return CatConvention::minus;
    if (s == "plus") return CatConvention::plus;
    throw Error(ErrorCode::ConfigInvalid, "convention must be 'minus' or 'plus'");
}

ShiftConvention parse_shift(const std::string& s) {
    if (s == "derived") return ShiftConvention::derived;
    if (s == "halved") return ShiftConvention::halved;
    throw Error(ErrorCode::ConfigInvalid, "shift must be 'derived' or 'halved'");
}

// Tensor of shape (dim1, dim2, atom_dim) as a flat vector in the library layout.
SystemState state_from(const ComplexVector& amps, int dim1, int dim2, bool atom, const std::string& basis) {
    return SystemState(amps, SystemSpace{dim1, dim2, atom ? 2 : 1}, parse_basis(basis));
}

ScenarioConfig config_from(const std::string& scenario, const std::map<std::string, std::string>& params) {
    for (const auto& kv : params) {
        bool known = false;
        for (const ParameterInfo& p : parameter_table()) known = known || p.key == kv.first;
        if (!known) throw Error(ErrorCode::ConfigInvalid, "unknown parameter " + kv.first);
    }
    ScenarioConfig cfg = default_config(parse_scenario(scenario));
    // table order, so dim is applied before dim1 / dim2
    for (const ParameterInfo& p : parameter_table()) {
        auto it = params.find(p.key);
        if (it != params.end()) set_parameter(cfg, p.key, it->second);
    }
    return cfg;
}

DensityMatrix as_density(const ComplexMatrix& rho) {
    return DensityMatrix{rho, {Subsystem::mode1}, {static_cast<int>(rho.rows())}};
}

py::dict report_dict(const RunReport& r) {
    py::dict d;
    d["scenario"] = to_string(r.scenario);
    d["config"] = r.config;
    d["columns"] = r.columns;
    d["rows"] = r.rows;
    py::dict scalars;
    for (const auto& [k, v] : r.scalars) scalars[py::str(k)] = v;
    d["scalars"] = scalars;
    py::list checks;
    for (const Check& c : r.checks) {
        py::dict cd;
        cd["name"] = c.name;
        cd["value"] = c.value;
        cd["relation"] = c.relation;
        cd["threshold"] = c.threshold;
        if (c.relation == "in") cd["upper"] = c.upper;
        cd["pass"] = c.pass;
        checks.append(cd);
    }
    d["checks"] = checks;
    d["passed"] = r.passed();
    if (r.qgrid) {
        d["qgrid"] = r.qgrid->values;
        d["qgrid_re"] = std::vector<double>{r.qgrid->re.min, r.qgrid->re.max, double(r.qgrid->re.count)};
        d["qgrid_im"] = std::vector<double>{r.qgrid->im.min, r.qgrid->im.max, double(r.qgrid->im.count)};
    }
    d["summary_json"] = summary_json(r, false);
    d["wall_clock_seconds"] = r.wall_clock_seconds;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Two-mode cavity QED simulator core";
    m.attr("__version__") = tool_version();
    m.attr("DEFAULT_LEAK_TOL") = kDefaultLeakTol;

    static py::exception<Error> exc(m, "EcsimError", PyExc_RuntimeError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            py::object err = py::reinterpret_borrow<py::object>(exc.ptr())(e.what());
            err.attr("code") = py::str(std::string(to_string(e.code())));
            PyErr_SetObject(exc.ptr(), err.ptr());
        }
    });

    // Fock states
    m.def("coherent_state", [](Complex alpha, int dim, double leak_tol) {
        return coherent_state(alpha, dim, leak_tol).amps();
    }, py::arg("alpha"), py::arg("dim"), py::arg("leak_tol") = kDefaultLeakTol);
    m.def("squeezed_vacuum", [](Complex z, int dim, double leak_tol) {
        return squeezed_vacuum(z, dim, leak_tol).amps();
    }, py::arg("z"), py::arg("dim"), py::arg("leak_tol") = kDefaultLeakTol);
    m.def("coherent_tail_mass", &coherent_tail_mass, py::arg("alpha"), py::arg("dim"));
    m.def("coherent_dim", &coherent_dim, py::arg("magnitude"), py::arg("leak_tol") = kDefaultLeakTol);
    m.def("coherent_overlap", &coherent_overlap, py::arg("alpha"), py::arg("beta"));

    // mode map
    py::class_<ModeRotation>(m, "ModeRotation")
        .def_readonly("theta", &ModeRotation::theta)
        .def_readonly("g", &ModeRotation::g)
        .def_readonly("g1", &ModeRotation::g1)
        .def_readonly("g2", &ModeRotation::g2)
        .def("__repr__", [](const ModeRotation& r) {
            return "ModeRotation(theta=" + std::to_string(r.theta) + ", g=" + std::to_string(r.g) + ")";
        });
    m.def("rotation_params", &rotation_params, py::arg("g1"), py::arg("g2"));
    m.def("to_quasi_amplitudes", [](double g1, double g2, Complex alpha, Complex beta) {
        const AmplitudePair q = rotate_amplitudes(rotation_params(g1, g2), {alpha, beta, ModeBasis::physical},
                                                  Direction::forward);
        return std::make_pair(q.first, q.second);
    }, py::arg("g1"), py::arg("g2"), py::arg("alpha"), py::arg("beta"));
    m.def("beam_splitter", [](double theta, int dim1, int dim2) { return BeamSplitter(theta, dim1, dim2).dense(); },
          py::arg("theta"), py::arg("dim1"), py::arg("dim2"));
    m.def("squeeze_composition", [](double g1, double g2, Complex z1, Complex z2) {
        const SqueezeComposition sc = squeeze_composition(rotation_params(g1, g2), z1, z2);
        return py::dict(py::arg("p") = sc.p, py::arg("q") = sc.q, py::arg("q_mode_two") = sc.q_mode_two);
    }, py::arg("g1"), py::arg("g2"), py::arg("z1"), py::arg("z2"));
    m.def("decouple_params", [](double g1, double g2, double d1, double d2) {
        const DecoupleParams p = decouple_params(g1, g2, d1, d2);
        return py::dict(py::arg("eta") = p.eta, py::arg("lambda") = p.lambda_mode, py::arg("zeta") = p.zeta_mode);
    }, py::arg("g1"), py::arg("g2"), py::arg("delta1"), py::arg("delta2"));

    // dynamics
    m.def("interaction_hamiltonian", [](double delta, double g1, double g2, int dim1, int dim2) {
        return build_hamiltonian(InteractionModel{delta, g1, g2}, dim1, dim2);
    }, py::arg("delta"), py::arg("g1"), py::arg("g2"), py::arg("dim1"), py::arg("dim2"));
    m.def("evolve_oracle", [](const ComplexMatrix& h, const ComplexVector& psi, double t) {
        return EvolutionOracle(h).evolve(psi, t);
    }, py::arg("h"), py::arg("psi"), py::arg("t"));
    m.def("evolve_exact_jc", [](const ComplexVector& psi, int dim1, int dim2, double t, double g, double delta) {
        return evolve_exact_jc(state_from(psi, dim1, dim2, true, "quasi"), t, g, delta).amps();
    }, py::arg("psi"), py::arg("dim1"), py::arg("dim2"), py::arg("t"), py::arg("g"), py::arg("delta") = 0.0);
    m.def("half_revival_time", &half_revival_time, py::arg("nbar"), py::arg("g"));
    m.def("preparation_time", &preparation_time, py::arg("nbar"), py::arg("g"));
    m.def("revival_peak_time", &revival_peak_time, py::arg("mu"), py::arg("g"), py::arg("samples") = 2001,
          py::arg("leak_tol") = kDefaultLeakTol);

    m.def("cat_target", [](Complex mu, double nbar, const std::string& convention, int dim) {
        return cat_target(mu, nbar, parse_convention(convention), dim).amps();
    }, py::arg("mu"), py::arg("nbar"), py::arg("convention") = "minus", py::arg("dim"));

    m.def("prepare_cat", [](Complex alpha, Complex beta, double g1, double g2, Complex gamma, Complex delta, int dim) {
        const CatPreparation p = prepare_cat(alpha, beta, g1, g2, gamma, delta, dim);
        return py::dict(py::arg("mu") = p.mu, py::arg("nu") = p.nu, py::arg("nbar") = p.nbar,
                        py::arg("time") = p.time, py::arg("dim") = p.dim, py::arg("atom_purity") = p.atom_purity,
                        py::arg("fidelity_minus") = p.fidelity_minus,
                        py::arg("fidelity_plus") = p.fidelity_plus, py::arg("state") = p.prepared.amps());
    }, py::arg("alpha"), py::arg("beta"), py::arg("g1"), py::arg("g2"), py::arg("gamma") = Complex(1.0),
       py::arg("delta") = Complex(0.0), py::arg("dim") = 0);

    m.def("prepare_dispersive", [](Complex alpha, Complex beta, double g1, double g2, double detuning, Complex gamma,
                                   Complex delta, int dim, double time, const std::string& shift) {
        const DispersivePreparation p = prepare_dispersive(alpha, beta, g1, g2, detuning, gamma, delta,
                                                           MeasurementBasis::plusminus, dim, time, parse_shift(shift));
        return py::dict(py::arg("time") = p.time, py::arg("dim") = p.dim, py::arg("fidelity") = p.fidelity,
                        py::arg("branch_overlap") = p.branch_overlap,
                        py::arg("p_plus_effective") = p.measured_effective.first.probability,
                        py::arg("p_plus_full") = p.measured_full.first.probability,
                        py::arg("post_overlap_effective") = post_state_overlap(p.measured_effective),
                        py::arg("post_overlap_full") = post_state_overlap(p.measured_full));
    }, py::arg("alpha"), py::arg("beta"), py::arg("g1"), py::arg("g2"), py::arg("detuning"),
       py::arg("gamma") = Complex(M_SQRT1_2), py::arg("delta") = Complex(M_SQRT1_2), py::arg("dim") = 0,
       py::arg("time") = -1.0, py::arg("shift") = "derived");

    m.def("adiabatic_residual", [](double g, double delta, int dim, int n_max, const std::string& shift) {
        return adiabatic_residual(g, delta, dim, n_max, parse_shift(shift));
    }, py::arg("g"), py::arg("delta"), py::arg("dim"), py::arg("n_max"), py::arg("shift") = "derived");
    m.def("transform_residuals", [](double g, double delta, int dim, int n_max, const std::string& shift) {
        const TransformResiduals r = transform_residuals(g, delta, dim, n_max, parse_shift(shift));
        return py::dict(py::arg("annihilation") = r.annihilation, py::arg("lowering") = r.lowering,
                        py::arg("inversion") = r.inversion);
    }, py::arg("g"), py::arg("delta"), py::arg("dim"), py::arg("n_max"), py::arg("shift") = "derived");

    // analysis
    m.def("reduced_density_matrix", [](const ComplexVector& psi, int dim1, int dim2, bool atom,
                                       const std::vector<std::string>& keep) {
        std::vector<Subsystem> k;
        for (const auto& s : keep) {
            if (s == "mode1") k.push_back(Subsystem::mode1);
            else if (s == "mode2") k.push_back(Subsystem::mode2);
            else if (s == "atom") k.push_back(Subsystem::atom);
            else throw Error(ErrorCode::BadSubsystem, "unknown subsystem " + s);
        }
        return partial_trace(state_from(psi, dim1, dim2, atom, "physical"), k).rho;
    }, py::arg("psi"), py::arg("dim1"), py::arg("dim2"), py::arg("atom"), py::arg("keep"));
    m.def("entropy", [](const ComplexMatrix& rho) { return entropy(as_density(rho)); }, py::arg("rho"));
    m.def("purity", [](const ComplexMatrix& rho) { return purity(as_density(rho)); }, py::arg("rho"));
    m.def("husimi_q", [](const ComplexVector& psi, double re_min, double re_max, int re_count, double im_min,
                         double im_max, int im_count) {
        return husimi_q(FockVector(psi), AxisSpec{re_min, re_max, re_count}, AxisSpec{im_min, im_max, im_count}).values;
    }, py::arg("psi"), py::arg("re_min"), py::arg("re_max"), py::arg("re_count"), py::arg("im_min"),
       py::arg("im_max"), py::arg("im_count"));

    // runner
    m.def("scenario_defaults", [](const std::string& scenario) { return echo(default_config(parse_scenario(scenario))); },
          py::arg("scenario"));
    m.def("run_scenario", [](const std::string& scenario, const std::map<std::string, std::string>& params) {
        return report_dict(run_scenario(config_from(scenario, params)));
    }, py::arg("scenario"), py::arg("params") = std::map<std::string, std::string>{});
    m.def("write_outputs", [](const std::string& scenario, const std::map<std::string, std::string>& params,
                              const std::string& out) {
        const RunReport r = run_scenario(config_from(scenario, params));
        write_outputs(r, out);
        return r.passed();
    }, py::arg("scenario"), py::arg("params"), py::arg("out"));
}
