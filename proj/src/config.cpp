#include "ecsim/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>

#include "ecsim/errors.hpp"

namespace ecsim {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

double to_double(const std::string& key, const std::string& value) {
    double v = 0.0;
    const char* end = value.data() + value.size();
    auto [ptr, ec] = std::from_chars(value.data(), end, v);
    if (ec != std::errc() || ptr != end) fail(ErrorCode::ConfigInvalid, key + ": not a number: '" + value + "'");
    return v;
}

template <class Int>
Int to_int(const std::string& key, const std::string& value) {
    Int v = 0;
    const char* end = value.data() + value.size();
    auto [ptr, ec] = std::from_chars(value.data(), end, v);
    if (ec != std::errc() || ptr != end) fail(ErrorCode::ConfigInvalid, key + ": not an integer: '" + value + "'");
    return v;
}

struct Entry {
    ParameterInfo info;
    std::function<void(ScenarioConfig&, const std::string&)> set;
    std::function<std::string(const ScenarioConfig&)> get;
};

Entry real(std::string key, std::string help, double ScenarioConfig::*field) {
    return {{key, std::move(help)},
            [key, field](ScenarioConfig& c, const std::string& v) { c.*field = to_double(key, v); },
            [field](const ScenarioConfig& c) { return fmt(c.*field); }};
}

Entry integer(std::string key, std::string help, int ScenarioConfig::*field) {
    return {{key, std::move(help)},
            [key, field](ScenarioConfig& c, const std::string& v) { c.*field = to_int<int>(key, v); },
            [field](const ScenarioConfig& c) { return std::to_string(c.*field); }};
}

template <class E>
Entry choice(std::string key, std::string help, E ScenarioConfig::*field,
             std::vector<std::pair<std::string, E>> names) {
    return {{key, std::move(help)},
            [key, field, names](ScenarioConfig& c, const std::string& v) {
                for (const auto& [n, e] : names)
                    if (n == v) {
                        c.*field = e;
                        return;
                    }
                fail(ErrorCode::ConfigInvalid, key + ": unknown value '" + v + "'");
            },
            [field, names](const ScenarioConfig& c) {
                for (const auto& [n, e] : names)
                    if (e == c.*field) return n;
                return std::string("?");
            }};
}

const std::vector<Entry>& entries() {
    static const std::vector<Entry> table = [] {
        using C = ScenarioConfig;
        std::vector<Entry> t;
        t.push_back({{"scenario", "validate | zero-detuning | large-detuning | adiabatic-sweep | qfunc"},
                     [](C& c, const std::string& v) { c.scenario = parse_scenario(v); },
                     [](const C& c) { return std::string(to_string(c.scenario)); }});
        t.push_back(real("g1", "coupling to mode 1", &C::g1));
        t.push_back(real("g2", "coupling to mode 2", &C::g2));
        t.push_back(real("delta", "detuning Omega - omega", &C::delta));
        t.push_back(real("omega_atom", "atomic frequency Omega (with omega, overrides delta)", &C::omega_atom));
        t.push_back(real("omega", "mode frequency omega", &C::omega));
        t.push_back(real("alpha_re", "mode 1 coherent amplitude, real part", &C::alpha_re));
        t.push_back(real("alpha_im", "mode 1 coherent amplitude, imaginary part", &C::alpha_im));
        t.push_back(real("beta_re", "mode 2 coherent amplitude, real part", &C::beta_re));
        t.push_back(real("beta_im", "mode 2 coherent amplitude, imaginary part", &C::beta_im));
        t.push_back(real("gamma_re", "atomic amplitude on |->, real part", &C::gamma_re));
        t.push_back(real("gamma_im", "atomic amplitude on |->, imaginary part", &C::gamma_im));
        t.push_back(real("atom_delta_re", "atomic amplitude on |+>, real part", &C::atom_delta_re));
        t.push_back(real("atom_delta_im", "atomic amplitude on |+>, imaginary part", &C::atom_delta_im));
        t.push_back(real("z1_re", "mode 1 squeeze parameter, real part", &C::z1_re));
        t.push_back(real("z1_im", "mode 1 squeeze parameter, imaginary part", &C::z1_im));
        t.push_back(real("z2_re", "mode 2 squeeze parameter, real part", &C::z2_re));
        t.push_back(real("z2_im", "mode 2 squeeze parameter, imaginary part", &C::z2_im));
        t.push_back({{"dim", "Fock dimension of both modes"},
                     [](C& c, const std::string& v) { c.dim1 = c.dim2 = to_int<int>("dim", v); },
                     [](const C& c) { return c.dim1 == c.dim2 ? std::to_string(c.dim1) : std::string("mixed"); }});
        t.push_back(integer("dim1", "Fock dimension of mode 1 (0 = automatic)", &C::dim1));
        t.push_back(integer("dim2", "Fock dimension of mode 2 (0 = automatic)", &C::dim2));
        t.push_back(real("leak_tol", "largest tolerated truncation tail mass", &C::leak_tol));
        t.push_back(real("t_end", "end of the time grid (0 = scenario default)", &C::t_end));
        t.push_back(integer("t_steps", "number of time-grid points", &C::t_steps));
        t.push_back(choice<MeasurementBasis>("measure_basis", "plusminus | energy", &C::measure_basis,
                                             {{"plusminus", MeasurementBasis::plusminus},
                                              {"energy", MeasurementBasis::energy}}));
        t.push_back(choice<ConventionChoice>("convention", "best | minus | plus", &C::convention,
                                             {{"best", ConventionChoice::best},
                                              {"minus", ConventionChoice::minus},
                                              {"plus", ConventionChoice::plus}}));
        t.push_back(choice<ShiftConvention>("shift", "derived | halved", &C::shift,
                                            {{"derived", ShiftConvention::derived},
                                             {"halved", ShiftConvention::halved}}));
        t.push_back({{"seed", "RNG seed for the validate scenario"},
                     [](C& c, const std::string& v) { c.seed = to_int<std::uint64_t>("seed", v); },
                     [](const C& c) { return std::to_string(c.seed); }});
        t.push_back(integer("cases", "randomized cases in validate", &C::cases));
        t.push_back(integer("n_max", "photon-number cutoff of the elimination residual", &C::n_max));
        t.push_back({{"sweep_deltas", "comma-separated detunings for adiabatic-sweep"},
                     [](C& c, const std::string& v) {
                         c.sweep_deltas.clear();
                         std::stringstream ss(v);
                         std::string item;
                         while (std::getline(ss, item, ',')) c.sweep_deltas.push_back(to_double("sweep_deltas", trim(item)));
                     },
                     [](const C& c) {
                         std::string s;
                         for (double d : c.sweep_deltas) s += (s.empty() ? "" : ",") + fmt(d);
                         return s;
                     }});
        t.push_back(integer("grid_count", "Q-function points per axis", &C::grid_count));
        t.push_back(real("grid_extent", "Q-function half-width (0 = 1.5 (|mu| + 2))", &C::grid_extent));
        t.push_back({{"out", "output directory"},
                     [](C& c, const std::string& v) { c.out = v; },
                     [](const C& c) { return c.out.string(); }});
        return t;
    }();
    return table;
}

}  // namespace

const char* to_string(Scenario s) {
    switch (s) {
    case Scenario::validate: return "validate";
    case Scenario::zero_detuning: return "zero-detuning";
    case Scenario::large_detuning: return "large-detuning";
    case Scenario::adiabatic_sweep: return "adiabatic-sweep";
    case Scenario::qfunc: return "qfunc";
    }
    return "?";
}

Scenario parse_scenario(const std::string& name) {
    for (Scenario s : {Scenario::validate, Scenario::zero_detuning, Scenario::large_detuning,
                       Scenario::adiabatic_sweep, Scenario::qfunc})
        if (name == to_string(s)) return s;
    fail(ErrorCode::ConfigInvalid, "unknown scenario '" + name + "'");
}

ScenarioConfig default_config(Scenario s) {
    ScenarioConfig c;
    c.scenario = s;
    const double a25 = std::sqrt(12.5);  // nbar = 25 split evenly over the two modes
    switch (s) {
    case Scenario::validate:
        c.alpha_re = 1.0;
        c.beta_re = 0.5;
        c.z1_re = 0.3;
        c.z2_re = 0.3;
        c.t_steps = 11;
        c.t_end = 5.0;
        break;
    case Scenario::zero_detuning:
    case Scenario::qfunc:
        c.alpha_re = a25;
        c.beta_re = a25;
        break;
    case Scenario::large_detuning:
        c.delta = 50.0;
        c.alpha_re = 1.0;
        c.beta_re = 1.0;
        c.gamma_re = 1.0;
        c.atom_delta_re = 1.0;
        c.t_steps = 101;
        break;
    case Scenario::adiabatic_sweep:
        break;
    }
    return c;
}

const std::vector<ParameterInfo>& parameter_table() {
    static const std::vector<ParameterInfo> infos = [] {
        std::vector<ParameterInfo> v;
        for (const auto& e : entries()) v.push_back(e.info);
        return v;
    }();
    return infos;
}

std::string flag_name(const std::string& key) {
    std::string f = "--" + key;
    std::replace(f.begin(), f.end(), '_', '-');
    return f;
}

void set_parameter(ScenarioConfig& cfg, const std::string& key, const std::string& value) {
    for (const auto& e : entries())
        if (e.info.key == key) {
            e.set(cfg, trim(value));
            return;
        }
    fail(ErrorCode::ConfigInvalid, "unknown key '" + key + "'");
}

std::vector<std::pair<std::string, std::string>> parse_config_text(const std::string& text) {
    std::vector<std::pair<std::string, std::string>> out;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            fail(ErrorCode::ConfigInvalid, "line " + std::to_string(lineno) + ": expected key = value");
        }
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (key.empty()) fail(ErrorCode::ConfigInvalid, "line " + std::to_string(lineno) + ": empty key");
        out.emplace_back(std::move(key), std::move(value));
    }
    return out;
}

std::vector<std::pair<std::string, std::string>> read_config_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorCode::ConfigInvalid, "cannot read config file " + path.string());
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config_text(ss.str());
}

std::map<std::string, std::string> echo(const ScenarioConfig& cfg) {
    std::map<std::string, std::string> m;
    for (const auto& e : entries()) {
        if (e.info.key == "dim" || e.info.key == "out") continue;
        m[e.info.key] = e.get(cfg);
    }
    return m;
}

void validate_config(ScenarioConfig& cfg) {
    auto bad = [](const std::string& msg) { fail(ErrorCode::ConfigInvalid, msg); };
    const double reals[] = {cfg.g1,     cfg.g2,       cfg.delta,    cfg.omega_atom,    cfg.omega,
                            cfg.alpha_re, cfg.alpha_im, cfg.beta_re,  cfg.beta_im,     cfg.gamma_re,
                            cfg.gamma_im, cfg.atom_delta_re, cfg.atom_delta_im, cfg.z1_re, cfg.z1_im,
                            cfg.z2_re,  cfg.z2_im,    cfg.leak_tol, cfg.t_end,         cfg.grid_extent};
    for (double v : reals)
        if (!std::isfinite(v)) bad("parameters must be finite");
    if (cfg.omega_atom != 0.0 || cfg.omega != 0.0) cfg.delta = cfg.omega_atom - cfg.omega;
    if ((cfg.scenario == Scenario::zero_detuning || cfg.scenario == Scenario::qfunc) && cfg.delta != 0.0) {
        bad(std::string(to_string(cfg.scenario)) + " requires delta = 0");
    }
    if (cfg.g1 < 0.0 || cfg.g2 < 0.0) bad("couplings must be non-negative");
    if (cfg.g1 == 0.0 && cfg.g2 == 0.0) bad("g1 and g2 cannot both be zero");
    if (cfg.dim1 < 0 || cfg.dim2 < 0 || cfg.dim1 == 1 || cfg.dim2 == 1) bad("dims must be 0 (auto) or >= 2");
    if (cfg.dim1 > 400 || cfg.dim2 > 400) bad("dims above 400 are not supported");
    if (!(cfg.leak_tol > 0.0 && cfg.leak_tol < 1.0)) bad("leak_tol must lie in (0, 1)");
    if (cfg.t_end < 0.0) bad("t_end must be non-negative");
    if (cfg.t_steps < 1 || cfg.t_steps > 100000) bad("t_steps must lie in [1, 100000]");
    if (std::norm(cfg.gamma()) + std::norm(cfg.atom_delta()) == 0.0) bad("atomic amplitudes are both zero");
    if (cfg.cases < 1 || cfg.cases > 1000) bad("cases must lie in [1, 1000]");
    if (cfg.n_max < 0) bad("n_max must be non-negative");
    if (cfg.sweep_deltas.empty()) bad("sweep_deltas is empty");
    for (double d : cfg.sweep_deltas)
        if (!std::isfinite(d) || d == 0.0) bad("sweep_deltas must be finite and non-zero");
    if (cfg.grid_count < 2 || cfg.grid_count > 2001) bad("grid_count must lie in [2, 2001]");
    if (cfg.grid_extent < 0.0) bad("grid_extent must be non-negative");
    if (cfg.out.empty()) bad("out must be set");
}

}  // namespace ecsim
