#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "ecsim/config.hpp"
#include "ecsim/errors.hpp"
#include "ecsim/report.hpp"
#include "ecsim/scenarios.hpp"

using namespace ecsim;
namespace fs = std::filesystem;

namespace {

bool throws_code(ErrorCode code, auto&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code() == code;
    }
    return false;
}

std::vector<std::string> lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string l; std::getline(in, l);) out.push_back(l);
    return out;
}

int comma_count(const std::string& s) { return static_cast<int>(std::count(s.begin(), s.end(), ',')); }

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("scenario names") {
    for (Scenario s : {Scenario::validate, Scenario::zero_detuning, Scenario::large_detuning,
                       Scenario::adiabatic_sweep, Scenario::qfunc}) {
        CHECK(parse_scenario(to_string(s)) == s);
    }
    CHECK(throws_code(ErrorCode::ConfigInvalid, [] { parse_scenario("zero_detuning"); }));
}

TEST_CASE("config text parsing") {
    const auto kv = parse_config_text("# comment\n g1 = 0.5\n\nsweep_deltas = 10, 20 # trailing\ndelta=3\n");
    REQUIRE(kv.size() == 3);
    CHECK(kv[0].first == "g1");
    CHECK(kv[0].second == "0.5");
    CHECK(kv[1].second == "10, 20");
    CHECK(kv[2].second == "3");
    CHECK(throws_code(ErrorCode::ConfigInvalid, [] { parse_config_text("g1 0.5\n"); }));

    ScenarioConfig cfg = default_config(Scenario::adiabatic_sweep);
    for (const auto& [k, v] : kv) set_parameter(cfg, k, v);
    CHECK(cfg.g1 == 0.5);
    CHECK(cfg.sweep_deltas == std::vector<double>{10, 20});
    set_parameter(cfg, "dim", "30");
    CHECK(cfg.dim1 == 30);
    CHECK(cfg.dim2 == 30);
    CHECK(throws_code(ErrorCode::ConfigInvalid, [&] { set_parameter(cfg, "nope", "1"); }));
    CHECK(throws_code(ErrorCode::ConfigInvalid, [&] { set_parameter(cfg, "g1", "abc"); }));
    CHECK(throws_code(ErrorCode::ConfigInvalid, [&] { set_parameter(cfg, "t_steps", "2.5"); }));
    CHECK(flag_name("leak_tol") == "--leak-tol");
}

TEST_CASE("config validation") {
    auto bad = [](Scenario s, auto&& tweak) {
        ScenarioConfig c = default_config(s);
        tweak(c);
        return throws_code(ErrorCode::ConfigInvalid, [&] { validate_config(c); });
    };
    CHECK(bad(Scenario::zero_detuning, [](ScenarioConfig& c) { c.delta = 1.0; }));
    CHECK(bad(Scenario::validate, [](ScenarioConfig& c) { c.g1 = c.g2 = 0.0; }));
    CHECK(bad(Scenario::validate, [](ScenarioConfig& c) { c.g1 = -1.0; }));
    CHECK(bad(Scenario::validate, [](ScenarioConfig& c) { c.leak_tol = 0.0; }));
    CHECK(bad(Scenario::validate, [](ScenarioConfig& c) { c.dim1 = 1; }));
    CHECK(bad(Scenario::validate, [](ScenarioConfig& c) { c.t_end = std::nan(""); }));
    CHECK(bad(Scenario::validate, [](ScenarioConfig& c) { c.gamma_re = c.atom_delta_re = 0.0; }));
    CHECK(bad(Scenario::qfunc, [](ScenarioConfig& c) { c.grid_count = 1; }));
    CHECK(bad(Scenario::adiabatic_sweep, [](ScenarioConfig& c) { c.sweep_deltas.clear(); }));

    ScenarioConfig c = default_config(Scenario::large_detuning);
    c.omega_atom = 51.0;
    c.omega = 1.0;
    validate_config(c);
    CHECK(c.delta == 50.0);
}

TEST_CASE("validate scenario report layout and determinism") {
    ScenarioConfig cfg = default_config(Scenario::validate);
    cfg.cases = 4;
    const RunReport r = run_scenario(cfg);
    CHECK(r.passed());
    const auto ts = lines(timeseries_csv(r));
    REQUIRE(ts.size() == 1 + r.rows.size());
    CHECK(ts[0].rfind("case,", 0) == 0);
    for (const auto& l : ts) CHECK(comma_count(l) == comma_count(ts[0]));

    const auto j = nlohmann::json::parse(summary_json(r));
    CHECK(j["schema"] == kReportSchema);
    CHECK(j["scenario"] == "validate");
    CHECK(j["passed"] == true);
    CHECK(j["timeseries"]["file"] == "timeseries.csv");
    CHECK(j["config"]["seed"] == "1");
    CHECK(j.contains("wall_clock_seconds"));
    CHECK(j["checks"].is_array());

    const RunReport again = run_scenario(cfg);
    CHECK(summary_json(r, false) == summary_json(again, false));
    CHECK(timeseries_csv(r) == timeseries_csv(again));
    cfg.seed = 2;
    CHECK(timeseries_csv(run_scenario(cfg)) != timeseries_csv(r));
}

TEST_CASE("adiabatic sweep report") {
    ScenarioConfig cfg = default_config(Scenario::adiabatic_sweep);
    cfg.n_max = 4;
    const RunReport r = run_scenario(cfg);
    CHECK(r.passed());
    CHECK(r.rows.size() == cfg.sweep_deltas.size());
    CHECK(r.columns.front() == "delta");
    CHECK(throws_code(ErrorCode::ConfigInvalid, [&] { r.scalar("nope"); }));
}

TEST_CASE("qfunc outputs") {
    ScenarioConfig cfg = default_config(Scenario::qfunc);
    cfg.alpha_re = cfg.beta_re = 1.5;
    cfg.grid_count = 41;
    const RunReport r = run_scenario(cfg);
    REQUIRE(r.qgrid.has_value());
    const auto q = lines(qgrid_csv(*r.qgrid));
    REQUIRE(q.size() == 42);
    CHECK(q[0].rfind("im\\re,", 0) == 0);
    CHECK(comma_count(q[0]) == 41);
    CHECK(comma_count(q[1]) == 41);
    CHECK(r.scalar("q_integral") == doctest::Approx(1.0).epsilon(0.02));

    const fs::path dir = fs::path(ECSIM_TEST_TMP) / "qfunc";
    fs::remove_all(dir);
    write_outputs(r, dir);
    CHECK(fs::exists(dir / "timeseries.csv"));
    CHECK(fs::exists(dir / "qgrid.csv"));
    const auto j = nlohmann::json::parse(slurp(dir / "summary.json"));
    CHECK(j["qgrid"]["file"] == "qgrid.csv");
}

TEST_CASE("numeric errors carry the scenario name") {
    ScenarioConfig cfg = default_config(Scenario::large_detuning);
    cfg.delta = 2.0;
    try {
        run_scenario(cfg);
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::DetuningTooSmall);
        CHECK(std::string(e.what()).find("large-detuning") != std::string::npos);
    }
    ScenarioConfig small = default_config(Scenario::zero_detuning);
    small.dim1 = small.dim2 = 10;
    CHECK(throws_code(ErrorCode::DimTooSmall, [&] { run_scenario(small); }));
}

TEST_CASE("time-grid scenarios write one record per grid point") {
    ScenarioConfig zd = default_config(Scenario::zero_detuning);
    zd.alpha_re = zd.beta_re = 2.0;
    zd.t_steps = 37;
    const RunReport a = run_scenario(zd);
    CHECK(a.rows.size() == 37);
    CHECK(lines(timeseries_csv(a)).size() == 38);
    CHECK(a.columns == std::vector<std::string>{"t", "gt", "inversion", "atom_purity", "atom_entropy"});

    ScenarioConfig ld = default_config(Scenario::large_detuning);
    ld.t_steps = 5;
    const RunReport b = run_scenario(ld);
    CHECK(b.rows.size() == 5);
    CHECK(b.rows.front().front() == 0.0);
}
