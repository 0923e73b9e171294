#include "ecsim/report.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "ecsim/errors.hpp"

namespace ecsim {

namespace {

void write_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail(ErrorCode::ConfigInvalid, "cannot write " + path.string());
    out << text;
    if (!out) fail(ErrorCode::ConfigInvalid, "write failed for " + path.string());
}

}  // namespace

std::string tool_version() { return ECSIM_VERSION; }

std::string format_number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.16e", v);
    return buf;
}

std::string timeseries_csv(const RunReport& report) {
    std::ostringstream out;
    for (std::size_t i = 0; i < report.columns.size(); ++i) out << (i ? "," : "") << report.columns[i];
    out << '\n';
    for (const auto& row : report.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << format_number(row[i]);
        out << '\n';
    }
    return out.str();
}

std::string qgrid_csv(const PhaseSpaceGrid& grid) {
    std::ostringstream out;
    out << "im\\re";
    for (int c = 0; c < grid.re.count; ++c) out << ',' << format_number(grid.re.at(c));
    out << '\n';
    for (int r = 0; r < grid.im.count; ++r) {
        out << format_number(grid.im.at(r));
        for (int c = 0; c < grid.re.count; ++c) out << ',' << format_number(grid.values(r, c));
        out << '\n';
    }
    return out.str();
}

std::string summary_json(const RunReport& report, bool with_wall_clock) {
    nlohmann::ordered_json j;
    j["schema"] = kReportSchema;
    j["tool"] = "ecsim";
    j["tool_version"] = tool_version();
    j["scenario"] = to_string(report.scenario);
    j["config"] = report.config;
    nlohmann::ordered_json scalars = nlohmann::ordered_json::object();
    for (const auto& [k, v] : report.scalars) scalars[k] = v;
    j["summary"] = scalars;
    nlohmann::ordered_json checks = nlohmann::ordered_json::array();
    for (const Check& c : report.checks) {
        nlohmann::ordered_json e;
        e["name"] = c.name;
        e["value"] = c.value;
        e["relation"] = c.relation;
        if (c.relation == "in") {
            e["lower"] = c.threshold;
            e["upper"] = c.upper;
        } else {
            e["threshold"] = c.threshold;
        }
        e["pass"] = c.pass;
        checks.push_back(e);
    }
    j["checks"] = checks;
    j["passed"] = report.passed();
    j["timeseries"] = {{"file", "timeseries.csv"}, {"columns", report.columns}, {"rows", report.rows.size()}};
    if (report.qgrid) {
        const PhaseSpaceGrid& g = *report.qgrid;
        j["qgrid"] = {{"file", "qgrid.csv"},
                      {"re", {{"min", g.re.min}, {"max", g.re.max}, {"count", g.re.count}}},
                      {"im", {{"min", g.im.min}, {"max", g.im.max}, {"count", g.im.count}}}};
    }
    if (with_wall_clock) j["wall_clock_seconds"] = report.wall_clock_seconds;
    return j.dump(2) + "\n";
}

void write_outputs(const RunReport& report, const std::filesystem::path& dir) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) fail(ErrorCode::ConfigInvalid, "cannot create output directory " + dir.string());
    write_file(dir / "timeseries.csv", timeseries_csv(report));
    write_file(dir / "summary.json", summary_json(report));
    if (report.qgrid) write_file(dir / "qgrid.csv", qgrid_csv(*report.qgrid));
}

}  // namespace ecsim
