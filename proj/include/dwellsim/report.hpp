#pragma once

// Renders an aggregated experiment output to files: a summary CSV, the
// full JSON (re-renderable later without re-running anything), and two
// plot-friendly CSV series (daily relocations per scenario/config, and
// the cumulative standardization cost curve). All files are written
// atomically: content goes to a temporary sibling first, then replaces
// the target by rename.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "dwellsim/csv.hpp"
#include "dwellsim/error.hpp"
#include "dwellsim/experiment.hpp"

namespace dwellsim {

namespace detail {

inline std::string format_fixed(double v, int digits = 6) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", digits, v);
    return std::string(buf);
}

inline void write_atomic(const std::filesystem::path& path, const std::string& content) {
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw IoError("cannot open for writing: " + tmp.string());
        }
        out << content;
        out.flush();
        if (!out) {
            throw IoError("write failed: " + tmp.string());
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        throw IoError("cannot replace " + path.string() + ": " + ec.message());
    }
}

}  // namespace detail

inline std::string render_summary_csv(const ExperimentOutput& out) {
    std::string text = "scenario,config,label,repeats,rl_mean,rl_std,occ_avg,occ_max,"
                       "overflow_mean,reduction_vs_baseline_pct\n";
    for (const auto& row : out.rows) {
        text += csv::format_row({row.scenario, row.config_id, row.label,
                                 std::to_string(row.repeats), detail::format_fixed(row.rl_mean),
                                 row.rl_std ? detail::format_fixed(*row.rl_std) : "",
                                 detail::format_fixed(row.occ_avg),
                                 detail::format_fixed(row.occ_max),
                                 detail::format_fixed(row.overflow_mean),
                                 detail::format_fixed(row.reduction_vs_baseline_pct)});
    }
    return text;
}

inline std::string render_daily_relocations_csv(const ExperimentOutput& out) {
    std::string text = "scenario,config,date,relocations\n";
    for (const auto& [key, series] : out.daily_relocations) {
        std::size_t slash = key.find('/');
        std::string scenario = key.substr(0, slash);
        std::string config = slash == std::string::npos ? "" : key.substr(slash + 1);
        for (const auto& point : series) {
            text += csv::format_row(
                {scenario, config, point.date, std::to_string(point.value)});
        }
    }
    return text;
}

inline std::string render_bank_cost_csv(const ExperimentOutput& out) {
    std::string text = "containers,lookups,backend_calls,cost\n";
    for (const auto& point : out.bank_cost) {
        text += csv::format_row({std::to_string(point.containers), std::to_string(point.lookups),
                                 std::to_string(point.backend_calls),
                                 detail::format_fixed(point.cost)});
    }
    return text;
}

struct ReportPaths {
    std::filesystem::path summary_csv;
    std::filesystem::path full_json;
    std::filesystem::path daily_relocations_csv;
    std::filesystem::path bank_cost_csv;
};

inline ReportPaths emit_report(const ExperimentOutput& out, const std::string& directory) {
    if (out.rows.empty()) {
        throw EmptyInput("emit_report: no result rows");
    }
    std::filesystem::path dir(directory);
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) {
        throw IoError("cannot create report directory " + dir.string() + ": " + ec.message());
    }
    ReportPaths paths{dir / "report.csv", dir / "report.json",
                      dir / "plot_daily_relocations.csv", dir / "plot_bank_cost.csv"};
    detail::write_atomic(paths.summary_csv, render_summary_csv(out));
    detail::write_atomic(paths.full_json, experiment_output_to_json(out).dump(2) + "\n");
    detail::write_atomic(paths.daily_relocations_csv, render_daily_relocations_csv(out));
    detail::write_atomic(paths.bank_cost_csv, render_bank_cost_csv(out));
    return paths;
}

inline ExperimentOutput load_report_json(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open report: " + path);
    }
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw SchemaError(std::string("report json: ") + e.what());
    }
    return experiment_output_from_json(j);
}

}  // namespace dwellsim
