#pragma once

// Experiment orchestration: generate a synthetic stream, standardize it
// through the bank once, train per-state models per component
// configuration, replay the held-out stream under every strategy x yard
// scenario x seed, and aggregate relocation statistics with reduction
// rates against the baseline. Every yard scenario replays the same
// stream; only the stacking capacity changes.

#include <cstdint>
#include <fstream>
#include <future>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <nlohmann/json.hpp>

#include "dwellsim/backend.hpp"
#include "dwellsim/error.hpp"
#include "dwellsim/generator.hpp"
#include "dwellsim/predictor.hpp"
#include "dwellsim/record.hpp"
#include "dwellsim/simulate.hpp"
#include "dwellsim/stats.hpp"
#include "dwellsim/std_bank.hpp"

namespace dwellsim {

// Percentage drop from rl_a to rl_b.
inline double reduction_rate(double rl_a, double rl_b) {
    if (rl_a <= 0.0) {
        throw DivisionDomain("reduction_rate: reference count must be positive");
    }
    return (rl_a - rl_b) / rl_a * 100.0;
}

// ---------------------------------------------------------------------------
// Flat key=value configuration text: one `key=value` per line, '#' starts
// a comment, blank lines ignored, whitespace around keys/values trimmed.

namespace detail {

inline std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) {
        return "";
    }
    std::size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

}  // namespace detail

inline std::map<std::string, std::string> parse_kv_text(const std::string& text) {
    std::map<std::string, std::string> kv;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) {
            line = line.substr(0, hash);
        }
        line = detail::trim(line);
        if (line.empty()) {
            continue;
        }
        std::size_t eq = line.find('=');
        if (eq == std::string::npos) {
            throw SchemaError("config line " + std::to_string(line_no) + ": expected key=value");
        }
        std::string key = detail::trim(line.substr(0, eq));
        std::string value = detail::trim(line.substr(eq + 1));
        if (key.empty()) {
            throw SchemaError("config line " + std::to_string(line_no) + ": empty key");
        }
        kv[key] = value;
    }
    return kv;
}

inline std::map<std::string, std::string> load_kv_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open config file: " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_kv_text(buf.str());
}

namespace detail {

// Typed access over a parsed key=value map; rejects unknown keys so that
// config typos fail loudly.
class KvReader {
  public:
    explicit KvReader(std::map<std::string, std::string> kv) : kv_(std::move(kv)) {}

    std::string get_string(const std::string& key, const std::string& fallback) {
        auto it = kv_.find(key);
        if (it == kv_.end()) {
            return fallback;
        }
        used_.insert(key);
        return it->second;
    }

    double get_double(const std::string& key, double fallback) {
        auto it = kv_.find(key);
        if (it == kv_.end()) {
            return fallback;
        }
        used_.insert(key);
        try {
            std::size_t pos = 0;
            double v = std::stod(it->second, &pos);
            if (pos != it->second.size()) {
                throw std::invalid_argument("");
            }
            return v;
        } catch (const std::exception&) {
            throw ConfigError("key '" + key + "': not a number: " + it->second);
        }
    }

    int get_int(const std::string& key, int fallback) {
        double v = get_double(key, static_cast<double>(fallback));
        int i = static_cast<int>(v);
        if (static_cast<double>(i) != v) {
            throw ConfigError("key '" + key + "': not an integer");
        }
        return i;
    }

    std::uint64_t get_u64(const std::string& key, std::uint64_t fallback) {
        auto it = kv_.find(key);
        if (it == kv_.end()) {
            return fallback;
        }
        used_.insert(key);
        try {
            return std::stoull(it->second);
        } catch (const std::exception&) {
            throw ConfigError("key '" + key + "': not an unsigned integer: " + it->second);
        }
    }

    bool get_bool(const std::string& key, bool fallback) {
        auto it = kv_.find(key);
        if (it == kv_.end()) {
            return fallback;
        }
        used_.insert(key);
        const std::string& v = it->second;
        if (v == "1" || v == "true" || v == "yes" || v == "on") return true;
        if (v == "0" || v == "false" || v == "no" || v == "off") return false;
        throw ConfigError("key '" + key + "': not a boolean: " + v);
    }

    std::vector<int> get_int_list(const std::string& key, std::vector<int> fallback) {
        auto it = kv_.find(key);
        if (it == kv_.end()) {
            return fallback;
        }
        used_.insert(key);
        std::vector<int> out;
        std::string item;
        std::istringstream ss(it->second);
        while (std::getline(ss, item, ',')) {
            item = trim(item);
            if (item.empty()) {
                continue;
            }
            try {
                out.push_back(std::stoi(item));
            } catch (const std::exception&) {
                throw ConfigError("key '" + key + "': not an integer list element: " + item);
            }
        }
        return out;
    }

    void reject_unknown() const {
        std::vector<std::string> unknown;
        for (const auto& [key, value] : kv_) {
            if (used_.count(key) == 0) {
                unknown.push_back(key);
            }
        }
        if (!unknown.empty()) {
            std::string joined;
            for (const auto& k : unknown) {
                joined += (joined.empty() ? "" : ", ") + k;
            }
            throw ConfigError("unknown config keys: " + joined);
        }
    }

  private:
    std::map<std::string, std::string> kv_;
    std::set<std::string> used_;
};

}  // namespace detail

struct ExperimentConfig {
    GeneratorConfig generator;
    std::vector<int> yard_scenarios = {2, 3, 4};
    int repeats = 10;
    std::uint64_t seed = 0;
    double train_fraction = 0.8;  // chronological split on t_in
    ModelKind model_kind = ModelKind::Gbrt;
    GBRTConfig model;
    int rows = 12;
    int bays = 20;
    int tiers = 7;
    int ft20_bay_end = 12;
    std::vector<int> reefer_yards;
    bool tier_fill_discipline = true;
    double unit_cost = 0.002;  // backend cost per call

    YardLayout layout_for(int n_yards) const {
        YardLayout layout;
        layout.n_yards = n_yards;
        layout.rows = rows;
        layout.bays = bays;
        layout.tiers = tiers;
        layout.ft20_bay_end = ft20_bay_end;
        layout.reefer_yards = reefer_yards;
        return layout;
    }

    void validate() const {
        generator.validate();
        model.validate();
        if (yard_scenarios.empty()) {
            throw ConfigError("at least one yard scenario is required");
        }
        if (repeats < 1) {
            throw ConfigError("repeats must be at least 1");
        }
        if (!(0.0 < train_fraction && train_fraction < 1.0)) {
            throw ConfigError("train_fraction must lie in (0, 1)");
        }
        if (unit_cost < 0.0) {
            throw ConfigError("unit_cost must be non-negative");
        }
        for (int y : yard_scenarios) {
            layout_for(y).validate();
        }
    }

    static ExperimentConfig from_kv(const std::map<std::string, std::string>& kv) {
        detail::KvReader r(kv);
        ExperimentConfig c;
        c.generator.n_containers = r.get_int("n_containers", c.generator.n_containers);
        c.generator.vessel_interarrival_hours =
            r.get_double("interarrival_hours", c.generator.vessel_interarrival_hours);
        c.generator.batch_size_mean = r.get_double("batch_size_mean", c.generator.batch_size_mean);
        c.generator.n_cargo_profiles = r.get_int("cargo_profiles", c.generator.n_cargo_profiles);
        c.generator.n_owner_profiles = r.get_int("owner_profiles", c.generator.n_owner_profiles);
        c.generator.cr_fraction_lo = r.get_double("cr_fraction_lo", c.generator.cr_fraction_lo);
        c.generator.cr_fraction_hi = r.get_double("cr_fraction_hi", c.generator.cr_fraction_hi);
        c.generator.cp_lead_lo = r.get_double("cp_lead_lo", c.generator.cp_lead_lo);
        c.generator.cp_lead_hi = r.get_double("cp_lead_hi", c.generator.cp_lead_hi);
        c.generator.do_margin_lo = r.get_double("do_margin_lo", c.generator.do_margin_lo);
        c.generator.do_margin_hi = r.get_double("do_margin_hi", c.generator.do_margin_hi);
        c.generator.reefer_fraction = r.get_double("reefer_fraction", c.generator.reefer_fraction);
        c.generator.ft40_fraction = r.get_double("ft40_fraction", c.generator.ft40_fraction);
        c.generator.ambiguous_fraction =
            r.get_double("ambiguous_fraction", c.generator.ambiguous_fraction);
        c.generator.junk_fraction = r.get_double("junk_fraction", c.generator.junk_fraction);
        c.generator.base_dwell_mean_lo =
            r.get_double("base_dwell_mean_lo", c.generator.base_dwell_mean_lo);
        c.generator.base_dwell_mean_hi =
            r.get_double("base_dwell_mean_hi", c.generator.base_dwell_mean_hi);
        c.generator.start_date = r.get_string("start_date", c.generator.start_date);
        c.generator.seed = r.get_u64("generator_seed", c.generator.seed);

        c.yard_scenarios = r.get_int_list("yards", c.yard_scenarios);
        c.repeats = r.get_int("repeats", c.repeats);
        c.seed = r.get_u64("experiment_seed", c.seed);
        c.train_fraction = r.get_double("train_fraction", c.train_fraction);
        c.model_kind =
            model_kind_from_string(r.get_string("model", std::string(to_string(c.model_kind))));
        c.model.n_trees = r.get_int("trees", c.model.n_trees);
        c.model.max_depth = r.get_int("depth", c.model.max_depth);
        c.model.learning_rate = r.get_double("learning_rate", c.model.learning_rate);
        c.model.min_samples_leaf = r.get_int("min_samples_leaf", c.model.min_samples_leaf);
        c.model.target_encoding_prior =
            r.get_double("encoding_prior", c.model.target_encoding_prior);
        c.model.n_folds = r.get_int("folds", c.model.n_folds);
        c.rows = r.get_int("rows", c.rows);
        c.bays = r.get_int("bays", c.bays);
        c.tiers = r.get_int("tiers", c.tiers);
        c.ft20_bay_end = r.get_int("ft20_bay_end", c.ft20_bay_end);
        c.reefer_yards = r.get_int_list("reefer_yards", c.reefer_yards);
        c.tier_fill_discipline = r.get_bool("tier_fill", c.tier_fill_discipline);
        c.unit_cost = r.get_double("unit_cost", c.unit_cost);
        r.reject_unknown();
        c.validate();
        return c;
    }
};

// The component matrix: which estimate source the stacking strategy uses
// and which feature blocks its models see.
struct MatrixConfiguration {
    std::string id;
    std::string label;
    Strategy strategy = Strategy::Baseline;
    bool use_std = false;
    bool use_edi = false;
};

inline const std::vector<MatrixConfiguration>& matrix_configurations() {
    static const std::vector<MatrixConfiguration> kConfigs = {
        {"a", "baseline", Strategy::Baseline, false, false},
        {"b", "predicted, no codes, no event updates", Strategy::PredictedDwell, false, false},
        {"c", "predicted, event updates only", Strategy::PredictedDwell, false, true},
        {"d", "predicted, codes only", Strategy::PredictedDwell, true, false},
        {"e", "predicted, codes + event updates", Strategy::PredictedDwell, true, true},
        {"f", "actual dwell", Strategy::ActualDwell, false, false},
    };
    return kConfigs;
}

struct ExperimentReportRow {
    std::string scenario;
    std::string config_id;
    std::string label;
    int repeats = 0;
    double rl_mean = 0.0;
    std::optional<double> rl_std;  // omitted when repeats < 2
    double occ_avg = 0.0;
    double occ_max = 0.0;
    double overflow_mean = 0.0;
    double reduction_vs_baseline_pct = 0.0;

    bool operator==(const ExperimentReportRow&) const = default;
};

struct SeriesPoint {
    std::string date;
    std::uint64_t value = 0;

    bool operator==(const SeriesPoint&) const = default;
};

struct BankCostPoint {
    std::uint64_t containers = 0;
    std::uint64_t lookups = 0;
    std::uint64_t backend_calls = 0;
    double cost = 0.0;

    bool operator==(const BankCostPoint&) const = default;
};

struct ExperimentOutput {
    static constexpr int kFormatVersion = 1;

    std::vector<ExperimentReportRow> rows;
    // Keyed "scenario/config", taken from the first repeat of each cell.
    std::map<std::string, std::vector<SeriesPoint>> daily_relocations;
    std::vector<BankCostPoint> bank_cost;
    BankReport bank_report;
    std::vector<std::string> notes;
    std::vector<std::string> warnings;
};

// Run every record's cargo and owner text through the bank, recording the
// cumulative cost curve at roughly `checkpoints` evenly spaced container
// counts.
inline std::vector<BankCostPoint> standardize_dataset(const std::vector<ContainerRecord>& records,
                                                      STDBank& bank,
                                                      StandardizerBackend& backend,
                                                      double unit_cost,
                                                      std::size_t checkpoints = 50) {
    std::vector<BankCostPoint> series;
    if (records.empty()) {
        return series;
    }
    std::size_t step = std::max<std::size_t>(1, records.size() / checkpoints);
    for (std::size_t i = 0; i < records.size(); ++i) {
        bank.standardize(records[i].ci_raw, CodeKind::HS, backend, records[i].t_in);
        bank.standardize(records[i].oi_raw, CodeKind::KSIC, backend, records[i].t_in);
        if ((i + 1) % step == 0 || i + 1 == records.size()) {
            BankStats stats = bank.stats();
            series.push_back(BankCostPoint{
                i + 1, stats.lookups, stats.backend_calls,
                static_cast<double>(stats.backend_calls) * unit_cost});
        }
    }
    return series;
}

inline ExperimentOutput run_experiment_matrix(const ExperimentConfig& config) {
    config.validate();
    ExperimentOutput out;
    out.notes.push_back(
        "all yard scenarios replay the same container stream; capacity varies with the yard "
        "count");
    out.notes.push_back("split: chronological by gate-in, train_fraction of records for "
                        "model fitting, remainder simulated");

    GeneratedDataset dataset = generate_dataset(config.generator);
    std::vector<ContainerRecord> records = dataset.records;
    std::sort(records.begin(), records.end(), [](const auto& a, const auto& b) {
        return a.t_in != b.t_in ? a.t_in < b.t_in : a.id < b.id;
    });

    STDBank bank;
    MockBackend mock;
    out.bank_cost = standardize_dataset(records, bank, mock, config.unit_cost);
    if (!records.empty()) {
        out.bank_report = bank_stats(bank, config.unit_cost, records.size());
    }
    ResultLookup lookup = ResultLookup::from_bank(bank);
    HolidayCalendar calendar = HolidayCalendar::weekends_only();

    auto split_at = static_cast<std::size_t>(
        static_cast<double>(records.size()) * config.train_fraction);
    std::vector<ContainerRecord> train(records.begin(),
                                       records.begin() + static_cast<std::ptrdiff_t>(split_at));
    std::vector<ContainerRecord> test(records.begin() + static_cast<std::ptrdiff_t>(split_at),
                                      records.end());
    if (train.empty() || test.empty()) {
        throw ConfigError("the chronological split left an empty segment");
    }

    // One model set per predicted-dwell configuration, trained once.
    const auto& configurations = matrix_configurations();
    std::vector<std::unique_ptr<StateModels>> models(configurations.size());
    std::vector<std::unique_ptr<ModelIcdtSource>> sources(configurations.size());
    for (std::size_t c = 0; c < configurations.size(); ++c) {
        if (configurations[c].strategy != Strategy::PredictedDwell) {
            continue;
        }
        FeatureOptions options;
        options.std_level = configurations[c].use_std ? 3 : 0;
        options.use_edi = configurations[c].use_edi;
        GBRTConfig model_config = config.model;
        model_config.seed = mix_seed(config.seed, 0xC0DE0000ULL + c);
        models[c] = std::make_unique<StateModels>(
            train_state_models(train, lookup, config.model_kind, model_config, options, calendar));
        sources[c] = std::make_unique<ModelIcdtSource>(models[c].get(), &lookup, &calendar);
    }

    struct Cell {
        std::size_t scenario_idx;
        std::size_t config_idx;
        int repeat;
    };
    std::vector<Cell> cells;
    for (std::size_t s = 0; s < config.yard_scenarios.size(); ++s) {
        for (std::size_t c = 0; c < configurations.size(); ++c) {
            for (int r = 0; r < config.repeats; ++r) {
                cells.push_back(Cell{s, c, r});
            }
        }
    }

    std::vector<SimulationResult> results(cells.size());
    auto run_cell = [&](const Cell& cell) {
        const MatrixConfiguration& mc = configurations[cell.config_idx];
        YardLayout layout = config.layout_for(config.yard_scenarios[cell.scenario_idx]);
        SimOptions options;
        // The same repeat index maps to the same seed in every
        // configuration and scenario, pairing the comparisons.
        options.seed = mix_seed(config.seed,
                                (static_cast<std::uint64_t>(
                                     config.yard_scenarios[cell.scenario_idx])
                                 << 16) |
                                    static_cast<std::uint64_t>(cell.repeat));
        options.tier_fill_discipline = config.tier_fill_discipline;
        options.update_estimates =
            mc.strategy != Strategy::PredictedDwell || mc.use_edi;
        return run_simulation(test, layout, mc.strategy, sources[cell.config_idx].get(),
                              options);
    };

    std::size_t concurrency = std::max(1u, std::thread::hardware_concurrency());
    for (std::size_t start = 0; start < cells.size(); start += concurrency) {
        std::size_t stop = std::min(cells.size(), start + concurrency);
        std::vector<std::future<SimulationResult>> wave;
        for (std::size_t i = start; i < stop; ++i) {
            wave.push_back(
                std::async(std::launch::async, [&, i] { return run_cell(cells[i]); }));
        }
        for (std::size_t i = start; i < stop; ++i) {
            results[i] = wave[i - start].get();
        }
    }

    auto cell_index = [&](std::size_t s, std::size_t c, int r) {
        return (s * configurations.size() + c) * static_cast<std::size_t>(config.repeats) +
               static_cast<std::size_t>(r);
    };

    if (config.repeats == 1) {
        out.warnings.push_back("repeats=1: relocation standard deviation omitted");
    }
    for (std::size_t s = 0; s < config.yard_scenarios.size(); ++s) {
        std::string scenario = "yard-" + std::to_string(config.yard_scenarios[s]);
        double baseline_mean = 0.0;
        for (std::size_t c = 0; c < configurations.size(); ++c) {
            std::vector<double> rl;
            std::vector<double> occ_avg;
            double occ_max = 0.0;
            double overflow_sum = 0.0;
            for (int r = 0; r < config.repeats; ++r) {
                const SimulationResult& res = results[cell_index(s, c, r)];
                rl.push_back(static_cast<double>(res.rl_total));
                occ_avg.push_back(res.avg_occupancy());
                occ_max = std::max(occ_max, res.max_occupancy());
                overflow_sum += static_cast<double>(res.overflow_count);
            }
            ExperimentReportRow row;
            row.scenario = scenario;
            row.config_id = configurations[c].id;
            row.label = configurations[c].label;
            row.repeats = config.repeats;
            row.rl_mean = sample_mean(rl);
            if (config.repeats >= 2) {
                row.rl_std = sample_stddev(rl);
            }
            row.occ_avg = sample_mean(occ_avg);
            row.occ_max = occ_max;
            row.overflow_mean = overflow_sum / config.repeats;
            if (configurations[c].id == "a") {
                baseline_mean = row.rl_mean;
                row.reduction_vs_baseline_pct = 0.0;
            } else if (baseline_mean > 0.0) {
                row.reduction_vs_baseline_pct = reduction_rate(baseline_mean, row.rl_mean);
            } else {
                row.reduction_vs_baseline_pct = 0.0;
                out.warnings.push_back("baseline relocations are zero in " + scenario +
                                       "; reduction reported as 0");
            }
            out.rows.push_back(row);

            const SimulationResult& first = results[cell_index(s, c, 0)];
            std::vector<SeriesPoint> series;
            series.reserve(first.daily.size());
            for (const auto& day : first.daily) {
                series.push_back(SeriesPoint{format_iso_date(day.day_start), day.relocations});
            }
            out.daily_relocations[scenario + "/" + configurations[c].id] = std::move(series);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Serialization of the aggregated output (consumed by the report renderer).

inline nlohmann::json experiment_output_to_json(const ExperimentOutput& out) {
    nlohmann::json j;
    j["format_version"] = ExperimentOutput::kFormatVersion;
    j["notes"] = out.notes;
    j["warnings"] = out.warnings;
    j["rows"] = nlohmann::json::array();
    for (const auto& row : out.rows) {
        nlohmann::json r;
        r["scenario"] = row.scenario;
        r["config"] = row.config_id;
        r["label"] = row.label;
        r["repeats"] = row.repeats;
        r["rl_mean"] = row.rl_mean;
        r["rl_std"] = row.rl_std ? nlohmann::json(*row.rl_std) : nlohmann::json(nullptr);
        r["occ_avg"] = row.occ_avg;
        r["occ_max"] = row.occ_max;
        r["overflow_mean"] = row.overflow_mean;
        r["reduction_vs_baseline_pct"] = row.reduction_vs_baseline_pct;
        j["rows"].push_back(r);
    }
    j["daily_relocations"] = nlohmann::json::object();
    for (const auto& [key, series] : out.daily_relocations) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& point : series) {
            arr.push_back({{"date", point.date}, {"count", point.value}});
        }
        j["daily_relocations"][key] = arr;
    }
    j["bank_cost"] = nlohmann::json::array();
    for (const auto& point : out.bank_cost) {
        j["bank_cost"].push_back({{"containers", point.containers},
                                  {"lookups", point.lookups},
                                  {"backend_calls", point.backend_calls},
                                  {"cost", point.cost}});
    }
    j["bank_report"] = {{"lookups", out.bank_report.stats.lookups},
                        {"hits", out.bank_report.stats.hits},
                        {"backend_calls", out.bank_report.stats.backend_calls},
                        {"failed_calls", out.bank_report.stats.failed_calls},
                        {"unit_cost", out.bank_report.unit_cost},
                        {"containers_processed", out.bank_report.containers_processed},
                        {"request_ratio", out.bank_report.request_ratio},
                        {"cost_per_1000", out.bank_report.cost_per_1000}};
    return j;
}

inline ExperimentOutput experiment_output_from_json(const nlohmann::json& j) {
    try {
        if (!j.is_object() || j.at("format_version").get<int>() != ExperimentOutput::kFormatVersion) {
            throw SchemaError("unsupported experiment output format");
        }
        ExperimentOutput out;
        out.notes = j.at("notes").get<std::vector<std::string>>();
        out.warnings = j.at("warnings").get<std::vector<std::string>>();
        for (const auto& r : j.at("rows")) {
            ExperimentReportRow row;
            row.scenario = r.at("scenario").get<std::string>();
            row.config_id = r.at("config").get<std::string>();
            row.label = r.at("label").get<std::string>();
            row.repeats = r.at("repeats").get<int>();
            row.rl_mean = r.at("rl_mean").get<double>();
            if (!r.at("rl_std").is_null()) {
                row.rl_std = r.at("rl_std").get<double>();
            }
            row.occ_avg = r.at("occ_avg").get<double>();
            row.occ_max = r.at("occ_max").get<double>();
            row.overflow_mean = r.at("overflow_mean").get<double>();
            row.reduction_vs_baseline_pct = r.at("reduction_vs_baseline_pct").get<double>();
            out.rows.push_back(row);
        }
        for (const auto& [key, arr] : j.at("daily_relocations").items()) {
            std::vector<SeriesPoint> series;
            for (const auto& p : arr) {
                series.push_back(SeriesPoint{p.at("date").get<std::string>(),
                                             p.at("count").get<std::uint64_t>()});
            }
            out.daily_relocations[key] = std::move(series);
        }
        for (const auto& p : j.at("bank_cost")) {
            out.bank_cost.push_back(BankCostPoint{p.at("containers").get<std::uint64_t>(),
                                                  p.at("lookups").get<std::uint64_t>(),
                                                  p.at("backend_calls").get<std::uint64_t>(),
                                                  p.at("cost").get<double>()});
        }
        const auto& b = j.at("bank_report");
        out.bank_report.stats.lookups = b.at("lookups").get<std::uint64_t>();
        out.bank_report.stats.hits = b.at("hits").get<std::uint64_t>();
        out.bank_report.stats.backend_calls = b.at("backend_calls").get<std::uint64_t>();
        out.bank_report.stats.failed_calls = b.at("failed_calls").get<std::uint64_t>();
        out.bank_report.unit_cost = b.at("unit_cost").get<double>();
        out.bank_report.containers_processed = b.at("containers_processed").get<std::uint64_t>();
        out.bank_report.request_ratio = b.at("request_ratio").get<double>();
        out.bank_report.cost_per_1000 = b.at("cost_per_1000").get<double>();
        return out;
    } catch (const nlohmann::json::exception& e) {
        throw SchemaError(std::string("experiment output: ") + e.what());
    }
}

}  // namespace dwellsim
