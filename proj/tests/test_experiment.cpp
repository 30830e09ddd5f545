#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <string>
#include <vector>

#include "dwellsim/csv.hpp"
#include "dwellsim/experiment.hpp"
#include "dwellsim/report.hpp"
#include "dwellsim/simulate.hpp"

using namespace dwellsim;

namespace {

// A deliberately cramped layout so relocations actually occur at test
// scale, plus a small model so training stays fast.
ExperimentConfig smoke_config() {
    ExperimentConfig c;
    c.generator.n_containers = 600;
    c.generator.seed = 424242;
    c.yard_scenarios = {1, 2};
    c.repeats = 2;
    c.seed = 99;
    c.model.n_trees = 25;
    c.model.max_depth = 3;
    c.model.n_folds = 2;
    c.rows = 2;
    c.bays = 5;
    c.tiers = 5;
    c.ft20_bay_end = 3;
    c.validate();
    return c;
}

// The exact pipeline prefix the matrix applies before simulating.
std::vector<ContainerRecord> test_segment(const ExperimentConfig& config) {
    GeneratedDataset dataset = generate_dataset(config.generator);
    std::vector<ContainerRecord> records = dataset.records;
    std::sort(records.begin(), records.end(), [](const auto& a, const auto& b) {
        return a.t_in != b.t_in ? a.t_in < b.t_in : a.id < b.id;
    });
    auto split = static_cast<std::size_t>(static_cast<double>(records.size()) *
                                          config.train_fraction);
    return {records.begin() + static_cast<std::ptrdiff_t>(split), records.end()};
}

const ExperimentReportRow& find_row(const ExperimentOutput& out, const std::string& scenario,
                                    const std::string& config_id) {
    for (const auto& row : out.rows) {
        if (row.scenario == scenario && row.config_id == config_id) {
            return row;
        }
    }
    REQUIRE(false);
    return out.rows.front();
}

}  // namespace

TEST_CASE("reduction rate matches hand-computed references") {
    // (reference count, improved count) -> percentage drop, 2 decimals.
    const struct {
        double a;
        double b;
        double pct;
    } kGoldens[] = {
        {72500, 70406, 2.89},  {72500, 69019, 4.80},  {63353, 60540, 4.44},
        {63353, 57806, 8.76},  {52120, 49229, 5.55},  {52120, 45408, 12.88},
        {40565, 37460, 7.65},  {40565, 32636, 19.55}, {31288, 28122, 10.12},
        {31288, 23461, 25.02}, {24473, 21675, 11.43}, {24473, 16836, 31.21},
        {19500, 17185, 11.87}, {19500, 12880, 33.95}, {15940, 13600, 14.68},
        {15940, 10406, 34.72}, {13079, 11160, 14.67}, {13079, 8577, 34.42},
    };
    for (const auto& g : kGoldens) {
        CHECK(std::abs(reduction_rate(g.a, g.b) - g.pct) < 0.005 + 1e-12);
    }
    CHECK(reduction_rate(100.0, 100.0) == 0.0);
    CHECK(reduction_rate(100.0, 110.0) == doctest::Approx(-10.0));
    CHECK_THROWS_AS(reduction_rate(0.0, 5.0), DivisionDomain);
    CHECK_THROWS_AS(reduction_rate(-3.0, 5.0), DivisionDomain);
}

TEST_CASE("key=value parsing handles comments, blanks, and trim") {
    auto kv = parse_kv_text("# header comment\n"
                            "\n"
                            "  n_containers = 250  \n"
                            "yards=2, 3 ,4\n"
                            "tier_fill = false # trailing comment\n"
                            "start_date=2026-02-02\n");
    CHECK(kv.size() == 4);
    CHECK(kv.at("n_containers") == "250");
    CHECK(kv.at("yards") == "2, 3 ,4");
    CHECK(kv.at("tier_fill") == "false");

    CHECK_THROWS_AS(parse_kv_text("no equals sign here"), SchemaError);
    CHECK_THROWS_AS(parse_kv_text("= value without key"), SchemaError);
}

TEST_CASE("experiment config from key=value text") {
    auto kv = parse_kv_text("n_containers=250\n"
                            "yards=2,3\n"
                            "repeats=4\n"
                            "experiment_seed=77\n"
                            "model=mean\n"
                            "tier_fill=off\n"
                            "trees=50\n"
                            "unit_cost=0.01\n");
    ExperimentConfig c = ExperimentConfig::from_kv(kv);
    CHECK(c.generator.n_containers == 250);
    CHECK(c.yard_scenarios == std::vector<int>{2, 3});
    CHECK(c.repeats == 4);
    CHECK(c.seed == 77);
    CHECK(c.model_kind == ModelKind::Mean);
    CHECK_FALSE(c.tier_fill_discipline);
    CHECK(c.model.n_trees == 50);
    CHECK(c.unit_cost == 0.01);
    // Untouched keys keep their defaults.
    CHECK(c.train_fraction == 0.8);
    CHECK(c.rows == 12);

    CHECK_THROWS_AS(ExperimentConfig::from_kv(parse_kv_text("n_contaners=5\n")), ConfigError);
    CHECK_THROWS_AS(ExperimentConfig::from_kv(parse_kv_text("repeats=zero\n")), ConfigError);
    CHECK_THROWS_AS(ExperimentConfig::from_kv(parse_kv_text("tier_fill=maybe\n")), ConfigError);
    CHECK_THROWS_AS(ExperimentConfig::from_kv(parse_kv_text("repeats=0\n")), ConfigError);
    CHECK_THROWS_AS(ExperimentConfig::from_kv(parse_kv_text("yards=\n")), ConfigError);
    CHECK_THROWS_AS(ExperimentConfig::from_kv(parse_kv_text("train_fraction=1.5\n")),
                    ConfigError);
    CHECK_THROWS_AS(ExperimentConfig::from_kv(parse_kv_text("model=forest\n")), SchemaError);
}

TEST_CASE("config file loading") {
    std::filesystem::path path =
        std::filesystem::temp_directory_path() / "dwellsim_test_config.cfg";
    {
        std::ofstream out(path);
        out << "# experiment\nrepeats=3\nyards=2\n";
    }
    ExperimentConfig c = ExperimentConfig::from_kv(load_kv_file(path.string()));
    CHECK(c.repeats == 3);
    CHECK(c.yard_scenarios == std::vector<int>{2});
    std::filesystem::remove(path);

    CHECK_THROWS_AS(load_kv_file("/nonexistent/dir/config.cfg"), IoError);
}

TEST_CASE("standardization cost curve accounts for every distinct text once") {
    GeneratorConfig gc;
    gc.n_containers = 800;
    gc.seed = 11;
    GeneratedDataset dataset = generate_dataset(gc);

    STDBank bank;
    MockBackend mock;
    auto series = standardize_dataset(dataset.records, bank, mock, 0.002);
    REQUIRE(!series.empty());
    CHECK(series.back().containers == 800);
    CHECK(series.back().lookups == 1600);  // two texts per container
    CHECK(series.back().backend_calls ==
          dataset.cargo_truth.size() + dataset.owner_truth.size());
    CHECK(series.back().cost ==
          doctest::Approx(0.002 * static_cast<double>(series.back().backend_calls)));
    for (std::size_t i = 1; i < series.size(); ++i) {
        CHECK(series[i].containers > series[i - 1].containers);
        CHECK(series[i].lookups >= series[i - 1].lookups);
        CHECK(series[i].backend_calls >= series[i - 1].backend_calls);
    }

    // Replaying the same records against the warm bank hits cache only.
    auto replay = standardize_dataset(dataset.records, bank, mock, 0.002);
    CHECK(replay.back().backend_calls == series.back().backend_calls);
    CHECK(replay.back().lookups == 3200);
}

TEST_CASE("experiment matrix aggregates every scenario and configuration") {
    ExperimentConfig config = smoke_config();
    ExperimentOutput out = run_experiment_matrix(config);

    const auto& configurations = matrix_configurations();
    REQUIRE(out.rows.size() == config.yard_scenarios.size() * configurations.size());
    std::size_t i = 0;
    for (int yards : config.yard_scenarios) {
        for (const auto& mc : configurations) {
            CHECK(out.rows[i].scenario == "yard-" + std::to_string(yards));
            CHECK(out.rows[i].config_id == mc.id);
            CHECK(out.rows[i].repeats == config.repeats);
            CHECK(out.rows[i].rl_std.has_value());
            CHECK(out.rows[i].occ_avg > 0.0);
            CHECK(out.rows[i].occ_max >= out.rows[i].occ_avg);
            ++i;
        }
    }
    CHECK(out.warnings.empty());

    // Reported reductions must recompute from the rows themselves.
    for (int yards : config.yard_scenarios) {
        std::string scenario = "yard-" + std::to_string(yards);
        const auto& baseline = find_row(out, scenario, "a");
        REQUIRE(baseline.rl_mean > 0.0);
        CHECK(baseline.reduction_vs_baseline_pct == 0.0);
        for (const auto& mc : configurations) {
            const auto& row = find_row(out, scenario, mc.id);
            CHECK(row.reduction_vs_baseline_pct ==
                  doctest::Approx(reduction_rate(baseline.rl_mean, row.rl_mean))
                      .epsilon(1e-12));
        }
    }

    // Baseline and actual-dwell rows recompute from scratch: the matrix
    // may not do anything beyond seeding, splitting, and averaging.
    std::vector<ContainerRecord> test = test_segment(config);
    for (int yards : config.yard_scenarios) {
        std::string scenario = "yard-" + std::to_string(yards);
        for (Strategy strategy : {Strategy::Baseline, Strategy::ActualDwell}) {
            std::vector<double> rl;
            for (int r = 0; r < config.repeats; ++r) {
                SimOptions options;
                options.seed = mix_seed(config.seed,
                                        (static_cast<std::uint64_t>(yards) << 16) |
                                            static_cast<std::uint64_t>(r));
                options.tier_fill_discipline = config.tier_fill_discipline;
                SimulationResult res = run_simulation(test, config.layout_for(yards), strategy,
                                                      nullptr, options);
                rl.push_back(static_cast<double>(res.rl_total));
            }
            const auto& row =
                find_row(out, scenario, strategy == Strategy::Baseline ? "a" : "f");
            CHECK(row.rl_mean == sample_mean(rl));
            CHECK(*row.rl_std == sample_stddev(rl));
        }
    }

    // One relocation series per cell, aligned with the simulated span.
    CHECK(out.daily_relocations.size() == out.rows.size());
    for (const auto& [key, series] : out.daily_relocations) {
        CHECK(!series.empty());
        CHECK(series.front().date.size() == 10);
    }

    // Bank accounting covers the full stream (two lookups per container).
    CHECK(out.bank_report.stats.lookups ==
          2 * static_cast<std::uint64_t>(config.generator.n_containers));
    CHECK(out.bank_report.containers_processed ==
          static_cast<std::uint64_t>(config.generator.n_containers));
    CHECK(!out.bank_cost.empty());
}

TEST_CASE("experiment matrix is deterministic end to end") {
    ExperimentConfig config = smoke_config();
    config.generator.n_containers = 400;
    config.yard_scenarios = {1};
    ExperimentOutput first = run_experiment_matrix(config);
    ExperimentOutput second = run_experiment_matrix(config);
    CHECK(experiment_output_to_json(first).dump() == experiment_output_to_json(second).dump());
}

TEST_CASE("single repeat omits the spread and warns") {
    ExperimentConfig config = smoke_config();
    config.generator.n_containers = 400;
    config.yard_scenarios = {1};
    config.repeats = 1;
    ExperimentOutput out = run_experiment_matrix(config);
    REQUIRE(out.rows.size() == matrix_configurations().size());
    for (const auto& row : out.rows) {
        CHECK_FALSE(row.rl_std.has_value());
    }
    bool warned = false;
    for (const auto& w : out.warnings) {
        warned = warned || w.find("repeats=1") != std::string::npos;
    }
    CHECK(warned);
}

TEST_CASE("experiment output survives a json round trip") {
    ExperimentOutput out;
    ExperimentReportRow row;
    row.scenario = "yard-2";
    row.config_id = "e";
    row.label = "predicted, codes + event updates";
    row.repeats = 3;
    row.rl_mean = 123.5;
    row.rl_std = 4.25;
    row.occ_avg = 0.41;
    row.occ_max = 0.62;
    row.overflow_mean = 0.5;
    row.reduction_vs_baseline_pct = 7.5;
    out.rows.push_back(row);
    row.config_id = "a";
    row.rl_std.reset();
    out.rows.push_back(row);
    out.daily_relocations["yard-2/e"] = {{"2026-03-02", 4}, {"2026-03-03", 0}};
    out.bank_cost = {{100, 200, 40, 0.08}, {200, 400, 41, 0.082}};
    out.bank_report.stats = {200, 150, 50, 0};
    out.bank_report.unit_cost = 0.002;
    out.bank_report.containers_processed = 100;
    out.bank_report.request_ratio = 0.25;
    out.bank_report.cost_per_1000 = 1.0;
    out.notes = {"note"};
    out.warnings = {"warning"};

    nlohmann::json j = experiment_output_to_json(out);
    ExperimentOutput back = experiment_output_from_json(j);
    CHECK(back.rows == out.rows);
    CHECK(back.daily_relocations == out.daily_relocations);
    CHECK(back.bank_cost == out.bank_cost);
    CHECK(experiment_output_to_json(back).dump() == j.dump());

    nlohmann::json bad = j;
    bad["format_version"] = 999;
    CHECK_THROWS_AS(experiment_output_from_json(bad), SchemaError);
    bad = j;
    bad.erase("rows");
    CHECK_THROWS_AS(experiment_output_from_json(bad), SchemaError);
}

TEST_CASE("report files render and reload faithfully") {
    ExperimentConfig config = smoke_config();
    config.generator.n_containers = 400;
    config.yard_scenarios = {1};
    ExperimentOutput out = run_experiment_matrix(config);

    std::filesystem::path dir =
        std::filesystem::temp_directory_path() / "dwellsim_report_test";
    std::filesystem::remove_all(dir);
    ReportPaths paths = emit_report(out, dir.string());
    CHECK(std::filesystem::exists(paths.summary_csv));
    CHECK(std::filesystem::exists(paths.full_json));
    CHECK(std::filesystem::exists(paths.daily_relocations_csv));
    CHECK(std::filesystem::exists(paths.bank_cost_csv));
    CHECK(!std::filesystem::exists(dir / "report.csv.tmp"));

    // The summary parses back row for row, and its reduction column
    // recomputes from its own rl_mean column.
    std::ifstream in(paths.summary_csv);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    auto rows = csv::parse(text);
    REQUIRE(rows.size() == out.rows.size() + 1);
    REQUIRE(rows[0].size() == 10);
    CHECK(rows[0][0] == "scenario");
    double baseline_mean = 0.0;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        REQUIRE(rows[i].size() == 10);
        double rl_mean = std::stod(rows[i][4]);
        double reduction = std::stod(rows[i][9]);
        if (rows[i][1] == "a") {
            baseline_mean = rl_mean;
            CHECK(reduction == 0.0);
        } else {
            CHECK(reduction ==
                  doctest::Approx(reduction_rate(baseline_mean, rl_mean)).epsilon(1e-3));
        }
        CHECK(!rows[i][5].empty());  // repeats=2: spread present
    }

    ExperimentOutput reloaded = load_report_json(paths.full_json.string());
    CHECK(experiment_output_to_json(reloaded).dump() ==
          experiment_output_to_json(out).dump());

    // Plot series: header plus one line per point.
    std::ifstream daily(paths.daily_relocations_csv);
    std::string daily_text((std::istreambuf_iterator<char>(daily)),
                           std::istreambuf_iterator<char>());
    std::size_t expected = 1;
    for (const auto& [key, series] : out.daily_relocations) {
        expected += series.size();
    }
    CHECK(csv::parse(daily_text).size() == expected);

    std::filesystem::remove_all(dir);

    ExperimentOutput empty;
    CHECK_THROWS_AS(emit_report(empty, dir.string()), EmptyInput);
}
