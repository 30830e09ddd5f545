// Command-line front end: generate synthetic container streams,
// standardize them through the cached bank, train dwell models, replay
// the yard simulation under a chosen strategy, and run or re-render the
// full comparison matrix.
//
// Exit codes: 0 success, 1 usage error, 2 data/processing error.

#include <exception>
#include <fstream>
#include <iostream>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dwellsim/backend.hpp"
#include "dwellsim/experiment.hpp"
#include "dwellsim/generator.hpp"
#include "dwellsim/http_backend.hpp"
#include "dwellsim/predictor.hpp"
#include "dwellsim/record.hpp"
#include "dwellsim/report.hpp"
#include "dwellsim/simulate.hpp"
#include "dwellsim/std_bank.hpp"

namespace {

// Flag combinations CLI11 cannot express; reported as usage errors.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<dwellsim::ContainerRecord> read_records_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw dwellsim::IoError("cannot open records file: " + path);
    }
    dwellsim::IngestReport report = dwellsim::read_records_jsonl(in);
    for (const auto& reject : report.rejected) {
        std::cerr << "warning: " << path << ":" << reject.line_no
                  << ": record rejected: " << reject.error << "\n";
    }
    if (report.accepted.empty()) {
        throw dwellsim::EmptyInput("no valid records in " + path);
    }
    return std::move(report.accepted);
}

nlohmann::json load_json_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw dwellsim::IoError("cannot open file: " + path);
    }
    try {
        nlohmann::json j;
        in >> j;
        return j;
    } catch (const nlohmann::json::exception& e) {
        throw dwellsim::SchemaError(path + ": " + e.what());
    }
}

std::unique_ptr<dwellsim::StandardizerBackend> make_backend(const std::string& name,
                                                            double flip_prob,
                                                            std::uint64_t seed,
                                                            const std::string& url) {
    if (name == "mock") {
        return std::make_unique<dwellsim::MockBackend>();
    }
    if (name == "noisy") {
        return std::make_unique<dwellsim::NoisyMockBackend>(flip_prob, seed);
    }
    if (name == "http") {
        if (!url.empty()) {
            return std::make_unique<dwellsim::HttpBackend>(url);
        }
        return std::make_unique<dwellsim::HttpBackend>();
    }
    throw UsageError("unknown backend: " + name);
}

dwellsim::Strategy strategy_from_cli(const std::string& name) {
    if (name == "baseline") return dwellsim::Strategy::Baseline;
    if (name == "picdt" || name == "predicted") return dwellsim::Strategy::PredictedDwell;
    if (name == "aicdt" || name == "actual") return dwellsim::Strategy::ActualDwell;
    throw UsageError("unknown strategy: " + name);
}

struct GenOpts {
    int n = -1;
    std::uint64_t seed = 0;
    bool seed_set = false;
    std::string out;
    std::string config_path;
};

struct StandardizeOpts {
    std::string in;
    std::string bank;
    std::string backend = "mock";
    double flip_prob = 0.1;
    std::uint64_t seed = 0;
    std::string url;
    double unit_cost = 0.002;
};

struct TrainOpts {
    std::string in;
    std::string bank;
    std::string out;
    int std_level = 3;
    bool no_edi = false;
    std::string model = "gbrt";
    dwellsim::GBRTConfig gbrt;
};

struct SimulateOpts {
    std::string in;
    std::string strategy = "baseline";
    int yards = 4;
    std::uint64_t seed = 0;
    std::string models;
    std::string bank;
    std::string out;
    int rows = 12;
    int bays = 20;
    int tiers = 7;
    int ft20_bay_end = 12;
    std::vector<int> reefer_yards;
    bool no_tier_fill = false;
    bool no_update_estimates = false;
    bool per_departure = false;
};

struct ExperimentOpts {
    std::string config_path;
    std::string out_dir;
};

struct ReportOpts {
    std::string in;
    std::string out_dir;
};

int run_gen(const GenOpts& opt) {
    dwellsim::GeneratorConfig config;
    if (!opt.config_path.empty()) {
        config = dwellsim::ExperimentConfig::from_kv(dwellsim::load_kv_file(opt.config_path))
                     .generator;
    }
    if (opt.n >= 0) {
        config.n_containers = opt.n;
    }
    if (opt.seed_set) {
        config.seed = opt.seed;
    }
    dwellsim::GeneratedDataset dataset = dwellsim::generate_dataset(config);
    std::ostringstream text;
    dwellsim::write_records_jsonl(text, dataset.records);
    dwellsim::detail::write_atomic(opt.out, text.str());
    std::cout << "wrote " << dataset.records.size() << " records to " << opt.out << "\n";
    return 0;
}

int run_standardize(const StandardizeOpts& opt) {
    auto records = read_records_file(opt.in);
    auto backend = make_backend(opt.backend, opt.flip_prob, opt.seed, opt.url);
    dwellsim::STDBank bank = std::filesystem::exists(opt.bank)
                                 ? dwellsim::STDBank::load(opt.bank)
                                 : dwellsim::STDBank();
    bank.set_persist_path(opt.bank);
    for (const auto& record : records) {
        bank.standardize(record.ci_raw, dwellsim::CodeKind::HS, *backend, record.t_in);
        bank.standardize(record.oi_raw, dwellsim::CodeKind::KSIC, *backend, record.t_in);
    }
    dwellsim::BankReport report =
        dwellsim::bank_stats(bank, opt.unit_cost, records.size());
    nlohmann::json j{{"containers", report.containers_processed},
                     {"lookups", report.stats.lookups},
                     {"hits", report.stats.hits},
                     {"backend_calls", report.stats.backend_calls},
                     {"failed_calls", report.stats.failed_calls},
                     {"request_ratio", report.request_ratio},
                     {"cost_per_1000", report.cost_per_1000}};
    std::cout << j.dump(2) << "\n";
    return 0;
}

int run_train(const TrainOpts& opt) {
    auto records = read_records_file(opt.in);
    dwellsim::STDBank bank = dwellsim::STDBank::load(opt.bank);
    dwellsim::ResultLookup lookup = dwellsim::ResultLookup::from_bank(bank);
    dwellsim::FeatureOptions options;
    options.std_level = opt.std_level;
    options.use_edi = !opt.no_edi;
    dwellsim::StateModels models = dwellsim::train_state_models(
        records, lookup, dwellsim::model_kind_from_string(opt.model), opt.gbrt, options);
    dwellsim::detail::write_atomic(opt.out, models.to_json().dump(2) + "\n");
    std::cout << "trained " << opt.model << " models on " << records.size()
              << " records, wrote " << opt.out << "\n";
    return 0;
}

int run_simulate(const SimulateOpts& opt) {
    auto records = read_records_file(opt.in);
    dwellsim::Strategy strategy = strategy_from_cli(opt.strategy);

    dwellsim::YardLayout layout;
    layout.n_yards = opt.yards;
    layout.rows = opt.rows;
    layout.bays = opt.bays;
    layout.tiers = opt.tiers;
    layout.ft20_bay_end = opt.ft20_bay_end;
    layout.reefer_yards = opt.reefer_yards;

    dwellsim::SimOptions options;
    options.seed = opt.seed;
    options.tier_fill_discipline = !opt.no_tier_fill;
    options.update_estimates = !opt.no_update_estimates;

    // Owning state the estimate source points into; must outlive the run.
    std::unique_ptr<dwellsim::STDBank> bank;
    std::unique_ptr<dwellsim::ResultLookup> lookup;
    std::unique_ptr<dwellsim::StateModels> models;
    std::unique_ptr<dwellsim::ModelIcdtSource> source;
    if (strategy == dwellsim::Strategy::PredictedDwell) {
        if (opt.models.empty() || opt.bank.empty()) {
            throw UsageError("--strategy picdt requires --models and --bank");
        }
        bank = std::make_unique<dwellsim::STDBank>(dwellsim::STDBank::load(opt.bank));
        lookup = std::make_unique<dwellsim::ResultLookup>(
            dwellsim::ResultLookup::from_bank(*bank));
        models = std::make_unique<dwellsim::StateModels>(
            dwellsim::StateModels::from_json(load_json_file(opt.models)));
        source = std::make_unique<dwellsim::ModelIcdtSource>(
            models.get(), lookup.get(), &dwellsim::HolidayCalendar::weekends_only());
    }

    dwellsim::SimulationResult result =
        dwellsim::run_simulation(records, layout, strategy, source.get(), options);
    nlohmann::json j = dwellsim::simulation_result_to_json(result, opt.per_departure);
    if (opt.out.empty()) {
        std::cout << j.dump(2) << "\n";
    } else {
        dwellsim::detail::write_atomic(opt.out, j.dump(2) + "\n");
        std::cout << "rl_total " << result.rl_total << ", wrote " << opt.out << "\n";
    }
    return 0;
}

int run_experiment(const ExperimentOpts& opt) {
    dwellsim::ExperimentConfig config;
    if (!opt.config_path.empty()) {
        config = dwellsim::ExperimentConfig::from_kv(dwellsim::load_kv_file(opt.config_path));
    }
    dwellsim::ExperimentOutput output = dwellsim::run_experiment_matrix(config);
    for (const auto& warning : output.warnings) {
        std::cerr << "warning: " << warning << "\n";
    }
    dwellsim::ReportPaths paths = dwellsim::emit_report(output, opt.out_dir);
    for (const auto& row : output.rows) {
        std::cout << row.scenario << " " << row.config_id << " rl_mean "
                  << dwellsim::detail::format_fixed(row.rl_mean, 1) << " reduction "
                  << dwellsim::detail::format_fixed(row.reduction_vs_baseline_pct, 2)
                  << "%\n";
    }
    std::cout << "report written to " << paths.summary_csv.parent_path().string() << "\n";
    return 0;
}

int run_report(const ReportOpts& opt) {
    dwellsim::ExperimentOutput output = dwellsim::load_report_json(opt.in);
    dwellsim::ReportPaths paths = dwellsim::emit_report(output, opt.out_dir);
    std::cout << "re-rendered " << output.rows.size() << " rows to "
              << paths.summary_csv.parent_path().string() << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"container dwell-time standardization, prediction, and yard simulation"};
    app.require_subcommand(1);
    int rc = 0;

    auto gen = std::make_shared<GenOpts>();
    CLI::App* gen_cmd = app.add_subcommand("gen", "generate a synthetic container stream");
    gen_cmd->add_option("--n", gen->n, "number of containers");
    gen_cmd->add_option("--seed", gen->seed, "generator seed")
        ->each([gen](const std::string&) { gen->seed_set = true; });
    gen_cmd->add_option("--out", gen->out, "output records file (json lines)")->required();
    gen_cmd->add_option("--config", gen->config_path, "key=value config file");
    gen_cmd->callback([gen, &rc] { rc = run_gen(*gen); });

    auto std_opt = std::make_shared<StandardizeOpts>();
    CLI::App* std_cmd =
        app.add_subcommand("standardize", "resolve cargo/owner text through the bank");
    std_cmd->add_option("--in", std_opt->in, "records file")->required();
    std_cmd->add_option("--bank", std_opt->bank, "bank file (loaded if present, appended to)")
        ->required();
    std_cmd->add_option("--backend", std_opt->backend, "standardizer backend")
        ->check(CLI::IsMember({"mock", "noisy", "http"}));
    std_cmd->add_option("--flip-prob", std_opt->flip_prob,
                        "noisy backend: deepest-level flip probability");
    std_cmd->add_option("--seed", std_opt->seed, "noisy backend seed");
    std_cmd->add_option("--url", std_opt->url, "http backend URL");
    std_cmd->add_option("--unit-cost", std_opt->unit_cost, "cost per backend call");
    std_cmd->callback([std_opt, &rc] { rc = run_standardize(*std_opt); });

    auto train = std::make_shared<TrainOpts>();
    CLI::App* train_cmd = app.add_subcommand("train", "fit per-state dwell models");
    train_cmd->add_option("--in", train->in, "records file")->required();
    train_cmd->add_option("--bank", train->bank, "bank file with standardized text")
        ->required();
    train_cmd->add_option("--out", train->out, "output models file")->required();
    train_cmd->add_option("--std-level", train->std_level, "code depth fed to features (0-3)")
        ->check(CLI::Range(0, 3));
    train_cmd->add_flag("--no-edi", train->no_edi, "exclude event-stage features");
    train_cmd->add_option("--model", train->model, "regressor kind")
        ->check(CLI::IsMember({"mean", "gbrt"}));
    train_cmd->add_option("--seed", train->gbrt.seed, "training seed");
    train_cmd->add_option("--trees", train->gbrt.n_trees, "boosting rounds");
    train_cmd->add_option("--depth", train->gbrt.max_depth, "tree depth");
    train_cmd->add_option("--learning-rate", train->gbrt.learning_rate, "shrinkage");
    train_cmd->add_option("--min-leaf", train->gbrt.min_samples_leaf, "min samples per leaf");
    train_cmd->add_option("--folds", train->gbrt.n_folds, "target-encoding folds");
    train_cmd->callback([train, &rc] { rc = run_train(*train); });

    auto sim = std::make_shared<SimulateOpts>();
    CLI::App* sim_cmd = app.add_subcommand("simulate", "replay the stream through the yard");
    sim_cmd->add_option("--in", sim->in, "records file")->required();
    sim_cmd->add_option("--strategy", sim->strategy, "stacking strategy")
        ->check(CLI::IsMember({"baseline", "picdt", "aicdt", "predicted", "actual"}));
    sim_cmd->add_option("--yards", sim->yards, "number of yards");
    sim_cmd->add_option("--seed", sim->seed, "tie-break seed");
    sim_cmd->add_option("--models", sim->models, "trained models file (picdt)");
    sim_cmd->add_option("--bank", sim->bank, "bank file (picdt)");
    sim_cmd->add_option("--out", sim->out, "result file (stdout if omitted)");
    sim_cmd->add_option("--rows", sim->rows, "rows per yard");
    sim_cmd->add_option("--bays", sim->bays, "bays per row");
    sim_cmd->add_option("--tiers", sim->tiers, "stacking height");
    sim_cmd->add_option("--ft20-bay-end", sim->ft20_bay_end, "last 20ft bay");
    sim_cmd->add_option("--reefer-yards", sim->reefer_yards, "reefer-only yard indices");
    sim_cmd->add_flag("--no-tier-fill", sim->no_tier_fill, "drop the min-fill discipline");
    sim_cmd->add_flag("--no-update-estimates", sim->no_update_estimates,
                      "ignore release/pickup notices");
    sim_cmd->add_flag("--per-departure", sim->per_departure,
                      "include relocations per departure");
    sim_cmd->callback([sim, &rc] { rc = run_simulate(*sim); });

    auto exp = std::make_shared<ExperimentOpts>();
    CLI::App* exp_cmd =
        app.add_subcommand("experiment", "run the full strategy comparison matrix");
    exp_cmd->add_option("--config", exp->config_path, "key=value config file");
    exp_cmd->add_option("--out-dir", exp->out_dir, "report output directory")->required();
    exp_cmd->callback([exp, &rc] { rc = run_experiment(*exp); });

    auto rep = std::make_shared<ReportOpts>();
    CLI::App* rep_cmd = app.add_subcommand("report", "re-render files from a saved report");
    rep_cmd->add_option("--in", rep->in, "report.json from a previous run")->required();
    rep_cmd->add_option("--out-dir", rep->out_dir, "output directory")->required();
    rep_cmd->callback([rep, &rc] { rc = run_report(*rep); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 1;
    } catch (const dwellsim::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return rc;
}
