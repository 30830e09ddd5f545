// Acceptance gate: ten end-to-end checks, each printing exactly one
// "criterion N: PASS/FAIL" line. Run all (no arguments) or one
// (--criterion N). Exit 0 only if every executed criterion passes.
//
// Tolerances are pinned here, next to each check, not configurable.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "dwellsim/backend.hpp"
#include "dwellsim/classification.hpp"
#include "dwellsim/experiment.hpp"
#include "dwellsim/generator.hpp"
#include "dwellsim/predictor.hpp"
#include "dwellsim/report.hpp"
#include "dwellsim/simulate.hpp"
#include "dwellsim/std_bank.hpp"
#include "dwellsim/stats.hpp"
#include "dwellsim/yard.hpp"

using namespace dwellsim;

namespace {

struct CheckFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require(bool condition, const std::string& message) {
    if (!condition) {
        throw CheckFailure(message);
    }
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.4f", v);
    return buf;
}

// ---------------------------------------------------------------------------
// Criterion 1: published reference numbers reproduce from the formulas.

void criterion1() {
    const struct {
        double reference;
        double improved;
        double pct;
    } kReductionGoldens[] = {
        {72500, 70406, 2.89},  {72500, 69019, 4.80},  {63353, 60540, 4.44},
        {63353, 57806, 8.76},  {52120, 49229, 5.55},  {52120, 45408, 12.88},
        {40565, 37460, 7.65},  {40565, 32636, 19.55}, {31288, 28122, 10.12},
        {31288, 23461, 25.02}, {24473, 21675, 11.43}, {24473, 16836, 31.21},
        {19500, 17185, 11.87}, {19500, 12880, 33.95}, {15940, 13600, 14.68},
        {15940, 10406, 34.72}, {13079, 11160, 14.67}, {13079, 8577, 34.42},
    };
    for (const auto& g : kReductionGoldens) {
        double got = reduction_rate(g.reference, g.improved);
        require(std::abs(got - g.pct) <= 0.01,  // +/- 0.01 percentage points
                "reduction_rate(" + fmt(g.reference) + ", " + fmt(g.improved) + ") = " +
                    fmt(got) + ", expected " + fmt(g.pct));
    }
    double r1 = non_matched_ratio_percent(22271, 921);
    require(std::abs(r1 - 4.14) <= 0.01, "non-matched 921/22271 = " + fmt(r1));
    double r2 = non_matched_ratio_percent(6190, 5898);
    require(std::abs(r2 - 95.28) <= 0.01, "non-matched 5898/6190 = " + fmt(r2));
}

// ---------------------------------------------------------------------------
// Criterion 2: feeding the predicted-dwell strategy true remaining dwell
// must replay the actual-dwell strategy bit for bit.

void criterion2() {
    GeneratorConfig gc;
    gc.n_containers = 5000;
    gc.seed = 0xC2;
    std::vector<ContainerRecord> records = generate_dataset(gc).records;
    OraclePredictor oracle(records);
    OracleIcdtSource source(&oracle);

    for (int yards : {2, 3, 4}) {
        YardLayout layout;
        layout.n_yards = yards;
        layout.rows = 12;
        layout.bays = 20;
        layout.tiers = 7;
        layout.ft20_bay_end = 12;
        for (int s = 0; s < 10; ++s) {
            SimOptions options;
            options.seed = mix_seed(0xACCE2ULL,
                                    static_cast<std::uint64_t>(yards) * 100 +
                                        static_cast<std::uint64_t>(s));
            SimulationResult predicted =
                run_simulation(records, layout, Strategy::PredictedDwell, &source, options);
            SimulationResult actual =
                run_simulation(records, layout, Strategy::ActualDwell, nullptr, options);
            require(predicted.rl_total == actual.rl_total &&
                        predicted == actual,
                    "oracle-fed prediction diverged from actual dwell at yards=" +
                        std::to_string(yards) + " seed=" + std::to_string(s) + " (rl " +
                        std::to_string(predicted.rl_total) + " vs " +
                        std::to_string(actual.rl_total) + ")");
        }
    }
}

// ---------------------------------------------------------------------------
// Criterion 3: structural invariants at every event, with an independent
// relocation recount.

class RecountObserver final : public SimObserver {
  public:
    void before_event(const YardState& state, const SimEvent& event) override {
        if (event.state == EDIState::OUT && state.contains(event.container_id)) {
            const RegistryEntry& entry = state.entry(event.container_id);
            ColumnRef col{entry.pos.y, entry.pos.r, entry.pos.b};
            recount_rl_ += static_cast<std::uint64_t>(state.top_tier(col) - entry.pos.t);
            ++stack_departures_;  // overflowed containers leave uncounted
        }
    }

    void after_event(const YardState& state, const SimEvent& event,
                     int rl_increment) override {
        state.audit();  // tier contiguity, registry/column agreement
        if (event.state == EDIState::IN) {
            seen_.insert(event.container_id);
        }
        if (event.state == EDIState::OUT) {
            departed_.insert(event.container_id);
            increments_ += static_cast<std::uint64_t>(rl_increment);
        }
        require(state.stacked_count() + state.temporary_count() + departed_.size() ==
                    seen_.size(),
                "container conservation broken after " +
                    std::string(to_string(event.state)) + " of " + event.container_id);
    }

    std::uint64_t recount_rl() const { return recount_rl_; }
    std::uint64_t increments() const { return increments_; }
    std::uint64_t stack_departures() const { return stack_departures_; }

  private:
    std::uint64_t recount_rl_ = 0;
    std::uint64_t increments_ = 0;
    std::uint64_t stack_departures_ = 0;
    std::set<std::string> seen_;
    std::set<std::string> departed_;
};

void criterion3() {
    GeneratorConfig gc;
    gc.n_containers = 1000;
    gc.seed = 0xC3;
    std::vector<ContainerRecord> records = generate_dataset(gc).records;
    OraclePredictor oracle(records);
    OracleIcdtSource source(&oracle);

    YardLayout tight;
    tight.n_yards = 1;
    tight.rows = 4;
    tight.bays = 6;
    tight.tiers = 4;
    tight.ft20_bay_end = 3;
    YardLayout roomy;
    roomy.n_yards = 2;
    roomy.rows = 12;
    roomy.bays = 20;
    roomy.tiers = 7;
    roomy.ft20_bay_end = 12;

    for (const YardLayout& layout : {tight, roomy}) {
        for (Strategy strategy :
             {Strategy::Baseline, Strategy::PredictedDwell, Strategy::ActualDwell}) {
            RecountObserver observer;
            SimOptions options;
            options.seed = 0xC31;
            const IcdtSource* src =
                strategy == Strategy::PredictedDwell ? &source : nullptr;
            SimulationResult result =
                run_simulation(records, layout, strategy, src, options, &observer);
            require(observer.recount_rl() == result.rl_total,
                    "independent recount " + std::to_string(observer.recount_rl()) +
                        " != reported rl_total " + std::to_string(result.rl_total));
            require(observer.increments() == result.rl_total,
                    "per-event increments disagree with rl_total");
            require(observer.stack_departures() == result.departures,
                    "departure count mismatch (" +
                        std::to_string(observer.stack_departures()) + " vs " +
                        std::to_string(result.departures) + ")");
        }
    }
}

// ---------------------------------------------------------------------------
// Criterion 4: at scale and moderate occupancy, mean relocations order as
// actual < predicted < baseline, and the predicted strategy saves > 2%.

void criterion4() {
    GeneratorConfig gc;
    gc.n_containers = 20000;
    gc.seed = 0xC4;
    std::vector<ContainerRecord> records = generate_dataset(gc).records;
    std::sort(records.begin(), records.end(), [](const auto& a, const auto& b) {
        return a.t_in != b.t_in ? a.t_in < b.t_in : a.id < b.id;
    });

    STDBank bank;
    MockBackend mock;
    standardize_dataset(records, bank, mock, 0.002);
    ResultLookup lookup = ResultLookup::from_bank(bank);
    const HolidayCalendar& calendar = HolidayCalendar::weekends_only();

    std::size_t cut = records.size() * 8 / 10;
    std::vector<ContainerRecord> train(records.begin(),
                                       records.begin() + static_cast<std::ptrdiff_t>(cut));
    std::vector<ContainerRecord> test(records.begin() + static_cast<std::ptrdiff_t>(cut),
                                      records.end());

    GBRTConfig model_config;
    model_config.seed = 0xC4AB;
    FeatureOptions options;  // full codes + event updates
    StateModels models =
        train_state_models(train, lookup, ModelKind::Gbrt, model_config, options, calendar);
    ModelIcdtSource model_source(&models, &lookup, &calendar);
    OraclePredictor oracle(test);
    OracleIcdtSource oracle_source(&oracle);

    // Sized so the test stream sits near 40% average occupancy.
    YardLayout layout;
    layout.n_yards = 1;
    layout.rows = 12;
    layout.bays = 16;
    layout.tiers = 4;
    layout.ft20_bay_end = 9;

    std::vector<double> rl_base;
    std::vector<double> rl_pred;
    std::vector<double> rl_act;
    std::vector<double> occ;
    for (int s = 0; s < 10; ++s) {
        SimOptions sim_options;
        sim_options.seed = mix_seed(0xC4C4ULL, static_cast<std::uint64_t>(s));
        SimulationResult base =
            run_simulation(test, layout, Strategy::Baseline, nullptr, sim_options);
        SimulationResult pred = run_simulation(test, layout, Strategy::PredictedDwell,
                                               &model_source, sim_options);
        SimulationResult act =
            run_simulation(test, layout, Strategy::ActualDwell, nullptr, sim_options);
        rl_base.push_back(static_cast<double>(base.rl_total));
        rl_pred.push_back(static_cast<double>(pred.rl_total));
        rl_act.push_back(static_cast<double>(act.rl_total));
        occ.push_back(base.avg_occupancy());
    }
    double mean_base = sample_mean(rl_base);
    double mean_pred = sample_mean(rl_pred);
    double mean_act = sample_mean(rl_act);
    double mean_occ = sample_mean(occ);
    require(mean_occ >= 0.25 && mean_occ <= 0.55,
            "average occupancy " + fmt(mean_occ) + " outside the 0.25..0.55 target band");
    require(mean_act < mean_pred,
            "actual-dwell mean " + fmt(mean_act) + " not below predicted " + fmt(mean_pred));
    require(mean_pred < mean_base,
            "predicted mean " + fmt(mean_pred) + " not below baseline " + fmt(mean_base));
    double reduction = reduction_rate(mean_base, mean_pred);
    require(reduction > 2.0,
            "predicted reduction " + fmt(reduction) + "% does not exceed 2%");
}

// ---------------------------------------------------------------------------
// Criterion 5: code features help the gate-in model; full-depth codes do
// not lose to top-level-only codes.

void criterion5() {
    GeneratorConfig gc;
    gc.n_containers = 8000;
    gc.seed = 0xC5;
    std::vector<ContainerRecord> records = generate_dataset(gc).records;

    STDBank bank;
    MockBackend mock;
    standardize_dataset(records, bank, mock, 0.002);
    ResultLookup lookup = ResultLookup::from_bank(bank);
    const HolidayCalendar& calendar = HolidayCalendar::weekends_only();

    GBRTConfig model_config;
    model_config.n_trees = 150;
    model_config.max_depth = 4;

    std::vector<double> mae_none;
    std::vector<double> mae_lv1;
    std::vector<double> mae_lv3;
    for (int split = 0; split < 10; ++split) {
        std::vector<ContainerRecord> shuffled = records;
        Rng rng(mix_seed(0xC5AAULL, static_cast<std::uint64_t>(split)));
        rng.shuffle(shuffled);
        std::size_t cut = shuffled.size() * 7 / 10;
        std::vector<ContainerRecord> train(shuffled.begin(),
                                           shuffled.begin() +
                                               static_cast<std::ptrdiff_t>(cut));
        std::vector<ContainerRecord> eval(shuffled.begin() +
                                              static_cast<std::ptrdiff_t>(cut),
                                          shuffled.end());
        model_config.seed = mix_seed(0xC5BBULL, static_cast<std::uint64_t>(split));
        for (int level : {0, 1, 3}) {
            FeatureOptions options;
            options.std_level = level;
            TrainingSet ts = build_training_set(train, EDIState::IN, lookup, options, calendar);
            TrainedModel model = fit_gbrt(ts, model_config);
            TrainingSet es = build_training_set(eval, EDIState::IN, lookup, options, calendar);
            std::vector<double> preds;
            preds.reserve(es.rows.size());
            for (const auto& fv : es.rows) {
                preds.push_back(predict_icdt(model, fv));
            }
            double m = mae(preds, es.targets);
            (level == 0 ? mae_none : level == 1 ? mae_lv1 : mae_lv3).push_back(m);
        }
    }
    double none = sample_mean(mae_none);
    double lv1 = sample_mean(mae_lv1);
    double lv3 = sample_mean(mae_lv3);
    double gain = (none - lv3) / none * 100.0;
    require(gain > 5.0, "full-depth codes improve MAE by " + fmt(gain) +
                            "% over no codes; need > 5% (no-codes " + fmt(none) +
                            ", full " + fmt(lv3) + ")");
    require(lv3 <= lv1, "full-depth MAE " + fmt(lv3) + " exceeds top-level-only " + fmt(lv1));
}

// ---------------------------------------------------------------------------
// Criterion 6: event-stage features help the release-order model, and the
// strategy ranking codes+events <= neither <= baseline holds end to end.

void criterion6() {
    GeneratorConfig gc;
    gc.n_containers = 10000;
    gc.seed = 0xC6;
    std::vector<ContainerRecord> records = generate_dataset(gc).records;
    std::sort(records.begin(), records.end(), [](const auto& a, const auto& b) {
        return a.t_in != b.t_in ? a.t_in < b.t_in : a.id < b.id;
    });

    STDBank bank;
    MockBackend mock;
    standardize_dataset(records, bank, mock, 0.002);
    ResultLookup lookup = ResultLookup::from_bank(bank);
    const HolidayCalendar& calendar = HolidayCalendar::weekends_only();

    // Part 1: release-order model ablation over 10 random splits.
    GBRTConfig ablation_config;
    ablation_config.n_trees = 150;
    ablation_config.max_depth = 4;
    std::vector<double> mae_with;
    std::vector<double> mae_without;
    for (int split = 0; split < 10; ++split) {
        std::vector<ContainerRecord> shuffled = records;
        Rng rng(mix_seed(0xC6AAULL, static_cast<std::uint64_t>(split)));
        rng.shuffle(shuffled);
        std::size_t cut = shuffled.size() * 7 / 10;
        std::vector<ContainerRecord> train(shuffled.begin(),
                                           shuffled.begin() +
                                               static_cast<std::ptrdiff_t>(cut));
        std::vector<ContainerRecord> eval(shuffled.begin() +
                                              static_cast<std::ptrdiff_t>(cut),
                                          shuffled.end());
        ablation_config.seed = mix_seed(0xC6BBULL, static_cast<std::uint64_t>(split));
        for (bool use_edi : {true, false}) {
            FeatureOptions options;
            options.use_edi = use_edi;
            TrainingSet ts = build_training_set(train, EDIState::CR, lookup, options, calendar);
            TrainedModel model = fit_gbrt(ts, ablation_config);
            TrainingSet es = build_training_set(eval, EDIState::CR, lookup, options, calendar);
            std::vector<double> preds;
            preds.reserve(es.rows.size());
            for (const auto& fv : es.rows) {
                preds.push_back(predict_icdt(model, fv));
            }
            (use_edi ? mae_with : mae_without).push_back(mae(preds, es.targets));
        }
    }
    double with_edi = sample_mean(mae_with);
    double without_edi = sample_mean(mae_without);
    require(with_edi < without_edi,
            "release-order model with event features (" + fmt(with_edi) +
                ") not better than without (" + fmt(without_edi) + ")");

    // Part 2: chronological split, then the end-to-end ranking.
    std::size_t cut = records.size() * 8 / 10;
    std::vector<ContainerRecord> train(records.begin(),
                                       records.begin() + static_cast<std::ptrdiff_t>(cut));
    std::vector<ContainerRecord> test(records.begin() + static_cast<std::ptrdiff_t>(cut),
                                      records.end());

    GBRTConfig model_config;
    model_config.seed = 0xC6CC;
    FeatureOptions bare;  // neither codes nor event updates
    bare.std_level = 0;
    bare.use_edi = false;
    FeatureOptions full;  // codes + event updates
    StateModels models_bare =
        train_state_models(train, lookup, ModelKind::Gbrt, model_config, bare, calendar);
    StateModels models_full =
        train_state_models(train, lookup, ModelKind::Gbrt, model_config, full, calendar);
    ModelIcdtSource source_bare(&models_bare, &lookup, &calendar);
    ModelIcdtSource source_full(&models_full, &lookup, &calendar);

    YardLayout layout;
    layout.n_yards = 1;
    layout.rows = 12;
    layout.bays = 16;
    layout.tiers = 4;
    layout.ft20_bay_end = 9;

    std::vector<double> rl_a;
    std::vector<double> rl_b;
    std::vector<double> rl_e;
    for (int s = 0; s < 10; ++s) {
        SimOptions base_options;
        base_options.seed = mix_seed(0xC6DDULL, static_cast<std::uint64_t>(s));
        SimOptions bare_options = base_options;
        bare_options.update_estimates = false;  // no event-driven refresh
        rl_a.push_back(static_cast<double>(
            run_simulation(test, layout, Strategy::Baseline, nullptr, base_options)
                .rl_total));
        rl_b.push_back(static_cast<double>(
            run_simulation(test, layout, Strategy::PredictedDwell, &source_bare,
                           bare_options)
                .rl_total));
        rl_e.push_back(static_cast<double>(
            run_simulation(test, layout, Strategy::PredictedDwell, &source_full,
                           base_options)
                .rl_total));
    }
    double mean_a = sample_mean(rl_a);
    double mean_b = sample_mean(rl_b);
    double mean_e = sample_mean(rl_e);
    require(mean_e <= mean_b, "codes+events mean " + fmt(mean_e) +
                                  " exceeds bare prediction mean " + fmt(mean_b));
    require(mean_b <= mean_a,
            "bare prediction mean " + fmt(mean_b) + " exceeds baseline " + fmt(mean_a));
}

// ---------------------------------------------------------------------------
// Criterion 7: the bank calls the backend once per distinct text, replays
// free, reports exact unit economics, and deduplicates concurrent misses.

class CountingBackend final : public StandardizerBackend {
  public:
    explicit CountingBackend(StandardizerBackend* inner) : inner_(inner) {}
    std::string complete(const std::string& prompt) override {
        ++calls_;
        return inner_->complete(prompt);
    }
    int calls() const { return calls_.load(); }

  private:
    StandardizerBackend* inner_;
    std::atomic<int> calls_{0};
};

void criterion7() {
    MockBackend mock;
    STDBank bank;
    std::vector<std::string> texts;
    texts.reserve(2000);
    for (int i = 0; i < 2000; ++i) {
        char buf[48];
        std::snprintf(buf, sizeof(buf), "CARGO LOT %04d ASSORTED", i);
        texts.emplace_back(buf);
    }
    // 10000 lookups over 2000 distinct texts, interleaved.
    for (int round = 0; round < 5; ++round) {
        for (const auto& text : texts) {
            bank.standardize(text, CodeKind::HS, mock);
        }
    }
    BankStats stats = bank.stats();
    require(stats.lookups == 10000, "lookups " + std::to_string(stats.lookups));
    require(stats.backend_calls == 2000,
            "expected exactly 2000 backend calls, got " +
                std::to_string(stats.backend_calls));
    require(stats.hits == 8000, "hits " + std::to_string(stats.hits));
    require(stats.failed_calls == 0, "failed calls present");

    // Exact unit economics, same arithmetic as the report.
    BankReport report = bank_stats(bank, 0.002, 10000);
    double expected_cost = static_cast<double>(2000) * 0.002 * 1000.0 / 10000.0;
    require(report.cost_per_1000 == expected_cost,
            "cost_per_1000 " + fmt(report.cost_per_1000) + " != " + fmt(expected_cost));
    require(report.request_ratio == 0.2, "request ratio " + fmt(report.request_ratio));

    // Warm replay: zero additional backend calls.
    for (const auto& text : texts) {
        bank.standardize(text, CodeKind::HS, mock);
    }
    require(bank.stats().backend_calls == 2000, "replay reached the backend");

    // 16 threads racing on one cold key produce a single backend call.
    STDBank cold;
    CountingBackend counting(&mock);
    std::vector<std::thread> threads;
    std::atomic<int> ready{0};
    for (int t = 0; t < 16; ++t) {
        threads.emplace_back([&] {
            ++ready;
            while (ready.load() < 16) {
                std::this_thread::yield();
            }
            cold.standardize("FROZEN SHRIMP PREMIUM EXPORT", CodeKind::HS, counting);
        });
    }
    for (auto& th : threads) {
        th.join();
    }
    require(counting.calls() == 1, "concurrent cold lookups made " +
                                       std::to_string(counting.calls()) +
                                       " backend calls, expected 1");
    require(cold.stats().lookups == 16, "concurrent lookups miscounted");
    require(cold.stats().backend_calls == 1, "concurrent backend calls miscounted");
}

// ---------------------------------------------------------------------------
// Criterion 8: repeat-consistency under a noisy backend matches the exact
// outcome-distribution enumeration; a noiseless backend is perfectly
// consistent.

void criterion8() {
    const ClassificationTable& table = ClassificationTable::builtin();
    MockBackend mock;
    constexpr int kEntries = 1000;
    constexpr int kTrials = 10;
    constexpr double kFlip = 0.1;

    std::vector<std::string> raws;
    std::vector<double> expected_consistency;
    for (int i = 0; i < kEntries; ++i) {
        const auto& kw = data::kCiKeywords[static_cast<std::size_t>(i) %
                                           std::size(data::kCiKeywords)];
        std::string raw(kw.token);
        StandardizationResult base = mock.standardize_raw(raw, CodeKind::HS);
        require(base.validation == ValidationType::Type1, "keyword did not resolve: " + raw);
        std::size_t siblings = table.siblings_of(CodeKind::HS, 3, *base.code.lv3).size();
        double expect;
        if (siblings == 0) {
            expect = 100.0;  // a flip has nowhere to go
        } else {
            double s = static_cast<double>(siblings);
            double expected_unique = (1.0 - std::pow(kFlip, kTrials)) +
                                     s * (1.0 - std::pow(1.0 - kFlip / s, kTrials));
            expect = (1.0 - (expected_unique - 1.0) / (kTrials - 1)) * 100.0;
        }
        raws.push_back(std::move(raw));
        expected_consistency.push_back(expect);
    }
    double oracle_mean = sample_mean(expected_consistency);

    NoisyMockBackend noisy(kFlip, 0xC8);
    std::vector<std::vector<std::string>> trials(raws.size());
    for (std::size_t i = 0; i < raws.size(); ++i) {
        for (int t = 0; t < kTrials; ++t) {
            StandardizationResult r = noisy.standardize_raw(raws[i], CodeKind::HS);
            trials[i].push_back(*r.code.lv3);
        }
    }
    double empirical = mean_consistency_rate(trials);
    require(std::abs(empirical - oracle_mean) <= 1.0,  // +/- 1 percentage point
            "noisy consistency " + fmt(empirical) + " vs enumeration " + fmt(oracle_mean));

    NoisyMockBackend silent(0.0, 0xC8);
    std::vector<std::vector<std::string>> clean(raws.size());
    for (std::size_t i = 0; i < raws.size(); ++i) {
        for (int t = 0; t < kTrials; ++t) {
            clean[i].push_back(*silent.standardize_raw(raws[i], CodeKind::HS).code.lv3);
        }
    }
    require(mean_consistency_rate(clean) == 100.0, "noiseless backend not fully consistent");
}

// ---------------------------------------------------------------------------
// Criterion 9: every fully resolved output passes hierarchy validation;
// seeded corruptions are flagged at exactly the corrupted level.

void criterion9() {
    const ClassificationTable& table = ClassificationTable::builtin();
    MockBackend mock;

    std::vector<StandardizationResult> resolved;
    for (const auto& kw : data::kCiKeywords) {
        StandardizationResult r = mock.standardize_raw(std::string(kw.token), CodeKind::HS);
        require(r.validation == ValidationType::Type1,
                "cargo keyword did not resolve: " + std::string(kw.token));
        require(validate_hierarchy(table, r).all_matched(),
                "resolved cargo code failed validation: " + std::string(kw.token));
        resolved.push_back(std::move(r));
    }
    for (const auto& kw : data::kOiKeywords) {
        StandardizationResult r = mock.standardize_raw(std::string(kw.token), CodeKind::KSIC);
        require(r.validation == ValidationType::Type1,
                "owner keyword did not resolve: " + std::string(kw.token));
        require(validate_hierarchy(table, r).all_matched(),
                "resolved owner code failed validation: " + std::string(kw.token));
        resolved.push_back(std::move(r));
    }

    // Codes at a level whose parent differs from the given entry's parent.
    auto foreign_codes = [&](CodeKind kind, int level, const std::string& code) {
        const ClassificationEntry* self = table.find(kind, level, code);
        std::vector<std::string> out;
        for (const auto& e : table.entries()) {
            if (e.kind == kind && e.level == level && self != nullptr &&
                e.parent_code != self->parent_code) {
                out.push_back(e.code);
            }
        }
        return out;
    };
    auto absent_code = [](CodeKind kind, int level) -> std::string {
        if (kind == CodeKind::HS) {
            return level == 1 ? "ZZ" : level == 2 ? "ZZZZ" : "ZZZZZZ";
        }
        return level == 1 ? "9" : level == 2 ? "ZZ" : "ZZZ";
    };

    Rng rng(0xC9);
    for (int i = 0; i < 1000; ++i) {
        StandardizationResult corrupted = resolved[rng.uniform_below(resolved.size())];
        int level = 1 + static_cast<int>(rng.uniform_below(3));
        std::optional<std::string>& slot = level == 1   ? corrupted.code.lv1
                                           : level == 2 ? corrupted.code.lv2
                                                        : corrupted.code.lv3;
        bool used_foreign = false;
        if (level > 1 && rng.bernoulli(0.5)) {
            auto candidates = foreign_codes(corrupted.code.kind, level, *slot);
            if (!candidates.empty()) {
                slot = candidates[rng.uniform_below(candidates.size())];
                used_foreign = true;
            }
        }
        if (!used_foreign) {
            slot = absent_code(corrupted.code.kind, level);
        }
        HierarchyReport report = validate_hierarchy(table, corrupted);
        require(!report.matched_at(level),
                "corruption at level " + std::to_string(level) + " not flagged (" +
                    *slot + ")");
        for (int shallower = 1; shallower < level; ++shallower) {
            require(report.matched_at(shallower),
                    "corruption at level " + std::to_string(level) +
                        " spuriously flagged level " + std::to_string(shallower));
        }
    }
}

// ---------------------------------------------------------------------------
// Criterion 10: two identical experiment runs emit byte-identical reports.

std::string read_file_bytes(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    require(static_cast<bool>(in), "cannot reopen " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void criterion10() {
    ExperimentConfig config;
    config.generator.n_containers = 2000;
    config.generator.seed = 0xC10;
    config.yard_scenarios = {2, 3};
    config.repeats = 3;
    config.seed = 0x10;
    config.model.n_trees = 60;
    config.model.max_depth = 4;
    config.model.n_folds = 3;
    config.rows = 2;
    config.bays = 5;
    config.tiers = 5;
    config.ft20_bay_end = 3;
    config.validate();

    std::filesystem::path base =
        std::filesystem::temp_directory_path() / "dwellsim_acceptance_c10";
    std::filesystem::remove_all(base);
    ReportPaths first = emit_report(run_experiment_matrix(config), (base / "a").string());
    ReportPaths second = emit_report(run_experiment_matrix(config), (base / "b").string());

    const std::pair<std::filesystem::path, std::filesystem::path> pairs[] = {
        {first.summary_csv, second.summary_csv},
        {first.full_json, second.full_json},
        {first.daily_relocations_csv, second.daily_relocations_csv},
        {first.bank_cost_csv, second.bank_cost_csv},
    };
    for (const auto& [a, b] : pairs) {
        require(read_file_bytes(a) == read_file_bytes(b),
                "repeat run differs in " + a.filename().string());
    }
    std::filesystem::remove_all(base);
}

}  // namespace

int main(int argc, char** argv) {
    int selected = 0;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) {
            selected = std::atoi(argv[++i]);
        } else {
            std::cerr << "usage: acceptance [--criterion N]\n";
            return 1;
        }
    }

    const struct {
        int id;
        void (*run)();
    } criteria[] = {
        {1, criterion1}, {2, criterion2}, {3, criterion3}, {4, criterion4},
        {5, criterion5}, {6, criterion6}, {7, criterion7}, {8, criterion8},
        {9, criterion9}, {10, criterion10},
    };

    bool any_failed = false;
    bool any_ran = false;
    for (const auto& c : criteria) {
        if (selected != 0 && c.id != selected) {
            continue;
        }
        any_ran = true;
        auto start = std::chrono::steady_clock::now();
        try {
            c.run();
            auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                                      start)
                            .count();
            std::printf("criterion %d: PASS (%.1fs)\n", c.id, secs);
        } catch (const std::exception& e) {
            any_failed = true;
            std::printf("criterion %d: FAIL (%s)\n", c.id, e.what());
        }
        std::fflush(stdout);
    }
    if (!any_ran) {
        std::cerr << "unknown criterion: " << selected << "\n";
        return 1;
    }
    return any_failed ? 1 : 0;
}
