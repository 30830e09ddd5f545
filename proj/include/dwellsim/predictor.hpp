#pragma once

// Per-EDI-state remaining-dwell regressors: a mean baseline, the boosted
// tree model, and a ground-truth oracle used as the upper-bound strategy.
// Each state's model is trained only on rows observed at that state (the
// IN model never sees the EDI-progress block). Served predictions clamp at
// zero. Also: training-set assembly with the long-dwell filter, permutation
// importance, and versioned model serialization.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "dwellsim/error.hpp"
#include "dwellsim/features.hpp"
#include "dwellsim/gbrt.hpp"
#include "dwellsim/record.hpp"
#include "dwellsim/rng.hpp"
#include "dwellsim/standard_code.hpp"
#include "dwellsim/stats.hpp"
#include "dwellsim/std_bank.hpp"

namespace dwellsim {

// Standardization results keyed by the exact raw text, one space per kind.
// Records reference results through their ci_raw/oi_raw strings; texts
// without a stored result are simply absent (features fall back to the
// UNKNOWN category).
class ResultLookup {
  public:
    void add(const StandardizationResult& result) {
        (result.kind == CodeKind::HS ? ci_ : oi_)[result.raw] = result;
    }

    const StandardizationResult* find(const std::string& raw, CodeKind kind) const {
        const auto& m = kind == CodeKind::HS ? ci_ : oi_;
        auto it = m.find(raw);
        return it == m.end() ? nullptr : &it->second;
    }

    std::size_t size() const { return ci_.size() + oi_.size(); }

    static ResultLookup from_bank(const STDBank& bank) {
        ResultLookup lookup;
        for (const auto& entry : bank.entries()) {
            lookup.add(entry.result);
        }
        return lookup;
    }

  private:
    std::map<std::string, StandardizationResult> ci_;
    std::map<std::string, StandardizationResult> oi_;
};

// Rows and targets for one state's model. Targets are remaining dwell in
// hours at that state's timestamp; rows beyond the long-dwell filter are
// excluded from training (the simulator still replays them).
struct TrainingSet {
    EDIState state = EDIState::IN;
    FeatureSchema schema;
    std::vector<FeatureVector> rows;
    std::vector<double> targets;
    std::vector<std::string> ids;  // container ids aligned with rows
};

inline constexpr double kDefaultMaxDwellFilterHours = 240.0;

inline TrainingSet build_training_set(
    const std::vector<ContainerRecord>& records, EDIState state, const ResultLookup& lookup,
    const FeatureOptions& options,
    const HolidayCalendar& calendar = HolidayCalendar::weekends_only(),
    double max_dwell_filter = kDefaultMaxDwellFilterHours) {
    options.validate();
    if (!(max_dwell_filter > 0.0)) {
        throw ConfigError("build_training_set: max_dwell_filter must be positive");
    }
    TrainingSet ts;
    ts.state = state;
    ts.schema = feature_schema(state, options);
    for (const auto& record : records) {
        record.validate();
        double target = actual_icdt(record, state);
        if (!(target > 0.0) || target > max_dwell_filter) {
            continue;
        }
        ts.rows.push_back(build_features(record, state,
                                         lookup.find(record.ci_raw, CodeKind::HS),
                                         lookup.find(record.oi_raw, CodeKind::KSIC), options,
                                         calendar));
        ts.targets.push_back(target);
        ts.ids.push_back(record.id);
    }
    return ts;
}

enum class ModelKind { Mean, Gbrt };

inline std::string_view to_string(ModelKind k) {
    return k == ModelKind::Mean ? "mean" : "gbrt";
}

inline ModelKind model_kind_from_string(std::string_view s) {
    if (s == "mean") return ModelKind::Mean;
    if (s == "gbrt") return ModelKind::Gbrt;
    throw SchemaError("unknown model kind: " + std::string(s));
}

// One state's fitted regressor: either the training-mean constant or a
// boosted tree model. Value type, serializable, immutable once fitted.
class TrainedModel {
  public:
    TrainedModel() = default;

    ModelKind kind() const { return kind_; }

    // Raw output; may be negative. Serving goes through predict_icdt.
    double predict(const FeatureVector& fv) const {
        return kind_ == ModelKind::Mean ? mean_ : gbrt_->predict(fv);
    }

    double mean_value() const {
        if (kind_ != ModelKind::Mean) {
            throw InvalidState("model is not a mean model");
        }
        return mean_;
    }

    const GbrtModel& gbrt() const {
        if (kind_ != ModelKind::Gbrt) {
            throw InvalidState("model is not a tree model");
        }
        return *gbrt_;
    }

    nlohmann::json to_json() const {
        if (kind_ == ModelKind::Mean) {
            return nlohmann::json{{"kind", "mean"}, {"mean", mean_}};
        }
        return nlohmann::json{{"kind", "gbrt"}, {"model", gbrt_->to_json()}};
    }

    static TrainedModel from_json(const nlohmann::json& j) {
        TrainedModel model;
        if (!j.is_object() || !j.contains("kind")) {
            throw SchemaError("model payload missing kind");
        }
        model.kind_ = model_kind_from_string(j.at("kind").get<std::string>());
        try {
            if (model.kind_ == ModelKind::Mean) {
                model.mean_ = j.at("mean").get<double>();
            } else {
                model.gbrt_ = GbrtModel::from_json(j.at("model"));
            }
        } catch (const nlohmann::json::exception& e) {
            throw SchemaError(std::string("bad model payload: ") + e.what());
        }
        return model;
    }

    bool operator==(const TrainedModel&) const = default;

    friend TrainedModel fit_mean(const TrainingSet& ts);
    friend TrainedModel fit_gbrt(const TrainingSet& ts, const GBRTConfig& config);

  private:
    ModelKind kind_ = ModelKind::Mean;
    double mean_ = 0.0;
    std::optional<GbrtModel> gbrt_;
};

inline TrainedModel fit_mean(const TrainingSet& ts) {
    if (ts.rows.empty()) {
        throw EmptyTrainingSet("fit_mean: no rows");
    }
    if (ts.targets.size() != ts.rows.size()) {
        throw LengthMismatch("fit_mean: rows and targets differ in length");
    }
    TrainedModel model;
    model.kind_ = ModelKind::Mean;
    model.mean_ = sample_mean(ts.targets);
    return model;
}

inline TrainedModel fit_gbrt(const TrainingSet& ts, const GBRTConfig& config) {
    TrainedModel model;
    model.kind_ = ModelKind::Gbrt;
    model.gbrt_ = GbrtModel::fit(ts.rows, ts.targets, ts.schema, config);
    return model;
}

// Served prediction: raw model output clamped at zero hours.
inline double predict_icdt(const TrainedModel& model, const FeatureVector& fv) {
    return std::max(0.0, model.predict(fv));
}

// The three per-state regressors plus the feature options they were
// trained with (needed to rebuild identical rows at serving time).
struct StateModels {
    static constexpr int kFormatVersion = 1;

    FeatureOptions options;
    TrainedModel phi_in;
    TrainedModel phi_cr;
    TrainedModel phi_cp;

    const TrainedModel& at(EDIState state) const {
        switch (state) {
            case EDIState::IN: return phi_in;
            case EDIState::CR: return phi_cr;
            case EDIState::CP: return phi_cp;
            case EDIState::OUT: break;
        }
        throw InvalidState("no model serves the OUT state");
    }

    nlohmann::json to_json() const {
        return nlohmann::json{{"format_version", kFormatVersion},
                              {"options",
                               {{"std_level", options.std_level}, {"use_edi", options.use_edi}}},
                              {"phi_in", phi_in.to_json()},
                              {"phi_cr", phi_cr.to_json()},
                              {"phi_cp", phi_cp.to_json()}};
    }

    static StateModels from_json(const nlohmann::json& j) {
        if (!j.is_object() || !j.contains("format_version")) {
            throw SchemaError("state-models payload missing format_version");
        }
        if (j.at("format_version") != kFormatVersion) {
            throw SchemaError("unsupported state-models format_version");
        }
        StateModels models;
        try {
            models.options.std_level = j.at("options").at("std_level").get<int>();
            models.options.use_edi = j.at("options").at("use_edi").get<bool>();
            models.phi_in = TrainedModel::from_json(j.at("phi_in"));
            models.phi_cr = TrainedModel::from_json(j.at("phi_cr"));
            models.phi_cp = TrainedModel::from_json(j.at("phi_cp"));
        } catch (const nlohmann::json::exception& e) {
            throw SchemaError(std::string("bad state-models payload: ") + e.what());
        }
        models.options.validate();
        return models;
    }

    bool operator==(const StateModels&) const = default;
};

inline void save_state_models(const StateModels& models, const std::string& path) {
    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw IoError("cannot write model file: " + tmp);
        }
        out << models.to_json().dump(2) << '\n';
        if (!out) {
            throw IoError("failed writing model file: " + tmp);
        }
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0) {
        throw IoError("cannot rename " + tmp + " to " + path);
    }
}

inline StateModels load_state_models(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open model file: " + path);
    }
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw SchemaError(std::string("model file is not valid JSON: ") + e.what());
    }
    return StateModels::from_json(j);
}

// Train one model per pre-OUT state on that state's own rows. Each state
// gets an independent seed stream derived from config.seed, so the three
// fits stay decoupled regardless of training order.
inline StateModels train_state_models(
    const std::vector<ContainerRecord>& records, const ResultLookup& lookup, ModelKind kind,
    const GBRTConfig& config, const FeatureOptions& options,
    const HolidayCalendar& calendar = HolidayCalendar::weekends_only(),
    double max_dwell_filter = kDefaultMaxDwellFilterHours) {
    config.validate();
    options.validate();
    StateModels models;
    models.options = options;
    for (EDIState state : {EDIState::IN, EDIState::CR, EDIState::CP}) {
        TrainingSet ts =
            build_training_set(records, state, lookup, options, calendar, max_dwell_filter);
        TrainedModel model;
        if (kind == ModelKind::Mean) {
            model = fit_mean(ts);
        } else {
            GBRTConfig state_config = config;
            state_config.seed = mix_seed(config.seed, static_cast<std::uint64_t>(
                                                          state_order(state)));
            model = fit_gbrt(ts, state_config);
        }
        switch (state) {
            case EDIState::IN: models.phi_in = std::move(model); break;
            case EDIState::CR: models.phi_cr = std::move(model); break;
            case EDIState::CP: models.phi_cp = std::move(model); break;
            case EDIState::OUT: break;
        }
    }
    return models;
}

// Ground-truth predictor: answers with the container's actual remaining
// dwell, looked up by container id from the records it was built over.
class OraclePredictor {
  public:
    explicit OraclePredictor(const std::vector<ContainerRecord>& records) {
        for (const auto& record : records) {
            record.validate();
            by_id_[record.id] = record;
        }
    }

    double predict(const ContainerRecord& record, EDIState state) const {
        auto it = by_id_.find(record.id);
        if (it == by_id_.end()) {
            throw UnknownContainer("oracle has no container: " + record.id);
        }
        return actual_icdt(it->second, state);
    }

    std::size_t size() const { return by_id_.size(); }

  private:
    std::map<std::string, ContainerRecord> by_id_;
};

inline OraclePredictor fit_oracle(const std::vector<ContainerRecord>& records) {
    return OraclePredictor(records);
}

// What the stacking strategies consume: a clamped remaining-dwell estimate
// for a container entering a state. Implementations must be safe for
// concurrent reads.
class IcdtSource {
  public:
    virtual ~IcdtSource() = default;
    virtual double icdt(const ContainerRecord& record, EDIState state) const = 0;
};

// Serves per-state model predictions (the predicted-dwell strategy).
// Borrows the models/lookup/calendar; the caller keeps them alive.
class ModelIcdtSource final : public IcdtSource {
  public:
    ModelIcdtSource(const StateModels* models, const ResultLookup* lookup,
                    const HolidayCalendar* calendar)
        : models_(models), lookup_(lookup), calendar_(calendar) {}

    double icdt(const ContainerRecord& record, EDIState state) const override {
        FeatureVector fv = build_features(record, state,
                                          lookup_->find(record.ci_raw, CodeKind::HS),
                                          lookup_->find(record.oi_raw, CodeKind::KSIC),
                                          models_->options, *calendar_);
        return predict_icdt(models_->at(state), fv);
    }

  private:
    const StateModels* models_;
    const ResultLookup* lookup_;
    const HolidayCalendar* calendar_;
};

// Serves exact actuals (the upper-bound strategy) through the same
// interface, so both strategies share every downstream decision path.
class OracleIcdtSource final : public IcdtSource {
  public:
    explicit OracleIcdtSource(const OraclePredictor* oracle) : oracle_(oracle) {}

    double icdt(const ContainerRecord& record, EDIState state) const override {
        return std::max(0.0, oracle_->predict(record, state));
    }

  private:
    const OraclePredictor* oracle_;
};

struct FeatureImportance {
    std::string feature;
    double mae_increase = 0.0;
};

// Mean served-MAE increase over 5 seeded permutations of each feature
// column, against the unpermuted baseline. Deterministic given the seed.
inline std::vector<FeatureImportance> permutation_importance(const TrainedModel& model,
                                                             const TrainingSet& validation,
                                                             std::uint64_t seed) {
    if (validation.rows.empty()) {
        throw EmptyInput("permutation_importance: no validation rows");
    }
    if (validation.targets.size() != validation.rows.size()) {
        throw LengthMismatch("permutation_importance: rows and targets differ in length");
    }
    constexpr int kRepeats = 5;
    const std::size_t n = validation.rows.size();

    auto score = [&](const std::vector<FeatureVector>& rows) {
        std::vector<double> preds;
        preds.reserve(n);
        for (const auto& fv : rows) {
            preds.push_back(predict_icdt(model, fv));
        }
        return mae(preds, validation.targets);
    };
    double baseline = score(validation.rows);

    std::vector<FeatureImportance> importances;
    std::vector<FeatureVector> work = validation.rows;
    const std::size_t n_cat = validation.schema.categorical.size();
    const std::size_t n_total = n_cat + validation.schema.numeric.size();
    for (std::size_t f = 0; f < n_total; ++f) {
        double total = 0.0;
        for (int rep = 0; rep < kRepeats; ++rep) {
            std::vector<std::size_t> perm(n);
            std::iota(perm.begin(), perm.end(), std::size_t{0});
            Rng rng(mix_seed(seed, f * 131 + static_cast<std::uint64_t>(rep)));
            rng.shuffle(perm);
            for (std::size_t i = 0; i < n; ++i) {
                if (f < n_cat) {
                    work[i].cat[f] = validation.rows[perm[i]].cat[f];
                } else {
                    work[i].num[f - n_cat] = validation.rows[perm[i]].num[f - n_cat];
                }
            }
            total += score(work);
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (f < n_cat) {
                work[i].cat[f] = validation.rows[i].cat[f];
            } else {
                work[i].num[f - n_cat] = validation.rows[i].num[f - n_cat];
            }
        }
        std::string name = f < n_cat ? validation.schema.categorical[f]
                                     : validation.schema.numeric[f - n_cat];
        importances.push_back(FeatureImportance{std::move(name), total / kRepeats - baseline});
    }
    return importances;
}

}  // namespace dwellsim
