#pragma once

// Event replay over the yard: stack each container on arrival by the
// selected strategy, refresh its remaining-dwell estimate on customs and
// pickup-scheduling events, and on departure count and re-stack the
// containers sitting above it. Produces relocation totals, overflow
// counts, and daily occupancy / inversion series.

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "dwellsim/error.hpp"
#include "dwellsim/predictor.hpp"
#include "dwellsim/record.hpp"
#include "dwellsim/rng.hpp"
#include "dwellsim/time.hpp"
#include "dwellsim/yard.hpp"

namespace dwellsim {

enum class Strategy {
    Baseline,       // random lowest-tier stacking, no dwell estimates
    PredictedDwell, // stack by model-predicted remaining dwell
    ActualDwell,    // stack by ground-truth remaining dwell
};

inline std::string to_string(Strategy strategy) {
    switch (strategy) {
        case Strategy::Baseline: return "baseline";
        case Strategy::PredictedDwell: return "predicted";
        case Strategy::ActualDwell: return "actual";
    }
    throw DomainError("unknown strategy");
}

inline Strategy strategy_from_string(const std::string& text) {
    if (text == "baseline") return Strategy::Baseline;
    if (text == "predicted") return Strategy::PredictedDwell;
    if (text == "actual") return Strategy::ActualDwell;
    throw SchemaError("unknown strategy: " + text);
}

struct SimOptions {
    std::uint64_t seed = 0;
    // Fresh unloads only join columns at the area's minimum fill level;
    // relocations during a departure are exempt.
    bool tier_fill_discipline = true;
    // Re-estimate remaining dwell at customs-release and pickup-notice
    // events. Off means each container keeps the estimate made when it
    // was unloaded.
    bool update_estimates = true;

    bool operator==(const SimOptions&) const = default;
};

// End-of-day snapshot: occupancy, stacking-order inversions still
// present, and relocations performed during the day.
struct DailySample {
    DateTime day_start;
    double occupancy = 0.0;
    std::uint64_t inversions = 0;
    std::uint64_t relocations = 0;

    bool operator==(const DailySample&) const = default;
};

struct SimulationResult {
    std::uint64_t rl_total = 0;
    std::vector<int> rl_per_departure;
    std::uint64_t overflow_count = 0;
    std::uint64_t departures = 0;
    std::vector<DailySample> daily;

    double avg_occupancy() const {
        if (daily.empty()) {
            return 0.0;
        }
        double sum = 0.0;
        for (const auto& s : daily) {
            sum += s.occupancy;
        }
        return sum / static_cast<double>(daily.size());
    }

    double max_occupancy() const {
        double best = 0.0;
        for (const auto& s : daily) {
            best = std::max(best, s.occupancy);
        }
        return best;
    }

    bool operator==(const SimulationResult&) const = default;
};

inline nlohmann::json simulation_result_to_json(const SimulationResult& result,
                                                bool include_rl_per_departure = false) {
    nlohmann::json j;
    j["rl_total"] = result.rl_total;
    j["overflow_count"] = result.overflow_count;
    j["departures"] = result.departures;
    j["avg_occupancy"] = result.avg_occupancy();
    j["max_occupancy"] = result.max_occupancy();
    j["occupancy_daily"] = nlohmann::json::array();
    j["inversions"] = nlohmann::json::array();
    j["relocations_daily"] = nlohmann::json::array();
    for (const auto& s : result.daily) {
        j["occupancy_daily"].push_back(
            {{"date", format_iso_date(s.day_start)}, {"ratio", s.occupancy}});
        j["inversions"].push_back(
            {{"time", format_iso_date(s.day_start)}, {"count", s.inversions}});
        j["relocations_daily"].push_back(
            {{"date", format_iso_date(s.day_start)}, {"count", s.relocations}});
    }
    if (include_rl_per_departure) {
        j["rl_per_departure"] = result.rl_per_departure;
    }
    return j;
}

// Test hooks called around every event with the live state.
struct SimObserver {
    virtual ~SimObserver() = default;
    virtual void before_event(const YardState& state, const SimEvent& event) {
        (void)state;
        (void)event;
    }
    virtual void after_event(const YardState& state, const SimEvent& event, int rl_increment) {
        (void)state;
        (void)event;
        (void)rl_increment;
    }
};

// One replay run. Single-threaded; concurrent runs each use their own
// instance.
class Simulation {
  public:
    Simulation(const std::vector<ContainerRecord>& records, YardLayout layout,
               Strategy strategy, const IcdtSource* source, SimOptions options)
        : state_(std::move(layout)),
          strategy_(strategy),
          source_(source),
          options_(options),
          rng_(options.seed) {
        for (const auto& record : records) {
            record.validate();
            if (!by_id_.emplace(record.id, &record).second) {
                throw SchemaError("duplicate container id: " + record.id);
            }
            out_times_.emplace(record.id, record.t_out);
        }
        if (strategy_ == Strategy::ActualDwell) {
            oracle_ = std::make_unique<OraclePredictor>(records);
            oracle_source_ = std::make_unique<OracleIcdtSource>(oracle_.get());
            source_ = oracle_source_.get();
        }
        if (strategy_ != Strategy::Baseline && source_ == nullptr) {
            throw ConfigError("the predicted-dwell strategy needs an estimate source");
        }
    }

    const YardState& state() const { return state_; }
    const SimulationResult& result() const { return result_; }
    const std::map<std::string, DateTime>& out_times() const { return out_times_; }

    void handle_event(const SimEvent& event) {
        const ContainerRecord& record = *by_id_.at(event.container_id);
        switch (event.state) {
            case EDIState::IN: handle_in(record, event.time); break;
            case EDIState::CR:
            case EDIState::CP: handle_update(record, event.state, event.time); break;
            case EDIState::OUT: handle_out(record, event.time); break;
        }
    }

    void run(SimObserver* observer = nullptr) {
        std::vector<SimEvent> events = event_stream(records());
        std::optional<std::int64_t> current_day;
        for (const auto& event : events) {
            std::int64_t event_day = day_index(event.time);
            if (!current_day) {
                current_day = event_day;
            }
            while (*current_day < event_day) {
                sample_day(*current_day);
                ++*current_day;
            }
            if (observer != nullptr) {
                observer->before_event(state_, event);
            }
            std::uint64_t rl_before = result_.rl_total;
            handle_event(event);
            if (observer != nullptr) {
                observer->after_event(state_, event,
                                      static_cast<int>(result_.rl_total - rl_before));
            }
        }
        if (current_day) {
            sample_day(*current_day);
        }
        if (state_.stacked_count() != 0 || state_.temporary_count() != 0) {
            throw InvariantBreach("containers left behind after the final departure");
        }
    }

  private:
    std::vector<ContainerRecord> records() const {
        std::vector<ContainerRecord> out;
        out.reserve(by_id_.size());
        for (const auto& [id, record] : by_id_) {
            out.push_back(*record);
        }
        return out;
    }

    void handle_in(const ContainerRecord& record, DateTime now) {
        double value = 0.0;
        if (strategy_ != Strategy::Baseline) {
            value = source_->icdt(record, EDIState::IN);
        }
        bool prefer = strategy_ != Strategy::Baseline;
        bool min_fill = prefer ? options_.tier_fill_discipline : true;
        auto pos = detail::pick_position(state_, record, now, rng_, prefer, min_fill);
        if (!pos) {
            state_.send_to_temporary(record.id);
            ++result_.overflow_count;
            return;
        }
        state_.place(record.id, *pos, value, now);
    }

    void handle_update(const ContainerRecord& record, EDIState state, DateTime now) {
        if (state_.in_temporary(record.id)) {
            return;
        }
        if (strategy_ == Strategy::Baseline || !options_.update_estimates) {
            return;
        }
        state_.update_value(record.id, source_->icdt(record, state), now);
    }

    void handle_out(const ContainerRecord& record, DateTime now) {
        if (state_.erase_temporary(record.id)) {
            return;  // never stacked; no relocations to count
        }
        Position pos = state_.entry(record.id).pos;
        ColumnRef origin{pos.y, pos.r, pos.b};
        int rl = state_.top_tier(origin) - pos.t;
        for (int i = 0; i < rl; ++i) {
            relocate_top(origin, now);
        }
        state_.remove(record.id);
        result_.rl_per_departure.push_back(rl);
        result_.rl_total += static_cast<std::uint64_t>(rl);
        day_relocations_ += static_cast<std::uint64_t>(rl);
        ++result_.departures;
    }

    // Move the topmost container of the origin column somewhere else in
    // the same yard by the active strategy. The fill discipline never
    // applies here. With no admissible column the container leaves for
    // the temporary yard.
    void relocate_top(const ColumnRef& origin, DateTime now) {
        const std::string& mover_id = state_.top_id(origin);
        const ContainerRecord& mover = *by_id_.at(mover_id);
        bool prefer = strategy_ != Strategy::Baseline;
        auto pos = detail::pick_position(state_, mover, now, rng_, prefer,
                                         /*min_fill_only=*/!prefer, origin.y, origin);
        auto [id, entry] = state_.remove_top(origin);
        if (!pos) {
            state_.send_to_temporary(id);
            ++result_.overflow_count;
            return;
        }
        state_.place(id, *pos, entry.p_icdt_hours, entry.value_time);
    }

    void sample_day(std::int64_t day) {
        DailySample sample;
        sample.day_start = DateTime{day * 86400};
        sample.occupancy = occupancy(state_);
        sample.inversions = count_inversions(state_, out_times_);
        sample.relocations = day_relocations_;
        day_relocations_ = 0;
        result_.daily.push_back(sample);
    }

    YardState state_;
    Strategy strategy_;
    const IcdtSource* source_;
    SimOptions options_;
    Rng rng_;
    std::map<std::string, const ContainerRecord*> by_id_;
    std::map<std::string, DateTime> out_times_;
    std::unique_ptr<OraclePredictor> oracle_;
    std::unique_ptr<OracleIcdtSource> oracle_source_;
    std::uint64_t day_relocations_ = 0;
    SimulationResult result_;
};

// Replay the full record set and return the run metrics. `source` supplies
// remaining-dwell estimates for the predicted strategy; the baseline
// ignores it and the actual-dwell strategy derives its own ground-truth
// source from the records.
inline SimulationResult run_simulation(const std::vector<ContainerRecord>& records,
                                       const YardLayout& layout, Strategy strategy,
                                       const IcdtSource* source, const SimOptions& options,
                                       SimObserver* observer = nullptr) {
    Simulation sim(records, layout, strategy, source, options);
    sim.run(observer);
    return sim.result();
}

}  // namespace dwellsim
