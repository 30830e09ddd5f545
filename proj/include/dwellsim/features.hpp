#pragma once

// Derivation of predictor inputs and targets from container records: the
// base categorical/numeric block, the EDI-progress block (hours elapsed
// since unloading, hours until the delivery due date) available once a
// release order exists, and the standardized-code block at a configurable
// hierarchy level. Also the remaining-dwell target for each state.

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "dwellsim/error.hpp"
#include "dwellsim/record.hpp"
#include "dwellsim/standard_code.hpp"
#include "dwellsim/time.hpp"

namespace dwellsim {

inline constexpr const char* kUnknownCategory = "UNKNOWN";

// Hours from unloading to the given event time.
inline Hours elapsed_time(DateTime t_in, DateTime t_e) {
    if (t_e < t_in) {
        throw OrderViolation("elapsed_time: event precedes unloading");
    }
    return hours_between(t_in, t_e);
}

// Signed hours from the given event time to the delivery due date
// (negative once the due date has passed).
inline Hours due_date_remaining(DateTime t_do, DateTime t_e) {
    return hours_between(t_e, t_do);
}

// Remaining dwell time at a state: hours from that state's timestamp to
// departure. Undefined for OUT (the container is gone).
inline Hours actual_icdt(const ContainerRecord& record, EDIState state) {
    if (state == EDIState::OUT) {
        throw InvalidState("actual_icdt is undefined at OUT");
    }
    return hours_between(record.state_time(state), record.t_out);
}

// Days (UTC dates) that count as holidays. Weekends count by default;
// extra dates can be added as day indices.
struct HolidayCalendar {
    bool weekends = true;
    std::set<std::int64_t> extra_days;  // day_index values

    bool is_holiday(DateTime t) const {
        if (weekends && weekday_index(t) >= 5) {
            return true;
        }
        return extra_days.count(day_index(t)) > 0;
    }

    static const HolidayCalendar& weekends_only() {
        static const HolidayCalendar cal;
        return cal;
    }
};

// Which optional feature blocks a model sees. std_level 0 disables the
// standardized-code block entirely; 1–3 select the code hierarchy level.
// use_edi gates the EDI-progress block (never present at IN regardless).
struct FeatureOptions {
    int std_level = 3;
    bool use_edi = true;

    void validate() const {
        if (std_level < 0 || std_level > 3) {
            throw ConfigError("std_level must be 0..3");
        }
    }

    bool operator==(const FeatureOptions&) const = default;
};

// Column names, in the exact order build_features emits values.
struct FeatureSchema {
    std::vector<std::string> categorical;
    std::vector<std::string> numeric;

    bool operator==(const FeatureSchema&) const = default;
};

inline FeatureSchema feature_schema(EDIState state, const FeatureOptions& options) {
    options.validate();
    if (state == EDIState::OUT) {
        throw InvalidState("no features at OUT");
    }
    FeatureSchema schema;
    schema.categorical = {"size", "ctype", "bl", "country", "carrier", "day", "holiday"};
    if (options.std_level > 0) {
        std::string level = std::to_string(options.std_level);
        schema.categorical.push_back("hs_lv" + level);
        schema.categorical.push_back("ksic_lv" + level);
        schema.categorical.push_back("owner_size");
    }
    schema.numeric = {"weight_kg"};
    if (options.use_edi && state != EDIState::IN) {
        schema.numeric.push_back("elapsed_h");
        schema.numeric.push_back("due_remaining_h");
    }
    return schema;
}

// One row of model input: categorical values and numeric values, ordered
// per the matching FeatureSchema.
struct FeatureVector {
    std::vector<std::string> cat;
    std::vector<double> num;

    bool operator==(const FeatureVector&) const = default;
};

namespace detail {

inline std::string code_category(const StandardizationResult* result, int level) {
    if (result == nullptr) {
        return kUnknownCategory;
    }
    const std::optional<std::string>& code = result->code.at_level(level);
    return code ? *code : kUnknownCategory;
}

}  // namespace detail

// Assemble the model input for one container at one state. The day-of-week
// and holiday flags are taken at the state's own timestamp (prediction
// time). Null or absent standardization results map to the reserved
// UNKNOWN category.
inline FeatureVector build_features(const ContainerRecord& record, EDIState state,
                                    const StandardizationResult* ci_result,
                                    const StandardizationResult* oi_result,
                                    const FeatureOptions& options,
                                    const HolidayCalendar& calendar) {
    options.validate();
    if (state == EDIState::OUT) {
        throw InvalidState("no features at OUT");
    }
    DateTime at = record.state_time(state);
    FeatureVector fv;
    fv.cat = {std::string(to_string(record.size)), std::string(to_string(record.ctype)),
              std::string(to_string(record.bl)), record.country, record.carrier,
              std::string(weekday_name(at)), calendar.is_holiday(at) ? "1" : "0"};
    if (options.std_level > 0) {
        fv.cat.push_back(detail::code_category(ci_result, options.std_level));
        fv.cat.push_back(detail::code_category(oi_result, options.std_level));
        fv.cat.push_back(oi_result == nullptr
                             ? std::string(kUnknownCategory)
                             : std::string(to_string(oi_result->owner_size)));
    }
    fv.num = {record.weight_kg};
    if (options.use_edi && state != EDIState::IN) {
        fv.num.push_back(elapsed_time(record.t_in, at));
        fv.num.push_back(due_date_remaining(record.t_do, at));
    }
    return fv;
}

}  // namespace dwellsim
