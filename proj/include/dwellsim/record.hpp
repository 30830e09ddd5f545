#pragma once

// Import-container records: the per-container timestamps and base
// attributes, the four-stage EDI lifecycle (IN unloaded, CR release order,
// CP pickup pre-notice, OUT departed), JSON-lines persistence, and the
// merged time-ordered event stream the simulator replays.

#include <algorithm>
#include <cstdint>
#include <istream>
#include <ostream>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "dwellsim/error.hpp"
#include "dwellsim/time.hpp"

namespace dwellsim {

enum class ContainerSize { Ft20, Ft40 };

inline std::string_view to_string(ContainerSize s) {
    return s == ContainerSize::Ft20 ? "20ft" : "40ft";
}

inline ContainerSize container_size_from_string(std::string_view s) {
    if (s == "20ft") return ContainerSize::Ft20;
    if (s == "40ft") return ContainerSize::Ft40;
    throw SchemaError("unknown container size: " + std::string(s));
}

enum class ContainerType { Dry, Reefer, Danger, Other };

inline std::string_view to_string(ContainerType t) {
    switch (t) {
        case ContainerType::Dry: return "Dry";
        case ContainerType::Reefer: return "Reefer";
        case ContainerType::Danger: return "Danger";
        case ContainerType::Other: return "Other";
    }
    throw DomainError("invalid ContainerType");
}

inline ContainerType container_type_from_string(std::string_view s) {
    if (s == "Dry") return ContainerType::Dry;
    if (s == "Reefer") return ContainerType::Reefer;
    if (s == "Danger") return ContainerType::Danger;
    if (s == "Other") return ContainerType::Other;
    throw SchemaError("unknown container type: " + std::string(s));
}

// Bill-of-lading category; an opaque four-way categorical.
enum class BlCategory { B0, B1, B2, None };

inline std::string_view to_string(BlCategory b) {
    switch (b) {
        case BlCategory::B0: return "0";
        case BlCategory::B1: return "1";
        case BlCategory::B2: return "2";
        case BlCategory::None: return "None";
    }
    throw DomainError("invalid BlCategory");
}

inline BlCategory bl_category_from_string(std::string_view s) {
    if (s == "0") return BlCategory::B0;
    if (s == "1") return BlCategory::B1;
    if (s == "2") return BlCategory::B2;
    if (s == "None") return BlCategory::None;
    throw SchemaError("unknown bl category: " + std::string(s));
}

// EDI lifecycle stages, in fixed order.
enum class EDIState { IN, CR, CP, OUT };

inline std::string_view to_string(EDIState s) {
    switch (s) {
        case EDIState::IN: return "IN";
        case EDIState::CR: return "CR";
        case EDIState::CP: return "CP";
        case EDIState::OUT: return "OUT";
    }
    throw DomainError("invalid EDIState");
}

inline EDIState edi_state_from_string(std::string_view s) {
    if (s == "IN") return EDIState::IN;
    if (s == "CR") return EDIState::CR;
    if (s == "CP") return EDIState::CP;
    if (s == "OUT") return EDIState::OUT;
    throw SchemaError("unknown EDI state: " + std::string(s));
}

inline int state_order(EDIState s) { return static_cast<int>(s); }

struct ContainerRecord {
    std::string id;
    DateTime t_in;
    DateTime t_cr;
    DateTime t_cp;
    DateTime t_out;
    DateTime t_do;  // delivery-order due date
    ContainerSize size = ContainerSize::Ft20;
    ContainerType ctype = ContainerType::Dry;
    BlCategory bl = BlCategory::None;
    double weight_kg = 0.0;
    std::string country;
    std::string carrier;
    std::string ci_raw;
    std::string oi_raw;

    bool operator==(const ContainerRecord&) const = default;

    DateTime state_time(EDIState state) const {
        switch (state) {
            case EDIState::IN: return t_in;
            case EDIState::CR: return t_cr;
            case EDIState::CP: return t_cp;
            case EDIState::OUT: return t_out;
        }
        throw DomainError("invalid EDIState");
    }

    // Both temporal chains must hold: t_in < t_cr < t_cp < t_out and
    // t_in < t_cr < t_cp < t_do; weight must be positive.
    void validate() const {
        if (id.empty()) {
            throw SchemaError("container record without id");
        }
        if (!(t_in < t_cr && t_cr < t_cp && t_cp < t_out)) {
            throw OrderViolation("record " + id + ": requires t_in < t_cr < t_cp < t_out");
        }
        if (!(t_cp < t_do)) {
            throw OrderViolation("record " + id + ": requires t_cp < t_do");
        }
        if (!(weight_kg > 0.0)) {
            throw DomainError("record " + id + ": weight must be positive");
        }
    }
};

inline nlohmann::json record_to_json(const ContainerRecord& r) {
    return nlohmann::json{{"id", r.id},
                          {"t_in", format_iso8601(r.t_in)},
                          {"t_cr", format_iso8601(r.t_cr)},
                          {"t_cp", format_iso8601(r.t_cp)},
                          {"t_out", format_iso8601(r.t_out)},
                          {"t_do", format_iso8601(r.t_do)},
                          {"size", std::string(to_string(r.size))},
                          {"ctype", std::string(to_string(r.ctype))},
                          {"bl", std::string(to_string(r.bl))},
                          {"weight_kg", r.weight_kg},
                          {"country", r.country},
                          {"carrier", r.carrier},
                          {"ci_raw", r.ci_raw},
                          {"oi_raw", r.oi_raw}};
}

inline ContainerRecord record_from_json(const nlohmann::json& j) {
    if (!j.is_object()) {
        throw SchemaError("container record must be a JSON object");
    }
    static constexpr const char* kKeys[] = {"id",     "t_in",      "t_cr",    "t_cp",
                                            "t_out",  "t_do",      "size",    "ctype",
                                            "bl",     "weight_kg", "country", "carrier",
                                            "ci_raw", "oi_raw"};
    for (const char* key : kKeys) {
        if (!j.contains(key)) {
            throw SchemaError(std::string("container record missing key '") + key + "'");
        }
    }
    for (const auto& item : j.items()) {
        bool known = false;
        for (const char* key : kKeys) {
            if (item.key() == key) {
                known = true;
                break;
            }
        }
        if (!known) {
            throw SchemaError("container record has unexpected key '" + item.key() + "'");
        }
    }
    ContainerRecord r;
    r.id = j.at("id").get<std::string>();
    r.t_in = parse_iso8601(j.at("t_in").get<std::string>());
    r.t_cr = parse_iso8601(j.at("t_cr").get<std::string>());
    r.t_cp = parse_iso8601(j.at("t_cp").get<std::string>());
    r.t_out = parse_iso8601(j.at("t_out").get<std::string>());
    r.t_do = parse_iso8601(j.at("t_do").get<std::string>());
    r.size = container_size_from_string(j.at("size").get<std::string>());
    r.ctype = container_type_from_string(j.at("ctype").get<std::string>());
    r.bl = bl_category_from_string(j.at("bl").get<std::string>());
    if (!j.at("weight_kg").is_number()) {
        throw SchemaError("container record key 'weight_kg' must be a number");
    }
    r.weight_kg = j.at("weight_kg").get<double>();
    r.country = j.at("country").get<std::string>();
    r.carrier = j.at("carrier").get<std::string>();
    r.ci_raw = j.at("ci_raw").get<std::string>();
    r.oi_raw = j.at("oi_raw").get<std::string>();
    return r;
}

// Ingestion outcome: valid records plus a report of rejected lines.
// Invalid records are dropped, never repaired.
struct IngestReport {
    struct Reject {
        std::size_t line_no = 0;
        std::string id;  // empty when the line could not be parsed at all
        std::string error;
    };
    std::vector<ContainerRecord> accepted;
    std::vector<Reject> rejected;
};

inline IngestReport read_records_jsonl(std::istream& in) {
    IngestReport report;
    std::set<std::string> seen_ids;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) {
            continue;
        }
        std::string id;
        try {
            nlohmann::json j = nlohmann::json::parse(line);
            ContainerRecord r = record_from_json(j);
            id = r.id;
            r.validate();
            if (!seen_ids.insert(r.id).second) {
                throw SchemaError("duplicate container id: " + r.id);
            }
            report.accepted.push_back(std::move(r));
        } catch (const nlohmann::json::parse_error& e) {
            report.rejected.push_back({line_no, id, std::string("invalid JSON: ") + e.what()});
        } catch (const Error& e) {
            report.rejected.push_back({line_no, id, e.what()});
        }
    }
    return report;
}

inline void write_records_jsonl(std::ostream& out,
                                const std::vector<ContainerRecord>& records) {
    for (const auto& r : records) {
        out << record_to_json(r).dump() << '\n';
    }
    if (!out) {
        throw IoError("failed writing records");
    }
}

// One lifecycle stage of one container, at that stage's timestamp.
struct SimEvent {
    DateTime time;
    EDIState state = EDIState::IN;
    std::string container_id;

    bool operator==(const SimEvent&) const = default;
};

// Merge all records into one deterministic replay stream: four events per
// record, globally ordered by (time, state order, container id). Records
// violating the temporal invariants abort the merge.
inline std::vector<SimEvent> event_stream(const std::vector<ContainerRecord>& records) {
    std::string offenders;
    for (const auto& r : records) {
        try {
            r.validate();
        } catch (const Error&) {
            if (!offenders.empty()) {
                offenders += ", ";
            }
            offenders += r.id.empty() ? "<missing id>" : r.id;
        }
    }
    if (!offenders.empty()) {
        throw OrderViolation("records violate temporal order: " + offenders);
    }
    std::vector<SimEvent> events;
    events.reserve(records.size() * 4);
    for (const auto& r : records) {
        for (EDIState s : {EDIState::IN, EDIState::CR, EDIState::CP, EDIState::OUT}) {
            events.push_back(SimEvent{r.state_time(s), s, r.id});
        }
    }
    std::sort(events.begin(), events.end(), [](const SimEvent& a, const SimEvent& b) {
        if (a.time != b.time) return a.time < b.time;
        if (state_order(a.state) != state_order(b.state)) {
            return state_order(a.state) < state_order(b.state);
        }
        return a.container_id < b.container_id;
    });
    return events;
}

}  // namespace dwellsim
