#pragma once

// Classification code tables (HS chapters/headings/subheadings, KSIC
// sections/divisions/groups), hierarchy validation of standardization
// results against them, and the standardization quality metrics built on
// that validation (non-matched ratio, consistency rate).

#include <array>
#include <cstddef>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "dwellsim/classification_data.hpp"
#include "dwellsim/csv.hpp"
#include "dwellsim/error.hpp"
#include "dwellsim/standard_code.hpp"

namespace dwellsim {

struct ClassificationEntry {
    CodeKind kind = CodeKind::HS;
    int level = 1;
    std::string code;
    std::string parent_code;
    std::string description;

    bool operator==(const ClassificationEntry&) const = default;
};

class ClassificationTable {
  public:
    static constexpr std::array<std::string_view, 5> kCsvHeader{
        "kind", "level", "code", "parent_code", "description"};

    void add(ClassificationEntry entry) {
        if (entry.level < 1 || entry.level > 3) {
            throw SchemaError("classification level must be 1..3");
        }
        if (entry.code.empty()) {
            throw SchemaError("classification code must not be empty");
        }
        if (entry.level > 1 && entry.parent_code.empty()) {
            throw SchemaError("classification entry below level 1 needs a parent: " + entry.code);
        }
        Key key{entry.kind, entry.level, entry.code};
        index_[key] = entries_.size();
        entries_.push_back(std::move(entry));
    }

    std::size_t size() const { return entries_.size(); }
    const std::vector<ClassificationEntry>& entries() const { return entries_; }

    const ClassificationEntry* find(CodeKind kind, int level, std::string_view code) const {
        auto it = index_.find(Key{kind, level, std::string(code)});
        return it == index_.end() ? nullptr : &entries_[it->second];
    }

    bool contains(CodeKind kind, int level, std::string_view code) const {
        return find(kind, level, code) != nullptr;
    }

    // Codes one level below `code` that name it as their parent.
    std::vector<std::string> children_of(CodeKind kind, int level, std::string_view code) const {
        std::vector<std::string> out;
        for (const auto& e : entries_) {
            if (e.kind == kind && e.level == level + 1 && e.parent_code == code) {
                out.push_back(e.code);
            }
        }
        return out;
    }

    // Codes at the same level sharing the entry's parent, excluding the
    // entry itself. Used by the noisy backend to pick a replacement code.
    std::vector<std::string> siblings_of(CodeKind kind, int level, std::string_view code) const {
        const ClassificationEntry* self = find(kind, level, code);
        if (self == nullptr) {
            return {};
        }
        std::vector<std::string> out;
        for (const auto& e : entries_) {
            if (e.kind == kind && e.level == level && e.parent_code == self->parent_code &&
                e.code != code) {
                out.push_back(e.code);
            }
        }
        return out;
    }

    static ClassificationTable from_csv(std::string_view text) {
        auto rows = csv::parse(text);
        if (rows.empty()) {
            throw SchemaError("classification csv: empty file");
        }
        const auto& header = rows.front();
        if (header.size() != kCsvHeader.size()) {
            throw SchemaError("classification csv: bad header width");
        }
        for (std::size_t i = 0; i < kCsvHeader.size(); ++i) {
            if (header[i] != kCsvHeader[i]) {
                throw SchemaError("classification csv: unexpected header column '" + header[i] + "'");
            }
        }
        ClassificationTable table;
        for (std::size_t r = 1; r < rows.size(); ++r) {
            const auto& row = rows[r];
            if (row.size() != kCsvHeader.size()) {
                throw SchemaError("classification csv: row " + std::to_string(r + 1) +
                                  " has " + std::to_string(row.size()) + " fields");
            }
            ClassificationEntry e;
            e.kind = code_kind_from_string(row[0]);
            if (row[1] != "1" && row[1] != "2" && row[1] != "3") {
                throw SchemaError("classification csv: bad level '" + row[1] + "'");
            }
            e.level = row[1][0] - '0';
            e.code = row[2];
            e.parent_code = row[3];
            e.description = row[4];
            table.add(std::move(e));
        }
        for (const auto& e : table.entries_) {
            if (e.level > 1 && !table.contains(e.kind, e.level - 1, e.parent_code)) {
                throw SchemaError("classification csv: dangling parent '" + e.parent_code +
                                  "' for code '" + e.code + "'");
            }
        }
        return table;
    }

    static ClassificationTable load(const std::string& path) {
        std::ifstream in(path, std::ios::binary);
        if (!in) {
            throw IoError("cannot open classification table: " + path);
        }
        std::ostringstream buf;
        buf << in.rdbuf();
        return from_csv(buf.str());
    }

    std::string to_csv() const {
        std::string out;
        csv::Row header(kCsvHeader.begin(), kCsvHeader.end());
        out += csv::format_row(header);
        for (const auto& e : entries_) {
            out += csv::format_row({std::string(to_string(e.kind)), std::to_string(e.level),
                                    e.code, e.parent_code, e.description});
        }
        return out;
    }

    void save(const std::string& path) const {
        std::ofstream out(path, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw IoError("cannot write classification table: " + path);
        }
        out << to_csv();
        if (!out) {
            throw IoError("failed writing classification table: " + path);
        }
    }

    // The bundled curated subset.
    static const ClassificationTable& builtin() {
        static const ClassificationTable table = from_csv(data::kClassificationCsv);
        return table;
    }

  private:
    struct Key {
        CodeKind kind;
        int level;
        std::string code;
        auto operator<=>(const Key&) const = default;
    };

    std::vector<ClassificationEntry> entries_;
    std::map<Key, std::size_t> index_;
};

// Per-level outcome of checking one result's code against a table.
struct HierarchyReport {
    std::array<bool, 3> matched{false, false, false};

    bool matched_at(int level) const {
        if (level < 1 || level > 3) {
            throw DomainError("hierarchy level must be 1..3");
        }
        return matched[static_cast<std::size_t>(level - 1)];
    }

    bool all_matched() const { return matched[0] && matched[1] && matched[2]; }
};

// A level is matched iff its code is present, appears in the table at that
// level, all shallower levels are populated, and the code agrees with its
// immediate parent (digit-prefix rule; for a KSIC division, the section's
// division range). Null levels are non-matched. Pure: malformed codes yield
// non-matched rather than an error.
inline HierarchyReport validate_hierarchy(const ClassificationTable& table,
                                          const StandardizationResult& result) {
    const StandardCode& code = result.code;
    HierarchyReport report;
    auto present_in_table = [&](int level, const std::optional<std::string>& value) {
        return value && table.contains(code.kind, level, *value);
    };
    if (present_in_table(1, code.lv1)) {
        report.matched[0] = true;
    }
    if (present_in_table(2, code.lv2) && code.lv1) {
        if (code.kind == CodeKind::HS) {
            report.matched[1] = code.lv2->size() == 4 && code.lv2->substr(0, 2) == *code.lv1;
        } else {
            auto section = ksic_section_for_division(std::stoi(*code.lv2));
            report.matched[1] = section && code.lv1->size() == 1 && *section == (*code.lv1)[0];
        }
    }
    if (present_in_table(3, code.lv3) && code.lv1 && code.lv2) {
        if (code.kind == CodeKind::HS) {
            report.matched[2] = code.lv3->size() == 6 && code.lv3->substr(0, 4) == *code.lv2;
        } else {
            report.matched[2] = code.lv3->size() == 3 && code.lv3->substr(0, 2) == *code.lv2;
        }
    }
    return report;
}

struct NonMatchedRatio {
    std::size_t count_a = 0;       // results with the requested validation type
    std::size_t count_b = 0;       // of those, non-matched at the requested level
    double ratio_percent = 0.0;    // count_b / count_a * 100
};

// Table-style per-level quality ratio over a set of (deduplicated) results.
inline NonMatchedRatio non_matched_ratio(const ClassificationTable& table,
                                         std::span<const StandardizationResult> results,
                                         ValidationType filter, int level) {
    if (level < 1 || level > 3) {
        throw DomainError("hierarchy level must be 1..3");
    }
    NonMatchedRatio out;
    for (const auto& r : results) {
        if (r.validation != filter) {
            continue;
        }
        ++out.count_a;
        if (!validate_hierarchy(table, r).matched_at(level)) {
            ++out.count_b;
        }
    }
    if (out.count_a == 0) {
        throw DivisionDomain("non_matched_ratio: no results with the requested validation type");
    }
    out.ratio_percent =
        static_cast<double>(out.count_b) / static_cast<double>(out.count_a) * 100.0;
    return out;
}

// Count-based form for recomputing published ratios directly.
inline double non_matched_ratio_percent(std::size_t count_a, std::size_t count_b) {
    if (count_a == 0) {
        throw DivisionDomain("non_matched_ratio: empty stratum");
    }
    return static_cast<double>(count_b) / static_cast<double>(count_a) * 100.0;
}

// Agreement of repeated standardizations of one input at one code level:
// 100 when all trials return the same code, 0 when every trial differs.
inline double consistency_rate(std::span<const std::string> repeats) {
    if (repeats.size() < 2) {
        throw DomainError("consistency_rate needs at least 2 trials");
    }
    std::set<std::string_view> unique(repeats.begin(), repeats.end());
    double n_total = static_cast<double>(repeats.size());
    double n_unique = static_cast<double>(unique.size());
    return (1.0 - (n_unique - 1.0) / (n_total - 1.0)) * 100.0;
}

inline double consistency_rate(const std::vector<std::string>& repeats) {
    return consistency_rate(std::span<const std::string>(repeats));
}

// Aggregate form: arithmetic mean of per-entry rates.
inline double mean_consistency_rate(std::span<const std::vector<std::string>> per_entry_trials) {
    if (per_entry_trials.empty()) {
        throw EmptyInput("mean_consistency_rate: no entries");
    }
    double sum = 0.0;
    for (const auto& trials : per_entry_trials) {
        sum += consistency_rate(trials);
    }
    return sum / static_cast<double>(per_entry_trials.size());
}

}  // namespace dwellsim
