#pragma once

// The yard model: a multi-yard grid of stacking columns (rows x bays x
// tiers) with per-size bay partitions and optional dedicated reefer yards,
// a registry of stored remaining-dwell estimates that decay linearly with
// elapsed time (floored at zero), and the three placement rules — random
// lowest-tier (baseline), estimate-maximizing (predicted/actual dwell),
// and the shared candidate filtering both use. Also inversion counting and
// occupancy.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "dwellsim/error.hpp"
#include "dwellsim/record.hpp"
#include "dwellsim/rng.hpp"
#include "dwellsim/time.hpp"

namespace dwellsim {

struct YardLayout {
    int n_yards = 1;
    int rows = 12;
    int bays = 20;
    int tiers = 7;
    // Bays 1..ft20_bay_end hold 20ft containers, the remainder 40ft; the
    // two ranges are disjoint and cover every bay by construction.
    int ft20_bay_end = 12;
    // 1-based yard indices reserved for reefer containers. Empty means no
    // dedicated reefer area: reefers then stack like dry containers.
    std::vector<int> reefer_yards;

    void validate() const {
        if (n_yards < 1 || rows < 1 || bays < 1 || tiers < 1) {
            throw ConfigError("yard layout dimensions must be at least 1");
        }
        if (ft20_bay_end < 0 || ft20_bay_end > bays) {
            throw ConfigError("ft20_bay_end must lie within 0..bays");
        }
        std::set<int> seen;
        for (int y : reefer_yards) {
            if (y < 1 || y > n_yards) {
                throw ConfigError("reefer yard index out of range");
            }
            if (!seen.insert(y).second) {
                throw ConfigError("duplicate reefer yard index");
            }
        }
    }

    std::int64_t capacity() const {
        return static_cast<std::int64_t>(n_yards) * rows * bays * tiers;
    }

    bool is_reefer_yard(int yard) const {
        return std::find(reefer_yards.begin(), reefer_yards.end(), yard) != reefer_yards.end();
    }

    // Whether a container of this size/type may stack in (yard, bay).
    bool column_compatible(const ContainerRecord& record, int yard, int bay) const {
        if (!reefer_yards.empty()) {
            bool reefer_area = is_reefer_yard(yard);
            if ((record.ctype == ContainerType::Reefer) != reefer_area) {
                return false;
            }
        }
        return record.size == ContainerSize::Ft20 ? bay <= ft20_bay_end : bay > ft20_bay_end;
    }

    bool operator==(const YardLayout&) const = default;
};

// 1-based slot coordinates: yard, row, bay, tier.
struct Position {
    int y = 1;
    int r = 1;
    int b = 1;
    int t = 1;

    void validate(const YardLayout& layout) const {
        if (y < 1 || y > layout.n_yards || r < 1 || r > layout.rows || b < 1 ||
            b > layout.bays || t < 1 || t > layout.tiers) {
            throw DomainError("position outside the yard layout");
        }
    }

    bool operator==(const Position&) const = default;
};

struct ColumnRef {
    int y = 1;
    int r = 1;
    int b = 1;

    bool operator==(const ColumnRef&) const = default;
};

// What the registry stores per stacked container: where it sits and the
// last remaining-dwell estimate with its timestamp.
struct RegistryEntry {
    Position pos;
    double p_icdt_hours = 0.0;
    DateTime value_time;

    bool operator==(const RegistryEntry&) const = default;
};

// Remaining estimate now: the stored value decays with wall time since it
// was set and never goes below zero.
inline double current_p_icdt(const RegistryEntry& entry, DateTime now) {
    return std::max(entry.p_icdt_hours - hours_between(entry.value_time, now), 0.0);
}

// The live grid: per-column stacks (bottom to top, so occupied tiers are
// contiguous by construction), the estimate registry, and the set of
// containers diverted to the external temporary yard.
class YardState {
  public:
    explicit YardState(YardLayout layout) : layout_(std::move(layout)) {
        layout_.validate();
        columns_.resize(static_cast<std::size_t>(layout_.n_yards) * layout_.rows * layout_.bays);
    }

    const YardLayout& layout() const { return layout_; }

    int top_tier(const ColumnRef& col) const {
        return static_cast<int>(column(col).size());
    }

    const std::vector<std::string>& column(const ColumnRef& col) const {
        return columns_[column_index(col)];
    }

    const std::string& top_id(const ColumnRef& col) const {
        const auto& stack = column(col);
        if (stack.empty()) {
            throw DomainError("top_id: column is empty");
        }
        return stack.back();
    }

    bool contains(const std::string& id) const { return registry_.count(id) > 0; }

    const RegistryEntry& entry(const std::string& id) const {
        auto it = registry_.find(id);
        if (it == registry_.end()) {
            throw UnknownContainer("no stacked container: " + id);
        }
        return it->second;
    }

    double current_p_icdt(const std::string& id, DateTime now) const {
        return dwellsim::current_p_icdt(entry(id), now);
    }

    std::optional<std::string> at(const Position& pos) const {
        pos.validate(layout_);
        const auto& stack = column(ColumnRef{pos.y, pos.r, pos.b});
        if (pos.t > static_cast<int>(stack.size())) {
            return std::nullopt;
        }
        return stack[static_cast<std::size_t>(pos.t - 1)];
    }

    void place(const std::string& id, const Position& pos, double p_icdt_hours,
               DateTime value_time) {
        pos.validate(layout_);
        if (registry_.count(id) > 0) {
            throw InvariantBreach("container already stacked: " + id);
        }
        if (temporary_.count(id) > 0) {
            throw InvariantBreach("container is in the temporary yard: " + id);
        }
        auto& stack = columns_[column_index(ColumnRef{pos.y, pos.r, pos.b})];
        if (pos.t != static_cast<int>(stack.size()) + 1) {
            throw InvariantBreach("placement would float: tier " + std::to_string(pos.t) +
                                  " on a stack of " + std::to_string(stack.size()));
        }
        stack.push_back(id);
        registry_.emplace(id, RegistryEntry{pos, p_icdt_hours, value_time});
    }

    // Remove the topmost container of a column; returns its id and entry.
    std::pair<std::string, RegistryEntry> remove_top(const ColumnRef& col) {
        auto& stack = columns_[column_index(col)];
        if (stack.empty()) {
            throw DomainError("remove_top: column is empty");
        }
        std::string id = stack.back();
        auto it = registry_.find(id);
        if (it == registry_.end()) {
            throw InvariantBreach("grid holds a container the registry does not: " + id);
        }
        RegistryEntry entry = it->second;
        registry_.erase(it);
        stack.pop_back();
        return {std::move(id), entry};
    }

    // Remove a specific container, which must currently be topmost (the
    // simulator relocates everything above it first).
    RegistryEntry remove(const std::string& id) {
        const RegistryEntry& e = entry(id);
        ColumnRef col{e.pos.y, e.pos.r, e.pos.b};
        const auto& stack = column(col);
        if (stack.empty() || stack.back() != id) {
            throw InvariantBreach("removal of a buried container: " + id);
        }
        auto [removed, removed_entry] = remove_top(col);
        return removed_entry;
    }

    void update_value(const std::string& id, double p_icdt_hours, DateTime value_time) {
        auto it = registry_.find(id);
        if (it == registry_.end()) {
            throw UnknownContainer("no stacked container: " + id);
        }
        it->second.p_icdt_hours = p_icdt_hours;
        it->second.value_time = value_time;
    }

    void send_to_temporary(const std::string& id) {
        if (registry_.count(id) > 0) {
            throw InvariantBreach("stacked container cannot enter the temporary yard: " + id);
        }
        temporary_.insert(id);
    }

    bool in_temporary(const std::string& id) const { return temporary_.count(id) > 0; }

    // Returns whether the container was present.
    bool erase_temporary(const std::string& id) { return temporary_.erase(id) > 0; }

    std::int64_t stacked_count() const { return static_cast<std::int64_t>(registry_.size()); }
    std::size_t temporary_count() const { return temporary_.size(); }

    template <typename F>
    void for_each_column(F&& f) const {
        for (int y = 1; y <= layout_.n_yards; ++y) {
            for (int r = 1; r <= layout_.rows; ++r) {
                for (int b = 1; b <= layout_.bays; ++b) {
                    ColumnRef col{y, r, b};
                    f(col, column(col));
                }
            }
        }
    }

    // Full consistency audit; throws InvariantBreach on any divergence
    // between the grid, the registry, and the temporary set.
    void audit() const {
        std::int64_t stacked = 0;
        for (int y = 1; y <= layout_.n_yards; ++y) {
            for (int r = 1; r <= layout_.rows; ++r) {
                for (int b = 1; b <= layout_.bays; ++b) {
                    const auto& stack = column(ColumnRef{y, r, b});
                    if (static_cast<int>(stack.size()) > layout_.tiers) {
                        throw InvariantBreach("column above the tier limit");
                    }
                    for (std::size_t t = 0; t < stack.size(); ++t) {
                        auto it = registry_.find(stack[t]);
                        if (it == registry_.end()) {
                            throw InvariantBreach("grid container missing from registry: " +
                                                  stack[t]);
                        }
                        Position expected{y, r, b, static_cast<int>(t) + 1};
                        if (!(it->second.pos == expected)) {
                            throw InvariantBreach("registry position diverges for " + stack[t]);
                        }
                        ++stacked;
                    }
                }
            }
        }
        if (stacked != static_cast<std::int64_t>(registry_.size())) {
            throw InvariantBreach("registry holds containers absent from the grid");
        }
        for (const auto& id : temporary_) {
            if (registry_.count(id) > 0) {
                throw InvariantBreach("container both stacked and temporary: " + id);
            }
        }
    }

  private:
    std::size_t column_index(const ColumnRef& col) const {
        return (static_cast<std::size_t>(col.y - 1) * layout_.rows +
                static_cast<std::size_t>(col.r - 1)) *
                   layout_.bays +
               static_cast<std::size_t>(col.b - 1);
    }

    YardLayout layout_;
    std::vector<std::vector<std::string>> columns_;
    std::map<std::string, RegistryEntry> registry_;
    std::set<std::string> temporary_;
};

// Stacked containers over total slot capacity; temporary-yard containers
// are external and never counted.
inline double occupancy(const YardState& state) {
    return static_cast<double>(state.stacked_count()) /
           static_cast<double>(state.layout().capacity());
}

// Pairs (lower, upper) in the same column where the lower container
// departs before the upper one and will therefore force a relocation.
inline std::uint64_t count_inversions(const YardState& state,
                                      const std::map<std::string, DateTime>& out_times) {
    std::uint64_t total = 0;
    state.for_each_column([&](const ColumnRef&, const std::vector<std::string>& stack) {
        for (std::size_t i = 0; i < stack.size(); ++i) {
            auto lower = out_times.find(stack[i]);
            if (lower == out_times.end()) {
                throw UnknownContainer("no departure time for " + stack[i]);
            }
            for (std::size_t j = i + 1; j < stack.size(); ++j) {
                auto upper = out_times.find(stack[j]);
                if (upper == out_times.end()) {
                    throw UnknownContainer("no departure time for " + stack[j]);
                }
                if (lower->second < upper->second) {
                    ++total;
                }
            }
        }
    });
    return total;
}

namespace detail {

// Shared candidate selection. Candidates are non-full columns compatible
// with the container, optionally restricted to one yard (relocations stay
// in the departure's yard), optionally excluding one column (the origin),
// and optionally filtered to the area's minimum fill level (the even-fill
// discipline for fresh unloads). If prefer_longest_stay and any candidate
// already has a stack, pick the column whose topmost container has the
// largest decayed estimate, first (y, r, b) on ties; otherwise pick
// uniformly at random.
inline std::optional<Position> pick_position(const YardState& state,
                                             const ContainerRecord& record, DateTime now,
                                             Rng& rng, bool prefer_longest_stay,
                                             bool min_fill_only,
                                             std::optional<int> only_yard = std::nullopt,
                                             std::optional<ColumnRef> excluded = std::nullopt) {
    const YardLayout& layout = state.layout();
    struct Candidate {
        ColumnRef col;
        int top;
    };
    std::vector<Candidate> candidates;
    for (int y = 1; y <= layout.n_yards; ++y) {
        if (only_yard && y != *only_yard) {
            continue;
        }
        for (int r = 1; r <= layout.rows; ++r) {
            for (int b = 1; b <= layout.bays; ++b) {
                ColumnRef col{y, r, b};
                if (excluded && col == *excluded) {
                    continue;
                }
                if (!layout.column_compatible(record, y, b)) {
                    continue;
                }
                int top = state.top_tier(col);
                if (top >= layout.tiers) {
                    continue;
                }
                candidates.push_back(Candidate{col, top});
            }
        }
    }
    if (candidates.empty()) {
        return std::nullopt;
    }
    if (min_fill_only) {
        int min_top = candidates[0].top;
        for (const auto& c : candidates) {
            min_top = std::min(min_top, c.top);
        }
        std::erase_if(candidates, [&](const Candidate& c) { return c.top != min_top; });
    }
    if (prefer_longest_stay) {
        const Candidate* best = nullptr;
        double best_value = 0.0;
        for (const auto& c : candidates) {
            if (c.top == 0) {
                continue;
            }
            double value = state.current_p_icdt(state.top_id(c.col), now);
            if (best == nullptr || value > best_value) {
                best = &c;
                best_value = value;
            }
        }
        if (best != nullptr) {
            return Position{best->col.y, best->col.r, best->col.b, best->top + 1};
        }
        // Every candidate is empty: fall through to the random tier-1 rule.
    }
    const Candidate& chosen =
        candidates[static_cast<std::size_t>(rng.uniform_below(candidates.size()))];
    return Position{chosen.col.y, chosen.col.r, chosen.col.b, chosen.top + 1};
}

}  // namespace detail

// Placement for a fresh unload under the estimate-driven strategies.
inline Position find_best_position(const YardState& state, const ContainerRecord& record,
                                   DateTime now, Rng& rng, bool tier_fill_discipline = true) {
    auto pos = detail::pick_position(state, record, now, rng, /*prefer_longest_stay=*/true,
                                     tier_fill_discipline);
    if (!pos) {
        throw YardFull("no admissible column for container " + record.id);
    }
    return *pos;
}

// Placement for a fresh unload under the baseline strategy: lowest
// available tier, uniform random among the columns at that level.
inline Position baseline_position(const YardState& state, const ContainerRecord& record,
                                  Rng& rng) {
    auto pos = detail::pick_position(state, record, DateTime{}, rng,
                                     /*prefer_longest_stay=*/false, /*min_fill_only=*/true);
    if (!pos) {
        throw YardFull("no admissible column for container " + record.id);
    }
    return *pos;
}

}  // namespace dwellsim
