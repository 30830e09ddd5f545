#pragma once

// The standardization bank: a persistent cache keyed by the exact byte
// string of the raw input (per kind). Each distinct key is standardized by
// the backend at most once; repeated lookups reuse the stored result.
// Concurrent first lookups of the same key collapse into a single backend
// call. Usage counters feed the request-ratio and cost reporting.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <future>
#include <map>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "dwellsim/backend.hpp"
#include "dwellsim/error.hpp"
#include "dwellsim/prompts.hpp"
#include "dwellsim/standard_code.hpp"
#include "dwellsim/time.hpp"

namespace dwellsim {

struct STDBankEntry {
    CodeKind kind = CodeKind::HS;
    std::string raw_key;
    StandardizationResult result;
    DateTime created_at;
    std::uint64_t hit_count = 0;

    bool operator==(const STDBankEntry&) const = default;
};

// Raw usage counters. Every lookup resolves to exactly one of: a cache hit,
// a successful backend standardization, or a failure.
struct BankStats {
    std::uint64_t lookups = 0;
    std::uint64_t hits = 0;
    std::uint64_t backend_calls = 0;
    std::uint64_t failed_calls = 0;

    bool operator==(const BankStats&) const = default;
};

// Derived accounting for a processing window.
struct BankReport {
    BankStats stats;
    double unit_cost = 0.0;
    std::uint64_t containers_processed = 0;
    double request_ratio = 0.0;   // backend_calls / lookups
    double cost_per_1000 = 0.0;   // backend_calls * unit_cost * 1000 / containers_processed
};

// An input whose backend payload failed schema validation; kept aside for
// review instead of being stored.
struct QuarantineRecord {
    CodeKind kind = CodeKind::HS;
    std::string raw_key;
    std::string error;
    DateTime at;
};

struct RetryPolicy {
    int max_retries = 2;  // on transport errors only
    std::chrono::milliseconds initial_backoff{50};
};

class STDBank {
  public:
    STDBank() = default;
    explicit STDBank(RetryPolicy retry) : retry_(retry) {}

    // Move exists for factory returns only; the source must not be in use
    // by other threads (no in-flight standardizations).
    STDBank(STDBank&& other)
        : entries_(std::move(other.entries_)),
          stats_(other.stats_),
          quarantine_(std::move(other.quarantine_)),
          persist_path_(std::move(other.persist_path_)),
          retry_(other.retry_) {}
    STDBank(const STDBank&) = delete;
    STDBank& operator=(const STDBank&) = delete;
    STDBank& operator=(STDBank&&) = delete;

    // Cache-through standardization of one raw text. Hits return the stored
    // result; misses build the prompt, call the backend (with bounded
    // retries on transport errors), parse strictly, verify the echo, store,
    // and return. `now` stamps newly created entries. Transport failures
    // propagate as BackendError; malformed payloads propagate as
    // SchemaError (or EchoMismatch) after quarantining the key. Nothing is
    // stored on failure.
    StandardizationResult standardize(const std::string& raw, CodeKind kind,
                                      StandardizerBackend& backend, DateTime now = {}) {
        Key key{kind, raw};
        for (;;) {
            {
                std::unique_lock lock(mutex_);
                auto it = entries_.find(key);
                if (it != entries_.end()) {
                    ++stats_.lookups;
                    ++stats_.hits;
                    ++it->second.hit_count;
                    return it->second.result;
                }
                auto flight = in_flight_.find(key);
                if (flight == in_flight_.end()) {
                    auto state = std::make_shared<std::promise<void>>();
                    in_flight_.emplace(key, state->get_future().share());
                    lock.unlock();
                    return lead_standardize(key, backend, now, std::move(state));
                }
                std::shared_future<void> done = flight->second;
                lock.unlock();
                done.wait();
            }
            // The leader finished (either way); retry the lookup.
        }
    }

    std::optional<StandardizationResult> find(const std::string& raw, CodeKind kind) const {
        std::shared_lock lock(mutex_);
        auto it = entries_.find(Key{kind, raw});
        if (it == entries_.end()) {
            return std::nullopt;
        }
        return it->second.result;
    }

    bool contains(const std::string& raw, CodeKind kind) const {
        std::shared_lock lock(mutex_);
        return entries_.count(Key{kind, raw}) > 0;
    }

    std::size_t size() const {
        std::shared_lock lock(mutex_);
        return entries_.size();
    }

    BankStats stats() const {
        std::shared_lock lock(mutex_);
        return stats_;
    }

    std::vector<QuarantineRecord> quarantine() const {
        std::shared_lock lock(mutex_);
        return quarantine_;
    }

    std::vector<STDBankEntry> entries() const {
        std::shared_lock lock(mutex_);
        std::vector<STDBankEntry> out;
        out.reserve(entries_.size());
        for (const auto& [key, entry] : entries_) {
            out.push_back(entry);
        }
        return out;
    }

    // Insert or replace an entry without touching the stats (used by load
    // and by tests that preseed the cache).
    void put(STDBankEntry entry) {
        std::unique_lock lock(mutex_);
        Key key{entry.kind, entry.raw_key};
        entries_[key] = std::move(entry);
    }

    // Every new successful standardization is appended to this file as one
    // JSON line. The file is created if missing.
    void set_persist_path(std::string path) {
        std::unique_lock lock(mutex_);
        persist_path_ = std::move(path);
    }

    // Snapshot the whole bank as JSON lines (atomic: temp file + rename).
    void save(const std::string& path) const {
        std::string tmp = path + ".tmp";
        {
            std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
            if (!out) {
                throw IoError("cannot write bank file: " + tmp);
            }
            std::shared_lock lock(mutex_);
            for (const auto& [key, entry] : entries_) {
                out << entry_to_json(entry).dump() << '\n';
            }
            if (!out) {
                throw IoError("failed writing bank file: " + tmp);
            }
        }
        if (std::rename(tmp.c_str(), path.c_str()) != 0) {
            throw IoError("cannot rename " + tmp + " to " + path);
        }
    }

    // Load a JSON-lines bank file. For duplicate keys the later line wins
    // (the persisted file is append-only).
    static STDBank load(const std::string& path, RetryPolicy retry = {}) {
        std::ifstream in(path, std::ios::binary);
        if (!in) {
            throw IoError("cannot open bank file: " + path);
        }
        STDBank bank(retry);
        std::string line;
        std::size_t line_no = 0;
        while (std::getline(in, line)) {
            ++line_no;
            if (line.empty()) {
                continue;
            }
            try {
                bank.put(entry_from_json(line));
            } catch (const Error& e) {
                throw SchemaError("bank file line " + std::to_string(line_no) + ": " + e.what());
            }
        }
        return bank;
    }

    static nlohmann::json entry_to_json(const STDBankEntry& entry) {
        return nlohmann::json{{"kind", std::string(input_label(entry.kind))},
                              {"raw_key", entry.raw_key},
                              {"created_at", format_iso8601(entry.created_at)},
                              {"hit_count", entry.hit_count},
                              {"result", result_to_payload(entry.result)}};
    }

    static STDBankEntry entry_from_json(const std::string& line) {
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(line);
        } catch (const nlohmann::json::parse_error& e) {
            throw SchemaError(std::string("bank entry is not valid JSON: ") + e.what());
        }
        if (!j.is_object() || !j.contains("kind") || !j.contains("raw_key") ||
            !j.contains("created_at") || !j.contains("hit_count") || !j.contains("result")) {
            throw SchemaError("bank entry missing required fields");
        }
        STDBankEntry entry;
        entry.kind = code_kind_from_input_label(j.at("kind").get<std::string>());
        entry.raw_key = j.at("raw_key").get<std::string>();
        entry.created_at = parse_iso8601(j.at("created_at").get<std::string>());
        entry.hit_count = j.at("hit_count").get<std::uint64_t>();
        entry.result =
            parse_result(j.at("result").dump(), entry.kind, std::string_view(entry.raw_key));
        return entry;
    }

  private:
    struct Key {
        CodeKind kind;
        std::string raw;
        auto operator<=>(const Key&) const = default;
    };

    StandardizationResult lead_standardize(const Key& key, StandardizerBackend& backend,
                                           DateTime now,
                                           std::shared_ptr<std::promise<void>> done) {
        struct FlightGuard {
            STDBank* bank;
            const Key* key;
            std::shared_ptr<std::promise<void>> done;
            ~FlightGuard() {
                {
                    std::unique_lock lock(bank->mutex_);
                    bank->in_flight_.erase(*key);
                }
                done->set_value();
            }
        } guard{this, &key, std::move(done)};

        std::string prompt = build_prompt(key.raw, key.kind);
        std::string payload;
        try {
            payload = call_with_retries(backend, prompt);
        } catch (const BackendError&) {
            std::unique_lock lock(mutex_);
            ++stats_.lookups;
            ++stats_.failed_calls;
            throw;
        }
        StandardizationResult result;
        try {
            result = parse_result(payload, key.kind, std::string_view(key.raw));
        } catch (const Error& e) {
            std::unique_lock lock(mutex_);
            ++stats_.lookups;
            ++stats_.failed_calls;
            quarantine_.push_back(QuarantineRecord{key.kind, key.raw, e.what(), now});
            throw;
        }
        STDBankEntry entry{key.kind, key.raw, result, now, 0};
        {
            std::unique_lock lock(mutex_);
            ++stats_.lookups;
            ++stats_.backend_calls;
            if (!persist_path_.empty()) {
                append_entry_locked(entry);
            }
            entries_[key] = std::move(entry);
        }
        return result;
    }

    std::string call_with_retries(StandardizerBackend& backend, const std::string& prompt) {
        auto backoff = retry_.initial_backoff;
        for (int attempt = 0;; ++attempt) {
            try {
                return backend.complete(prompt);
            } catch (const BackendError&) {
                if (attempt >= retry_.max_retries) {
                    throw;
                }
                std::this_thread::sleep_for(backoff);
                backoff *= 2;
            }
        }
    }

    void append_entry_locked(const STDBankEntry& entry) {
        std::ofstream out(persist_path_, std::ios::binary | std::ios::app);
        if (!out) {
            throw IoError("cannot append to bank file: " + persist_path_);
        }
        out << entry_to_json(entry).dump() << '\n';
        if (!out) {
            throw IoError("failed appending to bank file: " + persist_path_);
        }
    }

    mutable std::shared_mutex mutex_;
    std::map<Key, STDBankEntry> entries_;
    std::map<Key, std::shared_future<void>> in_flight_;
    BankStats stats_;
    std::vector<QuarantineRecord> quarantine_;
    std::string persist_path_;
    RetryPolicy retry_;
};

// Derived usage metrics for a processing window of `containers_processed`
// containers at `unit_cost` per backend call.
inline BankReport bank_stats(const STDBank& bank, double unit_cost,
                             std::uint64_t containers_processed) {
    BankReport report;
    report.stats = bank.stats();
    report.unit_cost = unit_cost;
    report.containers_processed = containers_processed;
    if (report.stats.lookups == 0) {
        throw DivisionDomain("bank_stats: no lookups recorded");
    }
    if (containers_processed == 0) {
        throw DivisionDomain("bank_stats: containers_processed is zero");
    }
    report.request_ratio = static_cast<double>(report.stats.backend_calls) /
                           static_cast<double>(report.stats.lookups);
    report.cost_per_1000 = static_cast<double>(report.stats.backend_calls) * unit_cost * 1000.0 /
                           static_cast<double>(containers_processed);
    return report;
}

}  // namespace dwellsim
