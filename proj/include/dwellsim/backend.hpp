#pragma once

// Standardizer backends: the abstract prompt->payload interface, a
// deterministic keyword-table mock (the reference backend for tests and
// synthetic experiments), a noise-injecting wrapper for consistency
// studies, and a thin HTTP client for a real service.

#include <cstdlib>
#include <memory>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "dwellsim/classification.hpp"
#include "dwellsim/error.hpp"
#include "dwellsim/mock_tables.hpp"
#include "dwellsim/prompts.hpp"
#include "dwellsim/rng.hpp"
#include "dwellsim/standard_code.hpp"

namespace dwellsim {

// A backend turns a prompt produced by build_prompt into a JSON payload in
// the schema embedded in that prompt.
class StandardizerBackend {
  public:
    virtual ~StandardizerBackend() = default;
    virtual std::string complete(const std::string& prompt) = 0;
};

namespace detail {

inline CodeKind kind_from_prompt(std::string_view prompt) {
    if (prompt.substr(0, kCiPromptHeader.size()) == kCiPromptHeader) {
        return CodeKind::HS;
    }
    if (prompt.substr(0, kOiPromptHeader.size()) == kOiPromptHeader) {
        return CodeKind::KSIC;
    }
    throw SchemaError("prompt does not start with a known instruction block");
}

// Uppercased maximal alphanumeric runs, in input order.
inline std::vector<std::string> tokenize(std::string_view text) {
    std::vector<std::string> tokens;
    std::string current;
    for (char c : text) {
        if (std::isalnum(static_cast<unsigned char>(c))) {
            current.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
        } else if (!current.empty()) {
            tokens.push_back(std::move(current));
            current.clear();
        }
    }
    if (!current.empty()) {
        tokens.push_back(std::move(current));
    }
    return tokens;
}

}  // namespace detail

// Deterministic reference backend: classifies by scanning the raw text for
// known keywords. A hit in the full-keyword table yields a complete code
// (Type1); otherwise a hit in the generic-keyword table yields a partial
// code and an insufficient-information verdict (Type2); otherwise the input
// is unclassifiable (Type3). Pure function of the raw text.
class MockBackend : public StandardizerBackend {
  public:
    explicit MockBackend(const ClassificationTable* table = &ClassificationTable::builtin())
        : table_(table) {}

    std::string complete(const std::string& prompt) override {
        CodeKind kind = detail::kind_from_prompt(prompt);
        std::string raw = request_raw_from_prompt(prompt, kind);
        return result_to_payload(standardize_raw(raw, kind)).dump();
    }

    // The classification decision itself, exposed for direct use in tests
    // and the generator's ground-truth bookkeeping.
    StandardizationResult standardize_raw(const std::string& raw, CodeKind kind) const {
        std::vector<std::string> tokens = detail::tokenize(raw);
        StandardizationResult result;
        result.kind = kind;
        result.code.kind = kind;
        result.raw = raw;
        if (kind == CodeKind::HS) {
            classify_cargo(tokens, result);
        } else {
            classify_owner(tokens, result);
        }
        return result;
    }

    const ClassificationTable& table() const { return *table_; }

  private:
    static const data::CiKeyword* find_ci_keyword(const std::string& token) {
        for (const auto& k : data::kCiKeywords) {
            if (token == k.token) return &k;
        }
        return nullptr;
    }

    static const data::CiGenericKeyword* find_ci_generic(const std::string& token) {
        for (const auto& k : data::kCiGenericKeywords) {
            if (token == k.token) return &k;
        }
        return nullptr;
    }

    static const data::OiKeyword* find_oi_keyword(const std::string& token) {
        for (const auto& k : data::kOiKeywords) {
            if (token == k.token) return &k;
        }
        return nullptr;
    }

    static const data::OiGenericKeyword* find_oi_generic(const std::string& token) {
        for (const auto& k : data::kOiGenericKeywords) {
            if (token == k.token) return &k;
        }
        return nullptr;
    }

    void classify_cargo(const std::vector<std::string>& tokens,
                        StandardizationResult& result) const {
        const data::CiKeyword* first_hit = nullptr;
        for (const auto& token : tokens) {
            const data::CiKeyword* k = find_ci_keyword(token);
            if (k != nullptr) {
                if (first_hit == nullptr) {
                    first_hit = k;
                }
                result.evidence_tokens.push_back(token);
            }
        }
        if (first_hit != nullptr) {
            std::string hs6(first_hit->hs6);
            result.code.lv1 = hs6.substr(0, 2);
            result.code.lv2 = hs6.substr(0, 4);
            result.code.lv3 = hs6;
            result.validation = ValidationType::Type1;
            result.reason = "Recognized cargo keyword '" + std::string(first_hit->token) +
                            "'; classified under heading " + *result.code.lv2 + " (" +
                            describe(CodeKind::HS, 2, *result.code.lv2) + "), subheading " +
                            hs6 + ".";
            return;
        }
        for (const auto& token : tokens) {
            const data::CiGenericKeyword* g = find_ci_generic(token);
            if (g != nullptr) {
                result.code.lv1 = std::string(g->hs2);
                result.code.lv2 = std::string(g->hs4);
                result.validation = ValidationType::Type2;
                result.reason = "The description '" + token +
                                "' lacks specific attributes such as material or product type; "
                                "classification stops at heading " + *result.code.lv2 + " (" +
                                describe(CodeKind::HS, 2, *result.code.lv2) + ").";
                return;
            }
        }
        result.validation = ValidationType::Type3;
        result.reason = "No recognizable cargo term in the input; it is not possible to "
                        "classify it under any HS code.";
    }

    void classify_owner(const std::vector<std::string>& tokens,
                        StandardizationResult& result) const {
        for (const auto& token : tokens) {
            const data::OiKeyword* k = find_oi_keyword(token);
            if (k != nullptr) {
                std::string group(k->group3);
                std::string division = group.substr(0, 2);
                auto section = ksic_section_for_division(std::stoi(division));
                result.code.lv1 = std::string(1, section.value());
                result.code.lv2 = division;
                result.code.lv3 = group;
                result.owner_size = owner_size_from_string(std::string(k->size));
                result.validation = ValidationType::Type1;
                result.reason = "Recognized owner '" + token + "'; classified under division " +
                                division + " (" + describe(CodeKind::KSIC, 2, division) +
                                "), group " + group + ".";
                return;
            }
        }
        for (const auto& token : tokens) {
            const data::OiGenericKeyword* g = find_oi_generic(token);
            if (g != nullptr) {
                result.code.lv1 = std::string(g->section);
                result.code.lv2 = std::string(g->division);
                result.validation = ValidationType::Type2;
                result.reason = "The owner text only contains the generic term '" + token +
                                "' and is insufficient to identify a specific industry group; "
                                "classification stops at division " + *result.code.lv2 + ".";
                return;
            }
        }
        result.validation = ValidationType::Type3;
        result.reason = "No recognizable owner name in the input; it is not possible to "
                        "classify it under any KSIC code.";
    }

    std::string describe(CodeKind kind, int level, const std::string& code) const {
        const ClassificationEntry* e = table_->find(kind, level, code);
        return e != nullptr ? e->description : "unlisted";
    }

    const ClassificationTable* table_;
};

// Wraps the deterministic mock and, with probability flip_prob per Type1
// result, replaces the deepest code level with a uniformly chosen sibling
// from the classification table. Stateful (owns an RNG): repeated calls on
// the same input may disagree, which is the point. Not thread-safe.
class NoisyMockBackend : public StandardizerBackend {
  public:
    NoisyMockBackend(double flip_prob, std::uint64_t seed,
                     const ClassificationTable* table = &ClassificationTable::builtin())
        : mock_(table), flip_prob_(flip_prob), rng_(seed) {
        if (flip_prob < 0.0 || flip_prob > 1.0) {
            throw ConfigError("flip_prob must be in [0, 1]");
        }
    }

    std::string complete(const std::string& prompt) override {
        CodeKind kind = detail::kind_from_prompt(prompt);
        std::string raw = request_raw_from_prompt(prompt, kind);
        return result_to_payload(standardize_raw(raw, kind)).dump();
    }

    StandardizationResult standardize_raw(const std::string& raw, CodeKind kind) {
        StandardizationResult result = mock_.standardize_raw(raw, kind);
        if (result.validation == ValidationType::Type1 && rng_.bernoulli(flip_prob_)) {
            auto siblings = mock_.table().siblings_of(kind, 3, *result.code.lv3);
            if (!siblings.empty()) {
                result.code.lv3 = siblings[rng_.uniform_below(siblings.size())];
            }
        }
        return result;
    }

  private:
    MockBackend mock_;
    double flip_prob_;
    Rng rng_;
};

// HTTP client backend: POSTs the prompt as the request body and expects the
// payload as the response body. Endpoint and optional bearer token come
// from arguments or the DWELLSIM_BACKEND_URL / DWELLSIM_BACKEND_TOKEN
// environment variables. Untested against real services.
class HttpBackend : public StandardizerBackend {
  public:
    explicit HttpBackend(std::string url = from_env("DWELLSIM_BACKEND_URL"),
                         std::string token = from_env("DWELLSIM_BACKEND_TOKEN"));

    std::string complete(const std::string& prompt) override;

  private:
    static std::string from_env(const char* name) {
        const char* v = std::getenv(name);
        return v != nullptr ? std::string(v) : std::string();
    }

    std::string base_;
    std::string path_;
    std::string token_;
};

}  // namespace dwellsim
