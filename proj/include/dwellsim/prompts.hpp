#pragma once

// The text protocol between the standardizer and its backend: prompt
// assembly (fixed instruction/task blocks per kind with the raw text
// appended verbatim) and strict parsing of the JSON payload a backend
// returns. The payload schema is closed: exactly the documented keys, no
// extras, and the input text echoed back byte-identically.

#include <optional>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "dwellsim/error.hpp"
#include "dwellsim/standard_code.hpp"

namespace dwellsim {

namespace detail {

inline bool is_blank(std::string_view s) {
    for (char c : s) {
        if (c != ' ' && c != '\t' && c != '\r' && c != '\n') {
            return false;
        }
    }
    return true;
}

inline constexpr std::string_view kCiRequestMarker = "Container Information: ";
inline constexpr std::string_view kOiRequestMarker = "Owner Information: ";

inline constexpr std::string_view kCiPromptHeader =
    "[Instruction]\n"
    "You are a Port EDI Data Standardization Assistant and an expert in product\n"
    "classification. Standardize the cargo information given under [Request] into\n"
    "HS codes at the 2-, 4-, and 6-digit levels and answer strictly as a single\n"
    "JSON object in the schema below.\n"
    "\n"
    "[Task Description]\n"
    "1) HS code classification\n"
    "- Choose the chapter (2 digits), heading (4 digits) and subheading (6 digits)\n"
    "  from the cargo's essential nature, primary use, degree of processing, and\n"
    "  whether it is a finished item or a part.\n"
    "- The heading must begin with the chapter's two digits; the subheading must\n"
    "  begin with the heading's four digits.\n"
    "2) Validation check\n"
    "- Set validation_check to exactly one of \"type1\" (information sufficient,\n"
    "  classified with confidence), \"type2\" (information insufficient or\n"
    "  ambiguous), or \"type3\" (information invalid, cannot be classified).\n"
    "3) Output schema (no additional fields; all key names exactly as written)\n"
    "{\n"
    "  cargo: the input cargo text, echoed back without any modification,\n"
    "  hscod2: two-digit HS chapter code, or null if not classifiable,\n"
    "  hscod4: four-digit HS heading code, or null if not classifiable,\n"
    "  hscod6: six-digit HS subheading code, or null if not classifiable,\n"
    "  evidence_tokens: array of the input terms that drove the classification,\n"
    "    empty if classification was not possible,\n"
    "  validation_check: \"type1\" | \"type2\" | \"type3\",\n"
    "  reason: short explanation of the standardization result\n"
    "}\n"
    "\n"
    "[Request]\n";

inline constexpr std::string_view kOiPromptHeader =
    "[Instruction]\n"
    "You are a Port EDI Data Standardization Assistant and an expert in corporate\n"
    "industrial classification. Standardize the owner information given under\n"
    "[Request] into KSIC codes at the section, division and group levels and\n"
    "answer strictly as a single JSON object in the schema below.\n"
    "\n"
    "[Task Description]\n"
    "1) KSIC classification\n"
    "- Choose the section (single uppercase letter A-U), division (2 digits) and\n"
    "  group (3 digits) for the company's industry.\n"
    "- The division must fall in the section's division range; the group must\n"
    "  begin with the division's two digits.\n"
    "- Classify the company size as SME, Mid, Large, or Unknown.\n"
    "2) Validation check\n"
    "- Set validation_check to exactly one of \"type1\" (information sufficient,\n"
    "  classified with confidence), \"type2\" (information insufficient or\n"
    "  ambiguous), or \"type3\" (information invalid, cannot be classified).\n"
    "3) Output schema (no additional fields; all key names exactly as written)\n"
    "{\n"
    "  owner: the input owner text, echoed back without any modification,\n"
    "  size: \"SME\" | \"Mid\" | \"Large\" | \"Unknown\",\n"
    "  section1: section letter A-U, or null if not classifiable,\n"
    "  division2: two-digit division code, or null if not classifiable,\n"
    "  group3: three-digit group code, or null if not classifiable,\n"
    "  validation_check: \"type1\" | \"type2\" | \"type3\",\n"
    "  reason: short explanation of the standardization result\n"
    "}\n"
    "\n"
    "[Request]\n";

}  // namespace detail

// Fixed per-kind prompt with the raw text appended verbatim at the end.
// Byte-stable: equal inputs produce equal prompts.
inline std::string build_prompt(std::string_view raw, CodeKind kind) {
    if (detail::is_blank(raw)) {
        throw EmptyInput("build_prompt: raw text is empty");
    }
    std::string prompt;
    if (kind == CodeKind::HS) {
        prompt.append(detail::kCiPromptHeader);
        prompt.append(detail::kCiRequestMarker);
    } else {
        prompt.append(detail::kOiPromptHeader);
        prompt.append(detail::kOiRequestMarker);
    }
    prompt.append(raw);
    return prompt;
}

// Recover the raw text from a prompt produced by build_prompt (used by the
// reference backends, which answer from the raw text alone).
inline std::string request_raw_from_prompt(std::string_view prompt, CodeKind kind) {
    std::string_view marker =
        kind == CodeKind::HS ? detail::kCiRequestMarker : detail::kOiRequestMarker;
    auto pos = prompt.rfind(marker);
    if (pos == std::string_view::npos) {
        throw SchemaError("prompt is missing its request marker");
    }
    return std::string(prompt.substr(pos + marker.size()));
}

namespace detail {

inline const nlohmann::json& require_key(const nlohmann::json& obj, const char* key) {
    auto it = obj.find(key);
    if (it == obj.end()) {
        throw SchemaError(std::string("payload missing key '") + key + "'");
    }
    return *it;
}

inline std::string require_string(const nlohmann::json& obj, const char* key) {
    const auto& v = require_key(obj, key);
    if (!v.is_string()) {
        throw SchemaError(std::string("payload key '") + key + "' must be a string");
    }
    return v.get<std::string>();
}

inline std::optional<std::string> optional_string(const nlohmann::json& obj, const char* key) {
    const auto& v = require_key(obj, key);
    if (v.is_null()) {
        return std::nullopt;
    }
    if (!v.is_string()) {
        throw SchemaError(std::string("payload key '") + key + "' must be a string or null");
    }
    return v.get<std::string>();
}

inline void require_exact_keys(const nlohmann::json& obj,
                               std::initializer_list<const char*> keys) {
    for (const auto& item : obj.items()) {
        bool known = false;
        for (const char* k : keys) {
            if (item.key() == k) {
                known = true;
                break;
            }
        }
        if (!known) {
            throw SchemaError("payload has unexpected key '" + item.key() + "'");
        }
    }
}

}  // namespace detail

// Serialize a result into the backend payload schema for its kind.
inline nlohmann::json result_to_payload(const StandardizationResult& result) {
    nlohmann::json out;
    auto code_or_null = [](const std::optional<std::string>& v) {
        return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
    };
    if (result.kind == CodeKind::HS) {
        out["cargo"] = result.raw;
        out["hscod2"] = code_or_null(result.code.lv1);
        out["hscod4"] = code_or_null(result.code.lv2);
        out["hscod6"] = code_or_null(result.code.lv3);
        out["evidence_tokens"] = result.evidence_tokens;
    } else {
        out["owner"] = result.raw;
        out["size"] = std::string(to_string(result.owner_size));
        out["section1"] = code_or_null(result.code.lv1);
        out["division2"] = code_or_null(result.code.lv2);
        out["group3"] = code_or_null(result.code.lv3);
    }
    out["validation_check"] = std::string(to_string(result.validation));
    out["reason"] = result.reason;
    return out;
}

// Parse and validate a backend payload. The schema is enforced strictly
// (missing key, unknown key, or wrong value type all fail) but code values
// are preserved as returned — hierarchy checking is a separate, later step.
// When expected_raw is given, the echoed input must match it byte for byte.
inline StandardizationResult parse_result(
    std::string_view payload_text, CodeKind kind,
    std::optional<std::string_view> expected_raw = std::nullopt) {
    nlohmann::json payload;
    try {
        payload = nlohmann::json::parse(payload_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw SchemaError(std::string("payload is not valid JSON: ") + e.what());
    }
    if (!payload.is_object()) {
        throw SchemaError("payload must be a single JSON object");
    }
    StandardizationResult result;
    result.kind = kind;
    result.code.kind = kind;
    if (kind == CodeKind::HS) {
        detail::require_exact_keys(payload, {"cargo", "hscod2", "hscod4", "hscod6",
                                             "evidence_tokens", "validation_check", "reason"});
        result.raw = detail::require_string(payload, "cargo");
        result.code.lv1 = detail::optional_string(payload, "hscod2");
        result.code.lv2 = detail::optional_string(payload, "hscod4");
        result.code.lv3 = detail::optional_string(payload, "hscod6");
        const auto& tokens = detail::require_key(payload, "evidence_tokens");
        if (!tokens.is_array()) {
            throw SchemaError("payload key 'evidence_tokens' must be an array");
        }
        for (const auto& t : tokens) {
            if (!t.is_string()) {
                throw SchemaError("payload key 'evidence_tokens' must contain strings");
            }
            result.evidence_tokens.push_back(t.get<std::string>());
        }
    } else {
        detail::require_exact_keys(payload, {"owner", "size", "section1", "division2",
                                             "group3", "validation_check", "reason"});
        result.raw = detail::require_string(payload, "owner");
        result.owner_size = owner_size_from_string(detail::require_string(payload, "size"));
        result.code.lv1 = detail::optional_string(payload, "section1");
        result.code.lv2 = detail::optional_string(payload, "division2");
        result.code.lv3 = detail::optional_string(payload, "group3");
    }
    result.validation =
        validation_type_from_string(detail::require_string(payload, "validation_check"));
    result.reason = detail::require_string(payload, "reason");
    if (expected_raw && result.raw != *expected_raw) {
        throw EchoMismatch("payload echoed '" + result.raw + "' for input '" +
                           std::string(*expected_raw) + "'");
    }
    return result;
}

}  // namespace dwellsim
