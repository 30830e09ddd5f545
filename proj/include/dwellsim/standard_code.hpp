#pragma once

// Hierarchical standard codes produced by standardization: three-level HS
// commodity codes (chapter / heading / subheading) and three-level KSIC
// industry codes (section / division / group), plus the result record a
// standardization backend returns for one raw text.

#include <array>
#include <cctype>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dwellsim/error.hpp"

namespace dwellsim {

enum class CodeKind { HS, KSIC };

inline std::string_view to_string(CodeKind kind) {
    return kind == CodeKind::HS ? "HS" : "KSIC";
}

inline CodeKind code_kind_from_string(std::string_view s) {
    if (s == "HS") return CodeKind::HS;
    if (s == "KSIC") return CodeKind::KSIC;
    throw SchemaError("unknown code kind: " + std::string(s));
}

// Input-side naming for the same pair of pipelines: cargo information (CI)
// standardizes to HS codes, owner information (OI) to KSIC codes.
inline std::string_view input_label(CodeKind kind) {
    return kind == CodeKind::HS ? "CI" : "OI";
}

inline CodeKind code_kind_from_input_label(std::string_view s) {
    if (s == "CI") return CodeKind::HS;
    if (s == "OI") return CodeKind::KSIC;
    throw SchemaError("unknown input kind: " + std::string(s));
}

// Outcome levels for a standardization attempt: Type1 = fully classified,
// Type2 = insufficient input (classified only down to the mid level),
// Type3 = unclassifiable input.
enum class ValidationType { Type1, Type2, Type3 };

inline std::string_view to_string(ValidationType v) {
    switch (v) {
        case ValidationType::Type1: return "type1";
        case ValidationType::Type2: return "type2";
        case ValidationType::Type3: return "type3";
    }
    throw DomainError("invalid ValidationType");
}

inline ValidationType validation_type_from_string(std::string_view s) {
    if (s == "type1") return ValidationType::Type1;
    if (s == "type2") return ValidationType::Type2;
    if (s == "type3") return ValidationType::Type3;
    throw SchemaError("unknown validation type: " + std::string(s));
}

enum class OwnerSize { Large, Mid, SME, Unknown };

inline std::string_view to_string(OwnerSize s) {
    switch (s) {
        case OwnerSize::Large: return "Large";
        case OwnerSize::Mid: return "Mid";
        case OwnerSize::SME: return "SME";
        case OwnerSize::Unknown: return "Unknown";
    }
    throw DomainError("invalid OwnerSize");
}

inline OwnerSize owner_size_from_string(std::string_view s) {
    if (s == "Large") return OwnerSize::Large;
    if (s == "Mid") return OwnerSize::Mid;
    if (s == "SME") return OwnerSize::SME;
    if (s == "Unknown") return OwnerSize::Unknown;
    throw SchemaError("unknown owner size: " + std::string(s));
}

// KSIC sections with the division range each one spans.
struct KsicSection {
    char letter;
    int division_lo;
    int division_hi;
};

inline constexpr std::array<KsicSection, 21> kKsicSections{{
    {'A', 1, 3},   {'B', 5, 8},   {'C', 10, 34}, {'D', 35, 35},
    {'E', 36, 39}, {'F', 41, 42}, {'G', 45, 47}, {'H', 49, 52},
    {'I', 55, 56}, {'J', 58, 63}, {'K', 64, 66}, {'L', 68, 68},
    {'M', 70, 73}, {'N', 74, 76}, {'O', 84, 84}, {'P', 85, 85},
    {'Q', 86, 87}, {'R', 90, 91}, {'S', 94, 96}, {'T', 97, 98},
    {'U', 99, 99},
}};

inline std::optional<char> ksic_section_for_division(int division) {
    for (const auto& s : kKsicSections) {
        if (division >= s.division_lo && division <= s.division_hi) {
            return s.letter;
        }
    }
    return std::nullopt;
}

namespace detail {

inline bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

}  // namespace detail

// A partial or complete hierarchical code. Presence is contiguous from the
// top: a populated deeper level implies every level above it is populated.
struct StandardCode {
    CodeKind kind = CodeKind::HS;
    std::optional<std::string> lv1;
    std::optional<std::string> lv2;
    std::optional<std::string> lv3;

    bool operator==(const StandardCode&) const = default;

    int depth() const {
        if (lv3) return 3;
        if (lv2) return 2;
        if (lv1) return 1;
        return 0;
    }

    const std::optional<std::string>& at_level(int level) const {
        switch (level) {
            case 1: return lv1;
            case 2: return lv2;
            case 3: return lv3;
        }
        throw DomainError("code level must be 1, 2 or 3");
    }

    // Throws DomainError if the shape of the code is invalid: gaps in level
    // presence, malformed level values, or parent/child mismatch (digit
    // prefixes for HS and for KSIC division->group; the KSIC division must
    // fall in the range spanned by the section letter).
    void validate_structure() const {
        if ((lv2 && !lv1) || (lv3 && !lv2)) {
            throw DomainError("code levels must be populated contiguously from the top");
        }
        if (kind == CodeKind::HS) {
            if (lv1 && !(lv1->size() == 2 && detail::all_digits(*lv1))) {
                throw DomainError("HS chapter must be 2 digits: " + lv1.value_or(""));
            }
            if (lv2) {
                if (!(lv2->size() == 4 && detail::all_digits(*lv2))) {
                    throw DomainError("HS heading must be 4 digits: " + *lv2);
                }
                if (lv2->substr(0, 2) != *lv1) {
                    throw DomainError("HS heading " + *lv2 + " not under chapter " + *lv1);
                }
            }
            if (lv3) {
                if (!(lv3->size() == 6 && detail::all_digits(*lv3))) {
                    throw DomainError("HS subheading must be 6 digits: " + *lv3);
                }
                if (lv3->substr(0, 4) != *lv2) {
                    throw DomainError("HS subheading " + *lv3 + " not under heading " + *lv2);
                }
            }
        } else {
            if (lv1 && !(lv1->size() == 1 && (*lv1)[0] >= 'A' && (*lv1)[0] <= 'U')) {
                throw DomainError("KSIC section must be a letter A-U: " + lv1.value_or(""));
            }
            if (lv2) {
                if (!(lv2->size() == 2 && detail::all_digits(*lv2))) {
                    throw DomainError("KSIC division must be 2 digits: " + *lv2);
                }
                auto section = ksic_section_for_division(std::stoi(*lv2));
                if (!section || *section != (*lv1)[0]) {
                    throw DomainError("KSIC division " + *lv2 + " outside range of section " + *lv1);
                }
            }
            if (lv3) {
                if (!(lv3->size() == 3 && detail::all_digits(*lv3))) {
                    throw DomainError("KSIC group must be 3 digits: " + *lv3);
                }
                if (lv3->substr(0, 2) != *lv2) {
                    throw DomainError("KSIC group " + *lv3 + " not under division " + *lv2);
                }
            }
        }
    }

    bool is_structurally_valid() const {
        try {
            validate_structure();
            return true;
        } catch (const DomainError&) {
            return false;
        }
    }
};

// Full record returned by a standardization backend for one raw text.
// `raw` is the input text echoed back verbatim (it doubles as the cache
// key); `evidence_tokens` (HS only) holds the raw tokens the decision
// relied on; `owner_size` (KSIC only) is Unknown unless the owner was
// fully classified.
struct StandardizationResult {
    CodeKind kind = CodeKind::HS;
    std::string raw;
    StandardCode code;
    std::vector<std::string> evidence_tokens;
    OwnerSize owner_size = OwnerSize::Unknown;
    ValidationType validation = ValidationType::Type3;
    std::string reason;

    bool operator==(const StandardizationResult&) const = default;

    // Shape rules tying the outcome type to populated levels: Type1 needs a
    // complete structurally valid code, Type2 a code that stops short of the
    // deepest level, Type3 an empty code. The reason must be non-empty.
    void validate() const {
        if (code.kind != kind) {
            throw DomainError("result code kind differs from result kind");
        }
        code.validate_structure();
        switch (validation) {
            case ValidationType::Type1:
                if (code.depth() != 3) {
                    throw DomainError("type1 result requires a complete code");
                }
                break;
            case ValidationType::Type2:
                if (code.depth() == 0 || code.depth() == 3) {
                    throw DomainError("type2 result requires a partial code");
                }
                break;
            case ValidationType::Type3:
                if (code.depth() != 0) {
                    throw DomainError("type3 result requires an empty code");
                }
                break;
        }
        if (reason.empty()) {
            throw DomainError("result reason must not be empty");
        }
    }
};

}  // namespace dwellsim
