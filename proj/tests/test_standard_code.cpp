#include <doctest.h>

#include "dwellsim/standard_code.hpp"

using namespace dwellsim;

namespace {

StandardCode hs(const char* lv1, const char* lv2, const char* lv3) {
    StandardCode c;
    c.kind = CodeKind::HS;
    if (lv1) c.lv1 = lv1;
    if (lv2) c.lv2 = lv2;
    if (lv3) c.lv3 = lv3;
    return c;
}

StandardCode ksic(const char* lv1, const char* lv2, const char* lv3) {
    StandardCode c;
    c.kind = CodeKind::KSIC;
    if (lv1) c.lv1 = lv1;
    if (lv2) c.lv2 = lv2;
    if (lv3) c.lv3 = lv3;
    return c;
}

}  // namespace

TEST_CASE("enum string round trips") {
    CHECK(code_kind_from_string("HS") == CodeKind::HS);
    CHECK(code_kind_from_string("KSIC") == CodeKind::KSIC);
    CHECK(to_string(CodeKind::HS) == "HS");
    CHECK_THROWS_AS(code_kind_from_string("XX"), SchemaError);

    CHECK(input_label(CodeKind::HS) == "CI");
    CHECK(input_label(CodeKind::KSIC) == "OI");
    CHECK(code_kind_from_input_label("CI") == CodeKind::HS);
    CHECK(code_kind_from_input_label("OI") == CodeKind::KSIC);

    for (auto v : {ValidationType::Type1, ValidationType::Type2, ValidationType::Type3}) {
        CHECK(validation_type_from_string(std::string(to_string(v))) == v);
    }
    CHECK(to_string(ValidationType::Type2) == "type2");
    CHECK_THROWS_AS(validation_type_from_string("type4"), SchemaError);

    for (auto s : {OwnerSize::Large, OwnerSize::Mid, OwnerSize::SME, OwnerSize::Unknown}) {
        CHECK(owner_size_from_string(std::string(to_string(s))) == s);
    }
}

TEST_CASE("ksic section ranges") {
    CHECK(ksic_section_for_division(1) == 'A');
    CHECK(ksic_section_for_division(3) == 'A');
    CHECK(ksic_section_for_division(10) == 'C');
    CHECK(ksic_section_for_division(34) == 'C');
    CHECK(ksic_section_for_division(35) == 'D');
    CHECK(ksic_section_for_division(52) == 'H');
    CHECK(ksic_section_for_division(56) == 'I');
    CHECK(ksic_section_for_division(99) == 'U');
    CHECK_FALSE(ksic_section_for_division(4).has_value());
    CHECK_FALSE(ksic_section_for_division(9).has_value());
    CHECK_FALSE(ksic_section_for_division(100).has_value());
    CHECK_FALSE(ksic_section_for_division(0).has_value());
}

TEST_CASE("depth and level access") {
    CHECK(hs(nullptr, nullptr, nullptr).depth() == 0);
    CHECK(hs("20", nullptr, nullptr).depth() == 1);
    CHECK(hs("20", "2009", nullptr).depth() == 2);
    CHECK(hs("20", "2009", "200990").depth() == 3);
    auto c = hs("20", "2009", "200990");
    CHECK(c.at_level(1) == "20");
    CHECK(c.at_level(3) == "200990");
    CHECK_THROWS_AS(c.at_level(0), DomainError);
    CHECK_THROWS_AS(c.at_level(4), DomainError);
}

TEST_CASE("hs structural validation") {
    CHECK(hs("20", "2009", "200990").is_structurally_valid());
    CHECK(hs("20", "2009", nullptr).is_structurally_valid());
    CHECK(hs(nullptr, nullptr, nullptr).is_structurally_valid());
    // level gaps
    CHECK_FALSE(hs(nullptr, "2009", "200990").is_structurally_valid());
    CHECK_FALSE(hs("20", nullptr, "200990").is_structurally_valid());
    // prefix violations
    CHECK_FALSE(hs("20", "1101", "110100").is_structurally_valid());
    CHECK_FALSE(hs("20", "2009", "200811").is_structurally_valid());
    // malformed widths
    CHECK_FALSE(hs("2", "2009", "200990").is_structurally_valid());
    CHECK_FALSE(hs("20", "200", "200990").is_structurally_valid());
    CHECK_FALSE(hs("20", "2009", "20099").is_structurally_valid());
    CHECK_FALSE(hs("2a", "2a09", "2a0990").is_structurally_valid());
}

TEST_CASE("ksic structural validation") {
    CHECK(ksic("I", "56", "561").is_structurally_valid());
    CHECK(ksic("C", "10", "107").is_structurally_valid());
    CHECK(ksic("C", "10", nullptr).is_structurally_valid());
    // division outside the section's range
    CHECK_FALSE(ksic("A", "56", "561").is_structurally_valid());
    CHECK_FALSE(ksic("I", "10", "107").is_structurally_valid());
    // group remains tied to the division by prefix
    CHECK_FALSE(ksic("I", "56", "571").is_structurally_valid());
    // malformed values
    CHECK_FALSE(ksic("X", "99", "990").is_structurally_valid());
    CHECK_FALSE(ksic("i", "56", "561").is_structurally_valid());
    CHECK_FALSE(ksic("I", "5", "561").is_structurally_valid());
    CHECK_FALSE(ksic("I", "56", "56").is_structurally_valid());
}

TEST_CASE("result shape rules per validation type") {
    StandardizationResult r;
    r.kind = CodeKind::HS;
    r.raw = "APPLE JUICE";
    r.code = hs("20", "2009", "200990");
    r.validation = ValidationType::Type1;
    r.reason = "ok";
    CHECK_NOTHROW(r.validate());

    SUBCASE("type1 needs full depth") {
        r.code = hs("20", "2009", nullptr);
        CHECK_THROWS_AS(r.validate(), DomainError);
    }
    SUBCASE("type2 needs a partial code") {
        r.validation = ValidationType::Type2;
        r.code = hs("20", "2009", nullptr);
        CHECK_NOTHROW(r.validate());
        r.code = hs("20", "2009", "200990");
        CHECK_THROWS_AS(r.validate(), DomainError);
        r.code = hs(nullptr, nullptr, nullptr);
        CHECK_THROWS_AS(r.validate(), DomainError);
    }
    SUBCASE("type3 needs an empty code") {
        r.validation = ValidationType::Type3;
        r.code = hs(nullptr, nullptr, nullptr);
        CHECK_NOTHROW(r.validate());
        r.code = hs("20", nullptr, nullptr);
        CHECK_THROWS_AS(r.validate(), DomainError);
    }
    SUBCASE("reason must be present") {
        r.reason.clear();
        CHECK_THROWS_AS(r.validate(), DomainError);
    }
    SUBCASE("code kind must match result kind") {
        r.code.kind = CodeKind::KSIC;
        CHECK_THROWS_AS(r.validate(), DomainError);
    }
}
