#include <algorithm>
#include <string>
#include <vector>

#include <doctest.h>

#include "dwellsim/backend.hpp"

using namespace dwellsim;

TEST_CASE("mock classifies known cargo keywords to full codes") {
    MockBackend mock;
    auto r = mock.standardize_raw("FRESH JUICE 20FCL", CodeKind::HS);
    CHECK(r.validation == ValidationType::Type1);
    CHECK(r.code.lv1 == "20");
    CHECK(r.code.lv2 == "2009");
    CHECK(r.code.lv3 == "200990");
    CHECK(r.raw == "FRESH JUICE 20FCL");
    CHECK_FALSE(r.reason.empty());
    CHECK(std::find(r.evidence_tokens.begin(), r.evidence_tokens.end(), "JUICE") !=
          r.evidence_tokens.end());
    CHECK_NOTHROW(r.validate());
}

TEST_CASE("first keyword in token order decides the code") {
    MockBackend mock;
    auto r = mock.standardize_raw("ORANGE JUICE 500ML", CodeKind::HS);
    CHECK(r.code.lv3 == "200911");  // ORANGE precedes JUICE
    CHECK(r.evidence_tokens == std::vector<std::string>{"ORANGE", "JUICE"});

    auto rev = mock.standardize_raw("JUICE, ORANGE", CodeKind::HS);
    CHECK(rev.code.lv3 == "200990");
}

TEST_CASE("tokenization is case and punctuation insensitive") {
    MockBackend mock;
    CHECK(mock.standardize_raw("apple-juice(frozen)", CodeKind::HS).code.lv3 == "080810");
    CHECK(mock.standardize_raw("Steel;Pipe", CodeKind::HS).code.lv3 == "720838");
    // but keys differ byte-wise, so raw is preserved as given
    CHECK(mock.standardize_raw("apple-juice(frozen)", CodeKind::HS).raw ==
          "apple-juice(frozen)");
}

TEST_CASE("generic cargo terms give a partial code and an insufficiency verdict") {
    MockBackend mock;
    auto r = mock.standardize_raw("TUBE", CodeKind::HS);
    CHECK(r.validation == ValidationType::Type2);
    CHECK(r.code.lv1 == "73");
    CHECK(r.code.lv2 == "7304");
    CHECK_FALSE(r.code.lv3.has_value());
    CHECK(r.reason.find("lacks specific attributes") != std::string::npos);
    CHECK_NOTHROW(r.validate());
}

TEST_CASE("unknown cargo text is unclassifiable") {
    MockBackend mock;
    auto r = mock.standardize_raw("ZZZZZ", CodeKind::HS);
    CHECK(r.validation == ValidationType::Type3);
    CHECK(r.code.depth() == 0);
    CHECK(r.evidence_tokens.empty());
    CHECK_FALSE(r.reason.empty());
    CHECK_NOTHROW(r.validate());
    CHECK(mock.standardize_raw("QX7-119", CodeKind::HS).validation == ValidationType::Type3);
}

TEST_CASE("mock classifies known owners with size") {
    MockBackend mock;
    auto r = mock.standardize_raw("BOSUNG RESTAURANT CO LTD", CodeKind::KSIC);
    CHECK(r.validation == ValidationType::Type1);
    CHECK(r.code.lv1 == "I");
    CHECK(r.code.lv2 == "56");
    CHECK(r.code.lv3 == "561");
    CHECK(r.owner_size == OwnerSize::SME);
    CHECK_NOTHROW(r.validate());
}

TEST_CASE("known owner wins over generic terms anywhere in the name") {
    MockBackend mock;
    auto r = mock.standardize_raw("GLOBAL SEORIM LOGISTICS", CodeKind::KSIC);
    CHECK(r.validation == ValidationType::Type1);
    CHECK(r.code.lv3 == "521");  // SEORIM's group, despite GLOBAL appearing first
    CHECK(r.owner_size == OwnerSize::Large);
}

TEST_CASE("generic owner terms give a partial division") {
    MockBackend mock;
    auto r = mock.standardize_raw("GLOBAL TRADING", CodeKind::KSIC);
    CHECK(r.validation == ValidationType::Type2);
    CHECK(r.code.lv1 == "H");  // GLOBAL is the first generic token
    CHECK(r.code.lv2 == "52");
    CHECK_FALSE(r.code.lv3.has_value());
    CHECK(r.owner_size == OwnerSize::Unknown);

    auto anon = mock.standardize_raw("Company-4", CodeKind::KSIC);
    CHECK(anon.validation == ValidationType::Type2);
    CHECK(anon.code.lv1 == "G");
}

TEST_CASE("every full-table keyword yields a hierarchy-sound Type1 result") {
    MockBackend mock;
    const auto& table = ClassificationTable::builtin();
    for (const auto& kw : data::kCiKeywords) {
        auto r = mock.standardize_raw(std::string(kw.token), CodeKind::HS);
        REQUIRE(r.validation == ValidationType::Type1);
        CHECK(r.code.lv3 == std::string(kw.hs6));
        CHECK(validate_hierarchy(table, r).all_matched());
        CHECK_NOTHROW(r.validate());
    }
    for (const auto& kw : data::kOiKeywords) {
        auto r = mock.standardize_raw(std::string(kw.token), CodeKind::KSIC);
        REQUIRE(r.validation == ValidationType::Type1);
        CHECK(r.code.lv3 == std::string(kw.group3));
        CHECK(validate_hierarchy(table, r).all_matched());
        CHECK_NOTHROW(r.validate());
    }
}

TEST_CASE("mock output is a pure function of the raw text") {
    MockBackend mock;
    std::string prompt = build_prompt("FROZEN SHRIMP 10T", CodeKind::HS);
    CHECK(mock.complete(prompt) == mock.complete(prompt));
    MockBackend other;
    CHECK(mock.complete(prompt) == other.complete(prompt));
}

TEST_CASE("complete() round trips through the payload protocol") {
    MockBackend mock;
    std::string raw = "MILK POWDER 25KG BAGS";
    std::string prompt = build_prompt(raw, CodeKind::HS);
    auto r = parse_result(mock.complete(prompt), CodeKind::HS, raw);
    CHECK(r == mock.standardize_raw(raw, CodeKind::HS));

    std::string oi_raw = "DAEHAN STEEL WORKS";
    auto o = parse_result(mock.complete(build_prompt(oi_raw, CodeKind::KSIC)), CodeKind::KSIC,
                          oi_raw);
    CHECK(o == mock.standardize_raw(oi_raw, CodeKind::KSIC));

    CHECK_THROWS_AS(mock.complete("free-form text, not a prompt"), SchemaError);
}

TEST_CASE("noisy wrapper at zero flip probability equals the mock") {
    MockBackend mock;
    NoisyMockBackend noisy(0.0, 7);
    for (const char* raw : {"JUICE", "TUBE", "ZZZZZ", "BEARING HOUSINGS"}) {
        CHECK(noisy.standardize_raw(raw, CodeKind::HS) ==
              mock.standardize_raw(raw, CodeKind::HS));
    }
}

TEST_CASE("noisy wrapper flips only the deepest level, to a table sibling") {
    const auto& table = ClassificationTable::builtin();
    MockBackend mock;
    NoisyMockBackend noisy(1.0, 123);
    auto base = mock.standardize_raw("JUICE", CodeKind::HS);
    int flipped = 0;
    for (int i = 0; i < 50; ++i) {
        auto r = noisy.standardize_raw("JUICE", CodeKind::HS);
        CHECK(r.code.lv1 == base.code.lv1);
        CHECK(r.code.lv2 == base.code.lv2);
        CHECK(validate_hierarchy(table, r).all_matched());
        if (r.code.lv3 != base.code.lv3) {
            ++flipped;
        }
    }
    CHECK(flipped == 50);  // five siblings exist, so a flip always changes lv3

    // Type2/Type3 results pass through untouched.
    CHECK(noisy.standardize_raw("TUBE", CodeKind::HS) ==
          mock.standardize_raw("TUBE", CodeKind::HS));
    CHECK(noisy.standardize_raw("ZZZZZ", CodeKind::HS) ==
          mock.standardize_raw("ZZZZZ", CodeKind::HS));
}

TEST_CASE("noisy wrapper without siblings keeps the code") {
    NoisyMockBackend noisy(1.0, 5);
    // FLOUR maps to 110100, the only subheading under 1101.
    auto r = noisy.standardize_raw("FLOUR", CodeKind::HS);
    CHECK(r.code.lv3 == "110100");
}

TEST_CASE("noisy wrapper is deterministic per seed") {
    NoisyMockBackend a(0.5, 99), b(0.5, 99), c(0.5, 100);
    bool any_diff = false;
    for (int i = 0; i < 40; ++i) {
        auto ra = a.standardize_raw("JUICE", CodeKind::HS);
        auto rb = b.standardize_raw("JUICE", CodeKind::HS);
        auto rc = c.standardize_raw("JUICE", CodeKind::HS);
        CHECK(ra == rb);
        if (!(ra == rc)) {
            any_diff = true;
        }
    }
    CHECK(any_diff);
}

TEST_CASE("flip probability is validated") {
    CHECK_THROWS_AS(NoisyMockBackend(-0.1, 1), ConfigError);
    CHECK_THROWS_AS(NoisyMockBackend(1.5, 1), ConfigError);
}
