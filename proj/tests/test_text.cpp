#include "pasta/text.hpp"

#include <doctest.h>

using namespace pasta;

TEST_CASE("normalize lowercases and collapses whitespace") {
    CHECK(normalize_text("  Night  MOVES ") == "night moves");
    CHECK(normalize_text("a\tb\nc") == "a b c");
    CHECK(normalize_text("") == "");
    CHECK(normalize_text("   ") == "");
}

TEST_CASE("normalize handles unicode spaces and latin letters") {
    // NBSP and EN SPACE collapse like ASCII blanks
    CHECK(normalize_text("a\xC2\xA0 b") == "a b");
    CHECK(normalize_text("a\xE2\x80\x83z") == "a z");
    // precomposed uppercase É lowers to é
    CHECK(normalize_text("Caf\xC3\x89") == "caf\xC3\xA9");
    // decomposed e + COMBINING ACUTE composes to é
    CHECK(normalize_text("Cafe\xCC\x81") == "caf\xC3\xA9");
    // Ś (U+015A) lowers to ś (U+015B)
    CHECK(normalize_text("\xC5\x9Al\xC4\x85sk") == "\xC5\x9Bl\xC4\x85sk");
}

TEST_CASE("tokenize splits on whitespace and punctuation") {
    const auto toks = tokenize("The Palazzo's floors, right?");
    CHECK(toks == std::vector<std::string>{"the", "palazzo", "s", "floors",
                                           "right"});
    CHECK(tokenize("2 - 4") == std::vector<std::string>{"2", "4"});
    CHECK(tokenize("").empty());
}

TEST_CASE("stopword list is the fixed 50-word set") {
    CHECK(stopwords().size() == 50);
    CHECK(is_stopword("the"));
    CHECK(is_stopword("has"));
    CHECK(is_stopword("is"));
    CHECK_FALSE(is_stopword("more"));
    CHECK_FALSE(is_stopword("than"));
    CHECK_FALSE(is_stopword("palazzo"));
}

TEST_CASE("content tokens drop stopwords and dedupe") {
    const auto toks =
        content_token_set("the palazzo has more floors than the palazzo");
    CHECK(toks == std::vector<std::string>{"palazzo", "more", "floors",
                                           "than"});
}

TEST_CASE("whitespace token count") {
    CHECK(whitespace_token_count("134.7") == 1);
    CHECK(whitespace_token_count("las vegas hilton") == 3);
    CHECK(whitespace_token_count("") == 0);
    CHECK(whitespace_token_count("  a  b ") == 2);
}
