#include "akshara/segmenter.hpp"

#include <random>
#include <string>
#include <vector>

#include "akshara/unicode.hpp"
#include "doctest.h"

using namespace akshara;

namespace {

std::string roundtrip(std::string_view text) {
    std::string out;
    const auto seg = segment(text);
    for (const auto& t : seg.tokens) {
        out.append(text.substr(t.begin, t.end - t.begin));
    }
    return out;
}

std::vector<std::u32string> letter_codepoints(std::string_view text) {
    std::vector<std::u32string> out;
    for (const auto& l : letters_of(segment(text))) out.push_back(l.codepoints);
    return out;
}

}  // namespace

TEST_CASE("conjunct with vowel sign is one letter") {
    const auto letters = letter_codepoints("च्या");
    REQUIRE(letters.size() == 1);
    CHECK(letters[0] == std::u32string{0x091A, 0x094D, 0x092F, 0x093E});
}

TEST_CASE("empty input gives empty token sequence") {
    CHECK(segment("").tokens.empty());
}

TEST_CASE("vowel sign plus anusvara stays attached") {
    const auto letters = letter_codepoints("कां");
    REQUIRE(letters.size() == 1);
    CHECK(letters[0] == std::u32string{0x0915, 0x093E, 0x0902});
}

TEST_CASE("word-final halant terminates the letter with a trailing virama") {
    const auto letters = letter_codepoints("त्");
    REQUIRE(letters.size() == 1);
    CHECK(letters[0] == std::u32string{0x0924, 0x094D});
}

TEST_CASE("mixed text splits into letters and separators") {
    const auto seg = segment("तर सं.");
    REQUIRE(seg.tokens.size() == 5);
    CHECK(seg.tokens[0].kind == Token::Kind::letter);
    CHECK(seg.tokens[0].letter.codepoints == std::u32string{0x0924});
    CHECK(seg.tokens[1].letter.codepoints == std::u32string{0x0930});
    CHECK(seg.tokens[2].kind == Token::Kind::separator);
    CHECK(seg.tokens[2].sep_class == SeparatorClass::whitespace);
    CHECK(seg.tokens[3].letter.codepoints == std::u32string{0x0938, 0x0902});
    CHECK(seg.tokens[4].sep_class == SeparatorClass::punctuation);
}

TEST_CASE("stray combining sign is a foreign separator and is tallied") {
    const auto seg = segment("ात");
    REQUIRE(seg.tokens.size() == 2);
    CHECK(seg.tokens[0].kind == Token::Kind::separator);
    CHECK(seg.tokens[0].sep_class == SeparatorClass::foreign);
    CHECK(seg.orphan_marks == 1);
    CHECK(seg.tokens[1].kind == Token::Kind::letter);
}

TEST_CASE("digits and foreign script become separators") {
    const auto seg = segment("त12३abc");
    std::size_t letters = 0, digits = 0, foreign = 0;
    for (const auto& t : seg.tokens) {
        if (t.kind == Token::Kind::letter) ++letters;
        else if (t.sep_class == SeparatorClass::digit) ++digits;
        else if (t.sep_class == SeparatorClass::foreign) ++foreign;
    }
    CHECK(letters == 1);
    CHECK(digits == 1);  // merged run, including the Devanagari digit
    CHECK(foreign == 1);
}

TEST_CASE("joiners are consumed but dropped from canonical codepoints") {
    // virama + ZWJ + consonant continues the cluster (eyelash-ra style)
    const std::string with_zwj =
        uni::encode_utf8(std::u32string{0x0930, 0x094D, 0x200D, 0x092F, 0x093E});
    const auto letters = letter_codepoints(with_zwj);
    REQUIRE(letters.size() == 1);
    CHECK(letters[0] == std::u32string{0x0930, 0x094D, 0x092F, 0x093E});
    CHECK(roundtrip(with_zwj) == with_zwj);
}

TEST_CASE("letters_of drops separators") {
    CHECK(letter_codepoints("तर") == std::vector<std::u32string>{{0x0924}, {0x0930}});
    CHECK(letter_codepoints("").empty());
    CHECK(letter_codepoints("त. र") ==
          std::vector<std::u32string>{{0x0924}, {0x0930}});
}

TEST_CASE("words_of groups maximal letter runs") {
    const auto words = words_of(segment("तर सं"));
    REQUIRE(words.size() == 2);
    CHECK(words[0].size() == 2);
    CHECK(words[1].size() == 1);

    CHECK(words_of(segment("")).empty());
    CHECK(words_of(segment("...!!")).empty());
}

TEST_CASE("round trip is lossless on random mixed-script input") {
    std::mt19937 rng(20240817);
    const std::vector<char32_t> pool = {
        U'त', U'र', 0x094D, 0x093E, 0x0902, U'क', U' ', U'.', U'1', 0x0966,
        U'a', U'Z', 0x200D, 0x200C, 0x093C, 0x0903, U'अ', 0x45E, U'\n', 0x4E2D};
    for (int iter = 0; iter < 500; ++iter) {
        std::string text;
        const int len = static_cast<int>(rng() % 40);
        for (int i = 0; i < len; ++i) {
            text += uni::encode_utf8(pool[rng() % pool.size()]);
        }
        CAPTURE(text);
        REQUIRE(roundtrip(text) == text);
    }
}

TEST_CASE("segmenting a produced letter's text is idempotent") {
    const auto seg = segment("त्यांwestप्रमाणे विद्वान् असं");
    for (const auto& letter : letters_of(seg)) {
        const auto again = letter_codepoints(letter.text());
        REQUIRE(again.size() == 1);
        CHECK(again[0] == letter.codepoints);
    }
}

TEST_CASE("letter count is conserved across separator splits") {
    const std::string a = "त्यांप्रमाणे";
    const std::string b = "विद्वान्";
    const auto na = letters_of(segment(a)).size();
    const auto nb = letters_of(segment(b)).size();
    for (const std::string sep : {" ", ".", "7", "x"}) {
        CHECK(letters_of(segment(a + sep + b)).size() == na + nb);
    }
}
