#include "akshara/approximator.hpp"

#include "doctest.h"

using namespace akshara;

namespace {

Letter L(std::u32string cps) { return Letter{std::move(cps)}; }

}  // namespace

TEST_CASE("letters in the keep set pass through verbatim") {
    const auto out = approximate("तर", {L(U"त"), L(U"र")});
    CHECK(out.text == "तर");
    CHECK(out.replaced == 0);
    CHECK(out.kept == 2);
    CHECK(replaced_fraction(out) == 0.0);
}

TEST_CASE("letters outside the keep set become one placeholder each") {
    const auto out = approximate("तर", {L(U"त")});
    CHECK(out.text == "त□");
    CHECK(out.replaced == 1);
    CHECK(out.kept == 1);
}

TEST_CASE("empty keep set replaces everything") {
    const auto out = approximate("तर सं", {});
    CHECK(out.text == "□□ □");
    CHECK(replaced_fraction(out) == 1.0);
}

TEST_CASE("separators and digits survive untouched") {
    const auto out = approximate("त. र 12 abc", {L(U"त")});
    CHECK(out.text == "त. □ 12 abc");
}

TEST_CASE("replaced_fraction requires at least one letter") {
    const auto out = approximate("...", {});
    CHECK_THROWS(replaced_fraction(out));
}

TEST_CASE("placeholder must not be Devanagari") {
    CHECK_THROWS(approximate("त", {}, U'क'));
}

TEST_CASE("approximation is monotone in the keep set") {
    const std::string text = "च्या तर असं विद्वान् कां";
    const std::set<Letter> small = {L(U"त"), L(U"र")};
    std::set<Letter> big = small;
    big.insert(L(U"कां"));
    big.insert(L(std::u32string{0x091A, 0x094D, 0x092F, 0x093E}));
    CHECK(approximate(text, small).replaced >= approximate(text, big).replaced);
}

TEST_CASE("approximation is idempotent") {
    const std::string text = "च्या तर असं";
    const std::set<Letter> keep = {L(U"त"), L(U"र")};
    const auto once = approximate(text, keep);
    const auto twice = approximate(once.text, keep);
    CHECK(twice.text == once.text);
    CHECK(twice.replaced == 0);
}

TEST_CASE("letter count is preserved counting placeholders") {
    const std::string text = "च्या तर असं";
    const auto total = letters_of(segment(text)).size();
    const auto out = approximate(text, {L(U"त")});
    CHECK(out.replaced + out.kept == total);
    // every placeholder is a separator in the output, letters survive as letters
    const auto out_letters = letters_of(segment(out.text)).size();
    CHECK(out_letters == out.kept);
}
