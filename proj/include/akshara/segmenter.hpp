#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace akshara {

// One orthographic letter (akshara): an independent vowel or a virama-joined
// consonant cluster, with optional vowel sign and final modifiers. Joiners
// (ZWJ/ZWNJ) present in the source are not part of the canonical codepoints.
struct Letter {
    std::u32string codepoints;

    std::string text() const;
    auto operator<=>(const Letter&) const = default;
};

enum class SeparatorClass { whitespace, punctuation, digit, foreign };

struct Token {
    enum class Kind { letter, separator };

    Kind kind;
    Letter letter;             // valid when kind == letter
    SeparatorClass sep_class;  // valid when kind == separator
    std::size_t begin = 0;     // byte span into the source text
    std::size_t end = 0;
};

struct Segmentation {
    std::vector<Token> tokens;
    std::size_t orphan_marks = 0;  // stray combining signs with no base
};

// Lossless tokenization: token spans partition the input. Never throws on
// malformed input; stray combining marks become foreign separators and are
// tallied in orphan_marks.
Segmentation segment(std::string_view text);

std::vector<Letter> letters_of(const Segmentation& seg);

using Word = std::vector<Letter>;

// Maximal runs of consecutive letter tokens.
std::vector<Word> words_of(const Segmentation& seg);

}  // namespace akshara
