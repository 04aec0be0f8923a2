#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <string_view>

#include "akshara/segmenter.hpp"

namespace akshara {

struct ApproximatedText {
    std::string text;
    std::uint64_t replaced = 0;
    std::uint64_t kept = 0;
};

constexpr char32_t kDefaultPlaceholder = U'□';  // U+25A1 WHITE SQUARE

// Replaces every letter not in `keep` by one placeholder character; letters
// in `keep` and all separators pass through verbatim. Membership is by exact
// canonical codepoint sequence.
ApproximatedText approximate(std::string_view text, const std::set<Letter>& keep,
                             char32_t placeholder = kDefaultPlaceholder);

// replaced / (replaced + kept); the source must have had at least one letter.
double replaced_fraction(const ApproximatedText& result);

}  // namespace akshara
