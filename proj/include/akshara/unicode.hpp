#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace akshara::uni {

// One decoded scalar value with its byte span in the source string.
struct Scalar {
    char32_t cp;
    std::size_t begin;
    std::size_t end;
};

// Decodes UTF-8; invalid bytes are mapped to U+FFFD one byte at a time so
// that byte spans always partition the input.
std::vector<Scalar> decode_utf8(std::string_view text);

std::string encode_utf8(char32_t cp);
std::string encode_utf8(std::u32string_view cps);
std::u32string decode_utf8_scalars(std::string_view text);

// Devanagari block classification (U+0900..U+097F).
bool is_devanagari(char32_t cp);
bool is_consonant(char32_t cp);
bool is_independent_vowel(char32_t cp);
bool is_vowel_sign(char32_t cp);
bool is_final_sign(char32_t cp);  // candrabindu, anusvara, visarga
bool is_devanagari_digit(char32_t cp);
bool is_joiner(char32_t cp);  // ZWJ / ZWNJ

constexpr char32_t kVirama = U'्';
constexpr char32_t kNukta = U'़';

bool is_whitespace(char32_t cp);
bool is_ascii_digit(char32_t cp);
bool is_punctuation(char32_t cp);

// Canonical decomposition of the precomposed nukta consonants
// (U+0929, U+0931, U+0934, U+0958..U+095F -> base + U+093C), the only
// normalization relevant inside the Devanagari block. Optional pre-pass.
std::u32string decompose_nukta(std::u32string_view cps);
std::string decompose_nukta_utf8(std::string_view text);

}  // namespace akshara::uni
