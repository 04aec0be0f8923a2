#include "akshara/unicode.hpp"

namespace akshara::uni {

std::vector<Scalar> decode_utf8(std::string_view text) {
    std::vector<Scalar> out;
    out.reserve(text.size());
    std::size_t i = 0;
    const auto n = text.size();
    while (i < n) {
        const auto b0 = static_cast<unsigned char>(text[i]);
        std::size_t len = 0;
        char32_t cp = 0;
        if (b0 < 0x80) {
            len = 1;
            cp = b0;
        } else if ((b0 & 0xE0) == 0xC0) {
            len = 2;
            cp = b0 & 0x1F;
        } else if ((b0 & 0xF0) == 0xE0) {
            len = 3;
            cp = b0 & 0x0F;
        } else if ((b0 & 0xF8) == 0xF0) {
            len = 4;
            cp = b0 & 0x07;
        }
        bool ok = len > 0 && i + len <= n;
        if (ok) {
            for (std::size_t j = 1; j < len; ++j) {
                const auto b = static_cast<unsigned char>(text[i + j]);
                if ((b & 0xC0) != 0x80) {
                    ok = false;
                    break;
                }
                cp = (cp << 6) | (b & 0x3F);
            }
        }
        if (ok && len == 2 && cp < 0x80) ok = false;
        if (ok && len == 3 && cp < 0x800) ok = false;
        if (ok && len == 4 && (cp < 0x10000 || cp > 0x10FFFF)) ok = false;
        if (ok && cp >= 0xD800 && cp <= 0xDFFF) ok = false;
        if (!ok) {
            len = 1;
            cp = 0xFFFD;
        }
        out.push_back({cp, i, i + len});
        i += len;
    }
    return out;
}

std::string encode_utf8(char32_t cp) {
    std::string s;
    if (cp < 0x80) {
        s += static_cast<char>(cp);
    } else if (cp < 0x800) {
        s += static_cast<char>(0xC0 | (cp >> 6));
        s += static_cast<char>(0x80 | (cp & 0x3F));
    } else if (cp < 0x10000) {
        s += static_cast<char>(0xE0 | (cp >> 12));
        s += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
        s += static_cast<char>(0x80 | (cp & 0x3F));
    } else {
        s += static_cast<char>(0xF0 | (cp >> 18));
        s += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
        s += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
        s += static_cast<char>(0x80 | (cp & 0x3F));
    }
    return s;
}

std::string encode_utf8(std::u32string_view cps) {
    std::string s;
    for (char32_t cp : cps) s += encode_utf8(cp);
    return s;
}

std::u32string decode_utf8_scalars(std::string_view text) {
    std::u32string out;
    for (const auto& sc : decode_utf8(text)) out += sc.cp;
    return out;
}

bool is_devanagari(char32_t cp) { return cp >= 0x0900 && cp <= 0x097F; }

bool is_consonant(char32_t cp) {
    return (cp >= 0x0915 && cp <= 0x0939) || (cp >= 0x0958 && cp <= 0x095F) ||
           (cp >= 0x0979 && cp <= 0x097F);
}

bool is_independent_vowel(char32_t cp) {
    return (cp >= 0x0904 && cp <= 0x0914) || cp == 0x0960 || cp == 0x0961 ||
           cp == 0x0972;
}

bool is_vowel_sign(char32_t cp) {
    // Nukta (U+093C) and avagraha (U+093D) are handled separately.
    return cp == 0x093A || cp == 0x093B || (cp >= 0x093E && cp <= 0x094C) ||
           (cp >= 0x0955 && cp <= 0x0957) || cp == 0x0962 || cp == 0x0963;
}

bool is_final_sign(char32_t cp) { return cp >= 0x0901 && cp <= 0x0903; }

bool is_devanagari_digit(char32_t cp) { return cp >= 0x0966 && cp <= 0x096F; }

bool is_joiner(char32_t cp) { return cp == 0x200C || cp == 0x200D; }

bool is_whitespace(char32_t cp) {
    switch (cp) {
        case U' ':
        case U'\t':
        case U'\n':
        case U'\r':
        case 0x0B:
        case 0x0C:
        case 0x85:
        case 0xA0:
        case 0x1680:
        case 0x2028:
        case 0x2029:
        case 0x202F:
        case 0x205F:
        case 0x3000:
            return true;
        default:
            return (cp >= 0x2000 && cp <= 0x200B);
    }
}

bool is_ascii_digit(char32_t cp) { return cp >= U'0' && cp <= U'9'; }

bool is_punctuation(char32_t cp) {
    if (cp < 0x80) {
        return (cp >= 0x21 && cp <= 0x2F) || (cp >= 0x3A && cp <= 0x40) ||
               (cp >= 0x5B && cp <= 0x60) || (cp >= 0x7B && cp <= 0x7E);
    }
    // Devanagari signs outside the letter model: danda, double danda,
    // abbreviation sign, OM and variants, avagraha.
    switch (cp) {
        case 0x0964:
        case 0x0965:
        case 0x0970:
        case 0x0971:
        case 0x0950:
        case 0x093D:
            return true;
        default:
            break;
    }
    // General punctuation (dashes, quotes, ellipsis).
    return (cp >= 0x2010 && cp <= 0x2027) || (cp >= 0x2030 && cp <= 0x205E);
}

std::u32string decompose_nukta(std::u32string_view cps) {
    std::u32string out;
    out.reserve(cps.size());
    for (char32_t cp : cps) {
        char32_t base = 0;
        switch (cp) {
            case 0x0929: base = 0x0928; break;
            case 0x0931: base = 0x0930; break;
            case 0x0934: base = 0x0933; break;
            case 0x0958: base = 0x0915; break;
            case 0x0959: base = 0x0916; break;
            case 0x095A: base = 0x0917; break;
            case 0x095B: base = 0x091C; break;
            case 0x095C: base = 0x0921; break;
            case 0x095D: base = 0x0922; break;
            case 0x095E: base = 0x092B; break;
            case 0x095F: base = 0x092F; break;
            default: break;
        }
        if (base != 0) {
            out += base;
            out += kNukta;
        } else {
            out += cp;
        }
    }
    return out;
}

std::string decompose_nukta_utf8(std::string_view text) {
    return encode_utf8(decompose_nukta(decode_utf8_scalars(text)));
}

}  // namespace akshara::uni
