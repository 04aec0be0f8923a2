#include "akshara/segmenter.hpp"

#include "akshara/unicode.hpp"

namespace akshara {

namespace {

using uni::Scalar;

bool starts_letter(char32_t cp) {
    return uni::is_consonant(cp) || uni::is_independent_vowel(cp);
}

bool is_stray_mark(char32_t cp) {
    // Devanagari combining marks encountered with no base in front of them.
    return uni::is_vowel_sign(cp) || uni::is_final_sign(cp) ||
           cp == uni::kVirama || cp == uni::kNukta || cp == 0x0900 ||
           (cp >= 0x0951 && cp <= 0x0954);
}

SeparatorClass classify_separator(char32_t cp) {
    if (uni::is_whitespace(cp)) return SeparatorClass::whitespace;
    if (uni::is_ascii_digit(cp) || uni::is_devanagari_digit(cp))
        return SeparatorClass::digit;
    if (uni::is_punctuation(cp)) return SeparatorClass::punctuation;
    return SeparatorClass::foreign;
}

struct Cursor {
    const std::vector<Scalar>& s;
    std::size_t i = 0;

    bool done() const { return i >= s.size(); }
    char32_t cp() const { return s[i].cp; }
};

}  // namespace

std::string Letter::text() const { return uni::encode_utf8(codepoints); }

Segmentation segment(std::string_view text) {
    Segmentation out;
    const auto scalars = uni::decode_utf8(text);
    Cursor c{scalars};

    auto skip_joiners = [&](std::size_t& end) {
        while (!c.done() && uni::is_joiner(c.cp())) {
            end = c.s[c.i].end;
            ++c.i;
        }
    };

    while (!c.done()) {
        const char32_t cp = c.cp();
        if (starts_letter(cp)) {
            Token tok;
            tok.kind = Token::Kind::letter;
            tok.begin = c.s[c.i].begin;
            std::size_t end = c.s[c.i].end;
            std::u32string& cps = tok.letter.codepoints;

            if (uni::is_independent_vowel(cp)) {
                cps += cp;
                ++c.i;
                skip_joiners(end);
            } else {
                // Consonant cluster: C (nukta?) (virama C (nukta?))* with an
                // optional trailing virama, then an optional vowel sign.
                bool cluster_open = true;
                bool trailing_virama = false;
                while (cluster_open) {
                    cps += c.cp();
                    end = c.s[c.i].end;
                    ++c.i;
                    skip_joiners(end);
                    if (!c.done() && c.cp() == uni::kNukta) {
                        cps += uni::kNukta;
                        end = c.s[c.i].end;
                        ++c.i;
                        skip_joiners(end);
                    }
                    if (!c.done() && c.cp() == uni::kVirama) {
                        cps += uni::kVirama;
                        end = c.s[c.i].end;
                        ++c.i;
                        skip_joiners(end);
                        if (c.done() || !uni::is_consonant(c.cp())) {
                            cluster_open = false;
                            trailing_virama = true;
                        }
                    } else {
                        cluster_open = false;
                    }
                }
                if (!trailing_virama && !c.done() && uni::is_vowel_sign(c.cp())) {
                    cps += c.cp();
                    end = c.s[c.i].end;
                    ++c.i;
                    skip_joiners(end);
                }
            }
            while (!c.done() && uni::is_final_sign(c.cp())) {
                cps += c.cp();
                end = c.s[c.i].end;
                ++c.i;
            }
            tok.end = end;
            out.tokens.push_back(std::move(tok));
        } else {
            // Separator: merge a run of characters of the same class.
            Token tok;
            tok.kind = Token::Kind::separator;
            tok.sep_class = classify_separator(cp);
            tok.begin = c.s[c.i].begin;
            std::size_t end = c.s[c.i].end;
            while (true) {
                if (is_stray_mark(c.cp())) ++out.orphan_marks;
                end = c.s[c.i].end;
                ++c.i;
                if (c.done() || starts_letter(c.cp()) ||
                    classify_separator(c.cp()) != tok.sep_class) {
                    break;
                }
            }
            tok.end = end;
            out.tokens.push_back(std::move(tok));
        }
    }
    return out;
}

std::vector<Letter> letters_of(const Segmentation& seg) {
    std::vector<Letter> out;
    out.reserve(seg.tokens.size());
    for (const auto& t : seg.tokens) {
        if (t.kind == Token::Kind::letter) out.push_back(t.letter);
    }
    return out;
}

std::vector<Word> words_of(const Segmentation& seg) {
    std::vector<Word> out;
    Word current;
    for (const auto& t : seg.tokens) {
        if (t.kind == Token::Kind::letter) {
            current.push_back(t.letter);
        } else if (!current.empty()) {
            out.push_back(std::move(current));
            current.clear();
        }
    }
    if (!current.empty()) out.push_back(std::move(current));
    return out;
}

}  // namespace akshara
