#include "akshara/approximator.hpp"

#include <stdexcept>

#include "akshara/unicode.hpp"

namespace akshara {

ApproximatedText approximate(std::string_view text, const std::set<Letter>& keep,
                             char32_t placeholder) {
    if (uni::is_devanagari(placeholder))
        throw std::invalid_argument("approximate: placeholder must not be Devanagari");
    ApproximatedText out;
    const auto seg = segment(text);
    const std::string box = uni::encode_utf8(placeholder);
    for (const auto& tok : seg.tokens) {
        if (tok.kind == Token::Kind::letter && !keep.count(tok.letter)) {
            out.text += box;
            ++out.replaced;
        } else {
            out.text.append(text.substr(tok.begin, tok.end - tok.begin));
            if (tok.kind == Token::Kind::letter) ++out.kept;
        }
    }
    return out;
}

double replaced_fraction(const ApproximatedText& result) {
    const auto total = result.replaced + result.kept;
    if (total == 0)
        throw std::invalid_argument("replaced_fraction: source had no letters");
    return static_cast<double>(result.replaced) / static_cast<double>(total);
}

}  // namespace akshara
