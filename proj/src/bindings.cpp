#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "akshara/approximator.hpp"
#include "akshara/corpus.hpp"
#include "akshara/entropy.hpp"
#include "akshara/letterstats.hpp"
#include "akshara/segmenter.hpp"
#include "akshara/table_io.hpp"
#include "akshara/unicode.hpp"

namespace py = pybind11;
using namespace akshara;

namespace {

Letter letter_from_str(const std::string& s) {
    return Letter{uni::decode_utf8_scalars(s)};
}

std::set<Letter> letters_from_strs(const std::vector<std::string>& strs) {
    std::set<Letter> out;
    for (const auto& s : strs) out.insert(letter_from_str(s));
    return out;
}

std::vector<std::string> segment_letters(const std::string& text) {
    std::vector<std::string> out;
    for (const auto& l : letters_of(segment(text))) out.push_back(l.text());
    return out;
}

std::vector<std::vector<std::string>> segment_words(const std::string& text) {
    std::vector<std::vector<std::string>> out;
    for (const auto& w : words_of(segment(text))) {
        std::vector<std::string> word;
        for (const auto& l : w) word.push_back(l.text());
        out.push_back(std::move(word));
    }
    return out;
}

py::list segment_tokens(const std::string& text) {
    static const char* sep_names[] = {"whitespace", "punctuation", "digit",
                                      "foreign"};
    py::list out;
    for (const auto& t : segment(text).tokens) {
        py::dict d;
        d["text"] = text.substr(t.begin, t.end - t.begin);
        d["span"] = py::make_tuple(t.begin, t.end);
        if (t.kind == Token::Kind::letter) {
            d["kind"] = "letter";
            d["letter"] = t.letter.text();
            py::list cps;
            for (char32_t cp : t.letter.codepoints) {
                cps.append(static_cast<std::uint32_t>(cp));
            }
            d["codepoints"] = cps;
        } else {
            d["kind"] = "separator";
            d["separator_class"] = sep_names[static_cast<int>(t.sep_class)];
        }
        out.append(d);
    }
    return out;
}

}  // namespace

PYBIND11_MODULE(_akshara, m) {
    m.doc() = "Devanagari letter segmentation, frequency statistics and "
              "k-gram entropy estimation";

    m.def("segment", &segment_tokens, py::arg("text"),
          "Tokenize text into letters and separators (lossless).");
    m.def("letters", &segment_letters, py::arg("text"),
          "The letters of a text, separators dropped.");
    m.def("words", &segment_words, py::arg("text"),
          "Letters grouped into separator-bounded words.");
    m.def("orphan_marks",
          [](const std::string& text) { return segment(text).orphan_marks; },
          py::arg("text"), "Count of stray combining marks in the text.");

    m.def("shannon_entropy",
          [](const std::vector<double>& w) { return shannon_entropy(w); },
          py::arg("weights"), "Entropy in bits of a finite distribution.");
    m.def(
        "conditional_entropy",
        [](const std::vector<std::vector<double>>& joint,
           const std::vector<double>& marginal) {
            return conditional_entropy(JointDistribution{joint}, marginal);
        },
        py::arg("joint"), py::arg("marginal"),
        "H(Y|X) = H(X,Y) - H(X); rows of the joint index X.");
    m.def(
        "block_entropy",
        [](const std::vector<std::uint32_t>& symbols, int k) {
            return block_entropy(symbols, k);
        },
        py::arg("symbols"), py::arg("k"),
        "Entropy of the empirical overlapping k-block distribution.");
    m.def(
        "text_block_entropy",
        [](const std::string& text, int k) {
            const auto letters = letters_of(segment(text));
            std::map<Letter, std::uint32_t> ids;
            std::vector<std::uint32_t> stream;
            for (const auto& l : letters) {
                const auto [it, inserted] =
                    ids.emplace(l, static_cast<std::uint32_t>(ids.size()));
                stream.push_back(it->second);
            }
            return block_entropy(stream, k);
        },
        py::arg("text"), py::arg("k"),
        "E_k of a text's letter stream (separators removed).");

    m.def(
        "approximate",
        [](const std::string& text, const std::vector<std::string>& keep,
           const std::string& placeholder) {
            const auto cps = uni::decode_utf8_scalars(placeholder);
            if (cps.size() != 1)
                throw std::invalid_argument("placeholder must be one character");
            const auto result = approximate(text, letters_from_strs(keep), cps[0]);
            return py::make_tuple(result.text, result.replaced, result.kept);
        },
        py::arg("text"), py::arg("keep"), py::arg("placeholder") = "□",
        "Mask letters outside `keep`; returns (text, replaced, kept).");

    m.def(
        "letter_frequencies",
        [](const std::string& text) {
            const auto letters = letters_of(segment(text));
            const auto table = make_frequency_table(letters);
            std::vector<std::pair<std::string, std::uint64_t>> out;
            for (const auto& l : table.ranking) {
                out.emplace_back(l.text(), table.counts.at(l));
            }
            return out;
        },
        py::arg("text"), "Ranked (letter, count) pairs.");

    py::class_<LetterTable>(m, "LetterTable")
        .def_property_readonly("size",
                               [](const LetterTable& t) { return t.rows.size(); })
        .def_property_readonly("tiers",
                               [](const LetterTable& t) { return t.tiers; })
        .def_property_readonly("warnings",
                               [](const LetterTable& t) { return t.warnings; })
        .def("letters",
             [](const LetterTable& t) {
                 std::vector<std::string> out;
                 for (const auto& row : t.rows) out.push_back(row.letter.text());
                 return out;
             })
        .def("probabilities",
             [](const LetterTable& t) {
                 std::vector<double> out;
                 for (const auto& row : t.rows) out.push_back(row.probability);
                 return out;
             })
        .def("tier_letters", [](const LetterTable& t, double r) {
            std::vector<std::string> out;
            for (const auto& l : tier_set(t, r)) out.push_back(l.text());
            return out;
        });

    m.def(
        "load_table",
        [](const std::string& path) { return load_table(std::filesystem::path(path)); },
        py::arg("path"), "Load a reference letter table file.");

    m.def(
        "kgram_grid",
        [](const std::vector<std::string>& book_texts, const std::string& table_path,
           int k_max) {
            std::vector<Book> books;
            int index = 0;
            for (const auto& text : book_texts) {
                Book b;
                b.index = index++;
                for (const auto& l : letters_of(segment(text))) {
                    b.letters.push_back(l);
                    ++b.counts[l];
                    ++b.total_letters;
                }
                books.push_back(std::move(b));
            }
            const auto table = load_table(std::filesystem::path(table_path));
            std::map<double, std::set<Letter>> sets;
            for (const auto& [r, n] : table.tiers) sets[r] = tier_set(table, r);
            const auto report = kgram_grid(books, sets, U'□', k_max);
            py::list rows;
            for (std::size_t ri = 0; ri < report.r_values.size(); ++ri) {
                for (int k = 0; k <= report.k_max; ++k) {
                    const auto& cell = report.at(ri, k);
                    py::dict d;
                    d["r"] = report.r_values[ri];
                    d["k"] = k;
                    d["E_mean"] = cell.mean;
                    d["E_cv"] = cell.cv;
                    d["F"] = cell.f;
                    rows.append(d);
                }
            }
            return rows;
        },
        py::arg("book_texts"), py::arg("table_path"), py::arg("k_max") = 6,
        "E_k / F_k grid for the given texts against a table's tiers.");
}
