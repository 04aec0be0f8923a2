#include "akshara/corpus.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "akshara/unicode.hpp"

namespace akshara {

std::vector<Book> partition(std::span<const Article> articles, int n_books,
                            bool normalize) {
    if (n_books < 1) throw std::invalid_argument("partition: n_books must be >= 1");
    std::vector<Book> books(static_cast<std::size_t>(n_books));
    for (int t = 0; t < n_books; ++t) books[static_cast<std::size_t>(t)].index = t;

    for (const auto& article : articles) {
        auto& book = books[article.ordinal % static_cast<std::uint64_t>(n_books)];
        const auto seg =
            normalize ? segment(uni::decompose_nukta_utf8(article.text))
                      : segment(article.text);
        book.orphan_marks += seg.orphan_marks;
        for (const auto& tok : seg.tokens) {
            if (tok.kind != Token::Kind::letter) continue;
            ++book.counts[tok.letter];
            book.letters.push_back(tok.letter);
            ++book.total_letters;
        }
    }
    return books;
}

FrequencyTable count_letters(const Book& book) {
    return make_frequency_table(book.counts);
}

std::vector<Article> load_manifest(const std::filesystem::path& manifest_path) {
    std::ifstream in(manifest_path);
    if (!in) throw std::runtime_error("cannot open manifest: " + manifest_path.string());
    const auto base = manifest_path.parent_path();

    std::vector<Article> articles;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        std::istringstream fields(line);
        std::string volume, ordinal_str, path_str;
        if (!std::getline(fields, volume, '\t') ||
            !std::getline(fields, ordinal_str, '\t') ||
            !std::getline(fields, path_str)) {
            throw std::runtime_error("manifest line " + std::to_string(lineno) +
                                     ": expected <volume>\\t<ordinal>\\t<path>");
        }
        Article a;
        a.source_id = volume;
        try {
            a.ordinal = std::stoull(ordinal_str);
        } catch (const std::exception&) {
            throw std::runtime_error("manifest line " + std::to_string(lineno) +
                                     ": bad ordinal '" + ordinal_str + "'");
        }
        std::filesystem::path p(path_str);
        if (p.is_relative()) p = base / p;
        std::ifstream file(p, std::ios::binary);
        if (!file) {
            throw std::runtime_error("manifest line " + std::to_string(lineno) +
                                     ": cannot open " + p.string());
        }
        std::ostringstream text;
        text << file.rdbuf();
        a.text = std::move(text).str();
        articles.push_back(std::move(a));
    }
    return articles;
}

}  // namespace akshara
