#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "akshara/letterstats.hpp"
#include "akshara/segmenter.hpp"

namespace akshara {

struct Article {
    std::string source_id;
    std::uint64_t ordinal = 0;  // position within its volume
    std::string text;
};

struct Book {
    int index = 0;
    std::vector<Letter> letters;  // concatenated stream in ingestion order
    std::map<Letter, std::uint64_t> counts;
    std::uint64_t total_letters = 0;
    std::size_t orphan_marks = 0;
};

// Round-robin partition: article with ordinal m goes to book m mod n_books.
// All n_books books are returned, possibly empty.
std::vector<Book> partition(std::span<const Article> articles, int n_books = 20,
                            bool normalize = false);

FrequencyTable count_letters(const Book& book);

// Manifest: one line per article, `<volume-label>\t<ordinal>\t<path>`.
// Blank lines and lines starting with '#' are skipped. Relative paths are
// resolved against the manifest's directory.
std::vector<Article> load_manifest(const std::filesystem::path& manifest_path);

}  // namespace akshara
