#pragma once

#include <filesystem>
#include <iosfwd>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "akshara/segmenter.hpp"

namespace akshara {

struct TableRow {
    int index = 0;
    std::string glyph;  // as printed in the source file
    Letter letter;      // reconstructed from the codepoint column (authoritative)
    double probability = 0;
    bool glyph_consistent = false;  // glyph re-encodes to exactly the codepoints
};

class TableError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Reference letter table: rows in rank order plus nested tier boundaries.
// Format: UTF-8, tab-separated `index<TAB>glyph<TAB>codepoints<TAB>probability`
// with tier records as comment lines `# tier r=<value> end=<N>`.
struct LetterTable {
    std::vector<TableRow> rows;
    std::map<double, int> tiers;  // r -> N_r (prefix length)
    std::vector<std::string> warnings;  // e.g. glyph/codepoint mismatches

    bool operator==(const LetterTable& other) const;
};

LetterTable load_table(std::istream& in);
LetterTable load_table(const std::filesystem::path& path);

// The first N_r letters; r must be a declared tier.
std::set<Letter> tier_set(const LetterTable& table, double r);

// Round trip: load_table(emit_table(t)) compares equal to t on rows and tiers.
void emit_table(const LetterTable& table, std::ostream& out);
void emit_table(const LetterTable& table, const std::filesystem::path& path);

}  // namespace akshara
