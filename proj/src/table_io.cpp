#include "akshara/table_io.hpp"

#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "akshara/unicode.hpp"

namespace akshara {

namespace {

bool parse_codepoint_token(const std::string& token, char32_t& out) {
    if (token.size() < 3 || token.size() > 8) return false;
    if (token[0] != 'U' && token[0] != 'u') return false;
    if (token[1] != '+') return false;
    char32_t value = 0;
    for (std::size_t i = 2; i < token.size(); ++i) {
        const char c = token[i];
        int digit;
        if (c >= '0' && c <= '9') digit = c - '0';
        else if (c >= 'a' && c <= 'f') digit = c - 'a' + 10;
        else if (c >= 'A' && c <= 'F') digit = c - 'A' + 10;
        else return false;
        value = value * 16 + static_cast<char32_t>(digit);
    }
    if (value > 0x10FFFF) return false;
    out = value;
    return true;
}

[[noreturn]] void fail(std::size_t lineno, const std::string& message) {
    throw TableError("row " + std::to_string(lineno) + ": " + message);
}

std::string format_probability(double p) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6e", p);
    return buf;
}

std::string format_r(double r) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%g", r);
    return buf;
}

void check_tiers(const LetterTable& table) {
    int prev = 0;
    for (const auto& [r, n] : table.tiers) {
        if (n < prev)
            throw TableError("non-monotone tier boundaries at r=" + format_r(r));
        if (n < 0 || static_cast<std::size_t>(n) > table.rows.size())
            throw TableError("tier boundary out of range at r=" + format_r(r));
        prev = n;
    }
}

}  // namespace

bool LetterTable::operator==(const LetterTable& other) const {
    if (tiers != other.tiers) return false;
    if (rows.size() != other.rows.size()) return false;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& a = rows[i];
        const auto& b = other.rows[i];
        if (a.index != b.index || a.glyph != b.glyph || a.letter != b.letter ||
            a.probability != b.probability ||
            a.glyph_consistent != b.glyph_consistent) {
            return false;
        }
    }
    return true;
}

LetterTable load_table(std::istream& in) {
    LetterTable table;
    std::set<Letter> seen;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line[0] == '#') {
            double r;
            int end;
            if (std::sscanf(line.c_str(), "# tier r=%lf end=%d", &r, &end) == 2) {
                if (table.tiers.count(r)) fail(lineno, "duplicate tier r=" + format_r(r));
                table.tiers[r] = end;
            }
            continue;
        }

        std::istringstream fields(line);
        std::string index_str, glyph, cps_str, prob_str;
        if (!std::getline(fields, index_str, '\t') ||
            !std::getline(fields, glyph, '\t') ||
            !std::getline(fields, cps_str, '\t') ||
            !std::getline(fields, prob_str)) {
            fail(lineno, "expected 4 tab-separated fields");
        }

        TableRow row;
        try {
            row.index = std::stoi(index_str);
        } catch (const std::exception&) {
            fail(lineno, "bad index '" + index_str + "'");
        }
        row.glyph = glyph;

        std::istringstream cps_in(cps_str);
        std::string token;
        while (cps_in >> token) {
            char32_t cp;
            if (!parse_codepoint_token(token, cp))
                fail(lineno, "malformed codepoint token '" + token + "'");
            row.letter.codepoints += cp;
        }
        if (row.letter.codepoints.empty()) fail(lineno, "empty codepoint sequence");

        try {
            std::size_t pos = 0;
            row.probability = std::stod(prob_str, &pos);
            if (pos != prob_str.size()) throw std::invalid_argument(prob_str);
        } catch (const std::exception&) {
            fail(lineno, "bad probability '" + prob_str + "'");
        }
        if (row.probability <= 0 || row.probability >= 1)
            fail(lineno, "probability out of (0, 1)");

        if (!seen.insert(row.letter).second)
            fail(lineno, "duplicate letter " + row.letter.text());

        // Authoritative column is the codepoint sequence; a disagreeing glyph
        // is a warning and excludes the row from the golden subset.
        std::u32string glyph_cps;
        for (char32_t cp : uni::decode_utf8_scalars(glyph)) {
            if (!uni::is_joiner(cp)) glyph_cps += cp;
        }
        row.glyph_consistent = glyph_cps == row.letter.codepoints;
        if (!row.glyph_consistent) {
            table.warnings.push_back("row " + std::to_string(lineno) +
                                     ": glyph does not match codepoint column");
        }

        const int expected = table.rows.empty() ? 1 : table.rows.back().index + 1;
        if (row.index != expected)
            fail(lineno, "index " + std::to_string(row.index) + " breaks the 1..n sequence");
        table.rows.push_back(std::move(row));
    }
    if (table.rows.empty()) throw TableError("empty table");
    check_tiers(table);
    return table;
}

LetterTable load_table(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw TableError("cannot open table file: " + path.string());
    return load_table(in);
}

std::set<Letter> tier_set(const LetterTable& table, double r) {
    const auto it = table.tiers.find(r);
    if (it == table.tiers.end())
        throw TableError("unknown tier r=" + format_r(r));
    std::set<Letter> out;
    for (int i = 0; i < it->second; ++i) {
        out.insert(table.rows[static_cast<std::size_t>(i)].letter);
    }
    return out;
}

void emit_table(const LetterTable& table, std::ostream& out) {
    check_tiers(table);
    for (const auto& [r, n] : table.tiers) {
        out << "# tier r=" << format_r(r) << " end=" << n << "\n";
    }
    for (const auto& row : table.rows) {
        out << row.index << '\t' << row.glyph << '\t';
        bool first = true;
        for (char32_t cp : row.letter.codepoints) {
            char buf[16];
            std::snprintf(buf, sizeof(buf), "U+%04x", static_cast<unsigned>(cp));
            if (!first) out << ' ';
            out << buf;
            first = false;
        }
        out << '\t' << format_probability(row.probability) << "\n";
    }
    if (!out) throw TableError("write failure while emitting table");
}

void emit_table(const LetterTable& table, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw TableError("cannot open for writing: " + path.string());
    emit_table(table, out);
}

}  // namespace akshara
