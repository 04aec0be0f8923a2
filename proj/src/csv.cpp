#include "akshara/csv.hpp"

#include <cstdio>
#include <ostream>
#include <set>

#include "akshara/unicode.hpp"

namespace akshara::csv {

namespace {

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string rlabel(double r) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "r%.2f", r);
    return buf;
}

std::string codepoints_of(const Letter& letter) {
    std::string s;
    for (char32_t cp : letter.codepoints) {
        char buf[16];
        std::snprintf(buf, sizeof(buf), "U+%04x", static_cast<unsigned>(cp));
        if (!s.empty()) s += ' ';
        s += buf;
    }
    return s;
}

}  // namespace

void write_share_curve(const ShareCurve& curve, std::ostream& out) {
    out << "n,share\n";
    for (std::size_t i = 0; i < curve.shares.size(); ++i) {
        out << (i + 1) << ',' << num(curve.shares[i]) << "\n";
    }
}

void write_word_lengths(const WordLengthStats& stats, std::ostream& out) {
    out << "length,count\n";
    for (const auto& [length, count] : stats.histogram) {
        out << length << ',' << count << "\n";
    }
}

void write_probability_table(const ProbabilityTable& table, std::ostream& out) {
    out << "letter,codepoints,p,cv\n";
    for (const auto& e : table.entries) {
        out << e.letter.text() << ',' << codepoints_of(e.letter) << ','
            << num(e.p) << ',' << num(e.cv) << "\n";
    }
}

void write_set_membership(const LetterSetFamily& family, std::ostream& out) {
    out << "letter";
    for (double r : family.r_values) out << ',' << rlabel(r);
    out << "\n";
    std::set<Letter> all;
    for (double r : family.r_values) {
        const auto& s = family.sets.at(r);
        all.insert(s.begin(), s.end());
    }
    for (const auto& letter : all) {
        out << letter.text();
        for (double r : family.r_values) {
            out << ',' << (family.sets.at(r).count(letter) ? 1 : 0);
        }
        out << "\n";
    }
}

void write_set_sizes(const LetterSetFamily& family, std::ostream& out) {
    out << "r,N_r\n";
    for (double r : family.r_values) {
        out << num(r) << ',' << family.sets.at(r).size() << "\n";
    }
}

void write_entropy_report(const EntropyReport& report, std::ostream& out,
                          bool per_book) {
    out << "r,k,E_mean,E_cv,F";
    if (per_book && !report.cells.empty() && !report.cells[0].empty()) {
        const auto books = report.cells[0][0].per_book.size();
        for (std::size_t t = 0; t < books; ++t) out << ",E_book" << t;
    }
    out << "\n";
    for (std::size_t ri = 0; ri < report.r_values.size(); ++ri) {
        for (int k = 0; k <= report.k_max; ++k) {
            const auto& cell = report.at(ri, k);
            out << num(report.r_values[ri]) << ',' << k << ',' << num(cell.mean)
                << ',' << num(cell.cv) << ',' << num(cell.f);
            if (per_book) {
                for (double e : cell.per_book) out << ',' << num(e);
            }
            out << "\n";
        }
    }
}

}  // namespace akshara::csv
