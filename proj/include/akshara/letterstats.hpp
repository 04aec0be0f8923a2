#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <vector>

#include "akshara/segmenter.hpp"

namespace akshara {

// Letter counts with a deterministic ranking: count descending, ties broken
// by codepoint sequence ascending. Zero-count letters are never ranked.
struct FrequencyTable {
    std::map<Letter, std::uint64_t> counts;
    std::uint64_t total = 0;
    std::vector<Letter> ranking;
};

FrequencyTable make_frequency_table(std::span<const Letter> letters);
FrequencyTable make_frequency_table(const std::map<Letter, std::uint64_t>& counts);

struct ShareCurve {
    // points[n-1] = cumulative share of the top n ranked letters.
    std::vector<double> shares;
};

ShareCurve share_curve(const FrequencyTable& table);

// Shortest ranking prefix whose cumulative share reaches r.
std::set<Letter> top_share_set(const FrequencyTable& table, double r);

struct LetterSetFamily {
    std::vector<double> r_values;  // strictly increasing
    std::map<double, std::set<Letter>> sets;           // majority-rule L_r
    std::map<double, std::set<Letter>> union_sets;     // U_r
    std::map<double, std::set<Letter>> intersection_sets;  // I_r
    int majority_threshold = 0;
};

// Default r grid: 0.60 .. 0.95 in steps of 0.05.
const std::vector<double>& default_r_values();

// majority = 0 selects ceil(0.7 * n_books).
LetterSetFamily canonical_sets(std::span<const FrequencyTable> books,
                               std::span<const double> r_values,
                               int majority = 0);

struct ProbabilityEntry {
    Letter letter;
    double p = 0;
    double cv = 0;  // population sd / mean, 0 when mean is 0
    std::vector<double> per_book_q;
};

struct ProbabilityTable {
    std::vector<ProbabilityEntry> entries;  // ordered by p descending
    std::size_t absent_letters = 0;         // letters with p == 0 (diagnostic)
};

ProbabilityTable probabilities(std::span<const FrequencyTable> books,
                               const std::set<Letter>& letters);

double sanity_ratio(const ProbabilityTable& prob, const LetterSetFamily& family,
                    double r);

struct WordLengthStats {
    std::map<std::size_t, std::uint64_t> histogram;
    double mean = 0;
    bool mean_defined = false;
};

WordLengthStats word_length_stats(std::span<const Word> words);

}  // namespace akshara
