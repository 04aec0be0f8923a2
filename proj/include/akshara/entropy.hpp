#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "akshara/corpus.hpp"
#include "akshara/letterstats.hpp"

namespace akshara {

// Shannon entropy in bits of a distribution given as nonnegative weights
// summing to 1 (checked to 1e-9). 0 * log 0 counts as 0.
double shannon_entropy(std::span<const double> weights);

// Joint distribution over (X, Y) pairs; rows index X values.
struct JointDistribution {
    std::vector<std::vector<double>> cells;
};

// H(Y|X) = H(X,Y) - H(X). The marginal must match the joint's row sums to
// 1e-9. The result is clamped at >= 0 against rounding.
double conditional_entropy(const JointDistribution& joint,
                           std::span<const double> marginal);

// Overlapping k-block counts of a symbol stream. Symbols are small integer
// ids; a block is encoded as a length-k u32string of ids.
struct BlockDistribution {
    int k = 0;
    std::uint64_t positions = 0;  // s - k + 1
    std::map<std::u32string, std::uint64_t> counts;
};

BlockDistribution block_distribution(std::span<const std::uint32_t> symbols, int k);

// E_k: entropy of the empirical k-block distribution; E_0 = 0 by convention.
double block_entropy(std::span<const std::uint32_t> symbols, int k);

struct EntropyCell {
    std::vector<double> per_book;  // E_k per book
    double mean = 0;
    double cv = 0;  // population sd / mean
    double f = 0;   // mean_k - mean_{k-1}; 0 at k = 0
};

struct EntropyReport {
    std::vector<double> r_values;
    int k_max = 6;
    // cells[r_index][k] for k = 0..k_max
    std::vector<std::vector<EntropyCell>> cells;

    const EntropyCell& at(std::size_t r_index, int k) const {
        return cells[r_index][static_cast<std::size_t>(k)];
    }
};

// For each r: mask each entropy book's letter stream to the alphabet
// L_r + {placeholder}, compute E_k per book for k = 1..k_max, average across
// books, and difference the means into F_k.
EntropyReport kgram_grid(std::span<const Book> entropy_books,
                         const LetterSetFamily& family,
                         char32_t placeholder = U'□', int k_max = 6);

// Same grid against fixed letter sets (e.g. the reference table's tiers).
EntropyReport kgram_grid(std::span<const Book> entropy_books,
                         const std::map<double, std::set<Letter>>& sets,
                         char32_t placeholder = U'□', int k_max = 6);

}  // namespace akshara
