#include "akshara/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_map>

namespace akshara {

namespace {

constexpr double kLog2 = 0.6931471805599453094;  // ln 2

double entropy_of_counts(std::vector<std::pair<std::u32string, std::uint64_t>>& counts,
                         std::uint64_t positions) {
    // Fixed accumulation order (sorted keys) for bit-identical results.
    std::sort(counts.begin(), counts.end());
    const double total = static_cast<double>(positions);
    double h = 0;
    for (const auto& [block, m] : counts) {
        const double rho = static_cast<double>(m) / total;
        h -= rho * std::log(rho);
    }
    return h / kLog2;
}

std::vector<std::pair<std::u32string, std::uint64_t>> count_blocks(
    std::span<const std::uint32_t> symbols, int k) {
    const std::size_t s = symbols.size();
    std::unordered_map<std::u32string, std::uint64_t> counts;
    std::u32string block(static_cast<std::size_t>(k), U'\0');
    for (std::size_t i = 0; i + static_cast<std::size_t>(k) <= s; ++i) {
        for (std::size_t j = 0; j < static_cast<std::size_t>(k); ++j) {
            block[j] = static_cast<char32_t>(symbols[i + j]);
        }
        ++counts[block];
    }
    std::vector<std::pair<std::u32string, std::uint64_t>> out(counts.begin(),
                                                              counts.end());
    return out;
}

}  // namespace

double shannon_entropy(std::span<const double> weights) {
    double sum = 0;
    for (double w : weights) {
        if (w < 0) throw std::invalid_argument("shannon_entropy: negative weight");
        sum += w;
    }
    if (std::abs(sum - 1.0) > 1e-9)
        throw std::invalid_argument("shannon_entropy: weights do not sum to 1");
    double h = 0;
    for (double w : weights) {
        if (w > 0) h -= w * std::log(w);
    }
    return h / kLog2;
}

double conditional_entropy(const JointDistribution& joint,
                           std::span<const double> marginal) {
    if (joint.cells.size() != marginal.size())
        throw std::invalid_argument("conditional_entropy: size mismatch");
    std::vector<double> flat;
    for (std::size_t i = 0; i < joint.cells.size(); ++i) {
        double row_sum = 0;
        for (double c : joint.cells[i]) {
            flat.push_back(c);
            row_sum += c;
        }
        if (std::abs(row_sum - marginal[i]) > 1e-9)
            throw std::invalid_argument(
                "conditional_entropy: marginal inconsistent with joint row sums");
    }
    const double h = shannon_entropy(flat) - shannon_entropy(marginal);
    return h < 0 ? 0 : h;
}

BlockDistribution block_distribution(std::span<const std::uint32_t> symbols, int k) {
    if (k < 1 || static_cast<std::size_t>(k) > symbols.size())
        throw std::invalid_argument("block_distribution: k out of range");
    BlockDistribution d;
    d.k = k;
    d.positions = symbols.size() - static_cast<std::size_t>(k) + 1;
    for (auto& [block, m] : count_blocks(symbols, k)) {
        d.counts.emplace(std::move(block), m);
    }
    return d;
}

double block_entropy(std::span<const std::uint32_t> symbols, int k) {
    if (k == 0) return 0;
    if (k < 0 || static_cast<std::size_t>(k) > symbols.size())
        throw std::invalid_argument("block_entropy: k out of range");
    auto counts = count_blocks(symbols, k);
    return entropy_of_counts(counts, symbols.size() - static_cast<std::size_t>(k) + 1);
}

EntropyReport kgram_grid(std::span<const Book> entropy_books,
                         const LetterSetFamily& family, char32_t placeholder,
                         int k_max) {
    std::map<double, std::set<Letter>> sets;
    for (double r : family.r_values) sets[r] = family.sets.at(r);
    return kgram_grid(entropy_books, sets, placeholder, k_max);
}

EntropyReport kgram_grid(std::span<const Book> entropy_books,
                         const std::map<double, std::set<Letter>>& sets,
                         char32_t placeholder, int k_max) {
    if (k_max < 1) throw std::invalid_argument("kgram_grid: k_max must be >= 1");
    for (const auto& book : entropy_books) {
        if (book.total_letters == 0)
            throw std::invalid_argument("kgram_grid: empty book");
        if (book.total_letters < static_cast<std::uint64_t>(k_max))
            throw std::invalid_argument("kgram_grid: book shorter than k_max");
    }
    (void)placeholder;  // masked letters share one id regardless of the glyph

    EntropyReport report;
    report.k_max = k_max;
    for (const auto& [r, set] : sets) report.r_values.push_back(r);

    for (const auto& [r, set] : sets) {
        // Symbol ids: 0..N-1 for the letters of L_r, N for the placeholder.
        std::map<Letter, std::uint32_t> ids;
        std::uint32_t next = 0;
        for (const auto& letter : set) ids[letter] = next++;
        const std::uint32_t box_id = next;

        std::vector<EntropyCell> cells(static_cast<std::size_t>(k_max) + 1);

        for (const auto& book : entropy_books) {
            std::vector<std::uint32_t> stream;
            stream.reserve(book.letters.size());
            for (const auto& letter : book.letters) {
                const auto it = ids.find(letter);
                stream.push_back(it == ids.end() ? box_id : it->second);
            }
            for (int k = 0; k <= k_max; ++k) {
                cells[static_cast<std::size_t>(k)].per_book.push_back(
                    block_entropy(stream, k));
            }
        }

        const double n = static_cast<double>(entropy_books.size());
        for (int k = 0; k <= k_max; ++k) {
            auto& cell = cells[static_cast<std::size_t>(k)];
            double mean = 0;
            for (double e : cell.per_book) mean += e;
            mean /= n;
            double var = 0;
            const bool constant = std::all_of(
                cell.per_book.begin(), cell.per_book.end(),
                [&](double e) { return e == cell.per_book.front(); });
            if (!constant) {
                for (double e : cell.per_book) var += (e - mean) * (e - mean);
                var /= n;
            }
            cell.mean = mean;
            cell.cv = mean > 0 ? std::sqrt(var) / mean : 0.0;
        }
        for (int k = 1; k <= k_max; ++k) {
            cells[static_cast<std::size_t>(k)].f =
                cells[static_cast<std::size_t>(k)].mean -
                cells[static_cast<std::size_t>(k) - 1].mean;
        }
        report.cells.push_back(std::move(cells));
    }
    return report;
}

}  // namespace akshara
