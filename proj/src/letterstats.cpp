#include "akshara/letterstats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace akshara {

namespace {

std::vector<Letter> make_ranking(const std::map<Letter, std::uint64_t>& counts) {
    std::vector<Letter> ranking;
    ranking.reserve(counts.size());
    for (const auto& [letter, count] : counts) {
        if (count > 0) ranking.push_back(letter);
    }
    std::sort(ranking.begin(), ranking.end(),
              [&](const Letter& a, const Letter& b) {
                  const auto ca = counts.at(a);
                  const auto cb = counts.at(b);
                  if (ca != cb) return ca > cb;
                  return a.codepoints < b.codepoints;
              });
    return ranking;
}

}  // namespace

FrequencyTable make_frequency_table(std::span<const Letter> letters) {
    FrequencyTable t;
    for (const auto& letter : letters) {
        ++t.counts[letter];
    }
    t.total = letters.size();
    t.ranking = make_ranking(t.counts);
    return t;
}

FrequencyTable make_frequency_table(const std::map<Letter, std::uint64_t>& counts) {
    FrequencyTable t;
    t.counts = counts;
    for (const auto& [letter, count] : counts) t.total += count;
    t.ranking = make_ranking(t.counts);
    return t;
}

ShareCurve share_curve(const FrequencyTable& table) {
    if (table.total == 0) throw std::invalid_argument("share_curve: empty table");
    ShareCurve curve;
    curve.shares.reserve(table.ranking.size());
    std::uint64_t cum = 0;
    for (const auto& letter : table.ranking) {
        cum += table.counts.at(letter);
        curve.shares.push_back(static_cast<double>(cum) /
                               static_cast<double>(table.total));
    }
    return curve;
}

std::set<Letter> top_share_set(const FrequencyTable& table, double r) {
    if (r <= 0 || r > 1) throw std::invalid_argument("top_share_set: r out of range");
    if (table.total == 0) throw std::invalid_argument("top_share_set: empty table");
    std::set<Letter> out;
    const double target = r * static_cast<double>(table.total);
    std::uint64_t cum = 0;
    for (const auto& letter : table.ranking) {
        out.insert(letter);
        cum += table.counts.at(letter);
        if (static_cast<double>(cum) >= target - 1e-9) break;
    }
    return out;
}

const std::vector<double>& default_r_values() {
    static const std::vector<double> r = {0.60, 0.65, 0.70, 0.75,
                                          0.80, 0.85, 0.90, 0.95};
    return r;
}

LetterSetFamily canonical_sets(std::span<const FrequencyTable> books,
                               std::span<const double> r_values, int majority) {
    if (books.empty()) throw std::invalid_argument("canonical_sets: no books");
    const int n = static_cast<int>(books.size());
    if (majority == 0) majority = static_cast<int>(std::ceil(0.7 * n));
    if (majority < 1 || majority > n)
        throw std::invalid_argument("canonical_sets: bad majority threshold");

    LetterSetFamily family;
    family.r_values.assign(r_values.begin(), r_values.end());
    family.majority_threshold = majority;

    for (double r : r_values) {
        std::map<Letter, int> votes;
        std::set<Letter> u;
        std::set<Letter> in_all;
        bool first = true;
        for (const auto& book : books) {
            const auto per_book = top_share_set(book, r);
            for (const auto& letter : per_book) ++votes[letter];
            u.insert(per_book.begin(), per_book.end());
            if (first) {
                in_all = per_book;
                first = false;
            } else {
                std::set<Letter> next;
                std::set_intersection(in_all.begin(), in_all.end(),
                                      per_book.begin(), per_book.end(),
                                      std::inserter(next, next.begin()));
                in_all = std::move(next);
            }
        }
        std::set<Letter> majority_set;
        for (const auto& [letter, v] : votes) {
            if (v >= majority) majority_set.insert(letter);
        }
        family.sets[r] = std::move(majority_set);
        family.union_sets[r] = std::move(u);
        family.intersection_sets[r] = std::move(in_all);
    }
    return family;
}

ProbabilityTable probabilities(std::span<const FrequencyTable> books,
                               const std::set<Letter>& letters) {
    for (const auto& book : books) {
        if (book.total == 0)
            throw std::invalid_argument("probabilities: empty book");
    }
    ProbabilityTable table;
    const auto n = static_cast<double>(books.size());
    for (const auto& letter : letters) {
        ProbabilityEntry e;
        e.letter = letter;
        for (const auto& book : books) {
            const auto it = book.counts.find(letter);
            const std::uint64_t c = it == book.counts.end() ? 0 : it->second;
            e.per_book_q.push_back(static_cast<double>(c) /
                                   static_cast<double>(book.total));
        }
        double mean = 0;
        for (double q : e.per_book_q) mean += q;
        mean /= n;
        double var = 0;
        for (double q : e.per_book_q) var += (q - mean) * (q - mean);
        var /= n;
        e.p = mean;
        e.cv = mean > 0 ? std::sqrt(var) / mean : 0.0;
        if (mean == 0) ++table.absent_letters;
        table.entries.push_back(std::move(e));
    }
    std::sort(table.entries.begin(), table.entries.end(),
              [](const ProbabilityEntry& a, const ProbabilityEntry& b) {
                  if (a.p != b.p) return a.p > b.p;
                  return a.letter.codepoints < b.letter.codepoints;
              });
    return table;
}

double sanity_ratio(const ProbabilityTable& prob, const LetterSetFamily& family,
                    double r) {
    const auto it = family.sets.find(r);
    if (it == family.sets.end())
        throw std::invalid_argument("sanity_ratio: r is not in the family");
    const auto& set = it->second;
    if (set.empty()) return 0;
    double sum = 0;
    for (const auto& e : prob.entries) {
        if (set.count(e.letter)) sum += e.p;
    }
    return sum / r;
}

WordLengthStats word_length_stats(std::span<const Word> words) {
    WordLengthStats stats;
    std::uint64_t total_letters = 0;
    for (const auto& w : words) {
        ++stats.histogram[w.size()];
        total_letters += w.size();
    }
    if (!words.empty()) {
        stats.mean = static_cast<double>(total_letters) /
                     static_cast<double>(words.size());
        stats.mean_defined = true;
    }
    return stats;
}

}  // namespace akshara
