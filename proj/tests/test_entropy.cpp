#include "akshara/entropy.hpp"

#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"

using namespace akshara;

namespace {

std::vector<std::uint32_t> ids(std::initializer_list<std::uint32_t> list) {
    return {list};
}

}  // namespace

TEST_CASE("shannon entropy of the worked two-point distributions") {
    CHECK(shannon_entropy(std::vector<double>{0.6, 0.4}) ==
          doctest::Approx(0.9710).epsilon(1e-4));
    CHECK(shannon_entropy(std::vector<double>{0.7, 0.3}) ==
          doctest::Approx(0.8813).epsilon(1e-4));
    CHECK(shannon_entropy(std::vector<double>{0.5, 0.1, 0.2, 0.2}) ==
          doctest::Approx(1.7610).epsilon(1e-4));
}

TEST_CASE("degenerate and uniform distributions") {
    CHECK(shannon_entropy(std::vector<double>{1.0}) == 0.0);
    CHECK(shannon_entropy(std::vector<double>{0.5, 0.5}) == doctest::Approx(1.0));
}

TEST_CASE("shannon entropy input validation") {
    CHECK_THROWS(shannon_entropy(std::vector<double>{0.9, -0.1, 0.2}));
    CHECK_THROWS(shannon_entropy(std::vector<double>{0.5, 0.4}));
}

TEST_CASE("conditional entropy of the worked joint") {
    JointDistribution joint{{{0.5, 0.1}, {0.2, 0.2}}};
    const std::vector<double> marginal = {0.6, 0.4};
    CHECK(conditional_entropy(joint, marginal) ==
          doctest::Approx(0.7900).epsilon(1e-4));
}

TEST_CASE("independent pair gives H(Y)") {
    const std::vector<double> px = {0.6, 0.4};
    const std::vector<double> py = {0.7, 0.3};
    JointDistribution joint{{{px[0] * py[0], px[0] * py[1]},
                             {px[1] * py[0], px[1] * py[1]}}};
    CHECK(conditional_entropy(joint, px) ==
          doctest::Approx(shannon_entropy(py)).epsilon(1e-12));
}

TEST_CASE("deterministic Y given X has zero conditional entropy") {
    JointDistribution joint{{{0.6, 0.0}, {0.0, 0.4}}};
    const std::vector<double> marginal = {0.6, 0.4};
    CHECK(conditional_entropy(joint, marginal) == 0.0);
}

TEST_CASE("inconsistent marginal is rejected") {
    JointDistribution joint{{{0.5, 0.1}, {0.2, 0.2}}};
    CHECK_THROWS(conditional_entropy(joint, std::vector<double>{0.5, 0.5}));
}

TEST_CASE("block distribution counts overlapping blocks") {
    const auto d1 = block_distribution(ids({0, 1, 0, 1}), 1);
    CHECK(d1.positions == 4);
    CHECK(d1.counts.at(std::u32string(1, char32_t{0})) == 2);
    CHECK(d1.counts.at(std::u32string(1, char32_t{1})) == 2);

    const auto d2 = block_distribution(ids({0, 0, 0, 0}), 2);
    CHECK(d2.positions == 3);
    CHECK(d2.counts.size() == 1);
    CHECK(d2.counts.at(std::u32string(2, char32_t{0})) == 3);

    const auto d3 = block_distribution(ids({0, 1, 0, 1}), 2);
    CHECK(d3.positions == 3);
    CHECK(d3.counts.at(std::u32string({char32_t{0}, char32_t{1}})) == 2);
    CHECK(d3.counts.at(std::u32string({char32_t{1}, char32_t{0}})) == 1);

    CHECK_THROWS(block_distribution(ids({0, 1}), 3));
}

TEST_CASE("block entropy basics") {
    CHECK(block_entropy(ids({0, 1, 0}), 0) == 0.0);
    for (int k = 1; k <= 4; ++k) {
        CHECK(block_entropy(ids({0, 0, 0, 0}), k) == 0.0);
    }
    const double expected = -(2.0 / 3 * std::log2(2.0 / 3) + 1.0 / 3 * std::log2(1.0 / 3));
    CHECK(block_entropy(ids({0, 1, 0, 1}), 2) == doctest::Approx(expected).epsilon(1e-12));
    CHECK_THROWS(block_entropy(ids({0, 1}), 3));
}

TEST_CASE("E_1 of an exactly uniform stream is log2 of the alphabet") {
    std::vector<std::uint32_t> stream;
    for (int rep = 0; rep < 10; ++rep) {
        for (std::uint32_t a = 0; a < 8; ++a) stream.push_back(a);
    }
    CHECK(block_entropy(stream, 1) == doctest::Approx(3.0).epsilon(1e-12));
}

TEST_CASE("E_k stays within the counting bound") {
    std::mt19937 rng(99);
    for (int iter = 0; iter < 30; ++iter) {
        const std::size_t len = 5 + rng() % 60;
        const std::uint32_t alpha = 2 + rng() % 5;
        std::vector<std::uint32_t> stream;
        for (std::size_t i = 0; i < len; ++i) stream.push_back(rng() % alpha);
        for (int k = 1; k <= 4 && static_cast<std::size_t>(k) <= len; ++k) {
            const double e = block_entropy(stream, k);
            const double positions = static_cast<double>(len - k + 1);
            const double bound =
                std::min(k * std::log2(static_cast<double>(alpha)), std::log2(positions));
            CHECK(e >= 0.0);
            CHECK(e <= bound + 1e-9);
        }
    }
}

TEST_CASE("kgram grid on degenerate books") {
    Book book;
    book.index = 0;
    for (int i = 0; i < 50; ++i) book.letters.push_back(Letter{U"त"});
    book.counts[Letter{U"त"}] = 50;
    book.total_letters = 50;

    LetterSetFamily family;
    family.r_values = {0.6};
    family.sets[0.6] = {Letter{U"त"}};

    std::vector<Book> books = {book};
    const auto report = kgram_grid(books, family, U'□', 6);
    for (int k = 0; k <= 6; ++k) {
        CHECK(report.at(0, k).mean == 0.0);
        CHECK(report.at(0, k).f == 0.0);
    }
}

TEST_CASE("identical books give zero cv in the grid") {
    Book book;
    book.index = 0;
    const std::vector<Letter> pattern = {Letter{U"त"}, Letter{U"र"}, Letter{U"क"},
                                         Letter{U"त"}, Letter{U"स"}};
    for (int i = 0; i < 40; ++i) {
        for (const auto& l : pattern) {
            book.letters.push_back(l);
            ++book.counts[l];
            ++book.total_letters;
        }
    }
    std::vector<Book> books(10, book);
    LetterSetFamily family;
    family.r_values = {0.6, 0.9};
    family.sets[0.6] = {Letter{U"त"}, Letter{U"र"}};
    family.sets[0.9] = {Letter{U"त"}, Letter{U"र"}, Letter{U"क"}, Letter{U"स"}};

    const auto report = kgram_grid(books, family, U'□', 4);
    for (std::size_t ri = 0; ri < 2; ++ri) {
        for (int k = 0; k <= 4; ++k) {
            CHECK(report.at(ri, k).cv == 0.0);
        }
    }
    // stored F is exactly the difference of stored means
    for (std::size_t ri = 0; ri < 2; ++ri) {
        for (int k = 1; k <= 4; ++k) {
            CHECK(report.at(ri, k).f ==
                  report.at(ri, k).mean - report.at(ri, k - 1).mean);
        }
    }
}

TEST_CASE("kgram grid rejects short or empty books") {
    Book empty;
    std::vector<Book> books = {empty};
    LetterSetFamily family;
    family.r_values = {0.6};
    family.sets[0.6] = {};
    CHECK_THROWS(kgram_grid(books, family));

    Book tiny;
    tiny.letters = {Letter{U"त"}, Letter{U"र"}};
    tiny.counts[Letter{U"त"}] = 1;
    tiny.counts[Letter{U"र"}] = 1;
    tiny.total_letters = 2;
    std::vector<Book> tiny_books = {tiny};
    CHECK_THROWS(kgram_grid(tiny_books, family, U'□', 6));
}

TEST_CASE("periodic stream has E_1 = 1 and vanishing F_2") {
    std::vector<std::uint32_t> stream;
    for (int i = 0; i < 10000; ++i) {
        stream.push_back(0);
        stream.push_back(1);
    }
    CHECK(block_entropy(stream, 1) == doctest::Approx(1.0).epsilon(1e-12));
    const double f2 = block_entropy(stream, 2) - block_entropy(stream, 1);
    CHECK(std::abs(f2) < 0.01);
}
