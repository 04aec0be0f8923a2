// Command-line front end for the Devanagari letter-statistics pipeline.
//
// Subcommands: segment, wordlen, partition, freq, sets, probs, approx,
// entropy, validate-table. All outputs are CSV or plain text; plotting is
// left to downstream tools.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "akshara/approximator.hpp"
#include "akshara/corpus.hpp"
#include "akshara/csv.hpp"
#include "akshara/entropy.hpp"
#include "akshara/letterstats.hpp"
#include "akshara/segmenter.hpp"
#include "akshara/table_io.hpp"
#include "akshara/unicode.hpp"

namespace {

using namespace akshara;

std::string read_input(const std::string& path) {
    if (path.empty() || path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return std::move(buf).str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open input: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return std::move(buf).str();
}

std::ofstream open_output(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open output: " + path);
    return out;
}

std::ostream& output_or_stdout(std::optional<std::ofstream>& holder,
                               const std::string& path) {
    if (path.empty() || path == "-") return std::cout;
    holder.emplace(open_output(path));
    return *holder;
}

struct CommonOpts {
    std::vector<double> r_values = default_r_values();
    int n_books = 20;
    int majority = 0;  // 0 = ceil(0.7 * n_books)
    int k_max = 6;
    bool normalize = false;
    std::string placeholder = "□";

    char32_t placeholder_cp() const {
        const auto cps = uni::decode_utf8_scalars(placeholder);
        if (cps.size() != 1)
            throw std::runtime_error("placeholder must be a single character");
        return cps[0];
    }

    void validate() const {
        double prev = 0;
        for (double r : r_values) {
            if (r <= 0 || r > 1 || r <= prev)
                throw std::runtime_error(
                    "r values must lie in (0,1] and increase strictly");
            prev = r;
        }
        if (k_max < 1) throw std::runtime_error("k_max must be >= 1");
        if (n_books < 1) throw std::runtime_error("n_books must be >= 1");
    }
};

// Frequency books default to the first half, entropy books to the second.
std::pair<std::span<const Book>, std::span<const Book>> split_books(
    std::span<const Book> books, int freq_count) {
    if (freq_count <= 0 || freq_count > static_cast<int>(books.size()))
        freq_count = static_cast<int>((books.size() + 1) / 2);
    return {books.subspan(0, static_cast<std::size_t>(freq_count)),
            books.subspan(static_cast<std::size_t>(freq_count))};
}

std::vector<FrequencyTable> frequency_tables(std::span<const Book> books) {
    std::vector<FrequencyTable> tables;
    for (const auto& b : books) {
        if (b.total_letters > 0) tables.push_back(count_letters(b));
    }
    if (tables.empty()) throw std::runtime_error("no non-empty books");
    return tables;
}

int cmd_segment(const std::string& input, const std::string& output,
                bool codepoints, bool normalize) {
    const auto raw = read_input(input);
    const auto text = normalize ? uni::decompose_nukta_utf8(raw) : raw;
    const auto seg = segment(text);
    std::optional<std::ofstream> holder;
    auto& out = output_or_stdout(holder, output);
    for (const auto& letter : letters_of(seg)) {
        if (codepoints) {
            bool first = true;
            for (char32_t cp : letter.codepoints) {
                char buf[16];
                std::snprintf(buf, sizeof(buf), "U+%04x", static_cast<unsigned>(cp));
                if (!first) out << ' ';
                out << buf;
                first = false;
            }
            out << "\n";
        } else {
            out << letter.text() << "\n";
        }
    }
    std::cerr << "letters=" << letters_of(seg).size()
              << " orphan_marks=" << seg.orphan_marks << "\n";
    return 0;
}

int cmd_wordlen(const std::string& input, const std::string& output) {
    const auto text = read_input(input);
    const auto words = words_of(segment(text));
    const auto stats = word_length_stats(words);
    std::optional<std::ofstream> holder;
    auto& out = output_or_stdout(holder, output);
    csv::write_word_lengths(stats, out);
    if (stats.mean_defined) {
        std::cerr << "words=" << words.size() << " mean_length=" << stats.mean
                  << "\n";
    } else {
        std::cerr << "words=0 mean_length=undefined\n";
    }
    return 0;
}

int cmd_partition(const std::string& manifest, const std::string& output,
                  const CommonOpts& opts) {
    const auto articles = load_manifest(manifest);
    const auto books = partition(articles, opts.n_books, opts.normalize);
    std::optional<std::ofstream> holder;
    auto& out = output_or_stdout(holder, output);
    out << "book,total_letters,distinct_letters,orphan_marks\n";
    for (const auto& b : books) {
        out << b.index << ',' << b.total_letters << ',' << b.counts.size() << ','
            << b.orphan_marks << "\n";
    }
    return 0;
}

int cmd_freq(const std::string& input, const std::string& freq_out,
             const std::string& curve_out, bool normalize) {
    const auto raw = read_input(input);
    const auto text = normalize ? uni::decompose_nukta_utf8(raw) : raw;
    const auto letters = letters_of(segment(text));
    const auto table = make_frequency_table(letters);
    {
        std::optional<std::ofstream> holder;
        auto& out = output_or_stdout(holder, freq_out);
        out << "letter,count\n";
        for (const auto& letter : table.ranking) {
            out << letter.text() << ',' << table.counts.at(letter) << "\n";
        }
    }
    if (!curve_out.empty()) {
        auto out = open_output(curve_out);
        csv::write_share_curve(share_curve(table), out);
    }
    return 0;
}

LetterSetFamily family_from_manifest(const std::string& manifest,
                                     const CommonOpts& opts,
                                     std::vector<Book>* books_out = nullptr) {
    const auto articles = load_manifest(manifest);
    auto books = partition(articles, opts.n_books, opts.normalize);
    const auto [freq_books, entropy_books] = split_books(books, 0);
    const auto tables = frequency_tables(freq_books);
    auto family = canonical_sets(tables, opts.r_values, opts.majority);
    if (books_out) *books_out = std::move(books);
    return family;
}

int cmd_sets(const std::string& manifest, const std::string& membership_out,
             const std::string& sizes_out, const CommonOpts& opts) {
    const auto family = family_from_manifest(manifest, opts);
    if (!membership_out.empty()) {
        auto out = open_output(membership_out);
        csv::write_set_membership(family, out);
    }
    std::optional<std::ofstream> holder;
    auto& out = output_or_stdout(holder, sizes_out);
    csv::write_set_sizes(family, out);
    return 0;
}

int cmd_probs(const std::string& manifest, const std::string& output,
              const std::string& table_out, const CommonOpts& opts) {
    const auto articles = load_manifest(manifest);
    const auto books = partition(articles, opts.n_books, opts.normalize);
    const auto [freq_books, entropy_books] = split_books(books, 0);
    const auto tables = frequency_tables(freq_books);
    const auto family = canonical_sets(tables, opts.r_values, opts.majority);
    const double r_top = opts.r_values.back();
    const auto prob = probabilities(tables, family.sets.at(r_top));
    {
        std::optional<std::ofstream> holder;
        auto& out = output_or_stdout(holder, output);
        csv::write_probability_table(prob, out);
    }
    if (!table_out.empty()) {
        // Publish as a reference table: rows in probability order, tier
        // boundaries from the nested canonical sets.
        LetterTable t;
        int index = 0;
        for (const auto& e : prob.entries) {
            if (e.p <= 0) continue;
            TableRow row;
            row.index = ++index;
            row.glyph = e.letter.text();
            row.letter = e.letter;
            row.probability = e.p;
            row.glyph_consistent = true;
            t.rows.push_back(std::move(row));
        }
        for (double r : opts.r_values) {
            int n = 0;
            const auto& set = family.sets.at(r);
            for (const auto& row : t.rows) {
                if (set.count(row.letter)) ++n;
            }
            t.tiers[r] = n;
        }
        emit_table(t, std::filesystem::path(table_out));
    }
    for (double r : opts.r_values) {
        std::cerr << "sanity_ratio r=" << r << " "
                  << sanity_ratio(prob, family, r) << "\n";
    }
    return 0;
}

int cmd_approx(const std::string& input, const std::string& table_path, double r,
               const std::string& output, const CommonOpts& opts) {
    const auto raw = read_input(input);
    const auto text = opts.normalize ? uni::decompose_nukta_utf8(raw) : raw;
    const auto table = load_table(std::filesystem::path(table_path));
    const auto keep = tier_set(table, r);
    const auto result = approximate(text, keep, opts.placeholder_cp());
    std::optional<std::ofstream> holder;
    auto& out = output_or_stdout(holder, output);
    out << result.text;
    const auto total = result.replaced + result.kept;
    std::cerr << "letters=" << total << " replaced=" << result.replaced
              << " fraction="
              << (total ? static_cast<double>(result.replaced) / total : 0.0)
              << "\n";
    return 0;
}

int cmd_entropy(const std::string& manifest, const std::string& table_path,
                const std::string& output, bool per_book,
                const CommonOpts& opts) {
    const auto articles = load_manifest(manifest);
    const auto books = partition(articles, opts.n_books, opts.normalize);
    const auto [freq_books, entropy_span] = split_books(books, 0);

    std::vector<Book> entropy_books;
    for (const auto& b : entropy_span) {
        if (b.total_letters > 0) entropy_books.push_back(b);
    }
    if (entropy_books.empty()) throw std::runtime_error("no non-empty entropy books");

    EntropyReport report;
    if (!table_path.empty()) {
        const auto table = load_table(std::filesystem::path(table_path));
        std::map<double, std::set<Letter>> sets;
        for (const auto& [r, n] : table.tiers) sets[r] = tier_set(table, r);
        report = kgram_grid(entropy_books, sets, opts.placeholder_cp(), opts.k_max);
    } else {
        const auto tables = frequency_tables(freq_books);
        const auto family = canonical_sets(tables, opts.r_values, opts.majority);
        report = kgram_grid(entropy_books, family, opts.placeholder_cp(), opts.k_max);
    }
    std::optional<std::ofstream> holder;
    auto& out = output_or_stdout(holder, output);
    csv::write_entropy_report(report, out, per_book);
    return 0;
}

int cmd_validate_table(const std::string& table_path) {
    const auto table = load_table(std::filesystem::path(table_path));
    std::cout << "rows: " << table.rows.size() << "\n";
    std::cout << "tiers: " << table.tiers.size() << "\n";
    for (const auto& [r, n] : table.tiers) {
        std::cout << "  r=" << r << " N=" << n << "\n";
    }
    for (const auto& w : table.warnings) std::cerr << w << "\n";
    std::cout << "warnings: " << table.warnings.size() << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Devanagari letter statistics and k-gram entropy pipeline"};
    app.require_subcommand(1);

    CommonOpts opts;
    std::string input, output, manifest, table_path;
    std::string curve_out, membership_out, sizes_out, table_out;
    bool codepoints = false;
    bool per_book = false;
    double approx_r = 0.85;

    auto add_common = [&](CLI::App* cmd, bool with_r = true) {
        if (with_r) cmd->add_option("--r-values", opts.r_values, "r grid");
        cmd->add_option("--n-books", opts.n_books, "number of books");
        cmd->add_option("--majority", opts.majority,
                        "majority threshold (default ceil(0.7*n_books))");
        cmd->add_flag("--nfc", opts.normalize,
                      "decompose precomposed nukta consonants first");
    };

    auto* seg = app.add_subcommand("segment", "split text into letters");
    seg->add_option("input", input, "input file (default stdin)");
    seg->add_option("-o,--output", output, "output file (default stdout)");
    seg->add_flag("--codepoints", codepoints, "print codepoint sequences");
    seg->add_flag("--nfc", opts.normalize, "decompose precomposed nukta consonants first");

    auto* wordlen = app.add_subcommand("wordlen", "word length histogram");
    wordlen->add_option("input", input, "input file (default stdin)");
    wordlen->add_option("-o,--output", output, "output CSV (default stdout)");

    auto* part = app.add_subcommand("partition", "partition a corpus into books");
    part->add_option("manifest", manifest, "corpus manifest")->required();
    part->add_option("-o,--output", output, "summary CSV (default stdout)");
    add_common(part, false);

    auto* freq = app.add_subcommand("freq", "ranked letter frequencies");
    freq->add_option("input", input, "input file (default stdin)");
    freq->add_option("-o,--output", output, "frequency CSV (default stdout)");
    freq->add_option("--share-curve", curve_out, "share curve CSV");
    freq->add_flag("--nfc", opts.normalize, "decompose precomposed nukta consonants first");

    auto* sets = app.add_subcommand("sets", "canonical letter sets");
    sets->add_option("manifest", manifest, "corpus manifest")->required();
    sets->add_option("--membership", membership_out, "membership matrix CSV");
    sets->add_option("-o,--output", sizes_out, "(r, N_r) CSV (default stdout)");
    add_common(sets);

    auto* probs = app.add_subcommand("probs", "letter probability table");
    probs->add_option("manifest", manifest, "corpus manifest")->required();
    probs->add_option("-o,--output", output, "probability CSV (default stdout)");
    probs->add_option("--emit-table", table_out, "write a reference table file");
    add_common(probs);

    auto* approx = app.add_subcommand("approx", "mask rare letters");
    approx->add_option("input", input, "input file (default stdin)");
    approx->add_option("-t,--table", table_path, "reference table file")->required();
    approx->add_option("-r", approx_r, "tier to keep")->required();
    approx->add_option("-o,--output", output, "output file (default stdout)");
    approx->add_option("--placeholder", opts.placeholder, "placeholder character");
    approx->add_flag("--nfc", opts.normalize, "decompose precomposed nukta consonants first");

    auto* entropy = app.add_subcommand("entropy", "k-gram entropy grid");
    entropy->add_option("manifest", manifest, "corpus manifest")->required();
    entropy->add_option("-t,--table", table_path,
                        "use a reference table's tiers instead of building sets");
    entropy->add_option("-o,--output", output, "report CSV (default stdout)");
    entropy->add_option("--k-max", opts.k_max, "largest block length");
    entropy->add_option("--placeholder", opts.placeholder, "placeholder character");
    entropy->add_flag("--per-book", per_book, "include per-book columns");
    add_common(entropy);

    auto* validate = app.add_subcommand("validate-table", "check a table file");
    validate->add_option("table", table_path, "table file")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        opts.validate();
        if (seg->parsed()) return cmd_segment(input, output, codepoints, opts.normalize);
        if (wordlen->parsed()) return cmd_wordlen(input, output);
        if (part->parsed()) return cmd_partition(manifest, output, opts);
        if (freq->parsed()) return cmd_freq(input, output, curve_out, opts.normalize);
        if (sets->parsed()) return cmd_sets(manifest, membership_out, sizes_out, opts);
        if (probs->parsed()) return cmd_probs(manifest, output, table_out, opts);
        if (approx->parsed()) return cmd_approx(input, table_path, approx_r, output, opts);
        if (entropy->parsed()) return cmd_entropy(manifest, table_path, output, per_book, opts);
        if (validate->parsed()) return cmd_validate_table(table_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
