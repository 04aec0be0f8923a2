#pragma once

#include <iosfwd>

#include "akshara/entropy.hpp"
#include "akshara/letterstats.hpp"

namespace akshara::csv {

// Plot-ready CSV emitters. All numeric columns use enough digits to round
// trip a double.

void write_share_curve(const ShareCurve& curve, std::ostream& out);  // n,share
void write_word_lengths(const WordLengthStats& stats, std::ostream& out);  // length,count
void write_probability_table(const ProbabilityTable& table, std::ostream& out);  // letter,codepoints,p,cv
void write_set_membership(const LetterSetFamily& family, std::ostream& out);  // letter,r0.60,...
void write_set_sizes(const LetterSetFamily& family, std::ostream& out);  // r,N_r
void write_entropy_report(const EntropyReport& report, std::ostream& out,
                          bool per_book = false);  // r,k,E_mean,E_cv,F[,E_book0...]

}  // namespace akshara::csv
