#pragma once

#include "cfseq/bfile.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace cfseq {

// Leading digits of S_inf + 1 as printed alongside the sequence.
inline constexpr const char* kShiftedSumDigits = "2.5844017240";

struct OeisBFiles
{
    std::optional<BFile> terms;        // A112373: x_n
    std::optional<BFile> ratios;       // A114552: y_n
    std::optional<BFile> coefficients; // A114551: quotients of S_inf + 1 (a_0 = 2)
    std::optional<BFile> digits;       // A114550: decimal digits of S_inf + 1
};

struct DigitCheck
{
    std::string expected = kShiftedSumDigits;
    std::string computed;
    bool ok = false;
    std::optional<SequenceDiff> bfile; // best-effort comparison with the digit b-file
};

struct OeisReport
{
    std::size_t depth = 0;
    std::vector<SequenceDiff> diffs;
    DigitCheck digits;

    bool all_matched() const;
};

/// Compares the x + 1 tables against each supplied b-file. Generation depth
/// grows to cover the b-files' indices, bounded by max_depth.
OeisReport oeis_check(const OeisBFiles& files, std::size_t max_depth = 12);

/// The first `count` digits of S_inf + 1 that are certified by the rational
/// bracket [1 + S_N, 1 + S_N + 2/x_{N+1}], starting with the integer digit.
std::vector<int> certified_shifted_sum_digits(std::size_t depth, std::size_t count);

} // namespace cfseq
