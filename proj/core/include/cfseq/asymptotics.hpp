#pragma once

#include "cfseq/high_prec.hpp"
#include "cfseq/recurrence.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace cfseq {

/// Larger root of t^2 - (d + 2) t + 1, computed from an integer square root.
HighPrecReal char_root(std::size_t degree, unsigned precision = kDefaultPrecision);

/// alpha_k = ln(F(x_k) / (c x_k^d)). Requires 1 <= k <= t.last_index().
HighPrecReal alpha_k(const SeqTable& t, std::size_t k, unsigned precision = kDefaultPrecision);

struct ExactFormulaCheck
{
    std::size_t n = 0;
    unsigned precision = 0;    // after escalation
    HighPrecReal formula;      // right-hand side of the closed form
    HighPrecReal log_term;     // ln x_n
    HighPrecReal residual;     // |formula - ln x_n|, error bound included in its interval
    long error_log2 = 0;       // ceil(log2) of the residual's upper end; residual <= 2^error_log2
};

/// Evaluates
///   ln x_n = (((1 - 1/l) l^n - (1 - l) l^-n)/(l - 1/l) - 1) ln c^{1/d}
///          + sum_{k=1}^{n-1} ((l^{n-k} - l^{k-n})/(l - 1/l)) alpha_k
/// and compares with ln x_n. Precision doubles (from `precision`) until the
/// accumulated error bound is below 2^-128. Requires 2 <= n <= t.last_index().
ExactFormulaCheck verify_exact_formula(const SeqTable& t, std::size_t n, unsigned precision = kDefaultPrecision);

struct TermPrediction
{
    std::size_t n = 0;
    HighPrecReal predicted_log; // C l^n - ln(c)/d
    HighPrecReal actual_log;    // ln x_n
    double relative_error = 0;
};

struct AsymptoticReport
{
    PolyF poly;
    unsigned precision = 0;
    HighPrecReal lambda;
    HighPrecReal C;
    std::vector<HighPrecReal> alpha; // alpha_1 .. alpha_N; the first K enter C
    std::size_t truncation_k = 0;
    HighPrecReal tail_bound;         // rigorous overestimate of the dropped tail of C
    std::vector<TermPrediction> predictions;
    std::vector<ExactFormulaCheck> exact_formula; // n = 2 .. last index
};

/// C = ((1 - 1/l)/(l - 1/l)) ln c^{1/d} + (1/(l - 1/l)) sum_{k=1}^{K} l^-k alpha_k,
/// with tail bound l^-K alpha_K l/(l - 1). K defaults to the number of
/// usable alphas. Throws InsufficientTerms if K exceeds what the table provides
/// and Mismatch if the computed alphas are not decreasing past K.
AsymptoticReport estimate_C(const SeqTable& t, std::optional<std::size_t> truncation = std::nullopt,
                            unsigned precision = kDefaultPrecision);

} // namespace cfseq
