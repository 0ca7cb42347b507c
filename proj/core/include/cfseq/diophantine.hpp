#pragma once

#include "cfseq/high_prec.hpp"
#include "cfseq/rational.hpp"
#include "cfseq/recurrence.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace cfseq {

struct TailBracket
{
    Rational lo; // sum_{j=from}^{M} 1/x_j
    Rational hi; // lo + 2/x_{M+1}
};

/// Brackets sum_{j >= from_j} 1/x_j. Needs x_{M+1} in the table and y_M >= 2.
TailBracket tail_bracket(const SeqTable& t, std::size_t from_j, std::size_t horizon);

struct ApproxRecord
{
    std::size_t n = 0;
    BigInt q;           // q_{2n} = x_{n+1}
    Rational err_lo;    // brackets S_inf - p_{2n}/q_{2n}
    Rational err_hi;
    HighPrecReal E_lo;  // brackets ln(1/err)/ln q
    HighPrecReal E_hi;
    bool roth_pass = false; // E_lo > 2 + delta
};

struct RothConfig
{
    Rational delta = Rational(BigInt(1), BigInt(10));
    std::size_t horizon_offset = 4; // M = n + horizon_offset
    unsigned precision = kDefaultPrecision;
    std::size_t max_terms = kDefaultMaxTerms;
};

/// Approximation exponent of p_{2n}/q_{2n} = S_{n+1}. Requires horizon >= n + 4
/// and n >= 1 (q_{2n} > 1).
ApproxRecord roth_exponent(const SeqTable& t, std::size_t n, std::size_t horizon, const Rational& delta,
                           unsigned precision = kDefaultPrecision);

struct EvidenceReport
{
    PolyF poly;
    HighPrecReal lambda;
    Rational delta;
    std::vector<GrowthRecord> growth;
    bool growth_ok = false;      // x_{n+1}^2 > x_n^5 for every sampled n
    std::vector<ApproxRecord> records;
    bool all_roth_pass = false;
    std::size_t onset_index = 0; // first n from which every sampled record passes; 0 if none
    std::string interpretation;
};

/// Throws ConfigRejected if delta >= lambda - 2 - 0.05.
void check_delta(const HighPrecReal& lambda, const Rational& delta);

/// Growth condition plus exponent records over [n_first, n_last].
EvidenceReport transcendence_evidence(const PolyF& f, std::size_t n_first, std::size_t n_last,
                                      const RothConfig& config = {});

} // namespace cfseq
