#pragma once

#include "cfseq/bigint.hpp"
#include "cfseq/continued_fraction.hpp"
#include "cfseq/rational.hpp"
#include "cfseq/recurrence.hpp"

#include <cstddef>
#include <vector>

namespace cfseq {

inline constexpr std::size_t kDefaultVerifyDepth = 12;

/// [a_0 .. a_{2N-2}] with a_{2n} = x_n and a_{2n+1} = (F(x_{n+1}) - 1)/x_n.
/// Each odd entry is also checked against y_n G(x_{n+1}). Throws
/// InexactDivision if (F(x_{n+1}) - 1) is not a multiple of x_n, Mismatch if
/// the two odd-entry routes disagree or an entry is not positive.
std::vector<BigInt> predicted_coeffs(const SeqTable& t, std::size_t depth);

/// S_N = sum_{j=1}^{N} 1/x_j (the j = 0 term is excluded).
Rational partial_sum(const SeqTable& t, std::size_t depth);

/// S_1 .. S_N in one pass.
std::vector<Rational> partial_sums(const SeqTable& t, std::size_t depth);

enum class ShallitResult
{
    Pass,
    Fail,
    NotApplicable,
};

const char* to_string(ShallitResult r);

struct TheoremReport
{
    PolyF poly;
    std::size_t depth = 0;
    Rational partial_sum;              // S_N
    std::vector<BigInt> predicted_a;   // from the sequence
    std::vector<BigInt> expanded_a;    // Euclidean expansion of S_N
    bool match = false;                // cf_equivalent(predicted_a, expanded_a)
    std::vector<bool> q_odd_ok;        // q_{2n-1} == y_n - 1, n = 0 .. N-1
    std::vector<bool> q_even_ok;       // q_{2n}   == x_{n+1}, n = 0 .. N-1
    std::vector<bool> even_convergent_ok; // p_{2n}/q_{2n} == S_{n+1}, n = 0 .. N-1
    bool engel_ok = false;
    ShallitResult shallit = ShallitResult::NotApplicable;

    bool all_passed() const;
};

/// Checks the interlacing theorem for S_N against both routes. Throws
/// Mismatch with the failing check and index if anything disagrees.
/// Requires depth >= 2 and a table holding x_0..x_depth.
TheoremReport verify_theorem1(const SeqTable& t, std::size_t depth);
TheoremReport verify_theorem1(const PolyF& f, std::size_t depth);

/// S_N - 1 == sum_{j=1}^{N-1} 1/(y_1 ... y_j), and y_n >= 2 for 1 <= n < N.
bool verify_engel(const SeqTable& t, std::size_t depth);

/// Coefficient list of S_inf + 1 (leading quotient 2) for F(x) = x + 1:
/// first N predicted quotients with a_0 replaced by 2.
std::vector<BigInt> shifted_sum_coeffs(const SeqTable& t, std::size_t count);

/// a_{2n} = a_{2n-1} a_{2n-2} for n >= 2 and a_{2n+1} = a_{2n-1}(a_{2n} + 1)
/// for n >= 1, over every index present in `a`. Only meaningful for x + 1.
ShallitResult verify_shallit(const PolyF& f, std::span<const BigInt> a);

} // namespace cfseq
