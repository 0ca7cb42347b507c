#pragma once

#include "cfseq/bigint.hpp"
#include "cfseq/high_prec.hpp"
#include "cfseq/rational.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace cfseq {

/// Partial quotients a_0..a_n with every convergent p_k/q_k.
///
/// p, q follow the three-term recurrence seeded by q_{-1} = 0,
/// p_{-1} = q_0 = 1, p_0 = a_0; the seeds are not stored, so p[k], q[k]
/// hold p_k, q_k for 0 <= k <= n.
struct CFExpansion
{
    std::vector<BigInt> a;
    std::vector<BigInt> p;
    std::vector<BigInt> q;

    std::size_t size() const noexcept { return a.size(); }
    Rational convergent(std::size_t k) const { return Rational(p.at(k), q.at(k)); }
    Rational value() const { return convergent(a.size() - 1); }
};

/// Canonical expansion by the Euclidean algorithm with floor quotients.
/// Accepts negative input; the last quotient is >= 2 whenever there is more than one.
CFExpansion cf_expand(const Rational& r);

/// Builds the convergent table. Throws InvalidQuotient for a_k < 1 with k >= 1,
/// std::invalid_argument for an empty list, and Mismatch if either convergent
/// identity fails (it cannot, short of a broken big-integer backend).
CFExpansion convergents(std::span<const BigInt> a);

/// Same table computed as the explicit product of [[a_k, 1], [1, 0]] matrices.
/// Independent route used to self-test convergents().
CFExpansion convergents_by_matrix(std::span<const BigInt> a);

/// First index k >= 0 where p_k q_{k-1} - p_{k-1} q_k != (-1)^{k+1}, if any.
std::optional<std::size_t> find_determinant_violation(const CFExpansion& cf);

/// First index k >= 1 where p_k q_{k-2} - p_{k-2} q_k != (-1)^k a_k, if any.
std::optional<std::size_t> find_second_identity_violation(const CFExpansion& cf);

/// Rewrites a trailing 1 as an increment of the previous quotient: [.., m, 1] -> [.., m + 1].
std::vector<BigInt> canonical_quotients(std::span<const BigInt> a);

/// Both lists denote the same rational.
bool cf_equivalent(std::span<const BigInt> a, std::span<const BigInt> b);

/// Value of the finite continued fraction, rounded from the exact convergent.
/// Error <= 2^(1-P). Requires precision >= 64.
HighPrecReal cf_value(std::span<const BigInt> a, unsigned precision = kDefaultPrecision);

} // namespace cfseq
