#pragma once

#include "cfseq/bigint.hpp"
#include "cfseq/high_prec.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace cfseq {

/// Admissible polynomial F for x_{n+2} x_n = x_{n+1}^2 F(x_{n+1}):
/// nonnegative integer coefficients, F(0) = 1, degree >= 1.
/// Coefficients are stored constant term first.
class PolyF
{
public:
    /// Throws RejectedPoly if any admissibility condition fails.
    static PolyF make(std::vector<BigInt> coeffs);

    const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }
    std::size_t degree() const noexcept { return coeffs_.size() - 1; }
    const BigInt& leading() const noexcept { return coeffs_.back(); }

    /// Coefficients of G with F(x) = 1 + x G(x).
    std::span<const BigInt> cofactor() const noexcept
    {
        return std::span<const BigInt>(coeffs_).subspan(1);
    }

    /// F(x) = x + 1, the polynomial of the original sequence.
    bool is_x_plus_one() const;

    /// Sum of c_0 .. c_{d-1}.
    BigInt non_leading_sum() const;

    friend bool operator==(const PolyF&, const PolyF&) = default;

private:
    explicit PolyF(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {}

    std::vector<BigInt> coeffs_;
};

inline PolyF make_poly(std::vector<BigInt> coeffs) { return PolyF::make(std::move(coeffs)); }
PolyF make_poly(std::initializer_list<long> coeffs);

/// Horner evaluation of an arbitrary integer polynomial (constant term first).
BigInt eval_poly(std::span<const BigInt> coeffs, const BigInt& x);
inline BigInt eval_poly(const PolyF& f, const BigInt& x) { return eval_poly(f.coeffs(), x); }

/// G(x) where F(x) = 1 + x G(x).
inline BigInt eval_cofactor(const PolyF& f, const BigInt& x) { return eval_poly(f.cofactor(), x); }

/// The three integer sequences generated from x_0 = x_1 = 1:
///   xs = x_0..x_N, ys = y_0..y_{N-1} with y_n = x_{n+1}/x_n,
///   zs = z_0..z_{N-2} with z_n = y_{n+1}/y_n = F(x_{n+1}).
/// Immutable once built.
class SeqTable
{
public:
    /// Rebuilds ratios from given x terms, checking every division is exact.
    /// Does not check the recurrence; see validate().
    static SeqTable from_terms(PolyF f, std::vector<BigInt> xs);

    const PolyF& poly() const noexcept { return f_; }
    const std::vector<BigInt>& xs() const noexcept { return xs_; }
    const std::vector<BigInt>& ys() const noexcept { return ys_; }
    const std::vector<BigInt>& zs() const noexcept { return zs_; }

    const BigInt& x(std::size_t n) const { return xs_.at(n); }
    const BigInt& y(std::size_t n) const { return ys_.at(n); }
    const BigInt& z(std::size_t n) const { return zs_.at(n); }

    /// Index of the last stored x term.
    std::size_t last_index() const noexcept { return xs_.size() - 1; }

    /// Checks every stored invariant; throws Mismatch naming the first failure.
    void validate() const;

private:
    SeqTable(PolyF f, std::vector<BigInt> xs, std::vector<BigInt> ys, std::vector<BigInt> zs)
        : f_(std::move(f)), xs_(std::move(xs)), ys_(std::move(ys)), zs_(std::move(zs))
    {
    }

    friend SeqTable generate(const PolyF& f, std::size_t n, std::size_t max_terms);

    PolyF f_;
    std::vector<BigInt> xs_;
    std::vector<BigInt> ys_;
    std::vector<BigInt> zs_;
};

// For d = 1, x_20 already has millions of digits.
inline constexpr std::size_t kDefaultMaxTerms = 20;

/// Generates x_0..x_n. Requires 1 <= n <= max_terms (std::invalid_argument otherwise).
SeqTable generate(const PolyF& f, std::size_t n, std::size_t max_terms = kDefaultMaxTerms);

enum class OrbitStatus
{
    Complete,    // all requested terms computed
    Singular,    // F(x_m) = 0: x_{m+1} = x_{m+2} = 0 and x_{m+3} is undefined
    NonIntegral, // a division left a remainder (initial data outside the Laurent specialisation)
};

struct GeneralOrbit
{
    std::vector<BigInt> coeffs;
    std::vector<BigInt> xs;
    OrbitStatus status = OrbitStatus::Complete;
    /// Singular: the m with F(x_m) = 0. NonIntegral: the index that failed.
    std::optional<std::size_t> index;
};

/// Iterates the recurrence for any integer F and nonzero initial values
/// without theorem claims. Stops at the first singularity or inexact step.
GeneralOrbit generate_general(std::span<const BigInt> coeffs, const BigInt& x0, const BigInt& x1,
                              std::size_t n);

struct GrowthRecord
{
    std::size_t n = 0;
    HighPrecReal log_ratio; // ln x_{n+1} / ln x_n
    bool exceeds_five_halves = false; // x_{n+1}^2 > x_n^5, exact
};

/// Exact test of x_{n+1}^2 > x_n^5.
bool exceeds_five_halves_power(const BigInt& next, const BigInt& cur);

/// One record for each n >= 2 with x_{n+1} stored. Requires at least 4 terms.
std::vector<GrowthRecord> growth_metrics(const SeqTable& t, unsigned precision = kDefaultPrecision);

} // namespace cfseq
