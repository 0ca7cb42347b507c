#include "cfseq/diophantine.hpp"

#include "cfseq/asymptotics.hpp"
#include "cfseq/errors.hpp"

#include <future>
#include <stdexcept>
#include <string>

namespace cfseq {

TailBracket tail_bracket(const SeqTable& t, std::size_t from_j, std::size_t horizon)
{
    if (from_j < 1 || horizon < from_j)
        throw std::invalid_argument("tail_bracket: need 1 <= from_j <= M");
    if (t.last_index() < horizon + 1)
        throw InsufficientTerms("tail_bracket: x_" + std::to_string(horizon + 1) + " not in table");
    if (t.y(horizon) < 2)
        throw std::invalid_argument("tail_bracket: y_M >= 2 required for the tail estimate");

    // from x_M on every ratio is >= 2, so sum_{j > M} 1/x_j < 2/x_{M+1}
    Rational lo;
    for (std::size_t j = from_j; j <= horizon; ++j)
        lo += Rational(BigInt(1), t.x(j));
    Rational hi = lo + Rational(BigInt(2), t.x(horizon + 1));
    return {std::move(lo), std::move(hi)};
}

ApproxRecord roth_exponent(const SeqTable& t, std::size_t n, std::size_t horizon, const Rational& delta,
                           unsigned precision)
{
    if (n < 1)
        throw std::invalid_argument("roth_exponent: n must be >= 1");
    if (horizon < n + 4)
        throw std::invalid_argument("roth_exponent: horizon must be >= n + 4");

    // p_{2n}/q_{2n} = S_{n+1}, so the error is exactly the tail from j = n + 2
    TailBracket err = tail_bracket(t, n + 2, horizon);

    ApproxRecord rec;
    rec.n = n;
    rec.q = t.x(n + 1);
    const HighPrecReal log_q = log_bigint(rec.q, precision);
    const HighPrecReal log_inv_hi = log_ratio(err.hi.den(), err.hi.num(), precision);
    const HighPrecReal log_inv_lo = log_ratio(err.lo.den(), err.lo.num(), precision);
    rec.E_lo = (log_inv_hi.lower() / log_q.upper()).lower();
    rec.E_hi = (log_inv_lo.upper() / log_q.lower()).upper();
    rec.err_lo = std::move(err.lo);
    rec.err_hi = std::move(err.hi);
    rec.roth_pass = rec.E_lo.to_rational() > (mpq_class(2) + delta.mpq());
    return rec;
}

void check_delta(const HighPrecReal& lambda, const Rational& delta)
{
    if (delta.sign() <= 0)
        throw ConfigRejected("delta must be positive");
    const mpq_class limit = lambda.lower().to_rational() - 2 - mpq_class(1, 20);
    if (delta.mpq() >= limit)
        throw ConfigRejected("delta = " + delta.to_string() + " is at or beyond lambda - 2 - 0.05 (lambda ~ "
                             + lambda.to_decimal(6) + "); exponents approach lambda and cannot clear 2 + delta");
}

EvidenceReport transcendence_evidence(const PolyF& f, std::size_t n_first, std::size_t n_last,
                                      const RothConfig& config)
{
    if (n_first < 1 || n_last < n_first)
        throw std::invalid_argument("transcendence_evidence: need 1 <= n_first <= n_last");
    if (config.horizon_offset < 4)
        throw std::invalid_argument("transcendence_evidence: horizon offset must be >= 4");

    EvidenceReport rep{.poly = f, .lambda = char_root(f.degree(), config.precision), .delta = config.delta};
    check_delta(rep.lambda, config.delta);

    const std::size_t depth = n_last + config.horizon_offset + 1;
    const SeqTable t = generate(f, depth, config.max_terms);

    rep.growth = growth_metrics(t, config.precision);
    rep.growth_ok = true;
    for (const GrowthRecord& g : rep.growth)
        rep.growth_ok = rep.growth_ok && g.exceeds_five_halves;

    std::vector<std::future<ApproxRecord>> jobs;
    for (std::size_t n = n_first; n <= n_last; ++n)
        jobs.push_back(std::async(std::launch::async, [&t, &config, n] {
            return roth_exponent(t, n, n + config.horizon_offset, config.delta, config.precision);
        }));
    for (auto& job : jobs)
        rep.records.push_back(job.get());

    rep.all_roth_pass = true;
    for (const ApproxRecord& r : rep.records)
        rep.all_roth_pass = rep.all_roth_pass && r.roth_pass;
    for (auto it = rep.records.rbegin(); it != rep.records.rend() && it->roth_pass; ++it)
        rep.onset_index = it->n;

    rep.interpretation =
        "Premises checked on the sampled range only: x_{n+1}^2 > x_n^5 and approximation exponents E_n > 2 + delta "
        "for n >= onset_index. If such approximations exist for infinitely many n, Roth's theorem rules out an "
        "algebraic value; a finite sample is evidence, not a proof.";
    return rep;
}

} // namespace cfseq
