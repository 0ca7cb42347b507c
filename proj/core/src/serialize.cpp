#include "cfseq/serialize.hpp"

#include <sstream>
#include <stdexcept>

namespace cfseq {

namespace {

json strings(std::span<const BigInt> v)
{
    json arr = json::array();
    for (const BigInt& x : v)
        arr.push_back(to_decimal(x));
    return arr;
}

json bools(const std::vector<bool>& v)
{
    json arr = json::array();
    for (bool b : v)
        arr.push_back(b);
    return arr;
}

} // namespace

json envelope(const std::string& kind, json payload)
{
    json out = {{"schema", kJsonSchemaVersion}, {"kind", kind}};
    for (auto& [key, value] : payload.items())
        out[key] = std::move(value);
    return out;
}

json quotients_to_json(std::span<const BigInt> a) { return strings(a); }

std::vector<BigInt> quotients_from_json(const json& j)
{
    if (!j.is_array())
        throw std::invalid_argument("expected a JSON array of decimal strings");
    std::vector<BigInt> out;
    for (const json& e : j) {
        if (!e.is_string())
            throw std::invalid_argument("big integers must be encoded as decimal strings");
        out.push_back(parse_decimal(e.get<std::string>()));
    }
    return out;
}

json to_json(const Rational& r) { return {{"num", to_decimal(r.num())}, {"den", to_decimal(r.den())}}; }

Rational rational_from_json(const json& j)
{
    return Rational(parse_decimal(j.at("num").get<std::string>()), parse_decimal(j.at("den").get<std::string>()));
}

json to_json(const HighPrecReal& v, unsigned digits)
{
    return {{"value", v.to_decimal(digits)},
            {"precision_bits", v.precision()},
            {"error_ulps", to_decimal(v.error_ulps())},
            {"digits", digits}};
}

json to_json(const SeqTable& t)
{
    return {{"F", strings(t.poly().coeffs())}, {"xs", strings(t.xs())}, {"ys", strings(t.ys())}, {"zs", strings(t.zs())}};
}

SeqTable seq_table_from_json(const json& j)
{
    if (j.contains("schema") && j.at("schema") != kJsonSchemaVersion)
        throw std::invalid_argument("unsupported schema version");
    SeqTable t = SeqTable::from_terms(make_poly(quotients_from_json(j.at("F"))), quotients_from_json(j.at("xs")));
    t.validate();
    if (j.contains("ys") && quotients_from_json(j.at("ys")) != t.ys())
        throw std::invalid_argument("stored ys disagree with xs");
    if (j.contains("zs") && quotients_from_json(j.at("zs")) != t.zs())
        throw std::invalid_argument("stored zs disagree with xs");
    return t;
}

json to_json(const CFExpansion& cf) { return {{"a", strings(cf.a)}, {"p", strings(cf.p)}, {"q", strings(cf.q)}}; }

json to_json(const TheoremReport& r)
{
    return {{"F", strings(r.poly.coeffs())},
            {"N", r.depth},
            {"S_N", to_json(r.partial_sum)},
            {"predicted_a", strings(r.predicted_a)},
            {"expanded_a", strings(r.expanded_a)},
            {"match", r.match},
            {"q_odd_ok", bools(r.q_odd_ok)},
            {"q_even_ok", bools(r.q_even_ok)},
            {"even_convergent_ok", bools(r.even_convergent_ok)},
            {"engel_ok", r.engel_ok},
            {"shallit", to_string(r.shallit)},
            {"passed", r.all_passed()}};
}

json to_json(const AsymptoticReport& r, unsigned digits)
{
    json alpha = json::array();
    for (const HighPrecReal& a : r.alpha)
        alpha.push_back(to_json(a, digits));
    json predictions = json::array();
    for (const TermPrediction& p : r.predictions)
        predictions.push_back({{"n", p.n},
                               {"predicted_log", to_json(p.predicted_log, digits)},
                               {"actual_log", to_json(p.actual_log, digits)},
                               {"relative_error", p.relative_error}});
    json exact = json::array();
    for (const ExactFormulaCheck& c : r.exact_formula)
        exact.push_back({{"n", c.n},
                         {"precision_bits", c.precision},
                         {"residual_log2_bound", c.error_log2},
                         {"within_2^-128", c.residual.magnitude_below_pow2(-128)}});
    return {{"F", strings(r.poly.coeffs())},
            {"precision_bits", r.precision},
            {"lambda", to_json(r.lambda, digits)},
            {"C", to_json(r.C, digits)},
            {"alpha", std::move(alpha)},
            {"truncation_k", r.truncation_k},
            {"tail_bound", to_json(r.tail_bound, digits)},
            {"predictions", std::move(predictions)},
            {"exact_formula", std::move(exact)}};
}

json to_json(const GrowthRecord& g, unsigned digits)
{
    return {{"n", g.n}, {"log_ratio", to_json(g.log_ratio, digits)}, {"x_next_sq_gt_x_pow5", g.exceeds_five_halves}};
}

json to_json(const ApproxRecord& r, unsigned digits)
{
    return {{"n", r.n},
            {"q", to_decimal(r.q)},
            {"err_lo", to_json(r.err_lo)},
            {"err_hi", to_json(r.err_hi)},
            {"E_lo", to_json(r.E_lo, digits)},
            {"E_hi", to_json(r.E_hi, digits)},
            {"roth_pass", r.roth_pass}};
}

json to_json(const EvidenceReport& r, unsigned digits)
{
    json growth = json::array();
    for (const GrowthRecord& g : r.growth)
        growth.push_back(to_json(g, digits));
    json records = json::array();
    for (const ApproxRecord& a : r.records)
        records.push_back(to_json(a, digits));
    return {{"F", strings(r.poly.coeffs())},
            {"lambda", to_json(r.lambda, digits)},
            {"delta", to_json(r.delta)},
            {"growth", std::move(growth)},
            {"growth_ok", r.growth_ok},
            {"records", std::move(records)},
            {"all_roth_pass", r.all_roth_pass},
            {"onset_index", r.onset_index},
            {"interpretation", r.interpretation}};
}

json to_json(const SequenceDiff& d)
{
    json out = {{"source_id", d.source_id}, {"compared", d.compared}, {"matched", d.matched()}};
    if (d.first_mismatch) {
        out["first_mismatch"] = *d.first_mismatch;
        out["expected"] = to_decimal(d.expected);
        out["actual"] = to_decimal(d.actual);
    } else {
        out["first_mismatch"] = nullptr;
    }
    return out;
}

json to_json(const OeisReport& r)
{
    json diffs = json::array();
    for (const SequenceDiff& d : r.diffs)
        diffs.push_back(to_json(d));
    json digits = {{"expected", r.digits.expected}, {"computed", r.digits.computed}, {"ok", r.digits.ok}};
    if (r.digits.bfile)
        digits["bfile"] = to_json(*r.digits.bfile);
    return {{"depth", r.depth}, {"diffs", std::move(diffs)}, {"digits", std::move(digits)}, {"matched", r.all_matched()}};
}

std::string to_csv(const EvidenceReport& r, unsigned digits)
{
    std::ostringstream out;
    out << "n,q_digits,E_lo,E_hi,roth_pass\n";
    for (const ApproxRecord& a : r.records)
        out << a.n << ',' << to_decimal(a.q).size() << ',' << a.E_lo.to_decimal(digits) << ','
            << a.E_hi.to_decimal(digits) << ',' << (a.roth_pass ? "true" : "false") << '\n';
    return out.str();
}

} // namespace cfseq
