#pragma once

#include "cfseq/asymptotics.hpp"
#include "cfseq/continued_fraction.hpp"
#include "cfseq/diophantine.hpp"
#include "cfseq/oeis.hpp"
#include "cfseq/rational.hpp"
#include "cfseq/recurrence.hpp"
#include "cfseq/theorem.hpp"

#include <nlohmann/json.hpp>

#include <span>
#include <string>

namespace cfseq {

inline constexpr int kJsonSchemaVersion = 1;

using nlohmann::json;

/// {"schema": 1, "kind": kind, ...payload}
json envelope(const std::string& kind, json payload);

json quotients_to_json(std::span<const BigInt> a);
std::vector<BigInt> quotients_from_json(const json& j);

json to_json(const Rational& r);
Rational rational_from_json(const json& j);

/// {"value": "...", "precision_bits": P, "error_ulps": "...", "digits": D}
json to_json(const HighPrecReal& v, unsigned digits = 30);

json to_json(const SeqTable& t);
/// Rebuilds and fully validates a table written by to_json.
SeqTable seq_table_from_json(const json& j);

json to_json(const CFExpansion& cf);
json to_json(const TheoremReport& r);
json to_json(const AsymptoticReport& r, unsigned digits = 30);
json to_json(const GrowthRecord& g, unsigned digits = 30);
json to_json(const ApproxRecord& r, unsigned digits = 30);
json to_json(const EvidenceReport& r, unsigned digits = 30);
json to_json(const SequenceDiff& d);
json to_json(const OeisReport& r);

/// n,q_digits,E_lo,E_hi,roth_pass
std::string to_csv(const EvidenceReport& r, unsigned digits = 12);

} // namespace cfseq
