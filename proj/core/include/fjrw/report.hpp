#pragma once

// Serialization of reports and basis elements. Rationals are serialized as
// exact "p/q" strings; object key order is fixed so repeated runs produce
// byte-identical output.

#include <fjrw/frobenius.hpp>
#include <fjrw/sweep.hpp>
#include <fjrw/tables.hpp>

#include <nlohmann/json.hpp>

namespace fjrw {

using Json = nlohmann::ordered_json;

Json to_json(const BasisElement& e);

/// {"input":…, "type":…, "weight_system":{d,w1,w2,delta}, "chat":"p/q",
///  "mu":{total,nar,bro}, "C_d":"p/q", "lambda":…, "verdict":…,
///  "witnesses":{…}, "citations":[…]} plus the graded basis.
Json report_json(const SemisimplicityReport& r);

struct CorrelatorOutcome {
  CorrelatorSpec spec;
  LineBundleDegrees degrees;
  NonvanishingCheck check;
  std::optional<RankProfile> profile;
  std::optional<Rational> value;
  std::string note;  // diagnosis when no value was produced
};

/// Evaluate with full diagnostics; never throws for vanishing-type outcomes.
CorrelatorOutcome evaluate_with_diagnostics(const CorrelatorSpec& spec);

Json correlator_json(const CorrelatorOutcome& o);

Json euler_json(const InvertiblePolynomial& p);

Json sweep_json(const std::vector<SweepRow>& rows, long long d_max);

Json tables_json(const std::optional<WeightSystem>& ws);

}  // namespace fjrw
