#pragma once

#include <json.hpp>

#include "milag/cases.hpp"
#include "milag/search.hpp"
#include "milag/verify.hpp"

namespace milag {

using json = nlohmann::json;

// Rational <-> "p/q" (or "n"); Poly <-> ascending coefficient array;
// GPoly <-> array of arrays (inner ascending in g).  Round trips are
// bit-exact.
json to_json(const Rational& r);
Rational rational_from_json(const json& j);

json to_json(const PolyQ& p);
PolyQ polyq_from_json(const json& j);

json to_json(const GPoly& p);
GPoly gpoly_from_json(const json& j);

json to_json(const LinearG& p);
LinearG linearg_from_json(const json& j);

json to_json(const QuasiFunction& f); // {expo, power, poly}
QuasiFunction quasifunction_from_json(const json& j);

json to_json(const SeedSpec& s);
json to_json(const SearchHit& h);
json to_json(const DeformedPotential& u);
json to_json(const GlobalSolution& s);
json to_json(const QuadratureResult& r);
json to_json(const CheckResult& r);
json to_json(const VerificationRun& r);

/// Catalog export: seeds, g, specialized Wronskian, potential rational
/// form, weight, norm metadata, index bookkeeping.
json case_to_json(const CaseSpec& c);

/// Fixture import for the verifier: {"case": <name>} picks a catalog
/// entry; optional keys ("extras", "printed_members",
/// "expected_discriminant") override the corresponding reference data.
CaseSpec case_fixture_from_json(const json& j);

} // namespace milag
