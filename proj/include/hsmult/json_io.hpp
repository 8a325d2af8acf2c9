#pragma once

#include <json.hpp>

#include "hsmult/blowdown.hpp"
#include "hsmult/chern.hpp"
#include "hsmult/curve.hpp"
#include "hsmult/ideal.hpp"
#include "hsmult/monomial_ideal.hpp"
#include "hsmult/multiplicity.hpp"

namespace hsmult {

using json = nlohmann::json;

// Integers stay JSON numbers up to 2^53 - 1 in magnitude; beyond that they
// become {"bigint": "<decimal>"}. Rationals with denominator 1 follow the
// integer rule; others are canonical "a/b" strings.
json encode_int(const Int& v);
json encode_rat(const Rat& q);
Int decode_int(const json& j);
Rat decode_rat(const json& j);

// Input schemas.
IdealPresentation ideal_from_json(const json& j);
MonomialIdeal monomial_ideal_from_json(const json& j);
CurveGerm germ_from_json(const json& j);
WeightTuple weights_from_json(const json& j);
LineBundleDatum datum_from_json(const json& j);
Semigroup semigroup_from_json(const json& j);
GradedClass chern_from_json(const json& j);
IntersectionTable table_from_json(const json& j, const GradedClass& chern);

// Report encodings (deterministic: object keys sort alphabetically).
json encode_report(const MultiplicityReport& r);
json encode_report(const PolarizationReport& r);
json encode_report(const ReesSharpReport& r);
json encode_report(const CurveCheckReport& r);

}  // namespace hsmult
