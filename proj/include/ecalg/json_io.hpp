#pragma once

#include <nlohmann/json.hpp>

#include <optional>

#include "ecalg/classify.hpp"

namespace ecalg {

using Json = nlohmann::json;

// Wire formats. Scalars travel as strings ("n" or "n/d") so nothing is ever
// rounded. Fields are {"kind":"gf","p":7} or {"kind":"q"}; an algebra is
// either {"field":..., "matrix":[[a1,b1],[a2,b2],[a3,b3],[a4,b4]]} with rows
// e², f², ef, fe, or the straight form {"field":..., "s":[p,q,a,b,c,d]}.

Json field_to_json(const Field& field);
Field field_from_json(const Json& j);  // ParseError on anything malformed

Json scalar_to_json(const Scalar& s);

Json algebra_to_json(const StructureMatrix& A);
Json straight_to_json(const Field& field, const StraightParams& s);

struct ParsedAlgebra {
  Field field;
  StructureMatrix matrix;
  std::optional<StraightParams> straight;  // present when given in straight form
};
ParsedAlgebra algebra_from_json(const Json& j);

Json transform_to_json(const Transform2& X);

Json ec_verdict_to_json(const EcVerdict& v);
Json iso_witness_to_json(const IsoWitness& w);

Json classification_to_json(const ClassificationReport& report);
Json census_to_json(const Census& census);
Json cross_type_to_json(const CrossTypeReport& report);
Json q_prime_family_to_json(const QPrimeFamilyReport& report);

std::string ec_method_name(EcMethod m);
std::string iso_method_name(IsoMethod m);

}  // namespace ecalg
