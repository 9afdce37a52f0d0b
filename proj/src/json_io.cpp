#include "ecalg/json_io.hpp"

namespace ecalg {

namespace {

const Json& require_key(const Json& j, const char* key, const char* where) {
  if (!j.is_object() || !j.contains(key)) {
    throw ParseError(std::string(where) + ": missing key '" + key + "'");
  }
  return j.at(key);
}

Scalar scalar_from_json(const Field& field, const Json& j, const std::string& where) {
  if (!j.is_string()) throw ParseError(where + ": scalar must be a string");
  return field.parse_scalar(j.get<std::string>());
}

Json pair_json(const Scalar& a, const Scalar& b) {
  return Json::array({a.str(), b.str()});
}

Json straight_array(const StraightParams& s) {
  return Json::array({s.p.str(), s.q.str(), s.a.str(), s.b.str(), s.c.str(), s.d.str()});
}

}  // namespace

std::string ec_method_name(EcMethod m) {
  switch (m) {
    case EcMethod::Definitional: return "definitional";
    case EcMethod::GeneralSystem: return "general-system";
    case EcMethod::StraightSystem: return "straight-system";
  }
  return "?";
}

std::string iso_method_name(IsoMethod m) {
  switch (m) {
    case IsoMethod::BruteForce: return "brute-force";
    case IsoMethod::StraightSystem: return "straight-system";
    case IsoMethod::CubeRatioDiagonal: return "cube-ratio-diagonal";
    case IsoMethod::SquareRatioAntidiagonal: return "square-ratio-antidiagonal";
    case IsoMethod::CubeClassTest: return "cube-class-test";
  }
  return "?";
}

Json field_to_json(const Field& field) {
  if (field.is_prime_field()) return Json{{"kind", "gf"}, {"p", field.modulus()}};
  return Json{{"kind", "q"}};
}

Field field_from_json(const Json& j) {
  const Json& kind = require_key(j, "kind", "field");
  if (!kind.is_string()) throw ParseError("field: 'kind' must be a string");
  const std::string k = kind.get<std::string>();
  if (k == "q") return Field::rationals();
  if (k != "gf") throw ParseError("field: unknown kind '" + k + "'");
  const Json& p = require_key(j, "p", "field");
  if (!p.is_number_unsigned()) throw ParseError("field: 'p' must be a positive integer");
  try {
    return Field::gf(p.get<std::uint64_t>());
  } catch (const DomainError& e) {
    throw ParseError(std::string("field: ") + e.what());
  }
}

Json scalar_to_json(const Scalar& s) { return s.str(); }

Json algebra_to_json(const StructureMatrix& A) {
  return Json{{"field", field_to_json(A.field())},
              {"matrix", Json::array({pair_json(A.ee().e, A.ee().f), pair_json(A.ff().e, A.ff().f),
                                      pair_json(A.ef().e, A.ef().f),
                                      pair_json(A.fe().e, A.fe().f)})}};
}

Json straight_to_json(const Field& field, const StraightParams& s) {
  return Json{{"field", field_to_json(field)}, {"s", straight_array(s)}};
}

ParsedAlgebra algebra_from_json(const Json& j) {
  const Field field = field_from_json(require_key(j, "field", "algebra"));
  const bool has_matrix = j.is_object() && j.contains("matrix");
  const bool has_straight = j.is_object() && j.contains("s");
  if (has_matrix == has_straight) {
    throw ParseError("algebra: exactly one of 'matrix' and 's' must be present");
  }
  if (has_straight) {
    const Json& arr = j.at("s");
    if (!arr.is_array() || arr.size() != 6) {
      throw ParseError("algebra: 's' must hold the six scalars p,q,a,b,c,d");
    }
    std::array<Scalar, 6> v = {field.zero(), field.zero(), field.zero(),
                               field.zero(), field.zero(), field.zero()};
    static const char* names[6] = {"p", "q", "a", "b", "c", "d"};
    for (std::size_t i = 0; i < 6; ++i) {
      v[i] = scalar_from_json(field, arr.at(i), std::string("s.") + names[i]);
    }
    const StraightParams s{v[0], v[1], v[2], v[3], v[4], v[5]};
    return ParsedAlgebra{field, embed(field, s), s};
  }
  const Json& rows = j.at("matrix");
  if (!rows.is_array() || rows.size() != 4) {
    throw ParseError("algebra: 'matrix' must hold four rows (e2, f2, ef, fe)");
  }
  std::array<Element, 4> parsed = {zero_element(field), zero_element(field),
                                   zero_element(field), zero_element(field)};
  for (std::size_t i = 0; i < 4; ++i) {
    const Json& row = rows.at(i);
    if (!row.is_array() || row.size() != 2) {
      throw ParseError("algebra: matrix[" + std::to_string(i) + "] must hold two scalars");
    }
    parsed[i] = Element{
        scalar_from_json(field, row.at(0), "matrix[" + std::to_string(i) + "][0]"),
        scalar_from_json(field, row.at(1), "matrix[" + std::to_string(i) + "][1]"),
    };
  }
  StructureMatrix M(field, parsed[0], parsed[1], parsed[2], parsed[3]);
  return ParsedAlgebra{field, M, as_straight(M)};
}

Json transform_to_json(const Transform2& X) {
  return Json::array({pair_json(X.x, X.y), pair_json(X.z, X.w)});
}

Json ec_verdict_to_json(const EcVerdict& v) {
  Json out{{"is_ec", v.is_ec}, {"method", ec_method_name(v.method)}};
  if (v.failing_equation) out["failing_equation"] = *v.failing_equation;
  if (v.counterexample) {
    out["counterexample"] = Json{{"x", pair_json(v.counterexample->first.e,
                                                 v.counterexample->first.f)},
                                 {"y", pair_json(v.counterexample->second.e,
                                                 v.counterexample->second.f)}};
  }
  return out;
}

Json iso_witness_to_json(const IsoWitness& w) {
  Json out{{"found", w.found}, {"method", iso_method_name(w.method)}};
  if (w.X) out["x"] = transform_to_json(*w.X);
  return out;
}

Json classification_to_json(const ClassificationReport& report) {
  Json classes = Json::array();
  for (const TypeIClass& cls : report.classes) {
    Json members = Json::array();
    for (const Scalar& m : cls.members) members.push_back(m.str());
    classes.push_back(Json{{"representative", cls.representative.str()}, {"members", members}});
  }
  Json witnesses = Json::array();
  for (const MemberWitness& w : report.witnesses) {
    Json entry{{"member", w.member.str()},
               {"representative", w.representative.str()},
               {"method", iso_method_name(w.witness.method)}};
    if (w.witness.X) entry["x"] = transform_to_json(*w.witness.X);
    witnesses.push_back(entry);
  }
  return Json{{"field", field_to_json(report.field)},
              {"class_count", report.classes.size()},
              {"type1_classes", classes},
              {"witnesses", witnesses},
              {"observations", report.observations},
              {"anomalies", report.anomalies}};
}

Json census_to_json(const Census& census) {
  Json by_pattern = Json::object();
  for (int mask = 0; mask < 8; ++mask) {
    by_pattern[pattern_label(mask)] = census.ec_by_pattern[static_cast<std::size_t>(mask)];
  }
  Json type1 = Json::array();
  for (const StraightParams& s : census.type1_members) type1.push_back(straight_array(s));
  Json out{{"field", field_to_json(census.field)},
           {"tuples_scanned", census.tuples_scanned},
           {"ec_total", census.ec_total},
           {"ec_rank2", census.ec_rank2},
           {"ec_by_pattern", by_pattern},
           {"type1_members", type1}};
  if (census.type23_kept) {
    Json others = Json::array();
    for (const StraightParams& s : census.type23_members) others.push_back(straight_array(s));
    out["type23_members"] = others;
  }
  return out;
}

Json cross_type_to_json(const CrossTypeReport& report) {
  Json pairs = Json::array();
  for (const CrossTypePair& pair : report.pairs) {
    pairs.push_back(Json{{"type1", straight_array(pair.type1)},
                         {"other", straight_array(pair.other)},
                         {"other_type", algebra_type_name(pair.other_type)},
                         {"pattern", pattern_name(pair.pattern)},
                         {"witness", transform_to_json(pair.witness)}});
  }
  Json out{{"field", field_to_json(report.field)},
           {"type_counts",
            Json{{"I", report.type1_count}, {"II", report.type2_count},
                 {"III", report.type3_count}}},
           {"pairs", pairs},
           {"notes", report.notes}};
  if (report.field.is_prime_field() && report.field.modulus() == 2) {
    out["char2_no_type2_link"] = report.char2_no_type2_link;
  }
  return out;
}

Json q_prime_family_to_json(const QPrimeFamilyReport& report) {
  Json colliding = Json::array();
  for (const auto& [a, b] : report.colliding) colliding.push_back(Json::array({a, b}));
  return Json{{"primes", report.primes},
              {"pairs_checked", report.pairs_checked},
              {"pairwise_distinct", report.pairwise_distinct},
              {"colliding", colliding}};
}

}  // namespace ecalg
