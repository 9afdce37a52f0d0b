#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "ecalg/classify.hpp"

using namespace ecalg;

namespace {

std::set<std::uint64_t> as_residues(const std::vector<Scalar>& v) {
  std::set<std::uint64_t> out;
  for (const Scalar& s : v) out.insert(s.residue_value());
  return out;
}

}  // namespace

TEST_CASE("type assignment by the nonzero pattern of (p, a, c)") {
  const Field k = Field::gf(7);
  const Scalar z = k.zero(), o = k.one();

  const TypeVerdict t1 = classify_type(k, type1_params(k, o));
  CHECK(t1.type == AlgebraType::TypeI);
  CHECK(pattern_label(t1.nonzero_mask) == "100");

  const TypeVerdict t2 = classify_type(k, StraightParams{z, k.from_int(3), o, z, o, z});
  CHECK(t2.type == AlgebraType::TypeII);
  CHECK(pattern_label(t2.nonzero_mask) == "011");

  const TypeVerdict t0 = classify_type(k, StraightParams{z, z, z, o, z, o});
  CHECK(t0.type == AlgebraType::NotRank2);
  CHECK(pattern_label(t0.nonzero_mask) == "000");

  const TypeVerdict t3 = classify_type(k, StraightParams{o, z, o, z, o, z});
  CHECK(t3.type == AlgebraType::TypeIII);
}

TEST_CASE("every EC rank-2 tuple lands in exactly one type") {
  for (std::uint64_t q : {2, 3}) {
    const Field k = Field::gf(q);
    const auto elems = k.elements();
    for (const Scalar& p : elems)
      for (const Scalar& qq : elems)
        for (const Scalar& a : elems)
          for (const Scalar& b : elems)
            for (const Scalar& c : elems)
              for (const Scalar& d : elems) {
                const StraightParams s{p, qq, a, b, c, d};
                if (!is_ec_straight(k, s).is_ec) continue;
                const TypeVerdict tv = classify_type(k, s);
                const bool rank2 = rank(embed(k, s)) == 2;
                CHECK(rank2 == (tv.type != AlgebraType::NotRank2));
              }
  }
}

TEST_CASE("the three types partition the EC rank-2 tuples over GF(5) and GF(7)") {
  for (std::uint64_t q : {5, 7}) {
    const Census census = enumerate_ecs(Field::gf(q));
    std::uint64_t typed = 0;
    for (int mask = 1; mask < 8; ++mask) {
      typed += census.ec_by_pattern[static_cast<std::size_t>(mask)];
    }
    CHECK(typed == census.ec_rank2);
    CHECK(census.ec_rank2 + census.ec_by_pattern[0] == census.ec_total);
  }
}

TEST_CASE("census counts over small fields") {
  CHECK(enumerate_ecs(Field::gf(2)).ec_by_pattern[4] == 1);
  CHECK(enumerate_ecs(Field::gf(3)).ec_by_pattern[4] == 2);
  const Census c7 = enumerate_ecs(Field::gf(7));
  CHECK(c7.ec_by_pattern[4] == 6);
  CHECK(c7.tuples_scanned == 117649);
  CHECK(c7.type1_members.size() == c7.ec_by_pattern[1] + c7.ec_by_pattern[2] + c7.ec_by_pattern[4]);
}

TEST_CASE("census respects the budget and rejects the rationals") {
  CensusOptions opts;
  opts.max_modulus = 5;
  CHECK_THROWS_AS(enumerate_ecs(Field::gf(7), opts), ResourceError);
  CHECK_THROWS_AS(enumerate_ecs(Field::rationals()), UnsupportedField);
}

TEST_CASE("census is identical for any worker count") {
  const Field k = Field::gf(5);
  CensusOptions one;
  one.keep_type23 = true;
  CensusOptions four = one;
  four.workers = 4;
  const Census a = enumerate_ecs(k, one);
  const Census b = enumerate_ecs(k, four);
  CHECK(a.ec_total == b.ec_total);
  CHECK(a.ec_by_pattern == b.ec_by_pattern);
  CHECK(a.type1_members == b.type1_members);
  CHECK(a.type23_members == b.type23_members);
}

TEST_CASE("the type I census is exactly {S(p,0,...,0)}") {
  for (std::uint64_t q : {2, 5}) {
    const CensusCheck check = verify_type1_census(Field::gf(q));
    CHECK(check.ok);
    CHECK(check.type1_count == q - 1);
    CHECK(check.anomalies.empty());
  }
}

TEST_CASE("type I classification over GF(3) and GF(7)") {
  const ClassificationReport r3 = type1_classification(Field::gf(3));
  REQUIRE(r3.classes.size() == 1);
  CHECK(r3.classes[0].representative.residue_value() == 1);

  const ClassificationReport r7 = type1_classification(Field::gf(7));
  REQUIRE(r7.classes.size() == 2);
  CHECK(r7.classes[0].representative.residue_value() == 1);
  CHECK(r7.classes[1].representative.residue_value() == 2);
  CHECK(as_residues(r7.classes[0].members) == std::set<std::uint64_t>{1, 6});
  CHECK(as_residues(r7.classes[1].members) == std::set<std::uint64_t>{2, 3, 4, 5});

  // each witness transforms its member onto the class representative
  const Field k = Field::gf(7);
  CHECK(r7.witnesses.size() == 6);
  for (const MemberWitness& w : r7.witnesses) {
    REQUIRE(w.witness.found);
    CHECK(transform(type1_matrix(k, w.member), *w.witness.X) ==
          type1_matrix(k, w.representative));
  }
  CHECK_THROWS_AS(type1_classification(Field::rationals()), UnsupportedField);
}

TEST_CASE("the class-count observation is recorded") {
  const ClassificationReport r7 = type1_classification(Field::gf(7));
  REQUIRE(r7.observations.size() == 1);
  CHECK(r7.observations[0].find("matches") != std::string::npos);
  CHECK(r7.anomalies.empty());
}

TEST_CASE("type I algebras are commutative, non-unital, non-associative") {
  CHECK(verify_type1_properties(Field::gf(2)));
  CHECK(verify_type1_properties(Field::gf(7)));
}

TEST_CASE("cube-rootable fields collapse to a single class") {
  CHECK(verify_single_class_when_cube_rootable(Field::gf(2)));
  CHECK(verify_single_class_when_cube_rootable(Field::gf(3)));
  CHECK(verify_single_class_when_cube_rootable(Field::gf(5)));
  CHECK_THROWS_AS(verify_single_class_when_cube_rootable(Field::gf(7)), DomainError);
}

TEST_CASE("prime families over Q") {
  CHECK(q_prime_family({2, 3}).pairwise_distinct);
  const QPrimeFamilyReport r = q_prime_family({2, 3, 5, 7, 11, 13});
  CHECK(r.pairwise_distinct);
  CHECK(r.pairs_checked == 15);
  CHECK(q_prime_family({2}).pairwise_distinct);  // vacuous
  CHECK(q_prime_family({}).pairwise_distinct);
  CHECK_THROWS_AS(q_prime_family({4, 5}), DomainError);
  CHECK_THROWS_AS(q_prime_family({3, 3}), DomainError);
}

TEST_CASE("the necessary cross-type pattern") {
  const Field k = Field::gf(7);
  const Scalar z = k.zero(), o = k.one();
  // (1, -1, 1, 0, 1, 0): p ≠ 0, q = -a, c = a, b = d = 0
  CHECK(cross_iso_pattern(k, StraightParams{o, k.from_int(-1), o, z, o, z}) ==
        NecessaryPattern::PNonzero);
  CHECK(cross_iso_pattern(k, StraightParams{z, k.from_int(-1), o, z, o, z}) ==
        NecessaryPattern::PZero);
  CHECK(cross_iso_pattern(k, StraightParams{o, o, o, z, o, z}) == NecessaryPattern::None);
  CHECK(cross_iso_pattern(k, StraightParams{o, k.from_int(-1), o, o, o, z}) ==
        NecessaryPattern::None);
}

TEST_CASE("cross-type filter validates its input") {
  const Field k = Field::gf(3);
  CHECK_THROWS_AS(cross_type_filter(k, type1_params(k, k.one())), DomainError);
  const Scalar z = k.zero(), o = k.one();
  CHECK_THROWS_AS(cross_type_filter(k, StraightParams{z, z, z, z, o, z}), DomainError);  // not EC
}

TEST_CASE("cross-type filter: pattern violations have no type I partner") {
  for (std::uint64_t q : {2, 3}) {
    const Field k = Field::gf(q);
    CensusOptions opts;
    opts.keep_type23 = true;
    const Census census = enumerate_ecs(k, opts);
    for (const StraightParams& s : census.type23_members) {
      const CrossTypeFilterResult f = cross_type_filter(k, s);
      if (f.pattern == NecessaryPattern::None) {
        CHECK_FALSE(f.has_type1_isomorph);
      }
      if (f.has_type1_isomorph) {
        REQUIRE(f.witness.has_value());
        CHECK(transform(embed(k, s), *f.witness) == type1_matrix(k, *f.type1_p));
      }
    }
  }
}

TEST_CASE("cross-type experiment over GF(2): type I never meets type II") {
  const CrossTypeReport report = cross_type_experiment(Field::gf(2));
  CHECK(report.char2_no_type2_link);
  for (const CrossTypePair& pair : report.pairs) {
    CHECK(pair.other_type != AlgebraType::TypeII);
    CHECK(pair.pattern != NecessaryPattern::None);
  }
  CHECK(report.type1_count == 1);
}

TEST_CASE("cross-type experiment matches pairwise search over GF(3)") {
  const Field k = Field::gf(3);
  const CrossTypeReport report = cross_type_experiment(k);
  for (const CrossTypePair& pair : report.pairs) {
    // the recorded witness transforms the type I matrix onto the partner
    CHECK(transform(type1_matrix(k, pair.type1.p), pair.witness) == embed(k, pair.other));
    CHECK(pair.pattern != NecessaryPattern::None);
  }
  CensusOptions opts;
  opts.keep_type23 = true;
  const Census census = enumerate_ecs(k, opts);
  std::size_t linked = 0;
  std::set<std::string> found_others;
  for (const CrossTypePair& pair : report.pairs) {
    found_others.insert(pair.other.p.str() + pair.other.q.str() + pair.other.a.str() +
                        pair.other.b.str() + pair.other.c.str() + pair.other.d.str());
  }
  for (const StraightParams& s : census.type23_members) {
    const CrossTypeFilterResult f = cross_type_filter(k, s);
    const std::string key =
        s.p.str() + s.q.str() + s.a.str() + s.b.str() + s.c.str() + s.d.str();
    CHECK(f.has_type1_isomorph == (found_others.count(key) > 0));
    linked += f.has_type1_isomorph ? 1 : 0;
  }
  CHECK(linked == found_others.size());
}
