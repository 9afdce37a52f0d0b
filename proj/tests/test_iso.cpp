#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ecalg/classify.hpp"

using namespace ecalg;

namespace {

StraightParams random_tuple(const Field& k, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint64_t> dist(0, k.modulus() - 1);
  const auto draw = [&] { return Scalar::residue(k.modulus(), dist(rng)); };
  return StraightParams{draw(), draw(), draw(), draw(), draw(), draw()};
}

Transform2 random_invertible(const Field& k, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint64_t> dist(0, k.modulus() - 1);
  while (true) {
    const Transform2 X{Scalar::residue(k.modulus(), dist(rng)),
                       Scalar::residue(k.modulus(), dist(rng)),
                       Scalar::residue(k.modulus(), dist(rng)),
                       Scalar::residue(k.modulus(), dist(rng))};
    if (!det(X).is_zero()) return X;
  }
}

std::vector<StraightParams> ec_tuples(const Field& k) {
  CensusOptions opts;
  opts.keep_type23 = true;
  Census census = enumerate_ecs(k, opts);
  std::vector<StraightParams> out = census.type1_members;
  out.insert(out.end(), census.type23_members.begin(), census.type23_members.end());
  return out;
}

}  // namespace

TEST_CASE("transforming by the identity is a no-op") {
  const Field k = Field::gf(5);
  std::mt19937_64 rng(3);
  for (int i = 0; i < 20; ++i) {
    const StructureMatrix A = embed(k, random_tuple(k, rng));
    CHECK(transform(A, identity_transform(k)) == A);
  }
}

TEST_CASE("transform composes and inverts like a group action") {
  const Field k = Field::gf(5);
  std::mt19937_64 rng(4);
  for (int i = 0; i < 30; ++i) {
    const StructureMatrix A = embed(k, random_tuple(k, rng));
    const Transform2 X = random_invertible(k, rng);
    const Transform2 Y = random_invertible(k, rng);
    CHECK(transform(transform(A, X), invert(k, X)) == A);
    CHECK(transform(transform(A, X), Y) == transform(A, compose(X, Y)));
  }
}

TEST_CASE("the rational witness S(8) -> S(1) via [[2,0],[0,4]]") {
  const Field q = Field::rationals();
  const Transform2 X{q.from_int(2), q.zero(), q.zero(), q.from_int(4)};
  CHECK(transform(type1_matrix(q, q.from_int(8)), X) == type1_matrix(q, q.one()));
}

TEST_CASE("singular transforms are rejected") {
  const Field k = Field::gf(5);
  const StructureMatrix A = type1_matrix(k, k.one());
  CHECK_THROWS_AS(transform(A, Transform2{k.one(), k.one(), k.one(), k.one()}), DomainError);
}

TEST_CASE("brute force finds the identity witness for A vs A") {
  const Field k = Field::gf(5);
  std::mt19937_64 rng(5);
  const StructureMatrix A = embed(k, random_tuple(k, rng));
  const IsoWitness w = are_isomorphic_bruteforce(A, A);
  REQUIRE(w.found);
  // the identity is not the lexicographically first invertible matrix, but
  // any returned witness must transform A to itself
  CHECK(transform(A, *w.X) == A);
  CHECK(are_isomorphic_bruteforce(A, A).X == w.X);
}

TEST_CASE("S(2) and S(4) are isomorphic over GF(7); S(1) and S(2) are not") {
  const Field k = Field::gf(7);
  const StructureMatrix s2 = type1_matrix(k, k.from_int(2));
  const StructureMatrix s4 = type1_matrix(k, k.from_int(4));
  const StructureMatrix s1 = type1_matrix(k, k.one());
  CHECK(are_isomorphic_bruteforce(s2, s4).found);
  CHECK_FALSE(are_isomorphic_bruteforce(s1, s2).found);
  CHECK_THROWS_AS(
      are_isomorphic_bruteforce(type1_matrix(Field::rationals(), Field::rationals().one()),
                                type1_matrix(Field::rationals(), Field::rationals().one())),
      UnsupportedField);
}

TEST_CASE("straight-form search: the identity satisfies the conditions for s vs s") {
  const Field k = Field::gf(5);
  std::mt19937_64 rng(6);
  for (int i = 0; i < 10; ++i) {
    const StraightParams s = random_tuple(k, rng);
    CHECK(straight_iso_equations(k, s, s, identity_transform(k)));
  }
}

TEST_CASE("straight-form search distinguishes ranks") {
  const Field k = Field::gf(3);
  const Scalar z = k.zero();
  const StraightParams rank1{z, z, z, z, z, z};
  const StraightParams rank2 = type1_params(k, k.one());
  CHECK_FALSE(straight_iso_search(k, rank1, rank2).found);
  CHECK(straight_iso_search(k, rank2, rank2).found);
}

TEST_CASE("straight search between S(2) and S(4) over GF(7) satisfies the type I conditions") {
  const Field k = Field::gf(7);
  const IsoWitness w = straight_iso_search(k, type1_params(k, k.from_int(2)),
                                           type1_params(k, k.from_int(4)));
  REQUIRE(w.found);
  CHECK(type1_iso_equations(k, k.from_int(2), k.from_int(4), *w.X));
}

TEST_CASE("brute force and the straight-form search agree") {
  const Field k2 = Field::gf(2);
  const auto tuples2 = ec_tuples(k2);
  for (const StraightParams& s : tuples2) {
    for (const StraightParams& t : tuples2) {
      CHECK(are_isomorphic_bruteforce(embed(k2, s), embed(k2, t)).found ==
            straight_iso_search(k2, s, t).found);
    }
  }

  const Field k5 = Field::gf(5);
  const auto tuples5 = ec_tuples(k5);
  REQUIRE(tuples5.size() > 1);
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::size_t> pick(0, tuples5.size() - 1);
  for (int i = 0; i < 500; ++i) {
    const StraightParams& s = tuples5[pick(rng)];
    const StraightParams& t = tuples5[pick(rng)];
    CHECK(are_isomorphic_bruteforce(embed(k5, s), embed(k5, t)).found ==
          straight_iso_search(k5, s, t).found);
  }
}

TEST_CASE("constructive type I decision on the pinned examples") {
  const Field q = Field::rationals();
  const IsoWitness wq = type1_iso_decide(q, q.from_int(8), q.one());
  REQUIRE(wq.found);
  CHECK(wq.method == IsoMethod::CubeRatioDiagonal);
  CHECK(*wq.X == Transform2{q.from_int(2), q.zero(), q.zero(), q.from_int(4)});

  const Field k = Field::gf(7);
  const IsoWitness w7 = type1_iso_decide(k, k.from_int(2), k.from_int(4));
  REQUIRE(w7.found);
  CHECK(w7.method == IsoMethod::SquareRatioAntidiagonal);
  CHECK(*w7.X == Transform2{k.zero(), k.from_int(4), k.one(), k.zero()});

  const IsoWitness wid = type1_iso_decide(k, k.from_int(3), k.from_int(3));
  REQUIRE(wid.found);
  CHECK(*wid.X == identity_transform(k));

  CHECK_THROWS_AS(type1_iso_decide(k, k.zero(), k.one()), DomainError);
}

TEST_CASE("constructive decision handles negative rationals") {
  const Field q = Field::rationals();
  const IsoWitness w = type1_iso_decide(q, q.from_int(-8), q.one());
  REQUIRE(w.found);
  CHECK(w.X->x == q.from_int(-2));
  CHECK(transform(type1_matrix(q, q.from_int(-8)), *w.X) == type1_matrix(q, q.one()));
  // 2 is not ≈ 1 over Q: neither 2 nor 4 is a cube
  CHECK_FALSE(type1_iso_decide(q, q.from_int(2), q.one()).found);
  CHECK(type1_iso_decide(q, q.parse_scalar("2/27"), q.from_int(2)).found);
}

TEST_CASE("type I decision agrees with brute force for every unit pair") {
  for (std::uint64_t p : {2, 3, 5, 7, 13}) {
    const Field k = Field::gf(p);
    for (const Scalar& a : k.units()) {
      for (const Scalar& b : k.units()) {
        const IsoWitness by_decide = type1_iso_decide(k, a, b);
        const IsoWitness by_force =
            are_isomorphic_bruteforce(type1_matrix(k, a), type1_matrix(k, b));
        CHECK(by_decide.found == by_force.found);
        CHECK(by_decide.found == approx_equiv(k, a, b));
      }
    }
  }
}

TEST_CASE("rank is invariant under every GL2(GF(3)) transform") {
  const Field k = Field::gf(3);
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<std::uint64_t> dist(0, 2);
  for (int i = 0; i < 40; ++i) {
    const StructureMatrix A(
        k, Element{Scalar::residue(3, dist(rng)), Scalar::residue(3, dist(rng))},
        Element{Scalar::residue(3, dist(rng)), Scalar::residue(3, dist(rng))},
        Element{Scalar::residue(3, dist(rng)), Scalar::residue(3, dist(rng))},
        Element{Scalar::residue(3, dist(rng)), Scalar::residue(3, dist(rng))});
    const int r = rank(A);
    for_each_gl2(k, [&](const Transform2& X) {
      CHECK(rank(transform(A, X)) == r);
      return true;
    });
  }
}

TEST_CASE("witnesses compose along chains of isomorphisms") {
  const Field k = Field::gf(7);
  const Scalar p2 = k.from_int(2), p3 = k.from_int(3), p5 = k.from_int(5);
  const IsoWitness w23 = type1_iso_decide(k, p2, p3);
  const IsoWitness w35 = type1_iso_decide(k, p3, p5);
  REQUIRE(w23.found);
  REQUIRE(w35.found);
  const Transform2 chained = compose(*w23.X, *w35.X);
  CHECK(transform(type1_matrix(k, p2), chained) == type1_matrix(k, p5));
}
