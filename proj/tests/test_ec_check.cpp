#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ecalg/ec_check.hpp"
#include "ecalg/iso.hpp"

using namespace ecalg;

namespace {

template <class Fn>
void for_each_matrix(const Field& k, Fn&& fn) {
  const std::uint64_t p = k.modulus();
  std::array<std::uint64_t, 8> d{};
  while (true) {
    fn(StructureMatrix(k, Element{Scalar::residue(p, d[0]), Scalar::residue(p, d[1])},
                       Element{Scalar::residue(p, d[2]), Scalar::residue(p, d[3])},
                       Element{Scalar::residue(p, d[4]), Scalar::residue(p, d[5])},
                       Element{Scalar::residue(p, d[6]), Scalar::residue(p, d[7])}));
    std::size_t i = d.size();
    while (i-- > 0) {
      if (++d[i] < p) break;
      d[i] = 0;
    }
    if (i == static_cast<std::size_t>(-1)) return;
  }
}

template <class Fn>
void for_each_tuple(const Field& k, Fn&& fn) {
  const auto elems = k.elements();
  for (const Scalar& p : elems)
    for (const Scalar& q : elems)
      for (const Scalar& a : elems)
        for (const Scalar& b : elems)
          for (const Scalar& c : elems)
            for (const Scalar& d : elems) fn(StraightParams{p, q, a, b, c, d});
}

StraightParams random_tuple(const Field& k, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint64_t> dist(0, k.modulus() - 1);
  const auto draw = [&] { return Scalar::residue(k.modulus(), dist(rng)); };
  return StraightParams{draw(), draw(), draw(), draw(), draw(), draw()};
}

void check_verdict_shape(const EcVerdict& v) {
  if (v.is_ec) {
    CHECK_FALSE(v.failing_equation.has_value());
    CHECK_FALSE(v.counterexample.has_value());
  } else {
    CHECK(v.failing_equation.has_value() != v.counterexample.has_value());
  }
}

}  // namespace

TEST_CASE("definitional check on the pinned examples") {
  const Field k2 = Field::gf(2);
  CHECK(is_ec_definitional(type1_matrix(k2, k2.one())).is_ec);

  const Field k3 = Field::gf(3);
  const StructureMatrix zero(k3, zero_element(k3), zero_element(k3), zero_element(k3),
                             zero_element(k3));
  CHECK(is_ec_definitional(zero).is_ec);

  // e² = f, fe = e: not endo-commutative.
  const Scalar z = k3.zero(), o = k3.one();
  const EcVerdict v = is_ec_definitional(embed(k3, StraightParams{z, z, z, z, o, z}));
  CHECK_FALSE(v.is_ec);
  REQUIRE(v.counterexample.has_value());
  check_verdict_shape(v);
  // the reported pair really violates x²y² = (xy)²
  const StructureMatrix A = embed(k3, StraightParams{z, z, z, z, o, z});
  const auto& [x, y] = *v.counterexample;
  CHECK(multiply(square(x, A), square(y, A), A) != square(multiply(x, y, A), A));
}

TEST_CASE("definitional check needs a finite field") {
  const Field q = Field::rationals();
  CHECK_THROWS_AS(is_ec_definitional(type1_matrix(q, q.one())), UnsupportedField);
}

TEST_CASE("general conditions on the pinned examples") {
  const Field q = Field::rationals();
  CHECK(is_ec_general(type1_matrix(q, q.one())).is_ec);

  const Field k5 = Field::gf(5);
  const StructureMatrix zero(k5, zero_element(k5), zero_element(k5), zero_element(k5),
                             zero_element(k5));
  CHECK(is_ec_general(zero).is_ec);

  // S(0,0,1,0,0,0): ef = e makes the third condition fail.
  const Scalar z5 = k5.zero(), o5 = k5.one();
  const EcVerdict v = is_ec_general(embed(k5, StraightParams{z5, z5, o5, z5, z5, z5}));
  CHECK_FALSE(v.is_ec);
  CHECK(v.failing_equation == 3);
  check_verdict_shape(v);
}

TEST_CASE("straight-form conditions on the pinned examples") {
  const Field q = Field::rationals();
  for (std::int64_t p : {-3, 0, 1, 8}) {
    CHECK(is_ec_straight(q, type1_params(q, q.from_int(p))).is_ec);
  }

  const Field k = Field::gf(5);
  const Scalar z = k.zero();
  CHECK(is_ec_straight(k, StraightParams{z, z, z, z, z, z}).is_ec);
  // p = a = 0 with c ≠ 0 is never endo-commutative.
  for (std::uint64_t c = 1; c < 5; ++c) {
    for (std::uint64_t b = 0; b < 5; ++b) {
      const EcVerdict v =
          is_ec_straight(k, StraightParams{z, k.from_int(2), z, Scalar::residue(5, b),
                                           Scalar::residue(5, c), k.one()});
      CHECK_FALSE(v.is_ec);
      check_verdict_shape(v);
    }
  }
}

TEST_CASE("definitional and general deciders agree on every GF(2) matrix") {
  for_each_matrix(Field::gf(2), [](const StructureMatrix& A) {
    CHECK(is_ec_definitional(A).is_ec == is_ec_general(A).is_ec);
  });
}

TEST_CASE("definitional and general deciders agree on 10^4 GF(5) samples") {
  const Field k = Field::gf(5);
  std::mt19937_64 rng(0);
  for (int i = 0; i < 10000; ++i) {
    const StructureMatrix A = embed(k, random_tuple(k, rng));
    CHECK(is_ec_definitional(A).is_ec == is_ec_general(A).is_ec);
  }
}

TEST_CASE("straight-form and general deciders agree, exhaustively and sampled") {
  for (std::uint64_t p : {2, 3}) {
    const Field k = Field::gf(p);
    for_each_tuple(k, [&](const StraightParams& s) {
      CHECK(is_ec_straight(k, s).is_ec == is_ec_general(embed(k, s)).is_ec);
    });
  }
  for (std::uint64_t p : {5, 7}) {
    const Field k = Field::gf(p);
    std::mt19937_64 rng(0);
    for (int i = 0; i < 10000; ++i) {
      const StraightParams s = random_tuple(k, rng);
      CHECK(is_ec_straight(k, s).is_ec == is_ec_general(embed(k, s)).is_ec);
    }
  }
}

TEST_CASE("endo-commutativity is preserved by basis transforms") {
  const Field k = Field::gf(3);
  std::vector<StructureMatrix> ec_algebras;
  for_each_matrix(k, [&](const StructureMatrix& A) {
    if (ec_algebras.size() < 50 && is_ec_general(A).is_ec) ec_algebras.push_back(A);
  });
  REQUIRE(ec_algebras.size() == 50);
  for (const StructureMatrix& A : ec_algebras) {
    for_each_gl2(k, [&](const Transform2& X) {
      CHECK(is_ec_general(transform(A, X)).is_ec);
      return true;
    });
  }
}

TEST_CASE("the definitional counterexample is the lexicographically first") {
  const Field k = Field::gf(3);
  const Scalar z = k.zero(), o = k.one();
  const StructureMatrix A = embed(k, StraightParams{z, z, z, z, o, z});
  const EcVerdict v = is_ec_definitional(A);
  REQUIRE(v.counterexample.has_value());

  bool found = false;
  for (const Scalar& xa : k.elements()) {
    for (const Scalar& xb : k.elements()) {
      for (const Scalar& ya : k.elements()) {
        for (const Scalar& yb : k.elements()) {
          if (found) continue;
          const Element x{xa, xb}, y{ya, yb};
          if (multiply(square(x, A), square(y, A), A) != square(multiply(x, y, A), A)) {
            CHECK(v.counterexample->first == x);
            CHECK(v.counterexample->second == y);
            found = true;
          }
        }
      }
    }
  }
  CHECK(found);
}
