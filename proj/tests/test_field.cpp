#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ecalg/field.hpp"

using namespace ecalg;

namespace {

// Independent oracle: find the inverse by scanning all residues.
std::uint64_t inverse_by_scan(std::uint64_t a, std::uint64_t p) {
  for (std::uint64_t t = 0; t < p; ++t) {
    if ((a * t) % p == 1) return t;
  }
  FAIL("no inverse found");
  return 0;
}

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-30, 30);
  std::uniform_int_distribution<int> den(1, 30);
  return Rational(num(rng), den(rng));
}

}  // namespace

TEST_CASE("inverses in GF(7) match the residue-scan oracle") {
  const Field k = Field::gf(7);
  CHECK(k.inv(k.from_int(3)) == k.from_int(static_cast<std::int64_t>(inverse_by_scan(3, 7))));
  CHECK(k.inv(k.from_int(3)).residue_value() == 5);
  CHECK(k.inv(k.from_int(2)).residue_value() == 4);
  for (std::uint64_t a = 1; a < 7; ++a) {
    CHECK(k.inv(Scalar::residue(7, a)).residue_value() == inverse_by_scan(a, 7));
  }
}

TEST_CASE("rational inverse of one is one") {
  const Field q = Field::rationals();
  CHECK(q.inv(q.one()) == q.one());
  CHECK(q.inv(q.from_int(-2)) == q.parse_scalar("-1/2"));
}

TEST_CASE("inversion of zero fails") {
  CHECK_THROWS_AS(Field::gf(5).inv(Field::gf(5).zero()), DomainError);
  CHECK_THROWS_AS(Field::rationals().inv(Field::rationals().zero()), DomainError);
}

TEST_CASE("element enumeration") {
  CHECK(Field::gf(2).elements().size() == 2);
  const auto e3 = Field::gf(3).elements();
  REQUIRE(e3.size() == 3);
  for (std::uint64_t r = 0; r < 3; ++r) CHECK(e3[r].residue_value() == r);
  CHECK(Field::gf(5).elements().size() == 5);
  CHECK(Field::gf(5).units().size() == 4);
  CHECK_THROWS_AS(Field::rationals().elements(), UnsupportedField);
}

TEST_CASE("field axioms hold exhaustively over GF(5)") {
  const Field k = Field::gf(5);
  const auto elems = k.elements();
  for (const Scalar& a : elems) {
    CHECK(a + k.zero() == a);
    CHECK(a * k.one() == a);
    CHECK(a + (-a) == k.zero());
    if (!a.is_zero()) CHECK(a * k.inv(a) == k.one());
    for (const Scalar& b : elems) {
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
      for (const Scalar& c : elems) {
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
      }
    }
  }
}

TEST_CASE("field axioms hold on sampled rationals") {
  const Field q = Field::rationals();
  std::mt19937_64 rng(0);
  for (int i = 0; i < 200; ++i) {
    const Scalar a = q.from_rational(random_rational(rng));
    const Scalar b = q.from_rational(random_rational(rng));
    const Scalar c = q.from_rational(random_rational(rng));
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + (-a) == q.zero());
    if (!a.is_zero()) CHECK(a * q.inv(a) == q.one());
  }
}

TEST_CASE("scalars are canonical") {
  const Field q = Field::rationals();
  CHECK(q.parse_scalar("4/6") == q.parse_scalar("2/3"));
  CHECK(q.parse_scalar("4/6").str() == "2/3");
  CHECK(q.parse_scalar("-4/6").str() == "-2/3");
  CHECK(q.parse_scalar("8").str() == "8");
  CHECK(q.parse_scalar("0/7").str() == "0");

  const Field k = Field::gf(7);
  CHECK(k.parse_scalar("-1").residue_value() == 6);
  CHECK(k.parse_scalar("10").residue_value() == 3);
  CHECK(k.parse_scalar("1/2").residue_value() == 4);  // inverse of 2
  CHECK(k.from_int(-9).residue_value() == 5);
}

TEST_CASE("malformed scalars are rejected") {
  const Field q = Field::rationals();
  CHECK_THROWS_AS(q.parse_scalar(""), ParseError);
  CHECK_THROWS_AS(q.parse_scalar("1.5"), ParseError);
  CHECK_THROWS_AS(q.parse_scalar("2/0"), ParseError);
  CHECK_THROWS_AS(q.parse_scalar("x"), ParseError);
  CHECK_THROWS_AS(q.parse_scalar("1/-2"), ParseError);
  CHECK_THROWS_AS(Field::gf(7).parse_scalar("1/7"), ParseError);  // denominator is 0 mod 7
}

TEST_CASE("cross-field arithmetic is rejected") {
  const Scalar a = Field::gf(5).one();
  const Scalar b = Field::gf(7).one();
  const Scalar c = Field::rationals().one();
  CHECK_THROWS_AS((void)(a + b), DomainError);
  CHECK_THROWS_AS((void)(a * c), DomainError);
  CHECK_THROWS_AS(Field::gf(5).require_element(c), DomainError);
}

TEST_CASE("primality testing is deterministic and exact") {
  CHECK(is_prime_u64(2));
  CHECK(is_prime_u64(3));
  CHECK(is_prime_u64(13));
  CHECK(is_prime_u64(7919));
  CHECK(is_prime_u64(2305843009213693951ULL));  // 2^61 - 1
  CHECK_FALSE(is_prime_u64(0));
  CHECK_FALSE(is_prime_u64(1));
  CHECK_FALSE(is_prime_u64(4));
  CHECK_FALSE(is_prime_u64(3215031751ULL));  // strong pseudoprime to bases 2,3,5,7
  CHECK_FALSE(is_prime_u64(341550071728321ULL));
  CHECK_THROWS_AS(Field::gf(4), DomainError);
  CHECK_THROWS_AS(Field::gf(1), DomainError);
}
