#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ecalg/field.hpp"

namespace ecalg {

// Multiplicative-group machinery around the cube map on K*.
//
// Two equivalence relations on K* drive the whole classification:
//   a ~ b   iff a/b is a cube in K*,
//   a ≈ b   iff a ~ b or a² ~ b.
// Over GF(p) both are decided by membership in the cube subgroup; over the
// rationals by cube-free factorization signatures.

/// {k³ : k in K*}, ascending. Finite fields only.
std::vector<Scalar> cube_subgroup(const Field& field);

/// a ~ b. Throws DomainError on zero input.
bool sim_equiv(const Field& field, const Scalar& a, const Scalar& b);

/// a ≈ b. Throws DomainError on zero input.
bool approx_equiv(const Field& field, const Scalar& a, const Scalar& b);

enum class CubeRelation { CubeRatio, CubeRatioOrSquare };

/// Partition of K* into classes of ~ (CubeRatio) or ≈ (CubeRatioOrSquare).
/// Classes are ordered by smallest member, members ascending. Finite only;
/// over the rationals use sim_equiv / approx_equiv directly.
struct CubeClassPartition {
  Field field;
  CubeRelation relation;
  std::vector<std::vector<Scalar>> classes;
};
CubeClassPartition cube_classes(const Field& field, CubeRelation relation);

/// One representative per ≈-class: the smallest positive residue, ascending.
struct RepSystem {
  Field field;
  std::vector<Scalar> reps;
};
RepSystem rep_system(const Field& field);

/// True iff every element of K is a cube of an element of K. Decided by
/// direct enumeration of the cube map image on finite fields; false over Q.
bool is_cube_rootable(const Field& field);

/// Cube-free signature of a nonzero rational: (prime, exponent mod 3) pairs
/// with exponents in {1, 2}, primes ascending. Empty iff the value is a cube.
struct QSignature {
  std::vector<std::pair<std::uint64_t, int>> entries;

  bool empty() const { return entries.empty(); }
  std::string str() const;
  friend bool operator==(const QSignature&, const QSignature&) = default;
};

inline const BigInt& default_factor_bound() {
  static const BigInt bound = BigInt(1) << 63;
  return bound;
}

/// Factors numerator and denominator by trial division. Throws DomainError
/// on zero, ResourceError when a magnitude reaches the bound.
QSignature q_signature(const Rational& r, const BigInt& bound = default_factor_bound());

/// Exact cube root when one exists in the field: the smallest residue root
/// over GF(p) (there may be up to three), the unique rational root over Q.
std::optional<Scalar> cube_root(const Field& field, const Scalar& s);

}  // namespace ecalg
