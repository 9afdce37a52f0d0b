#pragma once

#include <optional>

#include "ecalg/algebra.hpp"

namespace ecalg {

// Two structure matrices describe isomorphic algebras exactly when one is
// the other rewritten in a transformed basis: A' = lift(X)⁻¹ · A · X for an
// invertible 2×2 X. We fix the orientation so that transform(A, X) produces
// A'; the constructive type I witnesses below pin this convention down.

enum class IsoMethod {
  BruteForce,               // lexicographic GL₂ scan
  StraightSystem,           // GL₂ scan through the straight-form conditions
  CubeRatioDiagonal,        // p = p'x³, X = [[x,0],[0,x²]]
  SquareRatioAntidiagonal,  // p² = p'z³, X = [[0,z²/p],[z,0]]
  CubeClassTest,            // decided negatively by the ≈ relation
};

struct IsoWitness {
  bool found = false;
  std::optional<Transform2> X;
  IsoMethod method = IsoMethod::BruteForce;
};

/// A' = lift(X)⁻¹ A X — the structure matrix of the same algebra in the
/// basis transformed by X. Throws DomainError when X is singular.
StructureMatrix transform(const StructureMatrix& A, const Transform2& X);

/// Equivalent inversion-free predicate: lift(X) · target == A · X.
bool is_transform_witness(const StructureMatrix& A, const StructureMatrix& target,
                          const Transform2& X);

/// Visits GL₂(GF(p)) in lexicographic (x,y,z,w) residue order. The callback
/// returns false to stop early.
template <class Fn>
void for_each_gl2(const Field& field, Fn&& fn) {
  if (!field.is_prime_field()) throw UnsupportedField("GL₂ enumeration needs a finite field");
  const auto elems = field.elements();
  for (const Scalar& x : elems) {
    for (const Scalar& y : elems) {
      for (const Scalar& z : elems) {
        for (const Scalar& w : elems) {
          const Transform2 X{x, y, z, w};
          if (det(X).is_zero()) continue;
          if (!fn(X)) return;
        }
      }
    }
  }
}

/// Scans all invertible X in lexicographic order; returns the first witness
/// with transform(A, X) == B. Finite fields only.
IsoWitness are_isomorphic_bruteforce(const StructureMatrix& A, const StructureMatrix& B);

/// The eight straight-form isomorphism conditions for
/// S(s) ≅ S(t) under the witness X. Evaluated exactly; X need not be checked
/// for invertibility here.
bool straight_iso_equations(const Field& field, const StraightParams& s, const StraightParams& t,
                            const Transform2& X);

/// Same search as the brute force, but through the straight-form conditions.
IsoWitness straight_iso_search(const Field& field, const StraightParams& s,
                               const StraightParams& t);

/// The six conditions specializing the straight system to a pair of type I
/// algebras S(p,0,...,0), S(p',0,...,0).
bool type1_iso_equations(const Field& field, const Scalar& p, const Scalar& p2,
                         const Transform2& X);

/// Decides S(p,0,...,0) ≅ S(p',0,...,0) via the ≈ relation and, when they
/// are isomorphic, constructs an explicit witness:
///   p ~ p'  with p = p'x³ : X = [[x, 0], [0, x²]]
///   p² ~ p' with p² = p'z³: X = [[0, z²/p], [z, 0]]
/// The witness is re-verified against the six conditions and the transform
/// before being returned. Works over finite fields and over the rationals.
IsoWitness type1_iso_decide(const Field& field, const Scalar& p, const Scalar& p2);

}  // namespace ecalg
