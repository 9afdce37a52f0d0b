#pragma once

#include <optional>
#include <utility>

#include "ecalg/algebra.hpp"

namespace ecalg {

// An algebra is endo-commutative when squaring preserves multiplication:
// x²y² = (xy)² for all x, y. Three independent deciders live here and are
// cross-validated against each other by the test suite:
//   * Definitional  — enumerate every element pair (finite fields),
//   * GeneralSystem — eight cubic conditions on the structure constants,
//   * StraightSystem — five cubic conditions on (p,q,a,b,c,d).

enum class EcMethod { Definitional, GeneralSystem, StraightSystem };

struct EcVerdict {
  bool is_ec = false;
  EcMethod method = EcMethod::Definitional;
  /// 1-based index of the first failing condition (system methods only).
  std::optional<int> failing_equation;
  /// First violating pair in lexicographic coordinate order (definitional).
  std::optional<std::pair<Element, Element>> counterexample;
};

/// Sweeps all p² × p² element pairs. Finite fields only.
EcVerdict is_ec_definitional(const StructureMatrix& A);

/// Evaluates the eight cubic conditions on a₁..b₄; works over any field.
EcVerdict is_ec_general(const StructureMatrix& A);

/// Evaluates the five cubic conditions on (p,q,a,b,c,d); any field.
EcVerdict is_ec_straight(const Field& field, const StraightParams& s);

}  // namespace ecalg
