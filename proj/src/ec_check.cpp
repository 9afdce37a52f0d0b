#include "ecalg/ec_check.hpp"

#include <vector>

namespace ecalg {

EcVerdict is_ec_definitional(const StructureMatrix& A) {
  const Field& k = A.field();
  if (!k.is_prime_field()) {
    throw UnsupportedField("definitional endo-commutativity check needs a finite field");
  }
  // Elements in lexicographic (e-coordinate, f-coordinate) order, with all
  // squares precomputed so each pair costs three products.
  std::vector<Element> elems;
  elems.reserve(k.modulus() * k.modulus());
  for (const Scalar& alpha : k.elements()) {
    for (const Scalar& beta : k.elements()) {
      elems.push_back(Element{alpha, beta});
    }
  }
  std::vector<Element> squares;
  squares.reserve(elems.size());
  for (const Element& x : elems) squares.push_back(square(x, A));

  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (std::size_t j = 0; j < elems.size(); ++j) {
      const Element xy = multiply(elems[i], elems[j], A);
      if (multiply(squares[i], squares[j], A) != square(xy, A)) {
        EcVerdict v;
        v.is_ec = false;
        v.method = EcMethod::Definitional;
        v.counterexample = std::make_pair(elems[i], elems[j]);
        return v;
      }
    }
  }
  return EcVerdict{true, EcMethod::Definitional, std::nullopt, std::nullopt};
}

EcVerdict is_ec_general(const StructureMatrix& A) {
  const Scalar &a1 = A.ee().e, &b1 = A.ee().f;
  const Scalar &a2 = A.ff().e, &b2 = A.ff().f;
  const Scalar &a3 = A.ef().e, &b3 = A.ef().f;
  const Scalar &a4 = A.fe().e, &b4 = A.fe().f;

  // Conditions numbered 1..8 top to bottom for failure reporting.
  const std::pair<Scalar, Scalar> conditions[8] = {
      {a1 * a1 * a2 + b1 * a2 * b2 + a1 * b2 * a3 + b1 * a2 * a4,
       a1 * a3 * a3 + a2 * b3 * b3 + a3 * a3 * b3 + a3 * b3 * a4},
      {a1 * a1 * a2 + b1 * a2 * b2 + b1 * a2 * a3 + a1 * b2 * a4,
       a1 * a4 * a4 + a2 * b4 * b4 + a3 * a4 * b4 + a4 * a4 * b4},
      {a1 * a1 * a4 + b1 * a4 * a4 + b1 * a2 * b4 + a1 * a3 * b4,
       a1 * a1 * a3 + b1 * a2 * b3 + b1 * a3 * a3 + a1 * b3 * a4},
      {a2 * (a1 * a4 + a4 * b4 + b2 * b4), a2 * (a1 * a3 + b2 * b3 + a3 * b3)},
      {a1 * b1 * a2 + b1 * b2 * b2 + a1 * b2 * b3 + b1 * a2 * b4,
       b1 * a3 * a3 + b2 * b3 * b3 + a3 * b3 * b3 + a3 * b3 * b4},
      {a1 * b1 * a2 + b1 * b2 * b2 + b1 * a2 * b3 + a1 * b2 * b4,
       b1 * a4 * a4 + b2 * b4 * b4 + b3 * a4 * b4 + a4 * b4 * b4},
      {b1 * (a1 * a4 + a4 * b4 + b2 * b4), b1 * (a1 * a3 + b2 * b3 + a3 * b3)},
      {b1 * a2 * a4 + b2 * b3 * a4 + b2 * b2 * b4 + a2 * b4 * b4,
       b1 * a2 * a3 + b2 * b2 * b3 + a2 * b3 * b3 + b2 * a3 * b4},
  };

  for (int i = 0; i < 8; ++i) {
    if (conditions[i].first != conditions[i].second) {
      EcVerdict v;
      v.is_ec = false;
      v.method = EcMethod::GeneralSystem;
      v.failing_equation = i + 1;
      return v;
    }
  }
  return EcVerdict{true, EcMethod::GeneralSystem, std::nullopt, std::nullopt};
}

EcVerdict is_ec_straight(const Field& field, const StraightParams& s) {
  const Scalar &p = s.p, &q = s.q, &a = s.a, &b = s.b, &c = s.c, &d = s.d;
  field.require_element(p);
  field.require_element(q);
  field.require_element(a);
  field.require_element(b);
  field.require_element(c);
  field.require_element(d);

  // Conditions numbered 1..5 top to bottom.
  const std::pair<Scalar, Scalar> conditions[5] = {
      {p * q + p * c, p * b * b + a * a * b + a * b * c},
      {p * (c - a), (b - d) * (p * (b + d) - q * (a + c))},
      {p * (d - b), a * a - c * c},
      {q * q + p * d, a * a + q * b * b + a * b * b + a * b * d},
      {q * (d - b), a * b - c * d},
  };

  for (int i = 0; i < 5; ++i) {
    if (conditions[i].first != conditions[i].second) {
      EcVerdict v;
      v.is_ec = false;
      v.method = EcMethod::StraightSystem;
      v.failing_equation = i + 1;
      return v;
    }
  }
  return EcVerdict{true, EcMethod::StraightSystem, std::nullopt, std::nullopt};
}

}  // namespace ecalg
