#include "ecalg/iso.hpp"

#include "ecalg/cube_classes.hpp"

namespace ecalg {

namespace {

void require_same_field(const StructureMatrix& A, const StructureMatrix& B) {
  if (!(A.field() == B.field())) {
    throw DomainError("structure matrices live over different fields");
  }
}

std::array<Element, 4> rows_of(const StructureMatrix& A) {
  return {A.ee(), A.ff(), A.ef(), A.fe()};
}

/// (4×2 rows) · (2×2 X): each row (u, v) becomes (ux + vz, uy + vw).
std::array<Element, 4> rows_times_transform(const std::array<Element, 4>& rows,
                                            const Transform2& X) {
  std::array<Element, 4> out = rows;
  for (std::size_t i = 0; i < 4; ++i) {
    out[i] = Element{rows[i].e * X.x + rows[i].f * X.z, rows[i].e * X.y + rows[i].f * X.w};
  }
  return out;
}

std::array<Element, 4> mat4_times_rows(const Field& field, const Mat4& m,
                                       const std::array<Element, 4>& rows) {
  std::array<Element, 4> out = rows;
  for (std::size_t i = 0; i < 4; ++i) {
    Scalar ce = field.zero();
    Scalar cf = field.zero();
    for (std::size_t k = 0; k < 4; ++k) {
      ce = ce + m.a[i][k] * rows[k].e;
      cf = cf + m.a[i][k] * rows[k].f;
    }
    out[i] = Element{ce, cf};
  }
  return out;
}

IsoWitness verified_witness(const StructureMatrix& A, const StructureMatrix& B,
                            const Transform2& X, IsoMethod method) {
  if (!(transform(A, X) == B)) {
    throw InvariantViolation("isomorphism witness failed re-verification");
  }
  IsoWitness w;
  w.found = true;
  w.X = X;
  w.method = method;
  return w;
}

}  // namespace

StructureMatrix transform(const StructureMatrix& A, const Transform2& X) {
  const Field& k = A.field();
  if (det(X).is_zero()) throw DomainError("transform by a singular matrix");
  const Mat4 lift_inv = invert(k, tilde(k, X));
  const auto rows = mat4_times_rows(k, lift_inv, rows_times_transform(rows_of(A), X));
  return StructureMatrix(k, rows[0], rows[1], rows[2], rows[3]);
}

bool is_transform_witness(const StructureMatrix& A, const StructureMatrix& target,
                          const Transform2& X) {
  const Field& k = A.field();
  const auto lhs = mat4_times_rows(k, tilde(k, X), rows_of(target));
  const auto rhs = rows_times_transform(rows_of(A), X);
  return lhs == rhs;
}

IsoWitness are_isomorphic_bruteforce(const StructureMatrix& A, const StructureMatrix& B) {
  require_same_field(A, B);
  const Field& k = A.field();
  if (!k.is_prime_field()) {
    throw UnsupportedField("brute-force isomorphism search needs a finite field");
  }
  IsoWitness result;
  result.method = IsoMethod::BruteForce;
  for_each_gl2(k, [&](const Transform2& X) {
    if (is_transform_witness(A, B, X)) {
      result = verified_witness(A, B, X, IsoMethod::BruteForce);
      return false;
    }
    return true;
  });
  return result;
}

bool straight_iso_equations(const Field& field, const StraightParams& s, const StraightParams& t,
                            const Transform2& X) {
  const Scalar &p = s.p, &q = s.q, &a = s.a, &b = s.b, &c = s.c, &d = s.d;
  const Scalar &p2 = t.p, &q2 = t.q, &a2 = t.a, &b2 = t.b, &c2 = t.c, &d2 = t.d;
  const Scalar &x = X.x, &y = X.y, &z = X.z, &w = X.w;
  field.require_element(x);
  field.require_element(y);
  field.require_element(z);
  field.require_element(w);

  const Scalar ac2 = a2 + c2;
  const Scalar bd2 = b2 + d2;
  return p2 * y * y + ac2 * x * y == z &&                       //
         x * x + q2 * y * y + bd2 * x * y == w &&               //
         p2 * w * w + ac2 * z * w == p * x + q * z &&           //
         z * z + q2 * w * w + bd2 * z * w == p * y + q * w &&   //
         p2 * y * w + a2 * x * w + c2 * y * z == a * x + b * z &&
         x * z + q2 * y * w + b2 * x * w + d2 * y * z == a * y + b * w &&
         p2 * y * w + a2 * y * z + c2 * x * w == c * x + d * z &&
         x * z + q2 * y * w + b2 * y * z + d2 * x * w == c * y + d * w;
}

IsoWitness straight_iso_search(const Field& field, const StraightParams& s,
                               const StraightParams& t) {
  if (!field.is_prime_field()) {
    throw UnsupportedField("straight-form isomorphism search needs a finite field");
  }
  IsoWitness result;
  result.method = IsoMethod::StraightSystem;
  for_each_gl2(field, [&](const Transform2& X) {
    if (straight_iso_equations(field, s, t, X)) {
      result = verified_witness(embed(field, s), embed(field, t), X, IsoMethod::StraightSystem);
      return false;
    }
    return true;
  });
  return result;
}

bool type1_iso_equations(const Field& field, const Scalar& p, const Scalar& p2,
                         const Transform2& X) {
  field.require_element(p);
  field.require_element(p2);
  const Scalar &x = X.x, &y = X.y, &z = X.z, &w = X.w;
  return p2 * y * y == z &&      //
         x * x == w &&           //
         p2 * w * w == p * x &&  //
         z * z == p * y &&       //
         (y * w).is_zero() &&    //
         (x * z).is_zero();
}

IsoWitness type1_iso_decide(const Field& field, const Scalar& p, const Scalar& p2) {
  field.require_element(p);
  field.require_element(p2);
  if (p.is_zero() || p2.is_zero()) {
    throw DomainError("type I parameters must be nonzero");
  }

  std::optional<Transform2> X;
  IsoMethod method = IsoMethod::CubeClassTest;
  if (sim_equiv(field, p, p2)) {
    const auto x = cube_root(field, p / p2);
    if (!x) throw InvariantViolation("cube ratio without a cube root");
    X = Transform2{*x, field.zero(), field.zero(), sq(*x)};
    method = IsoMethod::CubeRatioDiagonal;
  } else if (sim_equiv(field, sq(p), p2)) {
    const auto z = cube_root(field, sq(p) / p2);
    if (!z) throw InvariantViolation("cube ratio without a cube root");
    X = Transform2{field.zero(), sq(*z) / p, *z, field.zero()};
    method = IsoMethod::SquareRatioAntidiagonal;
  } else {
    IsoWitness w;
    w.found = false;
    w.method = IsoMethod::CubeClassTest;
    return w;
  }

  if (!type1_iso_equations(field, p, p2, *X)) {
    throw InvariantViolation("constructed type I witness fails its defining conditions");
  }
  return verified_witness(type1_matrix(field, p), type1_matrix(field, p2), *X, method);
}

}  // namespace ecalg
