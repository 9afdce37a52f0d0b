#pragma once

#include <array>
#include <optional>
#include <string>

#include "ecalg/field.hpp"

namespace ecalg {

// A 2-dimensional algebra on basis {e, f} is determined by the products of
// the basis vectors. We keep them as four Elements in the fixed row order
// e², f², ef, fe — the 4×2 structure matrix.

/// Coordinates of an algebra element in the basis {e, f}.
struct Element {
  Scalar e, f;
  friend bool operator==(const Element&, const Element&) = default;
};

inline Element operator+(const Element& u, const Element& v) {
  return Element{u.e + v.e, u.f + v.f};
}

inline Element operator*(const Scalar& s, const Element& u) {
  return Element{s * u.e, s * u.f};
}

class StructureMatrix {
 public:
  StructureMatrix(Field field, Element ee, Element ff, Element ef, Element fe);

  const Field& field() const { return field_; }
  const Element& ee() const { return rows_[0]; }  // e²
  const Element& ff() const { return rows_[1]; }  // f²
  const Element& ef() const { return rows_[2]; }
  const Element& fe() const { return rows_[3]; }
  const Element& row(int i) const { return rows_[static_cast<std::size_t>(i)]; }

  friend bool operator==(const StructureMatrix&, const StructureMatrix&) = default;

 private:
  Field field_;
  std::array<Element, 4> rows_;
};

/// Parameters of the straight algebra S(p,q,a,b,c,d):
/// e² = f, f² = pe+qf, ef = ae+bf, fe = ce+df.
struct StraightParams {
  Scalar p, q, a, b, c, d;
  friend bool operator==(const StraightParams&, const StraightParams&) = default;
};

/// Structure matrix of S(p,q,a,b,c,d): rows (0,1), (p,q), (a,b), (c,d).
StructureMatrix embed(const Field& field, const StraightParams& s);

/// S(p,0,0,0,0,0) — multiplication table (f, 0; 0, pe).
StraightParams type1_params(const Field& field, const Scalar& p);
StructureMatrix type1_matrix(const Field& field, const Scalar& p);

/// The straight parameters when the first row is (0, 1), else nothing.
std::optional<StraightParams> as_straight(const StructureMatrix& A);

Element zero_element(const Field& field);
Element basis_e(const Field& field);
Element basis_f(const Field& field);

/// Bilinear product: uv = u.e v.e e² + u.e v.f (ef) + u.f v.e (fe) + u.f v.f f².
Element multiply(const Element& u, const Element& v, const StructureMatrix& A);
Element square(const Element& u, const StructureMatrix& A);

/// ef = fe (which by bilinearity makes the whole algebra commutative).
bool is_commutative(const StructureMatrix& A);

/// The unique two-sided identity if one exists. Solved as a linear system in
/// the coordinates of u, then verified by direct multiplication.
std::optional<Element> find_identity(const StructureMatrix& A);

/// Associativity on the 8 basis triples; sufficient by trilinearity.
bool is_associative(const StructureMatrix& A);

/// Coefficients (α³, α²β, αβ², β³) of the binary cubic form det(x | x²)
/// where x = αe + βf. The algebra is curled iff this form is identically
/// zero, i.e. all four coefficients vanish.
std::array<Scalar, 4> curled_form_coefficients(const StructureMatrix& A);

/// Straight = not curled, decided symbolically via the cubic form above.
/// The symbolic test is authoritative on every field; over GF(2) a nonzero
/// form can still vanish pointwise (see straightness_discrepancy).
bool is_straight(const StructureMatrix& A);

/// Pointwise curled check by enumerating all p² elements. Finite fields only.
bool is_curled_pointwise(const StructureMatrix& A);

/// Flags a finite-field algebra on which the symbolic and pointwise curled
/// notions disagree (possible over GF(2) only: a nonzero binary cubic form
/// has at most 3 projective roots, and |P¹(GF(2))| = 3).
std::optional<std::string> straightness_discrepancy(const StructureMatrix& A);

/// Rank of the 4×2 structure matrix over the field, by exact elimination.
int rank(const StructureMatrix& A);

/// A 2×2 basis change, row-major [[x, y], [z, w]].
struct Transform2 {
  Scalar x, y, z, w;
  friend bool operator==(const Transform2&, const Transform2&) = default;
};

Scalar det(const Transform2& X);
Transform2 identity_transform(const Field& field);
Transform2 compose(const Transform2& X, const Transform2& Y);  // matrix product XY
Transform2 invert(const Field& field, const Transform2& X);

struct Mat4 {
  std::array<std::array<Scalar, 4>, 4> a;
  friend bool operator==(const Mat4&, const Mat4&) = default;
};

/// The 4×4 lift of a basis change X = [[x,y],[z,w]]:
///   ( x²  y²  xy  xy )
///   ( z²  w²  zw  zw )
///   ( xz  yw  xw  yz )
///   ( xz  yw  yz  xw )
/// X -> lift(X) is a group homomorphism GL₂ -> GL₄ with det = (det X)⁴; it
/// governs how structure matrices change under basis transformations.
Mat4 tilde(const Field& field, const Transform2& X);

Mat4 identity_mat4(const Field& field);
Mat4 mat_mul(const Field& field, const Mat4& lhs, const Mat4& rhs);
Scalar det(const Field& field, const Mat4& m);
/// Exact Gauss-Jordan inverse. Throws DomainError when singular.
Mat4 invert(const Field& field, const Mat4& m);

}  // namespace ecalg
