#include "ecalg/algebra.hpp"

#include <utility>
#include <vector>

namespace ecalg {

StructureMatrix::StructureMatrix(Field field, Element ee, Element ff, Element ef, Element fe)
    : field_(field), rows_{std::move(ee), std::move(ff), std::move(ef), std::move(fe)} {
  for (const Element& r : rows_) {
    field_.require_element(r.e);
    field_.require_element(r.f);
  }
}

StructureMatrix embed(const Field& field, const StraightParams& s) {
  return StructureMatrix(field, Element{field.zero(), field.one()}, Element{s.p, s.q},
                         Element{s.a, s.b}, Element{s.c, s.d});
}

StraightParams type1_params(const Field& field, const Scalar& p) {
  field.require_element(p);
  const Scalar z = field.zero();
  return StraightParams{p, z, z, z, z, z};
}

StructureMatrix type1_matrix(const Field& field, const Scalar& p) {
  return embed(field, type1_params(field, p));
}

std::optional<StraightParams> as_straight(const StructureMatrix& A) {
  if (!A.ee().e.is_zero() || !A.ee().f.is_one()) return std::nullopt;
  return StraightParams{A.ff().e, A.ff().f, A.ef().e, A.ef().f, A.fe().e, A.fe().f};
}

Element zero_element(const Field& field) { return Element{field.zero(), field.zero()}; }
Element basis_e(const Field& field) { return Element{field.one(), field.zero()}; }
Element basis_f(const Field& field) { return Element{field.zero(), field.one()}; }

Element multiply(const Element& u, const Element& v, const StructureMatrix& A) {
  const Field& k = A.field();
  k.require_element(u.e);
  k.require_element(u.f);
  k.require_element(v.e);
  k.require_element(v.f);
  const Scalar wee = u.e * v.e;  // weight of e²
  const Scalar wff = u.f * v.f;  // weight of f²
  const Scalar wef = u.e * v.f;  // weight of ef
  const Scalar wfe = u.f * v.e;  // weight of fe
  return Element{
      wee * A.ee().e + wff * A.ff().e + wef * A.ef().e + wfe * A.fe().e,
      wee * A.ee().f + wff * A.ff().f + wef * A.ef().f + wfe * A.fe().f,
  };
}

Element square(const Element& u, const StructureMatrix& A) { return multiply(u, u, A); }

bool is_commutative(const StructureMatrix& A) { return A.ef() == A.fe(); }

std::optional<Element> find_identity(const StructureMatrix& A) {
  const Field& k = A.field();
  // ue = e, eu = e, uf = f, fu = f with u = αe + βf: eight scalar equations
  // linear in (α, β).
  struct Eq {
    Scalar ca, cb, rhs;
  };
  const Scalar one = k.one(), zero = k.zero();
  std::vector<Eq> eqs = {
      {A.ee().e, A.fe().e, one},  {A.ee().f, A.fe().f, zero},  // ue = e
      {A.ee().e, A.ef().e, one},  {A.ee().f, A.ef().f, zero},  // eu = e
      {A.ef().e, A.ff().e, zero}, {A.ef().f, A.ff().f, one},   // uf = f
      {A.fe().e, A.ff().e, zero}, {A.fe().f, A.ff().f, one},   // fu = f
  };
  Scalar alpha = zero, beta = zero;
  std::size_t pivot = eqs.size();
  for (std::size_t i = 0; i < eqs.size(); ++i) {
    if (!eqs[i].ca.is_zero()) {
      pivot = i;
      break;
    }
  }
  if (pivot != eqs.size()) {
    const Eq p = eqs[pivot];
    for (std::size_t i = 0; i < eqs.size(); ++i) {
      if (i == pivot || eqs[i].ca.is_zero()) continue;
      const Scalar f = eqs[i].ca / p.ca;
      eqs[i].cb = eqs[i].cb - f * p.cb;
      eqs[i].rhs = eqs[i].rhs - f * p.rhs;
      eqs[i].ca = zero;
    }
    for (std::size_t i = 0; i < eqs.size(); ++i) {
      if (i == pivot || eqs[i].cb.is_zero()) continue;
      beta = eqs[i].rhs / eqs[i].cb;
      break;
    }
    alpha = (p.rhs - p.cb * beta) / p.ca;
  } else {
    for (const Eq& eq : eqs) {
      if (!eq.cb.is_zero()) {
        beta = eq.rhs / eq.cb;
        break;
      }
    }
  }
  // The candidate is definitive: an identity is unique, so the system has at
  // most one solution, and verification below rejects everything else.
  const Element u{alpha, beta};
  const Element e = basis_e(k), f = basis_f(k);
  if (multiply(u, e, A) == e && multiply(e, u, A) == e && multiply(u, f, A) == f &&
      multiply(f, u, A) == f) {
    return u;
  }
  return std::nullopt;
}

bool is_associative(const StructureMatrix& A) {
  const Element basis[2] = {basis_e(A.field()), basis_f(A.field())};
  for (const Element& x : basis) {
    for (const Element& y : basis) {
      for (const Element& z : basis) {
        if (multiply(multiply(x, y, A), z, A) != multiply(x, multiply(y, z, A), A)) {
          return false;
        }
      }
    }
  }
  return true;
}

std::array<Scalar, 4> curled_form_coefficients(const StructureMatrix& A) {
  // x = αe + βf has x² = α² e² + αβ (ef + fe) + β² f²; writing x² = ue + vf,
  // det(x | x²) = αv − βu expands to
  //   b₁ α³ + (b₃+b₄−a₁) α²β + (b₂−a₃−a₄) αβ² − a₂ β³
  // in the structure constants e² = a₁e+b₁f, ..., fe = a₄e+b₄f.
  return {
      A.ee().f,
      A.ef().f + A.fe().f - A.ee().e,
      A.ff().f - (A.ef().e + A.fe().e),
      -A.ff().e,
  };
}

bool is_straight(const StructureMatrix& A) {
  for (const Scalar& c : curled_form_coefficients(A)) {
    if (!c.is_zero()) return true;
  }
  return false;
}

bool is_curled_pointwise(const StructureMatrix& A) {
  const Field& k = A.field();
  if (!k.is_prime_field()) {
    throw UnsupportedField("pointwise curled check requires a finite field");
  }
  for (const Scalar& alpha : k.elements()) {
    for (const Scalar& beta : k.elements()) {
      const Element x{alpha, beta};
      const Element xx = square(x, A);
      if (!(alpha * xx.f - beta * xx.e).is_zero()) return false;
    }
  }
  return true;
}

std::optional<std::string> straightness_discrepancy(const StructureMatrix& A) {
  const bool symbolic_curled = !is_straight(A);
  const bool pointwise_curled = is_curled_pointwise(A);
  if (symbolic_curled == pointwise_curled) return std::nullopt;
  return "straight by the symbolic cubic-form test but every element of the " +
         A.field().name() + " algebra squares to a scalar multiple of itself";
}

int rank(const StructureMatrix& A) {
  std::array<std::array<Scalar, 2>, 4> rows = {{
      {A.ee().e, A.ee().f},
      {A.ff().e, A.ff().f},
      {A.ef().e, A.ef().f},
      {A.fe().e, A.fe().f},
  }};
  int r = 0;
  for (int col = 0; col < 2 && r < 4; ++col) {
    int pivot = -1;
    for (int i = r; i < 4; ++i) {
      if (!rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)].is_zero()) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(rows[static_cast<std::size_t>(r)], rows[static_cast<std::size_t>(pivot)]);
    const auto& prow = rows[static_cast<std::size_t>(r)];
    for (int i = r + 1; i < 4; ++i) {
      auto& row = rows[static_cast<std::size_t>(i)];
      if (row[static_cast<std::size_t>(col)].is_zero()) continue;
      const Scalar f = row[static_cast<std::size_t>(col)] / prow[static_cast<std::size_t>(col)];
      for (int j = col; j < 2; ++j) {
        row[static_cast<std::size_t>(j)] =
            row[static_cast<std::size_t>(j)] - f * prow[static_cast<std::size_t>(j)];
      }
    }
    ++r;
  }
  return r;
}

Scalar det(const Transform2& X) { return X.x * X.w - X.y * X.z; }

Transform2 identity_transform(const Field& field) {
  return Transform2{field.one(), field.zero(), field.zero(), field.one()};
}

Transform2 compose(const Transform2& X, const Transform2& Y) {
  return Transform2{
      X.x * Y.x + X.y * Y.z,
      X.x * Y.y + X.y * Y.w,
      X.z * Y.x + X.w * Y.z,
      X.z * Y.y + X.w * Y.w,
  };
}

Transform2 invert(const Field& field, const Transform2& X) {
  const Scalar d = det(X);
  if (d.is_zero()) throw DomainError("singular 2x2 transform");
  const Scalar di = field.inv(d);
  return Transform2{di * X.w, di * (-X.y), di * (-X.z), di * X.x};
}

Mat4 tilde(const Field& field, const Transform2& X) {
  field.require_element(X.x);
  field.require_element(X.y);
  field.require_element(X.z);
  field.require_element(X.w);
  const Scalar &x = X.x, &y = X.y, &z = X.z, &w = X.w;
  return Mat4{{{
      {x * x, y * y, x * y, x * y},
      {z * z, w * w, z * w, z * w},
      {x * z, y * w, x * w, y * z},
      {x * z, y * w, y * z, x * w},
  }}};
}

Mat4 identity_mat4(const Field& field) {
  const Scalar o = field.one(), z = field.zero();
  return Mat4{{{{o, z, z, z}, {z, o, z, z}, {z, z, o, z}, {z, z, z, o}}}};
}

Mat4 mat_mul(const Field& field, const Mat4& lhs, const Mat4& rhs) {
  Mat4 out = lhs;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      Scalar acc = field.zero();
      for (int k = 0; k < 4; ++k) {
        acc = acc + lhs.a[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] *
                        rhs.a[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
      }
      out.a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = acc;
    }
  }
  return out;
}

Scalar det(const Field& field, const Mat4& m) {
  Mat4 a = m;
  Scalar result = field.one();
  for (int col = 0; col < 4; ++col) {
    int pivot = -1;
    for (int i = col; i < 4; ++i) {
      if (!a.a[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)].is_zero()) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) return field.zero();
    if (pivot != col) {
      std::swap(a.a[static_cast<std::size_t>(col)], a.a[static_cast<std::size_t>(pivot)]);
      result = -result;
    }
    const Scalar pv = a.a[static_cast<std::size_t>(col)][static_cast<std::size_t>(col)];
    result = result * pv;
    for (int i = col + 1; i < 4; ++i) {
      auto& row = a.a[static_cast<std::size_t>(i)];
      if (row[static_cast<std::size_t>(col)].is_zero()) continue;
      const Scalar f = row[static_cast<std::size_t>(col)] / pv;
      for (int j = col; j < 4; ++j) {
        row[static_cast<std::size_t>(j)] =
            row[static_cast<std::size_t>(j)] -
            f * a.a[static_cast<std::size_t>(col)][static_cast<std::size_t>(j)];
      }
    }
  }
  return result;
}

Mat4 invert(const Field& field, const Mat4& m) {
  Mat4 a = m;
  Mat4 inv = identity_mat4(field);
  for (int col = 0; col < 4; ++col) {
    int pivot = -1;
    for (int i = col; i < 4; ++i) {
      if (!a.a[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)].is_zero()) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) throw DomainError("singular 4x4 matrix");
    if (pivot != col) {
      std::swap(a.a[static_cast<std::size_t>(col)], a.a[static_cast<std::size_t>(pivot)]);
      std::swap(inv.a[static_cast<std::size_t>(col)], inv.a[static_cast<std::size_t>(pivot)]);
    }
    const Scalar pv_inv = field.inv(a.a[static_cast<std::size_t>(col)][static_cast<std::size_t>(col)]);
    for (int j = 0; j < 4; ++j) {
      a.a[static_cast<std::size_t>(col)][static_cast<std::size_t>(j)] =
          pv_inv * a.a[static_cast<std::size_t>(col)][static_cast<std::size_t>(j)];
      inv.a[static_cast<std::size_t>(col)][static_cast<std::size_t>(j)] =
          pv_inv * inv.a[static_cast<std::size_t>(col)][static_cast<std::size_t>(j)];
    }
    for (int i = 0; i < 4; ++i) {
      if (i == col) continue;
      const Scalar f = a.a[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)];
      if (f.is_zero()) continue;
      for (int j = 0; j < 4; ++j) {
        a.a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
            a.a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -
            f * a.a[static_cast<std::size_t>(col)][static_cast<std::size_t>(j)];
        inv.a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
            inv.a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -
            f * inv.a[static_cast<std::size_t>(col)][static_cast<std::size_t>(j)];
      }
    }
  }
  return inv;
}

}  // namespace ecalg
