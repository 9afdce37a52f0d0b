#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ecalg/errors.hpp"

namespace ecalg {

/// Arbitrary-precision rational; the backing type keeps values in lowest
/// terms with a positive denominator, so equality is plain value equality.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Deterministic primality test for 64-bit integers (Miller-Rabin over the
/// witness set {2,...,37}, exact for the whole 64-bit range).
bool is_prime_u64(std::uint64_t n);

enum class FieldKind { PrimeField, Rationals };

namespace detail {

inline std::uint64_t add_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return (b != 0 && a >= p - b) ? a - (p - b) : a + b;
}

inline std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return a >= b ? a - b : a + (p - b);
}

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p);

inline std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
  if (a == 0) throw DomainError("inverse of zero in GF(" + std::to_string(p) + ")");
  return pow_mod(a, p - 2, p);  // p prime
}

}  // namespace detail

/// An exact scalar: either a canonical residue of some GF(p) or a rational.
/// A scalar knows which field it lives in, so arithmetic between elements of
/// different fields is detected and rejected at run time. Operators throw
/// DomainError on mixed operands and on division by zero.
class Scalar {
 public:
  Scalar() : v_(Rational(0)) {}

  static Scalar residue(std::uint64_t p, std::uint64_t r) { return Scalar(Gf{p, r % p}); }
  static Scalar rational(Rational q) { return Scalar(std::move(q)); }

  bool is_residue() const { return std::holds_alternative<Gf>(v_); }
  bool is_rational() const { return !is_residue(); }

  std::uint64_t modulus() const { return gf().p; }
  std::uint64_t residue_value() const { return gf().r; }
  const Rational& rational_value() const;

  bool is_zero() const;
  bool is_one() const;

  /// Canonical text form: decimal residue, or "n"/"n/d" in lowest terms.
  std::string str() const;

  friend bool operator==(const Scalar& a, const Scalar& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  /// Ordering on same-field scalars (residue order, rational value order).
  friend bool operator<(const Scalar& a, const Scalar& b);

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a);

 private:
  struct Gf {
    std::uint64_t p;
    std::uint64_t r;
    friend bool operator==(const Gf&, const Gf&) = default;
  };

  explicit Scalar(Gf g) : v_(g) {}
  explicit Scalar(Rational q) : v_(std::move(q)) {}

  const Gf& gf() const;
  static const Gf* as_gf(const Scalar& s) { return std::get_if<Gf>(&s.v_); }
  static const Rational* as_q(const Scalar& s) { return std::get_if<Rational>(&s.v_); }
  [[noreturn]] static void mixed_operands();

  std::variant<Gf, Rational> v_;
};

inline Scalar operator+(const Scalar& a, const Scalar& b) {
  if (const auto* x = Scalar::as_gf(a)) {
    const auto* y = Scalar::as_gf(b);
    if (!y || x->p != y->p) Scalar::mixed_operands();
    return Scalar(Scalar::Gf{x->p, detail::add_mod(x->r, y->r, x->p)});
  }
  const auto* y = Scalar::as_q(b);
  if (!y) Scalar::mixed_operands();
  return Scalar(*Scalar::as_q(a) + *y);
}

inline Scalar operator-(const Scalar& a, const Scalar& b) {
  if (const auto* x = Scalar::as_gf(a)) {
    const auto* y = Scalar::as_gf(b);
    if (!y || x->p != y->p) Scalar::mixed_operands();
    return Scalar(Scalar::Gf{x->p, detail::sub_mod(x->r, y->r, x->p)});
  }
  const auto* y = Scalar::as_q(b);
  if (!y) Scalar::mixed_operands();
  return Scalar(*Scalar::as_q(a) - *y);
}

inline Scalar operator*(const Scalar& a, const Scalar& b) {
  if (const auto* x = Scalar::as_gf(a)) {
    const auto* y = Scalar::as_gf(b);
    if (!y || x->p != y->p) Scalar::mixed_operands();
    return Scalar(Scalar::Gf{x->p, detail::mul_mod(x->r, y->r, x->p)});
  }
  const auto* y = Scalar::as_q(b);
  if (!y) Scalar::mixed_operands();
  return Scalar(*Scalar::as_q(a) * *y);
}

inline Scalar operator/(const Scalar& a, const Scalar& b) {
  if (const auto* x = Scalar::as_gf(a)) {
    const auto* y = Scalar::as_gf(b);
    if (!y || x->p != y->p) Scalar::mixed_operands();
    return Scalar(Scalar::Gf{x->p, detail::mul_mod(x->r, detail::inv_mod(y->r, x->p), x->p)});
  }
  const auto* y = Scalar::as_q(b);
  if (!y) Scalar::mixed_operands();
  if (y->is_zero()) throw DomainError("division by zero rational");
  return Scalar(*Scalar::as_q(a) / *y);
}

inline Scalar operator-(const Scalar& a) {
  if (const auto* x = Scalar::as_gf(a)) {
    return Scalar(Scalar::Gf{x->p, x->r == 0 ? 0 : x->p - x->r});
  }
  return Scalar(-*Scalar::as_q(a));
}

inline Scalar sq(const Scalar& a) { return a * a; }
inline Scalar cube(const Scalar& a) { return a * a * a; }

/// An exact field: GF(p) for a proven prime p, or the rationals.
class Field {
 public:
  /// Throws DomainError unless p passes the deterministic primality test.
  static Field gf(std::uint64_t p);
  static Field rationals();

  FieldKind kind() const { return kind_; }
  bool is_prime_field() const { return kind_ == FieldKind::PrimeField; }
  bool is_rationals() const { return kind_ == FieldKind::Rationals; }

  /// The prime modulus; prime fields only.
  std::uint64_t modulus() const;

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(std::int64_t v) const;
  /// GF(p): numerator times inverse denominator (denominator must be a unit).
  Scalar from_rational(const Rational& q) const;
  /// Parses "n" or "n/d" with optional sign, exact. Throws ParseError.
  Scalar parse_scalar(std::string_view text) const;

  Scalar inv(const Scalar& a) const;

  /// True iff s is a canonical element of this field.
  bool contains(const Scalar& s) const;
  /// Throws DomainError unless contains(s).
  void require_element(const Scalar& s) const;

  /// All p elements in ascending residue order. UnsupportedField over the
  /// rationals; ResourceError for primes too large to enumerate sensibly.
  std::vector<Scalar> elements() const;
  /// The units 1..p-1, ascending.
  std::vector<Scalar> units() const;

  std::string name() const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  Field(FieldKind kind, std::uint64_t p) : kind_(kind), p_(p) {}

  FieldKind kind_;
  std::uint64_t p_;
};

}  // namespace ecalg
