#include "ecalg/field.hpp"

#include <array>
#include <bit>

namespace ecalg {

namespace detail {

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t acc = 1 % p;
  base %= p;
  while (exp != 0) {
    if (exp & 1) acc = mul_mod(acc, base, p);
    base = mul_mod(base, base, p);
    exp >>= 1;
  }
  return acc;
}

}  // namespace detail

bool is_prime_u64(std::uint64_t n) {
  static constexpr std::array<std::uint64_t, 12> kWitnesses = {2,  3,  5,  7,  11, 13,
                                                               17, 19, 23, 29, 31, 37};
  if (n < 2) return false;
  for (std::uint64_t w : kWitnesses) {
    if (n % w == 0) return n == w;
  }
  const std::uint64_t d0 = n - 1;
  const int s = std::countr_zero(d0);
  const std::uint64_t d = d0 >> s;
  for (std::uint64_t w : kWitnesses) {
    std::uint64_t x = detail::pow_mod(w, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = detail::mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

const Rational& Scalar::rational_value() const {
  const Rational* q = as_q(*this);
  if (!q) throw DomainError("scalar is not rational");
  return *q;
}

const Scalar::Gf& Scalar::gf() const {
  const Gf* g = std::get_if<Gf>(&v_);
  if (!g) throw DomainError("scalar is not a prime-field residue");
  return *g;
}

void Scalar::mixed_operands() {
  throw DomainError("arithmetic on scalars from different fields");
}

bool Scalar::is_zero() const {
  if (const Gf* g = std::get_if<Gf>(&v_)) return g->r == 0;
  return std::get<Rational>(v_).is_zero();
}

bool Scalar::is_one() const {
  if (const Gf* g = std::get_if<Gf>(&v_)) return g->r == 1 % g->p;
  return std::get<Rational>(v_) == 1;
}

std::string Scalar::str() const {
  if (const Gf* g = std::get_if<Gf>(&v_)) return std::to_string(g->r);
  return std::get<Rational>(v_).str();
}

bool operator<(const Scalar& a, const Scalar& b) {
  const auto* x = Scalar::as_gf(a);
  const auto* y = Scalar::as_gf(b);
  if (x && y) return x->p != y->p ? x->p < y->p : x->r < y->r;
  if (!x && !y) return *Scalar::as_q(a) < *Scalar::as_q(b);
  return x != nullptr;  // residues sort before rationals
}

Field Field::gf(std::uint64_t p) {
  if (!is_prime_u64(p)) {
    throw DomainError("GF(" + std::to_string(p) + "): modulus is not prime");
  }
  return Field(FieldKind::PrimeField, p);
}

Field Field::rationals() { return Field(FieldKind::Rationals, 0); }

std::uint64_t Field::modulus() const {
  if (!is_prime_field()) throw DomainError("modulus() requires a prime field");
  return p_;
}

Scalar Field::zero() const {
  return is_prime_field() ? Scalar::residue(p_, 0) : Scalar::rational(Rational(0));
}

Scalar Field::one() const {
  return is_prime_field() ? Scalar::residue(p_, 1 % p_) : Scalar::rational(Rational(1));
}

Scalar Field::from_int(std::int64_t v) const {
  if (is_rationals()) return Scalar::rational(Rational(v));
  if (v >= 0) return Scalar::residue(p_, static_cast<std::uint64_t>(v) % p_);
  const std::uint64_t mag = static_cast<std::uint64_t>(-(v + 1)) + 1;
  const std::uint64_t r = mag % p_;
  return Scalar::residue(p_, r == 0 ? 0 : p_ - r);
}

Scalar Field::from_rational(const Rational& q) const {
  if (is_rationals()) return Scalar::rational(q);
  BigInt num = boost::multiprecision::numerator(q) % p_;
  if (num < 0) num += p_;
  BigInt den = boost::multiprecision::denominator(q) % p_;
  if (den == 0) {
    throw DomainError("rational with denominator divisible by " + std::to_string(p_));
  }
  const std::uint64_t n = num.convert_to<std::uint64_t>();
  const std::uint64_t d = den.convert_to<std::uint64_t>();
  return Scalar::residue(p_, detail::mul_mod(n, detail::inv_mod(d, p_), p_));
}

namespace {

BigInt parse_bigint(std::string_view text) {
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) ++i;
  if (i == text.size()) throw ParseError("empty integer in scalar literal");
  for (std::size_t j = i; j < text.size(); ++j) {
    if (text[j] < '0' || text[j] > '9') {
      throw ParseError("bad integer literal: '" + std::string(text) + "'");
    }
  }
  return BigInt(std::string(text));
}

}  // namespace

Scalar Field::parse_scalar(std::string_view text) const {
  const auto slash = text.find('/');
  BigInt num, den = 1;
  if (slash == std::string_view::npos) {
    num = parse_bigint(text);
  } else {
    num = parse_bigint(text.substr(0, slash));
    den = parse_bigint(text.substr(slash + 1));
    if (den <= 0) throw ParseError("denominator must be positive: '" + std::string(text) + "'");
  }
  try {
    return from_rational(Rational(num, den));
  } catch (const DomainError& e) {
    throw ParseError(std::string("scalar '") + std::string(text) + "': " + e.what());
  }
}

Scalar Field::inv(const Scalar& a) const {
  require_element(a);
  if (a.is_zero()) throw DomainError("inversion of zero in " + name());
  return one() / a;
}

bool Field::contains(const Scalar& s) const {
  return is_prime_field() ? (s.is_residue() && s.modulus() == p_) : s.is_rational();
}

void Field::require_element(const Scalar& s) const {
  if (!contains(s)) throw DomainError("scalar does not belong to " + name());
}

std::vector<Scalar> Field::elements() const {
  if (!is_prime_field()) throw UnsupportedField("cannot enumerate the rationals");
  if (p_ > (std::uint64_t{1} << 22)) {
    throw ResourceError("element enumeration limited to small prime fields");
  }
  std::vector<Scalar> out;
  out.reserve(p_);
  for (std::uint64_t r = 0; r < p_; ++r) out.push_back(Scalar::residue(p_, r));
  return out;
}

std::vector<Scalar> Field::units() const {
  if (!is_prime_field()) throw UnsupportedField("cannot enumerate the rationals");
  if (p_ > (std::uint64_t{1} << 22)) {
    throw ResourceError("element enumeration limited to small prime fields");
  }
  std::vector<Scalar> out;
  out.reserve(p_ - 1);
  for (std::uint64_t r = 1; r < p_; ++r) out.push_back(Scalar::residue(p_, r));
  return out;
}

std::string Field::name() const {
  return is_prime_field() ? "GF(" + std::to_string(p_) + ")" : "Q";
}

}  // namespace ecalg
