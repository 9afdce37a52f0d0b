#include "ecalg/cube_classes.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace ecalg {

namespace {

void require_finite(const Field& field, const char* what) {
  if (!field.is_prime_field()) {
    throw UnsupportedField(std::string(what) + " requires a finite prime field");
  }
}

void require_nonzero(const Scalar& s, const char* what) {
  if (s.is_zero()) throw DomainError(std::string(what) + ": zero is not in K*");
}

bool is_cube_in_units(const Field& field, const Scalar& v) {
  const std::uint64_t p = field.modulus();
  const std::uint64_t target = v.residue_value();
  for (std::uint64_t t = 1; t < p; ++t) {
    if (detail::mul_mod(detail::mul_mod(t, t, p), t, p) == target) return true;
  }
  return false;
}

std::vector<std::pair<std::uint64_t, int>> factor_u64(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, int>> out;
  for (std::uint64_t d : {std::uint64_t{2}, std::uint64_t{3}}) {
    int e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    if (e) out.emplace_back(d, e);
  }
  for (std::uint64_t d = 5; d <= n / d; d += 6) {
    for (std::uint64_t q : {d, d + 2}) {
      int e = 0;
      while (n % q == 0) {
        n /= q;
        ++e;
      }
      if (e) out.emplace_back(q, e);
    }
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

/// Signed exponent map of |num|/den, exact (not reduced mod 3).
std::map<std::uint64_t, long long> exponent_map(const Rational& r, const BigInt& bound) {
  BigInt num = boost::multiprecision::abs(boost::multiprecision::numerator(r));
  BigInt den = boost::multiprecision::denominator(r);
  if (num >= bound || den >= bound) {
    throw ResourceError("rational exceeds the factorization bound");
  }
  std::map<std::uint64_t, long long> exps;
  for (auto [prime, e] : factor_u64(num.convert_to<std::uint64_t>())) exps[prime] += e;
  for (auto [prime, e] : factor_u64(den.convert_to<std::uint64_t>())) exps[prime] -= e;
  return exps;
}

}  // namespace

std::vector<Scalar> cube_subgroup(const Field& field) {
  require_finite(field, "cube_subgroup");
  const std::uint64_t p = field.modulus();
  std::set<std::uint64_t> cubes;
  for (std::uint64_t t = 1; t < p; ++t) {
    cubes.insert(detail::mul_mod(detail::mul_mod(t, t, p), t, p));
  }
  std::vector<Scalar> out;
  out.reserve(cubes.size());
  for (std::uint64_t c : cubes) out.push_back(Scalar::residue(p, c));
  return out;
}

bool sim_equiv(const Field& field, const Scalar& a, const Scalar& b) {
  field.require_element(a);
  field.require_element(b);
  require_nonzero(a, "sim_equiv");
  require_nonzero(b, "sim_equiv");
  if (field.is_prime_field()) return is_cube_in_units(field, a / b);
  return q_signature(a.rational_value() / b.rational_value()).empty();
}

bool approx_equiv(const Field& field, const Scalar& a, const Scalar& b) {
  return sim_equiv(field, a, b) || sim_equiv(field, sq(a), b);
}

CubeClassPartition cube_classes(const Field& field, CubeRelation relation) {
  require_finite(field, "cube_classes");
  const auto units = field.units();
  std::vector<bool> assigned(units.size(), false);
  CubeClassPartition part{field, relation, {}};
  for (std::size_t i = 0; i < units.size(); ++i) {
    if (assigned[i]) continue;
    std::vector<Scalar> cls{units[i]};
    assigned[i] = true;
    for (std::size_t j = i + 1; j < units.size(); ++j) {
      if (assigned[j]) continue;
      const bool related = relation == CubeRelation::CubeRatio
                               ? sim_equiv(field, units[j], units[i])
                               : approx_equiv(field, units[j], units[i]);
      if (related) {
        cls.push_back(units[j]);
        assigned[j] = true;
      }
    }
    part.classes.push_back(std::move(cls));
  }
  return part;
}

RepSystem rep_system(const Field& field) {
  if (field.is_rationals()) {
    throw UnsupportedField("K*/≈ is infinite over the rationals; no finite representative system");
  }
  const auto part = cube_classes(field, CubeRelation::CubeRatioOrSquare);
  RepSystem reps{field, {}};
  reps.reps.reserve(part.classes.size());
  for (const auto& cls : part.classes) reps.reps.push_back(cls.front());
  return reps;
}

bool is_cube_rootable(const Field& field) {
  if (field.is_rationals()) return false;  // 2 is not a rational cube
  const std::uint64_t p = field.modulus();
  std::set<std::uint64_t> image;
  for (std::uint64_t t = 0; t < p; ++t) {
    image.insert(detail::mul_mod(detail::mul_mod(t, t, p), t, p));
  }
  return image.size() == p;
}

std::string QSignature::str() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i) os << ", ";
    os << '(' << entries[i].first << ',' << entries[i].second << ')';
  }
  os << '}';
  return os.str();
}

QSignature q_signature(const Rational& r, const BigInt& bound) {
  if (r.is_zero()) throw DomainError("q_signature of zero");
  QSignature sig;
  for (const auto& [prime, e] : exponent_map(r, bound)) {
    const int m = static_cast<int>(((e % 3) + 3) % 3);
    if (m != 0) sig.entries.emplace_back(prime, m);
  }
  return sig;
}

std::optional<Scalar> cube_root(const Field& field, const Scalar& s) {
  field.require_element(s);
  if (s.is_zero()) return field.zero();
  if (field.is_prime_field()) {
    const std::uint64_t p = field.modulus();
    const std::uint64_t target = s.residue_value();
    for (std::uint64_t t = 1; t < p; ++t) {
      if (detail::mul_mod(detail::mul_mod(t, t, p), t, p) == target) {
        return Scalar::residue(p, t);
      }
    }
    return std::nullopt;
  }
  const Rational& r = s.rational_value();
  BigInt num = 1, den = 1;
  for (const auto& [prime, e] : exponent_map(r, default_factor_bound())) {
    if (e % 3 != 0) return std::nullopt;
    BigInt power = boost::multiprecision::pow(BigInt(prime), static_cast<unsigned>(std::abs(e) / 3));
    (e > 0 ? num : den) *= power;
  }
  if (r < 0) num = -num;
  return Scalar::rational(Rational(num, den));
}

}  // namespace ecalg
