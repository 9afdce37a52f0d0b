#include "ecalg/verify.hpp"

#include <chrono>
#include <functional>
#include <iomanip>
#include <ostream>
#include <random>
#include <sstream>
#include <unordered_set>

#include "ecalg/classify.hpp"

namespace ecalg {

namespace {

struct Criterion {
  std::string name;
  double limit_seconds;                 // 0 = none
  std::function<std::string(const AcceptanceOptions&)> run;  // "" on success
};

StructureMatrix matrix_from_digits(const Field& field, const std::vector<Scalar>& res,
                                   const std::array<std::size_t, 8>& d) {
  return StructureMatrix(field, Element{res[d[0]], res[d[1]]}, Element{res[d[2]], res[d[3]]},
                         Element{res[d[4]], res[d[5]]}, Element{res[d[6]], res[d[7]]});
}

template <std::size_t N>
bool next_digits(std::array<std::size_t, N>& d, std::size_t base) {
  for (std::size_t i = N; i-- > 0;) {
    if (++d[i] < base) return true;
    d[i] = 0;
  }
  return false;
}

StraightParams tuple_from_digits(const std::vector<Scalar>& res,
                                 const std::array<std::size_t, 6>& d) {
  return StraightParams{res[d[0]], res[d[1]], res[d[2]], res[d[3]], res[d[4]], res[d[5]]};
}

StraightParams random_tuple(const Field& field, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint64_t> dist(0, field.modulus() - 1);
  const auto draw = [&] { return Scalar::residue(field.modulus(), dist(rng)); };
  return StraightParams{draw(), draw(), draw(), draw(), draw(), draw()};
}

std::string check_definitional_vs_general(const AcceptanceOptions&) {
  for (std::uint64_t q : {2, 3}) {
    const Field field = Field::gf(q);
    const auto res = field.elements();
    std::array<std::size_t, 8> d{};
    std::uint64_t total = 0;
    do {
      const StructureMatrix A = matrix_from_digits(field, res, d);
      if (is_ec_definitional(A).is_ec != is_ec_general(A).is_ec) {
        return field.name() + ": deciders disagree on matrix #" + std::to_string(total);
      }
      ++total;
    } while (next_digits(d, res.size()));
  }
  return "";
}

std::string check_straight_vs_general(const AcceptanceOptions& opts) {
  for (std::uint64_t q : {2, 3}) {
    const Field field = Field::gf(q);
    const auto res = field.elements();
    std::array<std::size_t, 6> d{};
    do {
      const StraightParams s = tuple_from_digits(res, d);
      if (is_ec_general(embed(field, s)).is_ec != is_ec_straight(field, s).is_ec) {
        return field.name() + ": straight-form and general deciders disagree";
      }
    } while (next_digits(d, res.size()));
  }
  for (std::uint64_t q : {5, 7}) {
    const Field field = Field::gf(q);
    std::mt19937_64 rng(opts.seed);
    for (int i = 0; i < 10000; ++i) {
      const StraightParams s = random_tuple(field, rng);
      if (is_ec_general(embed(field, s)).is_ec != is_ec_straight(field, s).is_ec) {
        return field.name() + ": straight-form and general deciders disagree on sample " +
               std::to_string(i);
      }
    }
  }
  return "";
}

std::string check_lift_homomorphism(const AcceptanceOptions&) {
  const Field field = Field::gf(3);
  std::vector<Transform2> group;
  for_each_gl2(field, [&](const Transform2& X) {
    group.push_back(X);
    return true;
  });
  if (group.size() != 48) {
    return "expected |GL2(GF(3))| = 48, got " + std::to_string(group.size());
  }
  for (const Transform2& X : group) {
    const Scalar d = det(X);
    if (det(field, tilde(field, X)) != d * d * d * d) {
      return "det(lift(X)) != det(X)^4";
    }
  }
  for (const Transform2& X : group) {
    for (const Transform2& Y : group) {
      if (tilde(field, compose(X, Y)) != mat_mul(field, tilde(field, X), tilde(field, Y))) {
        return "lift(XY) != lift(X)lift(Y)";
      }
    }
  }
  return "";
}

std::string check_type1_census(const AcceptanceOptions& opts) {
  const std::uint64_t expected[4][2] = {{2, 1}, {3, 2}, {5, 4}, {7, 6}};
  std::ostringstream detail;
  for (const auto& [q, count] : expected) {
    CensusOptions census_opts;
    census_opts.workers = opts.workers;
    const CensusCheck check = verify_type1_census(Field::gf(q), census_opts);
    if (!check.ok) {
      return "GF(" + std::to_string(q) + "): " + check.anomalies.front();
    }
    if (check.type1_count != count) {
      return "GF(" + std::to_string(q) + "): type I count " + std::to_string(check.type1_count) +
             " != " + std::to_string(count);
    }
  }
  return "";
}

std::string check_type1_class_counts(const AcceptanceOptions&) {
  const std::uint64_t expected[5][2] = {{2, 1}, {3, 1}, {5, 1}, {7, 2}, {13, 2}};
  for (const auto& [q, classes] : expected) {
    const ClassificationReport report = type1_classification(Field::gf(q));
    if (report.classes.size() != classes) {
      return "GF(" + std::to_string(q) + "): " + std::to_string(report.classes.size()) +
             " classes, expected " + std::to_string(classes);
    }
  }
  return "";
}

std::string check_type1_properties(const AcceptanceOptions&) {
  for (std::uint64_t q : {2, 3, 5, 7, 13}) {
    if (!verify_type1_properties(Field::gf(q))) {
      return "GF(" + std::to_string(q) + "): a type I algebra misbehaved";
    }
  }
  return "";
}

std::string check_cube_rootable_single_class(const AcceptanceOptions&) {
  for (std::uint64_t q : {2, 3, 5}) {
    const Field field = Field::gf(q);
    if (!is_cube_rootable(field)) {
      return field.name() + " should be cube-rootable";
    }
    if (!verify_single_class_when_cube_rootable(field)) {
      return field.name() + ": expected the single class of S(1,0,...,0)";
    }
  }
  return "";
}

std::string check_constructive_witnesses(const AcceptanceOptions&) {
  for (std::uint64_t q : {7, 13}) {
    const Field field = Field::gf(q);
    for (const Scalar& p : field.units()) {
      for (const Scalar& p2 : field.units()) {
        if (!approx_equiv(field, p, p2)) continue;
        const IsoWitness w = type1_iso_decide(field, p, p2);
        if (!w.found || !w.X) {
          return field.name() + ": no witness for the ≈-equivalent pair (" + p.str() + ", " +
                 p2.str() + ")";
        }
        if (!type1_iso_equations(field, p, p2, *w.X)) {
          return field.name() + ": witness violates the six type I conditions";
        }
        if (!(transform(type1_matrix(field, p), *w.X) == type1_matrix(field, p2))) {
          return field.name() + ": witness does not transform the structure matrix";
        }
      }
    }
  }
  const Field rationals = Field::rationals();
  const Scalar eight = rationals.from_int(8);
  const Scalar one = rationals.one();
  const IsoWitness w = type1_iso_decide(rationals, eight, one);
  const Transform2 expected{rationals.from_int(2), rationals.zero(), rationals.zero(),
                            rationals.from_int(4)};
  if (!w.found || !w.X || !(*w.X == expected)) {
    return "Q: (8, 1) should yield the witness [[2,0],[0,4]]";
  }
  if (!type1_iso_equations(rationals, eight, one, *w.X) ||
      !(transform(type1_matrix(rationals, eight), *w.X) == type1_matrix(rationals, one))) {
    return "Q: the (8, 1) witness fails verification";
  }
  return "";
}

std::string check_prime_family(const AcceptanceOptions&) {
  const std::vector<std::uint64_t> primes = {2, 3, 5, 7, 11, 13, 17, 19};
  const Field rationals = Field::rationals();
  std::uint64_t pairs = 0;
  for (std::size_t i = 0; i < primes.size(); ++i) {
    for (std::size_t j = i + 1; j < primes.size(); ++j) {
      const Scalar a = rationals.from_int(static_cast<std::int64_t>(primes[i]));
      const Scalar b = rationals.from_int(static_cast<std::int64_t>(primes[j]));
      if (sim_equiv(rationals, a, b)) {
        return std::to_string(primes[i]) + " ~ " + std::to_string(primes[j]);
      }
      if (sim_equiv(rationals, sq(a), b)) {
        return std::to_string(primes[i]) + "² ~ " + std::to_string(primes[j]);
      }
      ++pairs;
    }
  }
  if (pairs != 28) return "expected 28 pairs, checked " + std::to_string(pairs);
  const QPrimeFamilyReport report = q_prime_family(primes);
  if (!report.pairwise_distinct || report.pairs_checked != 28) {
    return "prime family report disagrees with the direct check";
  }
  return "";
}

std::string check_cross_type(const AcceptanceOptions& opts) {
  for (std::uint64_t q : {2, 3, 5, 7}) {
    const Field field = Field::gf(q);
    CensusOptions census_opts;
    census_opts.workers = opts.workers;
    const CrossTypeReport report = cross_type_experiment(field, census_opts);
    if (q == 2) {
      if (!report.char2_no_type2_link) return "GF(2): found a type I ↔ type II isomorphism";
      for (const CrossTypePair& pair : report.pairs) {
        if (pair.other_type == AlgebraType::TypeII) {
          return "GF(2): found a type I ↔ type II isomorphism";
        }
      }
    }
    for (const CrossTypePair& pair : report.pairs) {
      if (pair.pattern == NecessaryPattern::None) {
        return field.name() + ": a found pair violates the necessary pattern";
      }
    }
    // Independent route on the small fields: per-tuple brute-force filter.
    if (q <= 3) {
      CensusOptions keep = census_opts;
      keep.keep_type23 = true;
      const Census census = enumerate_ecs(field, keep);
      std::unordered_set<std::string> orbit_hits;
      for (const CrossTypePair& pair : report.pairs) {
        orbit_hits.insert(pair.other.p.str() + "," + pair.other.q.str() + "," +
                          pair.other.a.str() + "," + pair.other.b.str() + "," +
                          pair.other.c.str() + "," + pair.other.d.str());
      }
      for (const StraightParams& s : census.type23_members) {
        const CrossTypeFilterResult f = cross_type_filter(field, s);
        const std::string key = s.p.str() + "," + s.q.str() + "," + s.a.str() + "," +
                                s.b.str() + "," + s.c.str() + "," + s.d.str();
        if (f.has_type1_isomorph != (orbit_hits.count(key) > 0)) {
          return field.name() + ": orbit search and pairwise search disagree on " + key;
        }
      }
    }
  }
  return "";
}

std::string check_rank_invariance(const AcceptanceOptions& opts) {
  const Field field = Field::gf(3);
  std::vector<Transform2> group;
  for_each_gl2(field, [&](const Transform2& X) {
    group.push_back(X);
    return true;
  });
  std::mt19937_64 rng(opts.seed);
  std::uniform_int_distribution<std::uint64_t> dist(0, field.modulus() - 1);
  for (int i = 0; i < 200; ++i) {
    const auto draw = [&] { return Scalar::residue(field.modulus(), dist(rng)); };
    const StructureMatrix A(field, Element{draw(), draw()}, Element{draw(), draw()},
                            Element{draw(), draw()}, Element{draw(), draw()});
    const int r = rank(A);
    for (const Transform2& X : group) {
      if (rank(transform(A, X)) != r) {
        return "rank changed under a basis transform (sample " + std::to_string(i) + ")";
      }
    }
  }
  return "";
}

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> list = {
      {"EC deciders agree: definitional sweep vs general conditions, all matrices over GF(2)/GF(3)",
       10.0, check_definitional_vs_general},
      {"EC deciders agree: straight-form vs general conditions, exhaustive GF(2)/GF(3) + seeded "
       "GF(5)/GF(7) samples",
       10.0, check_straight_vs_general},
      {"GL2 lift is a homomorphism with det(lift X) = (det X)^4, exhaustive over GL2(GF(3))", 1.0,
       check_lift_homomorphism},
      {"type I census is exactly {S(p,0,...,0) : p != 0} over GF(2/3/5/7), counts 1/2/4/6", 60.0,
       check_type1_census},
      {"type I class counts 1/1/1/2/2 over GF(2/3/5/7/13), ≈ partition == GL2 partition", 120.0,
       check_type1_class_counts},
      {"every type I algebra is commutative, non-unital, non-associative (GF(2/3/5/7/13))", 0.0,
       check_type1_properties},
      {"cube-rootable GF(2/3/5): a single class with representative 1", 0.0,
       check_cube_rootable_single_class},
      {"constructive witnesses verify for all ≈ pairs over GF(7)/GF(13) and (8,1) over Q", 0.0,
       check_constructive_witnesses},
      {"primes 2..19 are pairwise distinct type I classes over Q (28 pairs)", 1.0,
       check_prime_family},
      {"cross-type search: no I↔II link over GF(2); all found links match the necessary pattern",
       0.0, check_cross_type},
      {"rank is invariant under basis transforms: 200 seeded algebras x GL2(GF(3))", 0.0,
       check_rank_invariance},
  };
  return list;
}

}  // namespace

std::vector<std::string> acceptance_criteria_names() {
  std::vector<std::string> names;
  names.reserve(criteria().size());
  for (const Criterion& c : criteria()) names.push_back(c.name);
  return names;
}

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opts) {
  std::vector<CriterionResult> results;
  results.reserve(criteria().size());
  int index = 1;
  for (const Criterion& c : criteria()) {
    CriterionResult r;
    r.index = index++;
    r.name = c.name;
    r.limit_seconds = c.limit_seconds;
    const auto start = std::chrono::steady_clock::now();
    try {
      r.detail = c.run(opts);
    } catch (const std::exception& e) {
      r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    r.passed = r.detail.empty();
    if (r.passed && r.limit_seconds > 0.0 && r.seconds >= r.limit_seconds) {
      r.passed = false;
      r.detail = "exceeded the time budget";
    }
    results.push_back(std::move(r));
  }
  return results;
}

bool all_passed(const std::vector<CriterionResult>& results) {
  for (const CriterionResult& r : results) {
    if (!r.passed) return false;
  }
  return true;
}

void print_acceptance(std::ostream& os, const std::vector<CriterionResult>& results) {
  for (const CriterionResult& r : results) {
    os << '[' << std::setw(2) << r.index << '/' << results.size() << "] "
       << (r.passed ? "PASS" : "FAIL") << "  " << r.name << "  (" << std::fixed
       << std::setprecision(2) << r.seconds << "s";
    if (r.limit_seconds > 0.0) os << " / " << std::setprecision(0) << r.limit_seconds << "s";
    os << ")";
    if (!r.detail.empty()) os << "\n      " << r.detail;
    os << "\n";
  }
}

}  // namespace ecalg
