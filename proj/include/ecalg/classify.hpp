#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ecalg/cube_classes.hpp"
#include "ecalg/ec_check.hpp"
#include "ecalg/iso.hpp"

namespace ecalg {

// Rank-2 EC straight algebras S(p,q,a,b,c,d) split into three types by how
// many of p, a, c are nonzero (one, two or all three). Type I collapses to
// the family {S(p,0,0,0,0,0) : p ≠ 0}, classified up to isomorphism by the
// ≈ classes of K*.

enum class AlgebraType { TypeI, TypeII, TypeIII, NotRank2 };

std::string algebra_type_name(AlgebraType t);

struct TypeVerdict {
  AlgebraType type;
  /// Nonzero pattern of (p, a, c): bit 2 = p ≠ 0, bit 1 = a ≠ 0, bit 0 = c ≠ 0.
  int nonzero_mask;
};

TypeVerdict classify_type(const Field& field, const StraightParams& s);

/// "101"-style label of a nonzero mask.
std::string pattern_label(int mask);

struct CensusOptions {
  /// Largest modulus the p⁶ sweep will accept.
  std::uint64_t max_modulus = 13;
  /// Keep the type II/III tuples (the sweep always keeps type I).
  bool keep_type23 = false;
  int workers = 1;
};

struct Census {
  Field field;
  std::uint64_t tuples_scanned = 0;
  std::uint64_t ec_total = 0;
  std::uint64_t ec_rank2 = 0;
  /// EC counts indexed by the nonzero mask of (p, a, c).
  std::array<std::uint64_t, 8> ec_by_pattern{};
  std::vector<StraightParams> type1_members = {};   // lexicographic
  std::vector<StraightParams> type23_members = {};  // only when kept
  bool type23_kept = false;
};

/// Tests every 6-tuple over GF(p) for endo-commutativity and tallies the
/// survivors by type. Workers partition the sweep by the first coordinate;
/// the merged result is identical for any worker count.
Census enumerate_ecs(const Field& field, const CensusOptions& opts = {});

struct CensusCheck {
  bool ok = true;
  std::uint64_t type1_count = 0;
  std::vector<std::string> anomalies;
};

/// Exhaustively confirms the type I census: among EC tuples the patterns 001
/// and 010 are empty and pattern 100 is exactly {(p,0,0,0,0,0) : p ≠ 0}.
CensusCheck verify_type1_census(const Field& field, const CensusOptions& opts = {});

struct TypeIClass {
  Scalar representative;
  std::vector<Scalar> members;
};

struct MemberWitness {
  Scalar member;
  Scalar representative;
  IsoWitness witness;
};

struct ClassificationReport {
  Field field;
  std::vector<TypeIClass> classes;
  /// For every unit p, a verified witness transforming S(p,0,...,0) to its
  /// class representative.
  std::vector<MemberWitness> witnesses;
  std::vector<std::string> observations;
  std::vector<std::string> anomalies;
};

/// Partitions {S(p,0,...,0) : p in K*} up to isomorphism two independent
/// ways — the ≈ classes of K* and exhaustive pairwise GL₂ search — and
/// requires classwise agreement (InvariantViolation otherwise, which would
/// mean the classification itself failed empirically).
ClassificationReport type1_classification(const Field& field);

/// Every type I algebra is commutative, has no identity, and is not
/// associative. Checked for all p in K*.
bool verify_type1_properties(const Field& field);

/// Over a cube-rootable field the type I classification collapses to the
/// single class of S(1,0,...,0). DomainError when not cube-rootable.
bool verify_single_class_when_cube_rootable(const Field& field);

struct QPrimeFamilyReport {
  std::vector<std::uint64_t> primes;
  std::uint64_t pairs_checked = 0;
  bool pairwise_distinct = true;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> colliding;
};

/// Distinct primes are pairwise inequivalent under ≈ over the rationals, so
/// each prime names its own isomorphism class of type I algebras — the
/// witness family behind the countably-infinite classification over Q.
QPrimeFamilyReport q_prime_family(const std::vector<std::uint64_t>& primes);

/// Necessary parameter pattern for a type II/III algebra isomorphic to a
/// type I algebra: q = -a, a ≠ 0, b = d = 0, c = a; split by p = 0 / p ≠ 0.
enum class NecessaryPattern { PZero, PNonzero, None };

std::string pattern_name(NecessaryPattern p);

/// Syntactic pattern test only; no isomorphism search.
NecessaryPattern cross_iso_pattern(const Field& field, const StraightParams& s);

struct CrossTypeFilterResult {
  NecessaryPattern pattern = NecessaryPattern::None;
  bool has_type1_isomorph = false;
  std::optional<Scalar> type1_p;
  std::optional<Transform2> witness;
};

/// Brute-force search of an EC type II/III tuple against every type I
/// algebra, combined with the pattern test. A tuple isomorphic to a type I
/// algebra while violating the pattern is an InvariantViolation.
CrossTypeFilterResult cross_type_filter(const Field& field, const StraightParams& s);

struct CrossTypePair {
  StraightParams type1;
  StraightParams other;
  AlgebraType other_type;
  NecessaryPattern pattern;
  /// transform(S(type1), witness) == S(other).
  Transform2 witness;
};

struct CrossTypeReport {
  Field field;
  std::uint64_t type1_count = 0;
  std::uint64_t type2_count = 0;
  std::uint64_t type3_count = 0;
  std::vector<CrossTypePair> pairs = {};
  /// Over GF(2): no type I algebra may be isomorphic to a type II algebra.
  bool char2_no_type2_link = true;
  std::vector<std::string> notes = {};
};

/// Exhaustive isomorphism search between type I and type II/III EC algebras,
/// run as GL₂-orbit enumeration of every type I algebra (the orbit of S(p)
/// under transform is exactly its isomorphism class). Violations of the
/// necessary pattern — or any type II link in characteristic 2 — raise
/// InvariantViolation.
CrossTypeReport cross_type_experiment(const Field& field, const CensusOptions& opts = {});

}  // namespace ecalg
