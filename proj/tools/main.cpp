// ecalg — exact construction, testing and classification of 2-dimensional
// endo-commutative algebras over GF(p) and Q.
//
// Exit codes: 0 positive result, 1 negative result (not EC / not isomorphic /
// not pairwise distinct), 2 usage or input error, 3 invariant violation.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

#include "ecalg/json_io.hpp"
#include "ecalg/report.hpp"
#include "ecalg/verify.hpp"

namespace {

using namespace ecalg;

Field parse_field_arg(const std::string& text) {
  if (text == "q" || text == "Q") return Field::rationals();
  if (text.rfind("gf:", 0) == 0) {
    const std::string digits = text.substr(3);
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos) {
      throw ParseError("bad field descriptor '" + text + "'");
    }
    try {
      return Field::gf(std::stoull(digits));
    } catch (const DomainError& e) {
      throw ParseError(e.what());
    }
  }
  throw ParseError("bad field descriptor '" + text + "' (expected gf:<p> or q)");
}

Json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  Json j;
  try {
    in >> j;
  } catch (const Json::exception& e) {
    throw ParseError("'" + path + "': " + e.what());
  }
  return j;
}

std::uint64_t resolve_budget(const CLI::Option* flag, std::uint64_t flag_value) {
  if (flag->count() > 0) return flag_value;
  if (const char* env = std::getenv("ECALG_BUDGET")) {
    const std::string text(env);
    if (!text.empty() && text.find_first_not_of("0123456789") == std::string::npos) {
      return std::stoull(text);
    }
    throw ParseError("ECALG_BUDGET must be a positive integer");
  }
  return flag_value;
}

void emit(const std::string& format, const Json& as_json, const std::string& as_md,
          const std::string& as_csv) {
  if (format == "json") {
    std::cout << as_json.dump(2) << "\n";
  } else if (format == "md") {
    std::cout << as_md;
  } else {
    std::cout << as_csv;
  }
}

int run(int argc, char** argv) {
  CLI::App app{"exact classification toolkit for 2-dimensional endo-commutative algebras"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  std::string format = "json";
  std::uint64_t budget = 13;
  int workers = 1;
  std::uint64_t seed = 0;
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"json", "csv", "md"}))
      ->capture_default_str();
  auto* budget_opt =
      app.add_option("--budget", budget, "largest modulus for exhaustive sweeps")
          ->check(CLI::PositiveNumber)
          ->capture_default_str();
  app.add_option("--workers", workers, "worker threads for sweeps")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--seed", seed, "seed for sampled checks")->capture_default_str();

  std::string ec_path;
  auto* ec_cmd = app.add_subcommand("ec-check", "decide endo-commutativity of an algebra file");
  ec_cmd->add_option("file", ec_path, "algebra JSON file")->required();

  std::string iso_a, iso_b;
  auto* iso_cmd = app.add_subcommand("iso", "decide isomorphism of two algebra files");
  iso_cmd->add_option("a", iso_a, "first algebra JSON file")->required();
  iso_cmd->add_option("b", iso_b, "second algebra JSON file")->required();

  std::string classify_field;
  auto* classify_cmd = app.add_subcommand("classify", "type I classification over a prime field");
  classify_cmd->add_option("--field", classify_field, "field descriptor, e.g. gf:7")->required();

  std::string census_field;
  bool keep_members = false;
  auto* census_cmd = app.add_subcommand("census", "exhaustive endo-commutative census");
  census_cmd->add_option("--field", census_field, "field descriptor, e.g. gf:5")->required();
  census_cmd->add_flag("--keep-members", keep_members, "include type II/III tuples in the report");

  std::vector<std::uint64_t> qprimes;
  auto* qprimes_cmd =
      app.add_subcommand("qprimes", "pairwise distinctness of prime classes over Q");
  qprimes_cmd->add_option("primes", qprimes, "prime numbers")->required()->expected(-1);

  std::string cross_field;
  auto* cross_cmd =
      app.add_subcommand("cross-type", "isomorphism search between type I and types II/III");
  cross_cmd->add_option("--field", cross_field, "field descriptor, e.g. gf:2")->required();

  bool list_only = false;
  auto* verify_cmd = app.add_subcommand("verify-paper", "run the full verification suite");
  verify_cmd->add_flag("--list", list_only, "list the criteria without running them");

  CLI11_PARSE(app, argc, argv);

  if (ec_cmd->parsed()) {
    const ParsedAlgebra parsed = algebra_from_json(load_json(ec_path));
    const EcVerdict verdict = parsed.straight
                                  ? is_ec_straight(parsed.field, *parsed.straight)
                                  : is_ec_general(parsed.matrix);
    std::cout << ec_verdict_to_json(verdict).dump(2) << "\n";
    return verdict.is_ec ? 0 : 1;
  }

  if (iso_cmd->parsed()) {
    const ParsedAlgebra a = algebra_from_json(load_json(iso_a));
    const ParsedAlgebra b = algebra_from_json(load_json(iso_b));
    if (!(a.field == b.field)) throw ParseError("the two algebras live over different fields");
    IsoWitness witness;
    if (a.field.is_prime_field()) {
      witness = are_isomorphic_bruteforce(a.matrix, b.matrix);
    } else {
      const auto type1_of = [](const ParsedAlgebra& x) -> std::optional<Scalar> {
        if (!x.straight) return std::nullopt;
        const StraightParams& s = *x.straight;
        if (s.p.is_zero() || !s.q.is_zero() || !s.a.is_zero() || !s.b.is_zero() ||
            !s.c.is_zero() || !s.d.is_zero()) {
          return std::nullopt;
        }
        return s.p;
      };
      const auto pa = type1_of(a), pb = type1_of(b);
      if (!pa || !pb) {
        throw UnsupportedField(
            "over Q only type I algebras S(p,0,0,0,0,0) can be decided; got a general algebra");
      }
      witness = type1_iso_decide(a.field, *pa, *pb);
    }
    std::cout << iso_witness_to_json(witness).dump(2) << "\n";
    return witness.found ? 0 : 1;
  }

  if (classify_cmd->parsed()) {
    const Field field = parse_field_arg(classify_field);
    if (field.is_rationals()) {
      throw UnsupportedField(
          "the classification over Q is countably infinite; use `ecalg qprimes` for the "
          "prime-family witness");
    }
    const ClassificationReport report = type1_classification(field);
    emit(format, classification_to_json(report), classification_markdown(report),
         classification_csv(report));
    return 0;
  }

  if (census_cmd->parsed()) {
    const Field field = parse_field_arg(census_field);
    CensusOptions opts;
    opts.max_modulus = resolve_budget(budget_opt, budget);
    opts.keep_type23 = keep_members;
    opts.workers = workers;
    const Census census = enumerate_ecs(field, opts);
    emit(format, census_to_json(census), census_markdown(census), census_csv(census));
    return 0;
  }

  if (qprimes_cmd->parsed()) {
    const QPrimeFamilyReport report = q_prime_family(qprimes);
    if (format == "json") {
      std::cout << q_prime_family_to_json(report).dump(2) << "\n";
    } else {
      std::cout << q_prime_family_text(report);
    }
    return report.pairwise_distinct ? 0 : 1;
  }

  if (cross_cmd->parsed()) {
    const Field field = parse_field_arg(cross_field);
    CensusOptions opts;
    opts.max_modulus = resolve_budget(budget_opt, budget);
    opts.workers = workers;
    const CrossTypeReport report = cross_type_experiment(field, opts);
    emit(format, cross_type_to_json(report), cross_type_markdown(report),
         cross_type_csv(report));
    return 0;
  }

  if (verify_cmd->parsed()) {
    if (list_only) {
      const auto names = acceptance_criteria_names();
      for (std::size_t i = 0; i < names.size(); ++i) {
        std::cout << (i + 1) << ". " << names[i] << "\n";
      }
      std::cout << names.size() << " criteria.\n";
      return 0;
    }
    AcceptanceOptions opts;
    opts.seed = seed;
    opts.workers = workers;
    const auto results = run_acceptance(opts);
    print_acceptance(std::cout, results);
    if (!all_passed(results)) {
      std::cout << "verification FAILED\n";
      return 3;
    }
    std::cout << "all criteria passed\n";
    return 0;
  }

  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const InvariantViolation& e) {
    std::cerr << "invariant violation: " << e.what() << "\n";
    return 3;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
