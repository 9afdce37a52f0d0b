#include "ecalg/report.hpp"

#include <bit>
#include <sstream>

namespace ecalg {

namespace {

std::string join_scalars(const std::vector<Scalar>& values, const char* sep) {
  std::ostringstream os;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) os << sep;
    os << values[i].str();
  }
  return os.str();
}

std::string straight_str(const StraightParams& s) {
  std::ostringstream os;
  os << "S(" << s.p.str() << ',' << s.q.str() << ',' << s.a.str() << ',' << s.b.str() << ','
     << s.c.str() << ',' << s.d.str() << ')';
  return os.str();
}

}  // namespace

std::string type1_mult_table(const Scalar& p) {
  const std::string coeff = p.is_one() ? "" : p.str();
  return "(f, 0; 0, " + coeff + "e)";
}

std::string classification_markdown(const ClassificationReport& report) {
  std::ostringstream os;
  os << "# Type I classification over " << report.field.name() << "\n\n";
  os << report.classes.size() << " isomorphism classes.\n\n";
  os << "| class | representative p | multiplication table | members of K* |\n";
  os << "|------:|-----------------:|:----------------------|:--------------|\n";
  for (std::size_t i = 0; i < report.classes.size(); ++i) {
    const TypeIClass& cls = report.classes[i];
    os << "| " << (i + 1) << " | " << cls.representative.str() << " | "
       << type1_mult_table(cls.representative) << " | " << join_scalars(cls.members, ", ")
       << " |\n";
  }
  if (!report.observations.empty()) {
    os << "\n";
    for (const std::string& o : report.observations) os << "- " << o << "\n";
  }
  for (const std::string& a : report.anomalies) os << "- ANOMALY: " << a << "\n";
  return os.str();
}

std::string classification_csv(const ClassificationReport& report) {
  std::ostringstream os;
  os << "class,representative,members\n";
  for (std::size_t i = 0; i < report.classes.size(); ++i) {
    const TypeIClass& cls = report.classes[i];
    os << (i + 1) << ',' << cls.representative.str() << ",\"" << join_scalars(cls.members, " ")
       << "\"\n";
  }
  return os.str();
}

std::string census_markdown(const Census& census) {
  std::ostringstream os;
  os << "# Endo-commutative census over " << census.field.name() << "\n\n";
  os << census.tuples_scanned << " tuples scanned; " << census.ec_total
     << " endo-commutative, of which " << census.ec_rank2 << " have rank 2.\n\n";
  os << "| pattern (p,a,c nonzero) | type | EC count |\n";
  os << "|:------------------------|:-----|---------:|\n";
  for (int mask = 0; mask < 8; ++mask) {
    AlgebraType type;
    switch (std::popcount(static_cast<unsigned>(mask))) {
      case 0: type = AlgebraType::NotRank2; break;
      case 1: type = AlgebraType::TypeI; break;
      case 2: type = AlgebraType::TypeII; break;
      default: type = AlgebraType::TypeIII; break;
    }
    os << "| " << pattern_label(mask) << " | " << algebra_type_name(type) << " | "
       << census.ec_by_pattern[static_cast<std::size_t>(mask)] << " |\n";
  }
  os << "\nType I tuples: ";
  for (std::size_t i = 0; i < census.type1_members.size(); ++i) {
    if (i) os << ", ";
    os << straight_str(census.type1_members[i]);
  }
  os << "\n";
  return os.str();
}

std::string census_csv(const Census& census) {
  std::ostringstream os;
  os << "pattern,count\n";
  for (int mask = 0; mask < 8; ++mask) {
    os << pattern_label(mask) << ',' << census.ec_by_pattern[static_cast<std::size_t>(mask)]
       << "\n";
  }
  return os.str();
}

std::string cross_type_markdown(const CrossTypeReport& report) {
  std::ostringstream os;
  os << "# Cross-type isomorphism search over " << report.field.name() << "\n\n";
  os << "EC counts: type I " << report.type1_count << ", type II " << report.type2_count
     << ", type III " << report.type3_count << ".\n\n";
  if (report.pairs.empty()) {
    os << "No isomorphism between a type I algebra and a type II/III algebra was found.\n";
  } else {
    os << "| type I | other | type | pattern |\n";
    os << "|:-------|:------|:-----|:--------|\n";
    for (const CrossTypePair& pair : report.pairs) {
      os << "| " << straight_str(pair.type1) << " | " << straight_str(pair.other) << " | "
         << algebra_type_name(pair.other_type) << " | " << pattern_name(pair.pattern) << " |\n";
    }
  }
  os << "\n";
  for (const std::string& note : report.notes) os << "- " << note << "\n";
  return os.str();
}

std::string cross_type_csv(const CrossTypeReport& report) {
  std::ostringstream os;
  os << "type1,other,other_type,pattern\n";
  for (const CrossTypePair& pair : report.pairs) {
    os << '"' << straight_str(pair.type1) << "\",\"" << straight_str(pair.other) << "\","
       << algebra_type_name(pair.other_type) << ',' << pattern_name(pair.pattern) << "\n";
  }
  return os.str();
}

std::string q_prime_family_text(const QPrimeFamilyReport& report) {
  std::ostringstream os;
  os << "primes:";
  for (std::uint64_t p : report.primes) os << ' ' << p;
  os << "\npairs checked: " << report.pairs_checked << "\n";
  os << "pairwise distinct: " << (report.pairwise_distinct ? "true" : "false") << "\n";
  for (const auto& [a, b] : report.colliding) {
    os << "collision: " << a << " ≈ " << b << "\n";
  }
  return os.str();
}

}  // namespace ecalg
