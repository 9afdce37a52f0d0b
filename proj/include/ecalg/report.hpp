#pragma once

#include <string>

#include "ecalg/classify.hpp"

namespace ecalg {

// Human-readable renderers. The markdown tables mirror the multiplication
// table presentation (f, 0; 0, pe) of the type I family.

std::string classification_markdown(const ClassificationReport& report);
std::string classification_csv(const ClassificationReport& report);

std::string census_markdown(const Census& census);
std::string census_csv(const Census& census);

std::string cross_type_markdown(const CrossTypeReport& report);
std::string cross_type_csv(const CrossTypeReport& report);

std::string q_prime_family_text(const QPrimeFamilyReport& report);

/// "(f, 0; 0, pe)" with the scalar substituted, e.g. "(f, 0; 0, 2e)".
std::string type1_mult_table(const Scalar& p);

}  // namespace ecalg
