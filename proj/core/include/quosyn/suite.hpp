#pragma once

#include <string>
#include <vector>

#include "quosyn/gen.hpp"
#include "quosyn/report.hpp"

namespace quosyn::harness {

// Runs the full property suite for one instance: the core axiom list
// (quotation, evaluation, disquotation, sampled injectivity, built-in
// separation where the instance has both operators), the flag-derived
// properties (surjective totality, syntactic disquotation), and the
// instance-specific ones (backquote equivalence, self-interpretation,
// semantic preservation, partiality/totality of Goedel evaluation).
// Deterministic: identical configs produce identical reports.
check_report run_suite(const gen_config& cfg);

// Registered instance ids, in the order `check all` runs them.
const std::vector<std::string>& instance_ids();

// One generated object-language expression, rendered as text.
std::string gen_expr_text(const gen_config& cfg);

}  // namespace quosyn::harness
