#pragma once

#include <concepts>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "quosyn/errors.hpp"
#include "quosyn/report.hpp"
#include "quosyn/value.hpp"

namespace quosyn {

struct framework_flags {
  bool built_in_quotation = false;
  bool built_in_evaluation = false;
  bool replete = false;
  // V_syn maps the object language onto all of the syntactic domain; when
  // set, direct evaluation is total on the syntax language.
  bool syn_surjective = false;
  // E(Q(e)) returns e itself, not merely a semantic equal.
  bool universal_disquotation = false;
};

// A syntax framework instance: an interpreted language (membership test for
// L plus a total sem_value), a syntax representation (injective syn_value
// with an explicit decoder syn_inverse), a syntax language (in_syntax), and
// the quotation/evaluation pair linking them.
//
// Contracts, uniform across instances:
//   - sem_value is total on L and throws membership_error outside L.
//   - syn_value is total and injective on L_obj; membership_error outside.
//   - quote maps L_obj into L_syn with sem_value(quote(e)) == syn_value(e).
//   - eval throws membership_error outside L_syn and returns nullopt where
//     evaluation is undefined; a returned expression lies in L_obj.
//   - syn_inverse returns nullopt exactly when the value is outside the
//     image of L_obj under syn_value.
template <class F>
concept syntax_framework = requires(const F& f, const typename F::expr_type& e,
                                    const value& v) {
  { f.id() } -> std::convertible_to<std::string>;
  { f.flags() } -> std::convertible_to<framework_flags>;
  { f.in_language(e) } -> std::convertible_to<bool>;
  { f.in_object(e) } -> std::convertible_to<bool>;
  { f.in_syntax(e) } -> std::convertible_to<bool>;
  { f.sem_value(e) } -> std::convertible_to<value>;
  { f.syn_value(e) } -> std::convertible_to<value>;
  { f.syn_inverse(v) } -> std::convertible_to<std::optional<typename F::expr_type>>;
  { f.quote(e) } -> std::convertible_to<typename F::expr_type>;
  { f.eval(e) } -> std::convertible_to<std::optional<typename F::expr_type>>;
  { f.expr_equal(e, e) } -> std::convertible_to<bool>;
  { f.expr_text(e) } -> std::convertible_to<std::string>;
};

// Child access over expression trees; positions, splicing, and failure
// minimization are built on these.
template <class F>
concept navigable_framework =
    syntax_framework<F> &&
    requires(const F& f, const typename F::expr_type& e, std::size_t i) {
      { f.child_count(e) } -> std::convertible_to<std::size_t>;
      { f.child(e, i) } -> std::convertible_to<typename F::expr_type>;
      { f.with_child(e, i, e) } -> std::convertible_to<typename F::expr_type>;
    };

// E* = V_syn^-1 . V_sem: the canonical evaluation, defined for every
// framework, total whenever V_syn is surjective.
template <syntax_framework F>
std::optional<typename F::expr_type> direct_eval(const F& f,
                                                 const typename F::expr_type& e) {
  if (!f.in_syntax(e)) {
    throw membership_error("direct_eval: expression outside the syntax language of " +
                           std::string(f.id()));
  }
  return f.syn_inverse(f.sem_value(e));
}

namespace detail {

// Single-sample property checks shared by check_framework and the harness.

template <syntax_framework F>
bool quotation_axiom_holds(const F& f, const typename F::expr_type& e) {
  auto q = f.quote(e);
  return f.in_syntax(q) && f.sem_value(q) == f.syn_value(e);
}

// The Evaluation Axiom cross-checked through direct evaluation: wherever
// both E and E* are defined they agree semantically.
template <syntax_framework F>
bool evaluation_axiom_holds(const F& f, const typename F::expr_type& s) {
  auto r = f.eval(s);
  if (!r) return true;  // undefined: nothing claimed
  auto d = direct_eval(f, s);
  if (!d) return false;  // E defined but the value decodes to nothing
  return f.sem_value(*r) == f.sem_value(*d);
}

template <syntax_framework F>
bool disquotation_holds(const F& f, const typename F::expr_type& e) {
  auto r = f.eval(f.quote(e));
  if (!r) return true;  // law holds wherever E(Q(e)) is defined
  return f.sem_value(*r) == f.sem_value(e);
}

template <syntax_framework F>
bool syntactic_disquotation_holds(const F& f, const typename F::expr_type& e) {
  auto r = f.eval(f.quote(e));
  return r && f.expr_equal(*r, e);
}

template <syntax_framework F>
bool builtin_separation_holds(const F& f, const typename F::expr_type& e) {
  auto r = f.eval(f.quote(e));
  if (!r) return true;
  return !f.expr_equal(*r, e) && f.sem_value(*r) == f.sem_value(e);
}

}  // namespace detail

// Runs the per-sample axiom list over a fixed sample set and reports it.
// Samples must lie in L_obj.  Failures are recorded, never thrown.
// `sample_seeds`, when nonempty, supplies one sub-seed per sample for the
// counterexample records.
template <syntax_framework F>
check_report check_framework(const F& f,
                             std::span<const typename F::expr_type> samples,
                             std::uint64_t seed = 0,
                             std::span<const std::uint64_t> sample_seeds = {}) {
  for (const auto& e : samples) {
    if (!f.in_object(e)) {
      throw membership_error("check_framework: sample outside the object language of " +
                             std::string(f.id()));
    }
  }
  auto seed_of = [&](std::size_t i) {
    return i < sample_seeds.size() ? sample_seeds[i] : seed;
  };

  check_report report;
  report.instance = f.id();
  const framework_flags flags = f.flags();

  property_tally quotation("quotation_axiom", seed);
  property_tally evaluation("evaluation_axiom", seed);
  property_tally disquotation("disquotation", seed);
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const auto& e = samples[i];
    quotation.tally(detail::quotation_axiom_holds(f, e), f.expr_text(e), seed_of(i));
    evaluation.tally(detail::evaluation_axiom_holds(f, f.quote(e)), f.expr_text(e),
                     seed_of(i));
    disquotation.tally(detail::disquotation_holds(f, e), f.expr_text(e), seed_of(i));
  }
  report.properties.push_back(quotation.finish());
  report.properties.push_back(evaluation.finish());
  report.properties.push_back(disquotation.finish());

  // Sampled injectivity: pairwise over the sample set.
  property_tally q_inj("quote_injective", seed);
  property_tally v_inj("syn_value_injective", seed);
  std::vector<typename F::expr_type> quotes;
  std::vector<value> syn_values;
  quotes.reserve(samples.size());
  syn_values.reserve(samples.size());
  for (const auto& e : samples) {
    quotes.push_back(f.quote(e));
    syn_values.push_back(f.syn_value(e));
  }
  for (std::size_t i = 0; i < samples.size(); ++i) {
    bool q_ok = true;
    bool v_ok = true;
    std::string witness;
    for (std::size_t j = 0; j < i; ++j) {
      if (f.expr_equal(samples[i], samples[j])) continue;
      if (f.expr_equal(quotes[i], quotes[j])) {
        q_ok = false;
        witness = f.expr_text(samples[i]) + " / " + f.expr_text(samples[j]);
      }
      if (syn_values[i] == syn_values[j]) {
        v_ok = false;
        witness = f.expr_text(samples[i]) + " / " + f.expr_text(samples[j]);
      }
      if (!q_ok || !v_ok) break;
    }
    q_inj.tally(q_ok, witness, seed_of(i));
    v_inj.tally(v_ok, witness, seed_of(i));
  }
  report.properties.push_back(q_inj.finish());
  report.properties.push_back(v_inj.finish());

  if (flags.built_in_quotation && flags.built_in_evaluation) {
    property_tally sep("builtin_separation", seed);
    for (std::size_t i = 0; i < samples.size(); ++i) {
      sep.tally(detail::builtin_separation_holds(f, samples[i]),
                f.expr_text(samples[i]), seed_of(i));
    }
    report.properties.push_back(sep.finish());
  }

  return report;
}

// An n-ary transformer T over the object language together with its lifted
// syntactic operator e_T, specified by
//   e_T(Q(e_1), ..., Q(e_n)) = Q(T(e_1, ..., e_n))
// up to semantic value.
template <syntax_framework F>
struct transformer_spec {
  using expr_type = typename F::expr_type;
  std::string name;
  std::size_t arity = 0;
  std::function<bool(const F&, const expr_type&)> in_domain;
  std::function<expr_type(const F&, std::span<const expr_type>)> apply;  // T
  std::function<expr_type(const F&, std::span<const expr_type>)> lift;   // e_T
};

template <syntax_framework F>
check_report check_transformer(
    const F& f, const transformer_spec<F>& t,
    std::span<const std::vector<typename F::expr_type>> samples,
    std::uint64_t seed = 0) {
  check_report report;
  report.instance = f.id();
  property_tally tally("transformer:" + t.name, seed);
  for (const auto& tuple : samples) {
    if (tuple.size() != t.arity) {
      throw input_error("check_transformer: expected arity " +
                        std::to_string(t.arity) + ", got " +
                        std::to_string(tuple.size()));
    }
    for (const auto& e : tuple) {
      if (!t.in_domain(f, e)) {
        throw input_error("check_transformer: input outside the transformer domain");
      }
    }
    std::vector<typename F::expr_type> quoted;
    quoted.reserve(tuple.size());
    for (const auto& e : tuple) quoted.push_back(f.quote(e));

    auto lifted = t.lift(f, quoted);
    auto direct = f.quote(t.apply(f, tuple));
    bool ok = f.sem_value(lifted) == f.sem_value(direct);

    std::string witness;
    if (!ok) {
      witness = "(";
      for (std::size_t i = 0; i < tuple.size(); ++i) {
        if (i) witness += ", ";
        witness += f.expr_text(tuple[i]);
      }
      witness += ")";
    }
    tally.tally(ok, witness, seed);
  }
  report.properties.push_back(tally.finish());
  return report;
}

}  // namespace quosyn
