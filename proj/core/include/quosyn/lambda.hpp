#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "quosyn/framework.hpp"

namespace quosyn::lam {

// Untyped lambda terms with named binders.  Nodes are immutable and shared;
// every node caches its free-variable set so substitution can skip subtrees
// the variable does not occur in.
class term {
 public:
  enum class kind { var, app, abs };

  static term var(std::string name);
  static term app(term f, term a);
  static term abs(std::string binder, term body);

  kind k() const { return n_->k; }
  const std::string& name() const { return n_->name; }    // var
  const std::string& binder() const { return n_->name; }  // abs
  const term& fn() const { return n_->kids[0]; }
  const term& arg() const { return n_->kids[1]; }
  const term& body() const { return n_->kids[0]; }
  std::size_t arity() const { return n_->kids.size(); }
  const term& child(std::size_t i) const { return n_->kids[i]; }

  bool free_in(const std::string& name) const;
  const std::vector<std::string>& free_vars() const;  // sorted

  std::size_t size() const;
  // Structural equality, binder names included; use alpha_eq for the
  // equality the semantics cares about.
  bool operator==(const term& other) const;

 private:
  struct node {
    kind k;
    std::string name;
    std::vector<term> kids;
    std::vector<std::string> fv;  // sorted, unique
  };
  explicit term(std::shared_ptr<const node> n) : n_(std::move(n)) {}
  std::shared_ptr<const node> n_;
};

term with_child(const term& t, std::size_t i, term sub);

// Syntax: `\x. M` or the spelled-out lambda `λx. M`, multi-binder sugar
// `\x y. M`, application left-associative.  Identifiers are a letter
// followed by alphanumerics; leading underscores are reserved for generated
// fresh names.
term parse_term(const std::string& s);  // throws parse_error
std::string show(const term& t);        // minimal parentheses, '\\' lambda

bool alpha_eq(const term& a, const term& b);
bool is_normal(const term& t);  // no beta redex anywhere

// A term together with the checked fact that it contains no redex.
struct normal_form {
  term t;
  explicit normal_form(term checked) : t(std::move(checked)) {}
};
std::optional<normal_form> as_normal(term t);

// Leftmost-outermost reduction to normal form, capture-avoiding throughout;
// absent once `fuel` beta steps are spent.
std::optional<normal_form> beta_nf(const term& t, std::uint64_t fuel);

term subst(const term& t, const std::string& name, const term& s);

// The representation schema: <x> = \a b c. a x, <M N> = \a b c. b <M> <N>,
// <\x. M> = \a b c. c (\x. <M>), with a, b, c chosen away from the free
// variables of the represented term.  Output is always a normal form.
term rep(const term& t);

// Explicit decoder for the schema image, up to alpha; absent off the image.
std::optional<term> rep_inverse(const term& t);

// The self-interpreter E = Y \e. \m. m (\x. x) (\m n. (e m)(e n))
// (\m. \v. e (m v)); E <M> is beta-equivalent to M.
const term& self_interp_term();

// beta_nf(E <t>): alpha-equal to beta_nf(t) whenever both are defined.
std::optional<normal_form> run_self_interp(const term& t, std::uint64_t fuel);

inline constexpr std::uint64_t default_fuel = 100'000;

struct nf_value {
  term t;
  bool operator==(const nf_value& o) const { return alpha_eq(t, o.t); }
};
inline std::string to_text(const nf_value& v) { return show(v.t); }

// The Mogensen framework: the schema is both the syntax representation and
// the quotation; the syntax language is the normal forms; evaluation applies
// the self-interpreter and is built into the language (quotation is not).
class framework {
 public:
  using expr_type = term;

  explicit framework(std::uint64_t fuel = default_fuel) : fuel_(fuel) {}

  std::string id() const { return "lambda"; }
  framework_flags flags() const {
    framework_flags fl;
    fl.built_in_evaluation = true;
    return fl;
  }

  bool in_language(const expr_type&) const { return true; }
  bool in_object(const expr_type&) const { return true; }
  bool in_syntax(const expr_type& e) const { return is_normal(e); }

  value sem_value(const expr_type& e) const;
  value syn_value(const expr_type& e) const {
    return value(id(), nf_value{rep(e)});
  }
  std::optional<expr_type> syn_inverse(const value& v) const;

  expr_type quote(const expr_type& e) const { return rep(e); }
  std::optional<expr_type> eval(const expr_type& e) const;

  bool expr_equal(const expr_type& a, const expr_type& b) const {
    return alpha_eq(a, b);
  }
  std::string expr_text(const expr_type& e) const { return show(e); }

  std::size_t child_count(const expr_type& e) const { return e.arity(); }
  expr_type child(const expr_type& e, std::size_t i) const {
    return e.child(i);
  }
  expr_type with_child(const expr_type& e, std::size_t i,
                       const expr_type& sub) const {
    return lam::with_child(e, i, sub);
  }

  std::uint64_t fuel() const { return fuel_; }

 private:
  std::uint64_t fuel_;
};

// Small term builders used across tests and the harness corpus.
term church(unsigned n);
std::optional<unsigned> church_to_nat(const term& t, std::uint64_t fuel);

}  // namespace quosyn::lam
