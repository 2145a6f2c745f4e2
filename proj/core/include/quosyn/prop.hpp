#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "quosyn/framework.hpp"

namespace quosyn::prop {

// Propositional formulas as an inductive tree: the internal representation
// an interpreter of the string language parses into and prints from.
class formula {
 public:
  enum class kind { true_lit, false_lit, var, neg, conj, disj };

  static formula t();
  static formula f();
  static formula var(std::string name);
  static formula neg(formula x);
  static formula conj(formula a, formula b);
  static formula disj(formula a, formula b);

  kind k() const { return n_->k; }
  const std::string& name() const { return n_->name; }
  const formula& lhs() const { return n_->kids[0]; }
  const formula& rhs() const { return n_->kids[1]; }
  std::size_t arity() const { return n_->kids.size(); }
  const formula& child(std::size_t i) const { return n_->kids[i]; }

  std::size_t size() const;  // node count
  bool operator==(const formula& other) const;

 private:
  struct node {
    kind k;
    std::string name;
    std::vector<formula> kids;
  };
  explicit formula(std::shared_ptr<const node> n) : n_(std::move(n)) {}
  std::shared_ptr<const node> n_;
};

// Concrete grammar: atoms `true`, `false`, identifiers (letter then
// alphanumerics); `~` binds tightest, then `&`, then `|`, both binary ops
// left-associative; parentheses allowed.  Canonical output uses single
// spaces around binary operators and minimal parentheses.
formula parse(const std::string& s);          // throws parse_error with offset
std::string print(const formula& f);          // canonical string
bool is_canonical(const std::string& s);      // parses and round-trips

// Constructor-style rendering, e.g. And(Var "p", True).
std::string ast_text(const formula& f);
inline std::string to_text(const formula& f) { return ast_text(f); }

// f with its i-th child replaced.
formula with_child(const formula& f, std::size_t i, formula sub);

// A partial map from variable names to truth values; lookups distinguish
// unmapped variables, which is what drives simplification.
class assignment {
 public:
  assignment() = default;
  assignment& set(std::string var, bool v);
  std::optional<bool> lookup(const std::string& var) const;
  // CLI syntax: "p=T,q=F" (also accepts t/f, 1/0).
  static assignment parse_text(const std::string& text);
  bool operator==(const assignment&) const = default;

 private:
  std::map<std::string, bool> map_;
};

// Truth value of f when every variable is mapped; otherwise a simplified
// formula over the unmapped variables only.  One bottom-up pass of constant
// folding plus the unit/absorption laws and double-negation elimination;
// idempotent.
formula value(const formula& f, const assignment& phi);

// Total truth evaluation; unmapped variables read as false.
bool truth(const formula& f, const assignment& phi);

// print(value(parse(s), phi)).
std::string interpret(const std::string& s, const assignment& phi);

// The interpreter as a syntax framework: the full language is the canonical
// formula strings (the object language) together with the formula trees
// (the syntax language); quotation is parsing, evaluation is printing.
class framework {
 public:
  using expr_type = std::variant<std::string, formula>;
  using value_t = quosyn::value;  // `value` names the simplifier here

  explicit framework(assignment phi = {}) : phi_(std::move(phi)) {}

  static expr_type text(std::string s) { return expr_type(std::move(s)); }
  static expr_type tree(formula f) { return expr_type(std::move(f)); }

  std::string id() const { return "prop"; }
  framework_flags flags() const {
    framework_flags fl;
    fl.syn_surjective = true;
    fl.universal_disquotation = true;
    return fl;
  }

  bool in_language(const expr_type& e) const;
  bool in_object(const expr_type& e) const;
  bool in_syntax(const expr_type& e) const;

  value_t sem_value(const expr_type& e) const;
  value_t syn_value(const expr_type& e) const;
  std::optional<expr_type> syn_inverse(const value_t& v) const;

  expr_type quote(const expr_type& e) const;
  std::optional<expr_type> eval(const expr_type& e) const;

  bool expr_equal(const expr_type& a, const expr_type& b) const;
  std::string expr_text(const expr_type& e) const;

  std::size_t child_count(const expr_type& e) const;
  expr_type child(const expr_type& e, std::size_t i) const;
  expr_type with_child(const expr_type& e, std::size_t i,
                       const expr_type& sub) const;

 private:
  assignment phi_;
};

}  // namespace quosyn::prop
