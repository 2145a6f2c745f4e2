#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "quosyn/framework.hpp"
#include "quosyn/position.hpp"

namespace quosyn::lisp {

// S-expressions: integers, symbols, the empty list, and pairs.  Pair chains
// ending in nil get the usual list treatment in the reader, the printer, and
// tree navigation.
class sexpr {
 public:
  enum class kind { num, sym, nil, pair };

  static sexpr num(long long v);
  static sexpr sym(std::string name);
  static sexpr nil();
  static sexpr pair(sexpr h, sexpr t);
  static sexpr list(std::vector<sexpr> items);

  kind k() const { return n_->k; }
  long long number() const { return n_->num; }
  const std::string& name() const { return n_->name; }
  const sexpr& head() const { return n_->kids[0]; }
  const sexpr& tail() const { return n_->kids[1]; }

  bool is_list() const;                // nil-terminated pair chain (or nil)
  std::vector<sexpr> items() const;    // elements of a proper list
  bool is_sym(const char* name) const;

  std::size_t size() const;
  bool operator==(const sexpr& other) const;

 private:
  struct node {
    kind k;
    long long num;
    std::string name;
    std::vector<sexpr> kids;
  };
  explicit sexpr(std::shared_ptr<const node> n) : n_(std::move(n)) {}
  std::shared_ptr<const node> n_;
};

std::string show(const sexpr& e);
inline std::string to_text(const sexpr& e) { return show(e); }

// Reads exactly one S-expression.  ' expands to (quote x), ` to
// (backquote x), and , to (unquote x).
sexpr read(const std::string& s);  // throws parse_error

inline constexpr std::uint64_t default_fuel = 100'000;

// V: the result of interpreting e, or bottom (nullopt) on unbound symbols,
// arity and type errors, application of non-functions, stray reader
// markers, and fuel exhaustion.  The language is the pure subset:
// self-evaluating atoms, quote/eval/if/lambda/let, and the builtins
// + - * = cons car cdr list.  Nothing mutates, so V is a function.
using result = std::optional<sexpr>;
result interp(const sexpr& e, std::uint64_t fuel = default_fuel);

// Q: e |-> (quote e).
sexpr quote_of(const sexpr& e);

// E: e |-> (eval e), defined on the syntax language L' = {e : V(e) != bottom}.
sexpr eval_of(const sexpr& e, std::uint64_t fuel = default_fuel);

// Strips the comma markers out of a backquote expression, recording their
// positions: `(+ 2 ,(+ 3 1)) becomes base (+ 2 (+ 3 1)) with one mark at
// position 2 carrying splice (+ 3 1).  Nested backquotes are unsupported
// input; a comma outside any backquote is a read error.
marked_expr<sexpr> expand_backquote(const sexpr& e);

// V*: interpretation extended to backquote expressions; equals interp
// elsewhere.  Splice failures fold into bottom.
result interp_backquote(const sexpr& e, std::uint64_t fuel = default_fuel);

// The replete framework: every S-expression is object language, each one
// represents its own syntactic structure, and quotation and evaluation are
// the built-in operators.
class framework {
 public:
  using expr_type = sexpr;

  explicit framework(std::uint64_t fuel = default_fuel) : fuel_(fuel) {}

  std::string id() const { return "minilisp"; }
  framework_flags flags() const {
    framework_flags fl;
    fl.built_in_quotation = true;
    fl.built_in_evaluation = true;
    fl.replete = true;
    fl.syn_surjective = true;
    return fl;
  }

  bool in_language(const expr_type&) const { return true; }
  bool in_object(const expr_type&) const { return true; }
  bool in_syntax(const expr_type& e) const {
    return interp(e, fuel_).has_value();
  }

  value sem_value(const expr_type& e) const;
  value syn_value(const expr_type& e) const { return value(id(), e); }
  std::optional<expr_type> syn_inverse(const value& v) const;

  expr_type quote(const expr_type& e) const { return quote_of(e); }
  std::optional<expr_type> eval(const expr_type& e) const;

  bool expr_equal(const expr_type& a, const expr_type& b) const {
    return a == b;
  }
  std::string expr_text(const expr_type& e) const { return show(e); }

  std::size_t child_count(const expr_type& e) const;
  expr_type child(const expr_type& e, std::size_t i) const;
  expr_type with_child(const expr_type& e, std::size_t i,
                       const expr_type& sub) const;

  std::uint64_t fuel() const { return fuel_; }

 private:
  std::uint64_t fuel_;
};

}  // namespace quosyn::lisp
