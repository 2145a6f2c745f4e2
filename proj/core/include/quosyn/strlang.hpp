#pragma once

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "quosyn/framework.hpp"
#include "quosyn/prop.hpp"

namespace quosyn::strlang {

// Many-sorted terms over Symbol and String: individual constants for each
// alphabet symbol, nil, and cons/head/tail for building and deconstructing
// strings.  Trees are built freely; sort discipline is checked where terms
// are used.
class str_term {
 public:
  enum class kind { sym, nil, cons, head, tail };

  static str_term sym(char c);  // c must come from the alphabet
  static str_term nil();
  static str_term cons(str_term h, str_term t);
  static str_term head(str_term s);
  static str_term tail(str_term s);

  kind k() const { return n_->k; }
  char symbol() const { return n_->c; }
  std::size_t arity() const { return n_->kids.size(); }
  const str_term& child(std::size_t i) const { return n_->kids[i]; }

  std::size_t size() const;
  bool operator==(const str_term& other) const;

 private:
  struct node {
    kind k;
    char c;
    std::vector<str_term> kids;
  };
  explicit str_term(std::shared_ptr<const node> n) : n_(std::move(n)) {}
  std::shared_ptr<const node> n_;
};

str_term with_child(const str_term& t, std::size_t i, str_term sub);

enum class term_sort { symbol, string };

// Sort of the root constructor: sym/head are Symbol, nil/cons/tail String.
term_sort sort_of(const str_term& t);
// Argument sorts respected throughout the tree.
bool well_sorted(const str_term& t);

// The fixed alphabet: every character that can occur in the printed form of
// an object expression (formula syntax plus the term syntax below).
const std::vector<char>& alphabet();
bool in_alphabet(char c);

// Concrete term syntax (documented, not canonical to any source):
//   'c'         symbol constant, with \' and \\ escapes
//   [nil]       [cons H T]       [head S]       [tail S]
std::string term_text(const str_term& t);
str_term parse_term(const std::string& s);  // throws parse_error

using term_result = std::variant<char, std::string>;

// Denotation of a term: a symbol for Symbol sort, a string for String sort.
// Ill-sorted trees are an input error; head/tail of the empty string is
// undefined and comes back absent.
std::optional<term_result> term_value(const str_term& t);

// The object language: propositional formulas (reusing the prop module's
// grammar) together with the value-defined terms above, so terms can be
// quoted like any other expression.
using expr = std::variant<prop::formula, str_term>;

bool in_object_language(const expr& e);

// The string over the alphabet representing the syntactic structure of e.
std::string string_rep(const expr& e);

// Q: the right-nested cons chain of symbol constants denoting string_rep(e).
str_term quote_str(const expr& e);

// E: parse the denoted string back into an object expression; absent when
// the string is not the printed form of one.  Symbol-sorted input is a sort
// error.
std::optional<expr> eval_str(const str_term& t);

// The canonical-string reader behind eval_str.
std::optional<expr> parse_object(const std::string& s);

class framework {
 public:
  using expr_type = expr;

  framework() = default;

  static expr_type of(prop::formula f) { return expr_type(std::move(f)); }
  static expr_type of(str_term t) { return expr_type(std::move(t)); }

  std::string id() const { return "strlang"; }
  framework_flags flags() const {
    framework_flags fl;
    fl.universal_disquotation = true;
    return fl;
  }

  bool in_language(const expr_type& e) const { return in_object_language(e); }
  bool in_object(const expr_type& e) const { return in_object_language(e); }
  bool in_syntax(const expr_type& e) const;

  value sem_value(const expr_type& e) const;
  value syn_value(const expr_type& e) const;
  std::optional<expr_type> syn_inverse(const value& v) const;

  expr_type quote(const expr_type& e) const;
  std::optional<expr_type> eval(const expr_type& e) const;

  bool expr_equal(const expr_type& a, const expr_type& b) const {
    return a == b;
  }
  std::string expr_text(const expr_type& e) const;

  std::size_t child_count(const expr_type& e) const;
  expr_type child(const expr_type& e, std::size_t i) const;
  expr_type with_child(const expr_type& e, std::size_t i,
                       const expr_type& sub) const;
};

}  // namespace quosyn::strlang
