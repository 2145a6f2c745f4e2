#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "quosyn/framework.hpp"

namespace quosyn::goedel {

using bignat = boost::multiprecision::cpp_int;

// First-order arithmetic over the naturals: terms built from Zero, Succ,
// Plus, Times and variables; formulas from Eq, Not, And, and ForAll.  The
// extended language adds a built-in quote operator: quote(e) is a term for
// any expression e.  Factories enforce the sort discipline, so every arith
// is well-sorted by construction.
class arith {
 public:
  enum class kind {
    zero,
    succ,
    plus,
    times,
    var_t,
    eq,
    not_f,
    and_f,
    forall,
    quote_t
  };

  static arith zero();
  static arith succ(arith t);
  static arith plus(arith a, arith b);
  static arith times(arith a, arith b);
  static arith var(const std::string& name);  // one of u v w x y z
  static arith eq(arith a, arith b);
  static arith not_f(arith f);
  static arith and_f(arith a, arith b);
  static arith forall(const std::string& name, arith body);
  static arith quote_t(arith e);

  kind k() const { return n_->k; }
  const std::string& name() const { return n_->name; }  // var_t / forall
  std::size_t arity() const { return n_->kids.size(); }
  const arith& child(std::size_t i) const { return n_->kids[i]; }

  std::size_t size() const;
  bool operator==(const arith& other) const;

 private:
  struct node {
    kind k;
    std::string name;
    std::vector<arith> kids;
  };
  explicit arith(std::shared_ptr<const node> n) : n_(std::move(n)) {}
  std::shared_ptr<const node> n_;
};

bool is_term(const arith& e);
bool is_formula(const arith& e);
bool contains_quote(const arith& e);
bool is_closed_term(const arith& e);  // no variable outside a quote
arith with_child(const arith& e, std::size_t i, arith sub);

const std::vector<std::string>& variable_names();

// Canonical token spelling: 0, S(t), (t+u), (t*u), (t=u), ~f, (f&g), !x.f,
// @(e).  Parsing accepts exactly these spellings.
std::string spell(const arith& e);
arith parse_expr(const std::string& s);  // throws parse_error

// The fixed symbol table: its size is the base of the numbering.  '@' sits
// last so the extended numbering restricts to the plain one on quote-free
// expressions.
const std::string& symbol_table();

// Variable assignment; unmapped variables read as zero, which keeps the
// valuation total on open expressions.
using var_env = std::map<std::string, bignat>;

// Universal quantifiers range over {0..quantifier_domain-1}: a documented,
// computable stand-in for standard-model truth.
inline constexpr unsigned quantifier_domain = 4;

bignat eval_term(const arith& t, const var_env& env = {});  // sort error on formulas
bool eval_formula(const arith& f, const var_env& env = {});

// The numbering: spell the expression and read the token string as a
// bijective base-k numeral over the symbol table (digits 1..k, most
// significant first).  Injective and total; 0 is never a code.
bignat encode(const arith& e);
std::optional<arith> decode(const bignat& n);       // quote-free language
std::optional<arith> decode_star(const bignat& n);  // extended language

// Succ^n(Zero).  Materialization of absurdly large chains is refused.
arith numeral(std::uint64_t n);

// A compact term denoting n, built from the binary decomposition; quotation
// maps e to code_term(encode(e)), whose value is the Goedel number of e.
arith code_term(const bignat& n);

// Quotation in the two flavors: the meta framework denotes the code by a
// term; the extension makes quote(e) itself the quotation.
arith quote_meta(const arith& e);
arith quote_builtin(const arith& e);

// E: the expression whose Goedel number the term denotes, if any.
std::optional<arith> eval_num(const arith& t);

// The add transformer over closed natural-number terms: add(2,3) = 5.
arith add_transformer(const arith& t1, const arith& t2);
// Its lifted operator over the syntax language.
arith lifted_add(const arith& q1, const arith& q2);

// Three framework flavors over the same carrier:
//   meta     F  — quotation by code terms, evaluation partial on all terms;
//   total    F' — the syntax language restricted to terms whose value is a
//                 code, making evaluation total;
//   builtin  F* — the quote operator built into the language, syntax
//                 language unrestricted (so the non-total-eval witness the
//                 liar argument promises actually exists in it).
class framework {
 public:
  enum class mode { meta, total, builtin };
  using expr_type = arith;

  explicit framework(mode m = mode::meta) : mode_(m) {}

  std::string id() const;
  framework_flags flags() const;

  bool in_language(const expr_type& e) const;
  bool in_object(const expr_type& e) const { return in_language(e); }
  bool in_syntax(const expr_type& e) const;

  value sem_value(const expr_type& e) const;
  value syn_value(const expr_type& e) const;
  std::optional<expr_type> syn_inverse(const value& v) const;

  expr_type quote(const expr_type& e) const;
  std::optional<expr_type> eval(const expr_type& e) const;

  bool expr_equal(const expr_type& a, const expr_type& b) const {
    return a == b;
  }
  std::string expr_text(const expr_type& e) const { return spell(e); }

  std::size_t child_count(const expr_type& e) const { return e.arity(); }
  expr_type child(const expr_type& e, std::size_t i) const {
    return e.child(i);
  }
  expr_type with_child(const expr_type& e, std::size_t i,
                       const expr_type& sub) const {
    return goedel::with_child(e, i, sub);
  }

  mode which() const { return mode_; }

 private:
  mode mode_;
};

struct nat_value {
  bignat n;
  bool operator==(const nat_value&) const = default;
};
inline std::string to_text(const nat_value& v) { return v.n.str(); }

}  // namespace quosyn::goedel
