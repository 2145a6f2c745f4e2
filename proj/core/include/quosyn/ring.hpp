#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "quosyn/framework.hpp"

namespace quosyn::ring {

// Ring expressions over the integers with variables v0, v1, ...
class ring_expr {
 public:
  enum class kind { cnst, var, add, mul, neg };

  static ring_expr cnst(long long c);
  static ring_expr var(std::uint32_t index);
  static ring_expr add(ring_expr a, ring_expr b);
  static ring_expr mul(ring_expr a, ring_expr b);
  static ring_expr neg(ring_expr a);

  kind k() const { return n_->k; }
  long long constant() const { return n_->c; }
  std::uint32_t index() const { return n_->index; }
  std::size_t arity() const { return n_->kids.size(); }
  const ring_expr& child(std::size_t i) const { return n_->kids[i]; }

  std::size_t size() const;
  bool operator==(const ring_expr& other) const;

 private:
  struct node {
    kind k;
    long long c;
    std::uint32_t index;
    std::vector<ring_expr> kids;
  };
  explicit ring_expr(std::shared_ptr<const node> n) : n_(std::move(n)) {}
  std::shared_ptr<const node> n_;
};

// The inductive polynomial type, mirroring the ring expressions
// constructor for constructor.
class poly {
 public:
  enum class kind { pconst, pvar, pplus, pmult, popp };

  static poly pconst(long long c);
  static poly pvar(std::uint32_t index);
  static poly pplus(poly a, poly b);
  static poly pmult(poly a, poly b);
  static poly popp(poly a);

  kind k() const { return n_->k; }
  long long constant() const { return n_->c; }
  std::uint32_t index() const { return n_->index; }
  std::size_t arity() const { return n_->kids.size(); }
  const poly& child(std::size_t i) const { return n_->kids[i]; }

  std::size_t size() const;
  bool operator==(const poly& other) const;

 private:
  struct node {
    kind k;
    long long c;
    std::uint32_t index;
    std::vector<poly> kids;
  };
  explicit poly(std::shared_ptr<const node> n) : n_(std::move(n)) {}
  std::shared_ptr<const node> n_;
};

ring_expr with_child(const ring_expr& e, std::size_t i, ring_expr sub);
poly with_child(const poly& p, std::size_t i, poly sub);

// A monomial: nonzero coefficient and a sparse exponent vector (positive
// exponents only).
struct monomial {
  long long coeff = 0;
  std::map<std::uint32_t, std::uint32_t> exps;
  bool operator==(const monomial&) const = default;
};

std::uint32_t total_degree(const monomial& m);

// Graded lexicographic order, highest first: larger total degree precedes,
// ties broken lexicographically on the exponent vectors read by ascending
// variable index (so x0^2 precedes x0*x1 precedes x1^2, and x0 precedes x1).
bool monomial_order(const monomial& a, const monomial& b);

// The ordered sum of unique monomials: no duplicate exponent vectors, no
// zero coefficients, strictly ordered.
class normal_poly {
 public:
  normal_poly() = default;
  // Combines duplicates, drops zeros, sorts.
  static normal_poly from_monomials(std::vector<monomial> ms);

  const std::vector<monomial>& monomials() const { return ms_; }
  bool operator==(const normal_poly&) const = default;

 private:
  std::vector<monomial> ms_;
};

std::string show(const ring_expr& e);   // infix: (v0 + 1) * -2 style
std::string show(const poly& p);        // constructor form: Pplus(...)
std::string show(const normal_poly& n); // ordered sum: x0^2 + 2*x0 + 1
inline std::string to_text(const poly& p) { return show(p); }
inline std::string to_text(const normal_poly& n) { return show(n); }

// Q: the structural, constructor-for-constructor lift.
poly pquote(const ring_expr& e);

// E: the structural inverse; interp_p(pquote(e)) = e.
ring_expr interp_p(const poly& p);

// Expand, collect, drop zeros, sort: the canonical form.
normal_poly normalize(const poly& p);

// Right-nested Pplus of Pmult chains re-readable as a poly; the zero
// polynomial reads back as Pconst 0.
poly to_poly(const normal_poly& n);

using ring_env = std::map<std::uint32_t, long long>;

// Standard integer evaluation; unassigned variables are an input error.
long long eval_ring(const ring_expr& e, const ring_env& phi);
long long eval_normal(const normal_poly& n, const ring_env& phi);

// Infix grammar for the CLI: integers, x0..xN, '+', '*', unary '-',
// parentheses.
ring_expr parse_ring(const std::string& s);  // throws parse_error

struct normal_value {
  normal_poly n;
  bool operator==(const normal_value&) const = default;
};
inline std::string to_text(const normal_value& v) { return show(v.n); }

// Framework: ring expressions are the object language, polynomial trees the
// syntax language; quotation is the lift, evaluation the inverse lift, and
// the semantic value of a ring expression is its canonical form.
class framework {
 public:
  using expr_type = std::variant<ring_expr, poly>;

  framework() = default;

  static expr_type of(ring_expr e) { return expr_type(std::move(e)); }
  static expr_type of(poly p) { return expr_type(std::move(p)); }

  std::string id() const { return "ring"; }
  framework_flags flags() const {
    framework_flags fl;
    fl.syn_surjective = true;
    fl.universal_disquotation = true;
    return fl;
  }

  bool in_language(const expr_type&) const { return true; }
  bool in_object(const expr_type& e) const {
    return std::holds_alternative<ring_expr>(e);
  }
  bool in_syntax(const expr_type& e) const {
    return std::holds_alternative<poly>(e);
  }

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

}  // namespace quosyn::ring
