#include "quosyn/goedel.hpp"

#include <algorithm>

namespace quosyn::goedel {

namespace {

void require_term(const arith& e, const char* who) {
  if (!is_term(e)) {
    throw input_error(std::string(who) + ": expected a term, got " + spell(e));
  }
}

void require_formula(const arith& e, const char* who) {
  if (!is_formula(e)) {
    throw input_error(std::string(who) + ": expected a formula, got " +
                      spell(e));
  }
}

}  // namespace

arith arith::zero() {
  return arith(std::make_shared<const node>(node{kind::zero, {}, {}}));
}
arith arith::succ(arith t) {
  require_term(t, "Succ");
  return arith(
      std::make_shared<const node>(node{kind::succ, {}, {std::move(t)}}));
}
arith arith::plus(arith a, arith b) {
  require_term(a, "Plus");
  require_term(b, "Plus");
  return arith(std::make_shared<const node>(
      node{kind::plus, {}, {std::move(a), std::move(b)}}));
}
arith arith::times(arith a, arith b) {
  require_term(a, "Times");
  require_term(b, "Times");
  return arith(std::make_shared<const node>(
      node{kind::times, {}, {std::move(a), std::move(b)}}));
}
arith arith::var(const std::string& name) {
  const auto& names = variable_names();
  if (std::find(names.begin(), names.end(), name) == names.end()) {
    throw input_error("Var: unknown variable name '" + name + "'");
  }
  return arith(std::make_shared<const node>(node{kind::var_t, name, {}}));
}
arith arith::eq(arith a, arith b) {
  require_term(a, "Eq");
  require_term(b, "Eq");
  return arith(std::make_shared<const node>(
      node{kind::eq, {}, {std::move(a), std::move(b)}}));
}
arith arith::not_f(arith f) {
  require_formula(f, "Not");
  return arith(
      std::make_shared<const node>(node{kind::not_f, {}, {std::move(f)}}));
}
arith arith::and_f(arith a, arith b) {
  require_formula(a, "And");
  require_formula(b, "And");
  return arith(std::make_shared<const node>(
      node{kind::and_f, {}, {std::move(a), std::move(b)}}));
}
arith arith::forall(const std::string& name, arith body) {
  arith::var(name);  // validates the name
  require_formula(body, "ForAll");
  return arith(
      std::make_shared<const node>(node{kind::forall, name, {std::move(body)}}));
}
arith arith::quote_t(arith e) {
  return arith(
      std::make_shared<const node>(node{kind::quote_t, {}, {std::move(e)}}));
}

std::size_t arith::size() const {
  std::size_t n = 1;
  for (const auto& c : n_->kids) n += c.size();
  return n;
}

bool arith::operator==(const arith& other) const {
  if (n_ == other.n_) return true;
  if (n_->k != other.n_->k || n_->name != other.n_->name) return false;
  if (n_->kids.size() != other.n_->kids.size()) return false;
  for (std::size_t i = 0; i < n_->kids.size(); ++i) {
    if (!(n_->kids[i] == other.n_->kids[i])) return false;
  }
  return true;
}

bool is_term(const arith& e) {
  switch (e.k()) {
    case arith::kind::zero:
    case arith::kind::succ:
    case arith::kind::plus:
    case arith::kind::times:
    case arith::kind::var_t:
    case arith::kind::quote_t:
      return true;
    default:
      return false;
  }
}

bool is_formula(const arith& e) { return !is_term(e); }

bool contains_quote(const arith& e) {
  if (e.k() == arith::kind::quote_t) return true;
  for (std::size_t i = 0; i < e.arity(); ++i) {
    if (contains_quote(e.child(i))) return true;
  }
  return false;
}

bool is_closed_term(const arith& e) {
  if (!is_term(e)) return false;
  auto no_free = [](auto&& self, const arith& t) -> bool {
    if (t.k() == arith::kind::var_t) return false;
    if (t.k() == arith::kind::quote_t) return true;  // mentioned, not used
    for (std::size_t i = 0; i < t.arity(); ++i) {
      if (!self(self, t.child(i))) return false;
    }
    return true;
  };
  return no_free(no_free, e);
}

arith with_child(const arith& e, std::size_t i, arith sub) {
  if (i >= e.arity()) throw input_error("goedel: child index out of range");
  auto other = [&](std::size_t j) { return e.child(j); };
  switch (e.k()) {
    case arith::kind::succ:
      return arith::succ(std::move(sub));
    case arith::kind::plus:
      return i == 0 ? arith::plus(std::move(sub), other(1))
                    : arith::plus(other(0), std::move(sub));
    case arith::kind::times:
      return i == 0 ? arith::times(std::move(sub), other(1))
                    : arith::times(other(0), std::move(sub));
    case arith::kind::eq:
      return i == 0 ? arith::eq(std::move(sub), other(1))
                    : arith::eq(other(0), std::move(sub));
    case arith::kind::not_f:
      return arith::not_f(std::move(sub));
    case arith::kind::and_f:
      return i == 0 ? arith::and_f(std::move(sub), other(1))
                    : arith::and_f(other(0), std::move(sub));
    case arith::kind::forall:
      return arith::forall(e.name(), std::move(sub));
    case arith::kind::quote_t:
      return arith::quote_t(std::move(sub));
    default:
      throw input_error("goedel: node has no children");
  }
}

const std::vector<std::string>& variable_names() {
  static const std::vector<std::string> names = {"u", "v", "w",
                                                 "x", "y", "z"};
  return names;
}

std::string spell(const arith& e) {
  switch (e.k()) {
    case arith::kind::zero:
      return "0";
    case arith::kind::succ:
      return "S(" + spell(e.child(0)) + ")";
    case arith::kind::plus:
      return "(" + spell(e.child(0)) + "+" + spell(e.child(1)) + ")";
    case arith::kind::times:
      return "(" + spell(e.child(0)) + "*" + spell(e.child(1)) + ")";
    case arith::kind::var_t:
      return e.name();
    case arith::kind::eq:
      return "(" + spell(e.child(0)) + "=" + spell(e.child(1)) + ")";
    case arith::kind::not_f:
      return "~" + spell(e.child(0));
    case arith::kind::and_f:
      return "(" + spell(e.child(0)) + "&" + spell(e.child(1)) + ")";
    case arith::kind::forall:
      return "!" + e.name() + "." + spell(e.child(0));
    case arith::kind::quote_t:
      return "@(" + spell(e.child(0)) + ")";
  }
  return {};
}

namespace {

struct expr_parser {
  const std::string& src;
  std::size_t pos = 0;

  [[noreturn]] void fail(const std::string& what) const {
    throw parse_error(what, pos);
  }

  char peek() const { return pos < src.size() ? src[pos] : '\0'; }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos;
  }

  bool is_var_char(char c) const {
    for (const auto& n : variable_names()) {
      if (n[0] == c) return true;
    }
    return false;
  }

  arith any() {
    char c = peek();
    if (c == '0') {
      ++pos;
      return arith::zero();
    }
    if (c == 'S') {
      ++pos;
      expect('(');
      arith t = any();
      if (!is_term(t)) fail("Succ needs a term");
      expect(')');
      return arith::succ(std::move(t));
    }
    if (c == '@') {
      ++pos;
      expect('(');
      arith e = any();
      expect(')');
      return arith::quote_t(std::move(e));
    }
    if (is_var_char(c)) {
      ++pos;
      return arith::var(std::string(1, c));
    }
    if (c == '~') {
      ++pos;
      arith f = any();
      if (!is_formula(f)) fail("negation needs a formula");
      return arith::not_f(std::move(f));
    }
    if (c == '!') {
      ++pos;
      char v = peek();
      if (!is_var_char(v)) fail("expected a variable after '!'");
      ++pos;
      expect('.');
      arith body = any();
      if (!is_formula(body)) fail("quantifier needs a formula body");
      return arith::forall(std::string(1, v), std::move(body));
    }
    if (c == '(') {
      ++pos;
      arith lhs = any();
      char op = peek();
      ++pos;
      arith rhs = any();
      expect(')');
      switch (op) {
        case '+':
          if (!is_term(lhs) || !is_term(rhs)) fail("'+' needs terms");
          return arith::plus(std::move(lhs), std::move(rhs));
        case '*':
          if (!is_term(lhs) || !is_term(rhs)) fail("'*' needs terms");
          return arith::times(std::move(lhs), std::move(rhs));
        case '=':
          if (!is_term(lhs) || !is_term(rhs)) fail("'=' needs terms");
          return arith::eq(std::move(lhs), std::move(rhs));
        case '&':
          if (!is_formula(lhs) || !is_formula(rhs)) fail("'&' needs formulas");
          return arith::and_f(std::move(lhs), std::move(rhs));
        default:
          fail("expected one of + * = &");
      }
    }
    fail("unexpected character");
  }

  arith top() {
    arith e = any();
    if (pos != src.size()) fail("trailing input");
    return e;
  }
};

}  // namespace

arith parse_expr(const std::string& s) {
  expr_parser p{s};
  return p.top();
}

const std::string& symbol_table() {
  static const std::string table = "0S()+*=~&!.uvwxyz@";
  return table;
}

bignat eval_term(const arith& t, const var_env& env) {
  switch (t.k()) {
    case arith::kind::zero:
      return 0;
    case arith::kind::succ:
      return eval_term(t.child(0), env) + 1;
    case arith::kind::plus:
      return eval_term(t.child(0), env) + eval_term(t.child(1), env);
    case arith::kind::times:
      return eval_term(t.child(0), env) * eval_term(t.child(1), env);
    case arith::kind::var_t: {
      auto it = env.find(t.name());
      return it == env.end() ? bignat(0) : it->second;
    }
    case arith::kind::quote_t:
      return encode(t.child(0));
    default:
      throw input_error("goedel: cannot evaluate a formula as a term: " +
                        spell(t));
  }
}

bool eval_formula(const arith& f, const var_env& env) {
  switch (f.k()) {
    case arith::kind::eq:
      return eval_term(f.child(0), env) == eval_term(f.child(1), env);
    case arith::kind::not_f:
      return !eval_formula(f.child(0), env);
    case arith::kind::and_f:
      return eval_formula(f.child(0), env) && eval_formula(f.child(1), env);
    case arith::kind::forall: {
      var_env inner = env;
      for (unsigned d = 0; d < quantifier_domain; ++d) {
        inner[f.name()] = d;
        if (!eval_formula(f.child(0), inner)) return false;
      }
      return true;
    }
    default:
      throw input_error("goedel: cannot evaluate a term as a formula: " +
                        spell(f));
  }
}

bignat encode(const arith& e) {
  const std::string& table = symbol_table();
  const unsigned base = static_cast<unsigned>(table.size());
  const std::string s = spell(e);
  bignat n = 0;
  for (char c : s) {
    const auto idx = table.find(c);
    n = n * base + static_cast<unsigned>(idx) + 1;
  }
  return n;
}

namespace {

std::optional<std::string> digits_of(const bignat& n) {
  if (n <= 0) return std::nullopt;
  const std::string& table = symbol_table();
  const unsigned base = static_cast<unsigned>(table.size());
  std::string out;
  bignat rest = n;
  while (rest > 0) {
    bignat d = rest % base;
    if (d == 0) {
      d = base;
      rest = rest / base - 1;
    } else {
      rest = rest / base;
    }
    out += table[static_cast<unsigned>(d) - 1];
  }
  std::reverse(out.begin(), out.end());
  return out;
}

std::optional<arith> decode_impl(const bignat& n, bool allow_quote) {
  auto s = digits_of(n);
  if (!s) return std::nullopt;
  try {
    arith e = parse_expr(*s);
    if (!allow_quote && contains_quote(e)) return std::nullopt;
    return e;
  } catch (const parse_error&) {
    return std::nullopt;
  }
}

}  // namespace

std::optional<arith> decode(const bignat& n) { return decode_impl(n, false); }
std::optional<arith> decode_star(const bignat& n) {
  return decode_impl(n, true);
}

arith numeral(std::uint64_t n) {
  // Succ chains are unary; refuse sizes no test or CLI use could want.
  if (n > 1'000'000) {
    throw input_error("numeral: refusing to materialize a Succ-chain of " +
                      std::to_string(n) + " nodes");
  }
  arith t = arith::zero();
  for (std::uint64_t i = 0; i < n; ++i) t = arith::succ(std::move(t));
  return t;
}

arith code_term(const bignat& n) {
  if (n == 0) return arith::zero();
  if (n == 1) return arith::succ(arith::zero());
  const arith two = arith::succ(arith::succ(arith::zero()));
  if (n % 2 == 0) return arith::times(two, code_term(n / 2));
  return arith::succ(arith::times(two, code_term((n - 1) / 2)));
}

arith quote_meta(const arith& e) { return code_term(encode(e)); }

arith quote_builtin(const arith& e) { return arith::quote_t(e); }

std::optional<arith> eval_num(const arith& t) {
  if (!is_term(t)) {
    throw input_error("eval_num: expected a term, got " + spell(t));
  }
  return decode(eval_term(t));
}

arith add_transformer(const arith& t1, const arith& t2) {
  if (!is_closed_term(t1) || !is_closed_term(t2)) {
    throw input_error("add: expected closed natural-number terms");
  }
  bignat sum = eval_term(t1) + eval_term(t2);
  if (sum > 1'000'000) {
    throw input_error("add: sum too large to materialize as a numeral");
  }
  return numeral(static_cast<std::uint64_t>(sum));
}

arith lifted_add(const arith& q1, const arith& q2) {
  if (!is_term(q1) || !is_term(q2)) {
    throw input_error("lifted add: expected syntax-language terms");
  }
  auto d1 = decode(eval_term(q1));
  auto d2 = decode(eval_term(q2));
  if (!d1 || !d2 || !is_closed_term(*d1) || !is_closed_term(*d2)) {
    throw input_error("lifted add: arguments must denote codes of closed terms");
  }
  return code_term(encode(add_transformer(*d1, *d2)));
}

std::string framework::id() const {
  switch (mode_) {
    case mode::meta:
      return "goedel";
    case mode::total:
      return "goedel-total";
    case mode::builtin:
      return "goedel-quote";
  }
  return {};
}

framework_flags framework::flags() const {
  framework_flags fl;
  fl.universal_disquotation = true;
  if (mode_ == mode::builtin) fl.built_in_quotation = true;
  return fl;
}

bool framework::in_language(const expr_type& e) const {
  return mode_ == mode::builtin || !contains_quote(e);
}

bool framework::in_syntax(const expr_type& e) const {
  if (!is_term(e)) return false;
  switch (mode_) {
    case mode::meta:
      return !contains_quote(e);
    case mode::total:
      return !contains_quote(e) && decode(eval_term(e)).has_value();
    case mode::builtin:
      return true;
  }
  return false;
}

value framework::sem_value(const expr_type& e) const {
  if (!in_language(e)) {
    throw membership_error(id() + ": expression outside the language: " +
                           spell(e));
  }
  if (is_term(e)) return value(id(), nat_value{eval_term(e)});
  return value(id(), truth_value{eval_formula(e)});
}

value framework::syn_value(const expr_type& e) const {
  if (!in_object(e)) {
    throw membership_error(id() + ": expression outside the object language");
  }
  return value(id(), nat_value{encode(e)});
}

std::optional<framework::expr_type> framework::syn_inverse(
    const value& v) const {
  const auto* n = v.payload_if<nat_value>();
  if (n == nullptr) return std::nullopt;
  return mode_ == mode::builtin ? decode_star(n->n) : decode(n->n);
}

framework::expr_type framework::quote(const expr_type& e) const {
  if (!in_object(e)) {
    throw membership_error(id() + ": quote needs an object-language expression");
  }
  return mode_ == mode::builtin ? quote_builtin(e) : quote_meta(e);
}

std::optional<framework::expr_type> framework::eval(const expr_type& e) const {
  if (!in_syntax(e)) {
    throw membership_error(id() + ": eval needs a syntax-language term");
  }
  bignat v = eval_term(e);
  return mode_ == mode::builtin ? decode_star(v) : decode(v);
}

}  // namespace quosyn::goedel
