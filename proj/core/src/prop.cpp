#include "quosyn/prop.hpp"

#include <cctype>
#include <sstream>

namespace quosyn::prop {

formula formula::t() {
  return formula(std::make_shared<const node>(node{kind::true_lit, {}, {}}));
}
formula formula::f() {
  return formula(std::make_shared<const node>(node{kind::false_lit, {}, {}}));
}
formula formula::var(std::string name) {
  if (name.empty()) throw input_error("variable name must be nonempty");
  return formula(
      std::make_shared<const node>(node{kind::var, std::move(name), {}}));
}
formula formula::neg(formula x) {
  return formula(
      std::make_shared<const node>(node{kind::neg, {}, {std::move(x)}}));
}
formula formula::conj(formula a, formula b) {
  return formula(std::make_shared<const node>(
      node{kind::conj, {}, {std::move(a), std::move(b)}}));
}
formula formula::disj(formula a, formula b) {
  return formula(std::make_shared<const node>(
      node{kind::disj, {}, {std::move(a), std::move(b)}}));
}

std::size_t formula::size() const {
  std::size_t n = 1;
  for (const auto& c : n_->kids) n += c.size();
  return n;
}

bool formula::operator==(const formula& other) const {
  if (n_ == other.n_) return true;
  if (n_->k != other.n_->k) return false;
  if (n_->name != other.n_->name) return false;
  if (n_->kids.size() != other.n_->kids.size()) return false;
  for (std::size_t i = 0; i < n_->kids.size(); ++i) {
    if (!(n_->kids[i] == other.n_->kids[i])) return false;
  }
  return true;
}

namespace {

struct parser {
  const std::string& src;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < src.size() && src[pos] == ' ') ++pos;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw parse_error(what, pos);
  }

  bool eat(char c) {
    skip_ws();
    if (pos < src.size() && src[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  std::string ident() {
    skip_ws();
    if (pos >= src.size() || !std::isalpha(static_cast<unsigned char>(src[pos]))) {
      fail("expected identifier");
    }
    std::size_t start = pos;
    while (pos < src.size() &&
           std::isalnum(static_cast<unsigned char>(src[pos]))) {
      ++pos;
    }
    return src.substr(start, pos - start);
  }

  formula atom() {
    skip_ws();
    if (pos >= src.size()) fail("unexpected end of formula");
    if (eat('(')) {
      formula inner = disjunction();
      if (!eat(')')) fail("expected ')'");
      return inner;
    }
    std::string id = ident();
    if (id == "true") return formula::t();
    if (id == "false") return formula::f();
    return formula::var(std::move(id));
  }

  formula unary() {
    if (eat('~')) return formula::neg(unary());
    return atom();
  }

  formula conjunction() {
    formula lhs = unary();
    while (eat('&')) lhs = formula::conj(std::move(lhs), unary());
    return lhs;
  }

  formula disjunction() {
    formula lhs = conjunction();
    while (eat('|')) lhs = formula::disj(std::move(lhs), conjunction());
    return lhs;
  }

  formula top() {
    formula out = disjunction();
    skip_ws();
    if (pos != src.size()) fail("trailing input");
    return out;
  }
};

int precedence(formula::kind k) {
  switch (k) {
    case formula::kind::disj:
      return 0;
    case formula::kind::conj:
      return 1;
    case formula::kind::neg:
      return 2;
    default:
      return 3;
  }
}

void print_into(const formula& f, int min_level, std::string& out) {
  const bool parens = precedence(f.k()) < min_level;
  if (parens) out += '(';
  switch (f.k()) {
    case formula::kind::true_lit:
      out += "true";
      break;
    case formula::kind::false_lit:
      out += "false";
      break;
    case formula::kind::var:
      out += f.name();
      break;
    case formula::kind::neg:
      out += '~';
      print_into(f.lhs(), 2, out);
      break;
    case formula::kind::conj:
      print_into(f.lhs(), 1, out);
      out += " & ";
      print_into(f.rhs(), 2, out);
      break;
    case formula::kind::disj:
      print_into(f.lhs(), 0, out);
      out += " | ";
      print_into(f.rhs(), 1, out);
      break;
  }
  if (parens) out += ')';
}

}  // namespace

formula parse(const std::string& s) {
  parser p{s};
  return p.top();
}

std::string print(const formula& f) {
  std::string out;
  print_into(f, 0, out);
  return out;
}

bool is_canonical(const std::string& s) {
  try {
    return print(parse(s)) == s;
  } catch (const parse_error&) {
    return false;
  }
}

std::string ast_text(const formula& f) {
  switch (f.k()) {
    case formula::kind::true_lit:
      return "True";
    case formula::kind::false_lit:
      return "False";
    case formula::kind::var:
      return "Var \"" + f.name() + "\"";
    case formula::kind::neg:
      return "Neg(" + ast_text(f.lhs()) + ")";
    case formula::kind::conj:
      return "And(" + ast_text(f.lhs()) + ", " + ast_text(f.rhs()) + ")";
    case formula::kind::disj:
      return "Or(" + ast_text(f.lhs()) + ", " + ast_text(f.rhs()) + ")";
  }
  return {};
}

assignment& assignment::set(std::string var, bool v) {
  map_[std::move(var)] = v;
  return *this;
}

std::optional<bool> assignment::lookup(const std::string& var) const {
  auto it = map_.find(var);
  if (it == map_.end()) return std::nullopt;
  return it->second;
}

assignment assignment::parse_text(const std::string& text) {
  assignment phi;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t eq = text.find('=', pos);
    if (eq == std::string::npos) {
      throw parse_error("expected '=' in assignment", pos);
    }
    std::string var = text.substr(pos, eq - pos);
    if (var.empty()) throw parse_error("empty variable name", pos);
    std::size_t end = text.find(',', eq + 1);
    if (end == std::string::npos) end = text.size();
    std::string flag = text.substr(eq + 1, end - eq - 1);
    bool v;
    if (flag == "T" || flag == "t" || flag == "1") {
      v = true;
    } else if (flag == "F" || flag == "f" || flag == "0") {
      v = false;
    } else {
      throw parse_error("expected T or F", eq + 1);
    }
    phi.set(std::move(var), v);
    pos = end == text.size() ? end : end + 1;
  }
  return phi;
}

formula value(const formula& f, const assignment& phi) {
  switch (f.k()) {
    case formula::kind::true_lit:
    case formula::kind::false_lit:
      return f;
    case formula::kind::var: {
      auto v = phi.lookup(f.name());
      if (!v) return f;
      return *v ? formula::t() : formula::f();
    }
    case formula::kind::neg: {
      formula x = value(f.lhs(), phi);
      if (x.k() == formula::kind::true_lit) return formula::f();
      if (x.k() == formula::kind::false_lit) return formula::t();
      if (x.k() == formula::kind::neg) return x.lhs();  // ~~x -> x
      return formula::neg(std::move(x));
    }
    case formula::kind::conj: {
      formula a = value(f.lhs(), phi);
      formula b = value(f.rhs(), phi);
      if (a.k() == formula::kind::false_lit || b.k() == formula::kind::false_lit) {
        return formula::f();
      }
      if (a.k() == formula::kind::true_lit) return b;
      if (b.k() == formula::kind::true_lit) return a;
      return formula::conj(std::move(a), std::move(b));
    }
    case formula::kind::disj: {
      formula a = value(f.lhs(), phi);
      formula b = value(f.rhs(), phi);
      if (a.k() == formula::kind::true_lit || b.k() == formula::kind::true_lit) {
        return formula::t();
      }
      if (a.k() == formula::kind::false_lit) return b;
      if (b.k() == formula::kind::false_lit) return a;
      return formula::disj(std::move(a), std::move(b));
    }
  }
  return f;
}

bool truth(const formula& f, const assignment& phi) {
  switch (f.k()) {
    case formula::kind::true_lit:
      return true;
    case formula::kind::false_lit:
      return false;
    case formula::kind::var:
      return phi.lookup(f.name()).value_or(false);
    case formula::kind::neg:
      return !truth(f.lhs(), phi);
    case formula::kind::conj:
      return truth(f.lhs(), phi) && truth(f.rhs(), phi);
    case formula::kind::disj:
      return truth(f.lhs(), phi) || truth(f.rhs(), phi);
  }
  return false;
}

std::string interpret(const std::string& s, const assignment& phi) {
  return print(value(parse(s), phi));
}

bool framework::in_language(const expr_type& e) const {
  return in_object(e) || in_syntax(e);
}

bool framework::in_object(const expr_type& e) const {
  const auto* s = std::get_if<std::string>(&e);
  return s != nullptr && is_canonical(*s);
}

bool framework::in_syntax(const expr_type& e) const {
  return std::holds_alternative<formula>(e);
}

framework::value_t framework::sem_value(const expr_type& e) const {
  if (const auto* s = std::get_if<std::string>(&e)) {
    if (!is_canonical(*s)) {
      throw membership_error("prop: not a canonical formula string: " + *s);
    }
    return value_t(id(), truth_value{truth(parse(*s), phi_)});
  }
  return value_t(id(), std::get<formula>(e));
}

framework::value_t framework::syn_value(const expr_type& e) const {
  if (!in_object(e)) {
    throw membership_error("prop: syn_value needs a canonical formula string");
  }
  return value_t(id(), parse(std::get<std::string>(e)));
}

std::optional<framework::expr_type> framework::syn_inverse(
    const value_t& v) const {
  if (const auto* f = v.payload_if<formula>()) return text(print(*f));
  return std::nullopt;
}

framework::expr_type framework::quote(const expr_type& e) const {
  if (!in_object(e)) {
    throw membership_error("prop: quote needs a canonical formula string");
  }
  return tree(parse(std::get<std::string>(e)));
}

std::optional<framework::expr_type> framework::eval(const expr_type& e) const {
  if (!in_syntax(e)) {
    throw membership_error("prop: eval needs a formula tree");
  }
  return text(print(std::get<formula>(e)));
}

bool framework::expr_equal(const expr_type& a, const expr_type& b) const {
  return a == b;
}

std::string framework::expr_text(const expr_type& e) const {
  if (const auto* s = std::get_if<std::string>(&e)) return *s;
  return ast_text(std::get<formula>(e));
}

std::size_t framework::child_count(const expr_type& e) const {
  if (const auto* s = std::get_if<std::string>(&e)) return parse(*s).arity();
  return std::get<formula>(e).arity();
}

framework::expr_type framework::child(const expr_type& e, std::size_t i) const {
  if (i >= child_count(e)) throw input_error("prop: child index out of range");
  if (const auto* s = std::get_if<std::string>(&e)) {
    return text(print(parse(*s).child(i)));
  }
  return tree(std::get<formula>(e).child(i));
}

formula with_child(const formula& f, std::size_t i, formula sub) {
  if (i >= f.arity()) throw input_error("prop: child index out of range");
  switch (f.k()) {
    case formula::kind::neg:
      return formula::neg(std::move(sub));
    case formula::kind::conj:
      return i == 0 ? formula::conj(std::move(sub), f.rhs())
                    : formula::conj(f.lhs(), std::move(sub));
    case formula::kind::disj:
      return i == 0 ? formula::disj(std::move(sub), f.rhs())
                    : formula::disj(f.lhs(), std::move(sub));
    default:
      throw input_error("prop: node has no children");
  }
}

framework::expr_type framework::with_child(const expr_type& e, std::size_t i,
                                           const expr_type& sub) const {
  if (i >= child_count(e)) throw input_error("prop: child index out of range");
  if (const auto* s = std::get_if<std::string>(&e)) {
    const auto* c = std::get_if<std::string>(&sub);
    if (c == nullptr || !is_canonical(*c)) {
      throw input_error("prop: replacement does not fit a string slot");
    }
    return text(print(prop::with_child(parse(*s), i, parse(*c))));
  }
  const auto* c = std::get_if<formula>(&sub);
  if (c == nullptr) {
    throw input_error("prop: replacement does not fit a tree slot");
  }
  return tree(prop::with_child(std::get<formula>(e), i, *c));
}

}  // namespace quosyn::prop
