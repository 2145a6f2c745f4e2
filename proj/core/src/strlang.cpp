#include "quosyn/strlang.hpp"

#include <algorithm>

namespace quosyn::strlang {

str_term str_term::sym(char c) {
  if (!in_alphabet(c)) {
    throw input_error(std::string("strlang: symbol '") + c +
                      "' outside the alphabet");
  }
  return str_term(std::make_shared<const node>(node{kind::sym, c, {}}));
}
str_term str_term::nil() {
  return str_term(std::make_shared<const node>(node{kind::nil, '\0', {}}));
}
str_term str_term::cons(str_term h, str_term t) {
  return str_term(std::make_shared<const node>(
      node{kind::cons, '\0', {std::move(h), std::move(t)}}));
}
str_term str_term::head(str_term s) {
  return str_term(
      std::make_shared<const node>(node{kind::head, '\0', {std::move(s)}}));
}
str_term str_term::tail(str_term s) {
  return str_term(
      std::make_shared<const node>(node{kind::tail, '\0', {std::move(s)}}));
}

std::size_t str_term::size() const {
  std::size_t n = 1;
  for (const auto& c : n_->kids) n += c.size();
  return n;
}

bool str_term::operator==(const str_term& other) const {
  if (n_ == other.n_) return true;
  if (n_->k != other.n_->k || n_->c != other.n_->c) return false;
  if (n_->kids.size() != other.n_->kids.size()) return false;
  for (std::size_t i = 0; i < n_->kids.size(); ++i) {
    if (!(n_->kids[i] == other.n_->kids[i])) return false;
  }
  return true;
}

str_term with_child(const str_term& t, std::size_t i, str_term sub) {
  if (i >= t.arity()) throw input_error("strlang: child index out of range");
  switch (t.k()) {
    case str_term::kind::cons:
      return i == 0 ? str_term::cons(std::move(sub), t.child(1))
                    : str_term::cons(t.child(0), std::move(sub));
    case str_term::kind::head:
      return str_term::head(std::move(sub));
    case str_term::kind::tail:
      return str_term::tail(std::move(sub));
    default:
      throw input_error("strlang: node has no children");
  }
}

term_sort sort_of(const str_term& t) {
  switch (t.k()) {
    case str_term::kind::sym:
    case str_term::kind::head:
      return term_sort::symbol;
    default:
      return term_sort::string;
  }
}

bool well_sorted(const str_term& t) {
  switch (t.k()) {
    case str_term::kind::sym:
    case str_term::kind::nil:
      return true;
    case str_term::kind::cons:
      return sort_of(t.child(0)) == term_sort::symbol &&
             sort_of(t.child(1)) == term_sort::string &&
             well_sorted(t.child(0)) && well_sorted(t.child(1));
    case str_term::kind::head:
    case str_term::kind::tail:
      return sort_of(t.child(0)) == term_sort::string &&
             well_sorted(t.child(0));
  }
  return false;
}

const std::vector<char>& alphabet() {
  static const std::vector<char> a = [] {
    std::vector<char> v;
    for (char c = 'a'; c <= 'z'; ++c) v.push_back(c);
    for (char c = 'A'; c <= 'Z'; ++c) v.push_back(c);
    for (char c = '0'; c <= '9'; ++c) v.push_back(c);
    for (char c : {' ', '~', '&', '|', '(', ')', '[', ']', '\'', '\\'}) {
      v.push_back(c);
    }
    return v;
  }();
  return a;
}

bool in_alphabet(char c) {
  const auto& a = alphabet();
  return std::find(a.begin(), a.end(), c) != a.end();
}

std::string term_text(const str_term& t) {
  switch (t.k()) {
    case str_term::kind::sym: {
      std::string out = "'";
      if (t.symbol() == '\'' || t.symbol() == '\\') out += '\\';
      out += t.symbol();
      out += '\'';
      return out;
    }
    case str_term::kind::nil:
      return "[nil]";
    case str_term::kind::cons:
      return "[cons " + term_text(t.child(0)) + " " + term_text(t.child(1)) +
             "]";
    case str_term::kind::head:
      return "[head " + term_text(t.child(0)) + "]";
    case str_term::kind::tail:
      return "[tail " + term_text(t.child(0)) + "]";
  }
  return {};
}

namespace {

struct term_parser {
  const std::string& src;
  std::size_t pos = 0;

  [[noreturn]] void fail(const std::string& what) const {
    throw parse_error(what, pos);
  }

  char next() {
    if (pos >= src.size()) fail("unexpected end of term");
    return src[pos++];
  }

  void expect(const std::string& word) {
    if (src.compare(pos, word.size(), word) != 0) {
      fail("expected '" + word + "'");
    }
    pos += word.size();
  }

  str_term symbol_const() {
    expect("'");
    char c = next();
    if (c == '\\') c = next();
    if (!in_alphabet(c)) fail("symbol outside the alphabet");
    expect("'");
    return str_term::sym(c);
  }

  str_term term() {
    if (pos < src.size() && src[pos] == '\'') return symbol_const();
    expect("[");
    if (src.compare(pos, 4, "nil]") == 0) {
      pos += 4;
      return str_term::nil();
    }
    if (src.compare(pos, 5, "cons ") == 0) {
      pos += 5;
      str_term h = term();
      expect(" ");
      str_term t = term();
      expect("]");
      return str_term::cons(std::move(h), std::move(t));
    }
    if (src.compare(pos, 5, "head ") == 0) {
      pos += 5;
      str_term s = term();
      expect("]");
      return str_term::head(std::move(s));
    }
    if (src.compare(pos, 5, "tail ") == 0) {
      pos += 5;
      str_term s = term();
      expect("]");
      return str_term::tail(std::move(s));
    }
    fail("expected nil, cons, head, or tail");
  }

  str_term top() {
    str_term t = term();
    if (pos != src.size()) fail("trailing input");
    return t;
  }
};

}  // namespace

str_term parse_term(const std::string& s) {
  term_parser p{s};
  return p.top();
}

std::optional<term_result> term_value(const str_term& t) {
  if (!well_sorted(t)) {
    throw input_error("strlang: ill-sorted term: " + term_text(t));
  }
  switch (t.k()) {
    case str_term::kind::sym:
      return term_result(t.symbol());
    case str_term::kind::nil:
      return term_result(std::string{});
    case str_term::kind::cons: {
      auto h = term_value(t.child(0));
      auto s = term_value(t.child(1));
      if (!h || !s) return std::nullopt;
      return term_result(std::get<char>(*h) + std::get<std::string>(*s));
    }
    case str_term::kind::head: {
      auto s = term_value(t.child(0));
      if (!s || std::get<std::string>(*s).empty()) return std::nullopt;
      return term_result(std::get<std::string>(*s).front());
    }
    case str_term::kind::tail: {
      auto s = term_value(t.child(0));
      if (!s || std::get<std::string>(*s).empty()) return std::nullopt;
      return term_result(std::get<std::string>(*s).substr(1));
    }
  }
  return std::nullopt;
}

bool in_object_language(const expr& e) {
  if (std::holds_alternative<prop::formula>(e)) return true;
  const auto& t = std::get<str_term>(e);
  return well_sorted(t) && term_value(t).has_value();
}

std::string string_rep(const expr& e) {
  if (!in_object_language(e)) {
    throw membership_error("strlang: expression outside the object language");
  }
  if (const auto* f = std::get_if<prop::formula>(&e)) return prop::print(*f);
  return term_text(std::get<str_term>(e));
}

str_term quote_str(const expr& e) {
  const std::string s = string_rep(e);
  str_term chain = str_term::nil();
  for (auto it = s.rbegin(); it != s.rend(); ++it) {
    chain = str_term::cons(str_term::sym(*it), std::move(chain));
  }
  return chain;
}

std::optional<expr> parse_object(const std::string& s) {
  if (!s.empty() && (s[0] == '[' || s[0] == '\'')) {
    try {
      str_term t = parse_term(s);
      if (in_object_language(expr(t))) return expr(std::move(t));
    } catch (const parse_error&) {
    }
    return std::nullopt;
  }
  if (prop::is_canonical(s)) return expr(prop::parse(s));
  return std::nullopt;
}

std::optional<expr> eval_str(const str_term& t) {
  if (!well_sorted(t)) {
    throw input_error("strlang: ill-sorted term: " + term_text(t));
  }
  if (sort_of(t) != term_sort::string) {
    throw input_error("strlang: eval needs a String-sorted term");
  }
  auto v = term_value(t);
  if (!v) return std::nullopt;
  return parse_object(std::get<std::string>(*v));
}

bool framework::in_syntax(const expr_type& e) const {
  const auto* t = std::get_if<str_term>(&e);
  return t != nullptr && well_sorted(*t) &&
         sort_of(*t) == term_sort::string && term_value(*t).has_value();
}

value framework::sem_value(const expr_type& e) const {
  if (!in_language(e)) {
    throw membership_error("strlang: expression outside the language");
  }
  if (const auto* f = std::get_if<prop::formula>(&e)) {
    return value(id(), truth_value{prop::truth(*f, prop::assignment{})});
  }
  auto v = term_value(std::get<str_term>(e));
  if (const auto* c = std::get_if<char>(&*v)) {
    return value(id(), symbol_value{*c});
  }
  return value(id(), text_value{std::get<std::string>(*v)});
}

value framework::syn_value(const expr_type& e) const {
  return value(id(), text_value{string_rep(e)});
}

std::optional<framework::expr_type> framework::syn_inverse(
    const value& v) const {
  if (const auto* s = v.payload_if<text_value>()) return parse_object(s->s);
  return std::nullopt;
}

framework::expr_type framework::quote(const expr_type& e) const {
  return expr_type(quote_str(e));
}

std::optional<framework::expr_type> framework::eval(const expr_type& e) const {
  if (!in_syntax(e)) {
    throw membership_error("strlang: eval needs a defined String-sorted term");
  }
  return eval_str(std::get<str_term>(e));
}

std::string framework::expr_text(const expr_type& e) const {
  if (const auto* f = std::get_if<prop::formula>(&e)) return prop::print(*f);
  return term_text(std::get<str_term>(e));
}

std::size_t framework::child_count(const expr_type& e) const {
  if (const auto* f = std::get_if<prop::formula>(&e)) return f->arity();
  return std::get<str_term>(e).arity();
}

framework::expr_type framework::child(const expr_type& e,
                                      std::size_t i) const {
  if (i >= child_count(e)) {
    throw input_error("strlang: child index out of range");
  }
  if (const auto* f = std::get_if<prop::formula>(&e)) {
    return expr_type(f->child(i));
  }
  return expr_type(std::get<str_term>(e).child(i));
}

framework::expr_type framework::with_child(const expr_type& e, std::size_t i,
                                           const expr_type& sub) const {
  if (const auto* f = std::get_if<prop::formula>(&e)) {
    const auto* c = std::get_if<prop::formula>(&sub);
    if (c == nullptr) {
      throw input_error("strlang: replacement does not fit a formula slot");
    }
    return expr_type(prop::with_child(*f, i, *c));
  }
  const auto* c = std::get_if<str_term>(&sub);
  if (c == nullptr) {
    throw input_error("strlang: replacement does not fit a term slot");
  }
  return expr_type(strlang::with_child(std::get<str_term>(e), i, *c));
}

}  // namespace quosyn::strlang
