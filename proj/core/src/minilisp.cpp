#include "quosyn/minilisp.hpp"

#include <cctype>

namespace quosyn::lisp {

sexpr sexpr::num(long long v) {
  return sexpr(std::make_shared<const node>(node{kind::num, v, {}, {}}));
}
sexpr sexpr::sym(std::string name) {
  return sexpr(
      std::make_shared<const node>(node{kind::sym, 0, std::move(name), {}}));
}
sexpr sexpr::nil() {
  return sexpr(std::make_shared<const node>(node{kind::nil, 0, {}, {}}));
}
sexpr sexpr::pair(sexpr h, sexpr t) {
  return sexpr(std::make_shared<const node>(
      node{kind::pair, 0, {}, {std::move(h), std::move(t)}}));
}
sexpr sexpr::list(std::vector<sexpr> items) {
  sexpr out = nil();
  for (auto it = items.rbegin(); it != items.rend(); ++it) {
    out = pair(std::move(*it), std::move(out));
  }
  return out;
}

bool sexpr::is_list() const {
  const sexpr* cur = this;
  while (cur->k() == kind::pair) cur = &cur->tail();
  return cur->k() == kind::nil;
}

std::vector<sexpr> sexpr::items() const {
  std::vector<sexpr> out;
  const sexpr* cur = this;
  while (cur->k() == kind::pair) {
    out.push_back(cur->head());
    cur = &cur->tail();
  }
  return out;
}

bool sexpr::is_sym(const char* name) const {
  return k() == kind::sym && n_->name == name;
}

std::size_t sexpr::size() const {
  std::size_t n = 1;
  for (const auto& c : n_->kids) n += c.size();
  return n;
}

bool sexpr::operator==(const sexpr& other) const {
  if (n_ == other.n_) return true;
  if (n_->k != other.n_->k) return false;
  if (n_->num != other.n_->num || n_->name != other.n_->name) return false;
  if (n_->kids.size() != other.n_->kids.size()) return false;
  for (std::size_t i = 0; i < n_->kids.size(); ++i) {
    if (!(n_->kids[i] == other.n_->kids[i])) return false;
  }
  return true;
}

std::string show(const sexpr& e) {
  switch (e.k()) {
    case sexpr::kind::num:
      return std::to_string(e.number());
    case sexpr::kind::sym:
      return e.name();
    case sexpr::kind::nil:
      return "()";
    case sexpr::kind::pair: {
      std::string out = "(";
      const sexpr* cur = &e;
      bool first = true;
      while (cur->k() == sexpr::kind::pair) {
        if (!first) out += ' ';
        out += show(cur->head());
        first = false;
        cur = &cur->tail();
      }
      if (cur->k() != sexpr::kind::nil) {
        out += " . ";
        out += show(*cur);
      }
      out += ')';
      return out;
    }
  }
  return {};
}

namespace {

struct reader {
  const std::string& src;
  std::size_t pos = 0;

  [[noreturn]] void fail(const std::string& what) const {
    throw parse_error(what, pos);
  }

  void skip_ws() {
    while (pos < src.size() &&
           std::isspace(static_cast<unsigned char>(src[pos]))) {
      ++pos;
    }
  }

  static bool atom_char(char c) {
    return !std::isspace(static_cast<unsigned char>(c)) && c != '(' &&
           c != ')' && c != '\'' && c != '`' && c != ',';
  }

  sexpr one() {
    skip_ws();
    if (pos >= src.size()) fail("unexpected end of input");
    char c = src[pos];
    if (c == '(') {
      ++pos;
      std::vector<sexpr> items;
      std::optional<sexpr> dotted;
      while (true) {
        skip_ws();
        if (pos >= src.size()) fail("unbalanced '('");
        if (src[pos] == ')') {
          ++pos;
          break;
        }
        if (src[pos] == '.' && pos + 1 < src.size() &&
            !atom_char(src[pos + 1])) {
          if (items.empty() || dotted) fail("misplaced '.'");
          ++pos;
          dotted = one();
          skip_ws();
          if (pos >= src.size() || src[pos] != ')') fail("expected ')'");
          ++pos;
          break;
        }
        if (dotted) fail("expected ')' after dotted tail");
        items.push_back(one());
      }
      sexpr out = dotted ? *dotted : sexpr::nil();
      for (auto it = items.rbegin(); it != items.rend(); ++it) {
        out = sexpr::pair(std::move(*it), std::move(out));
      }
      return out;
    }
    if (c == ')') fail("unbalanced ')'");
    if (c == '\'') {
      ++pos;
      return sexpr::list({sexpr::sym("quote"), one()});
    }
    if (c == '`') {
      ++pos;
      return sexpr::list({sexpr::sym("backquote"), one()});
    }
    if (c == ',') {
      ++pos;
      return sexpr::list({sexpr::sym("unquote"), one()});
    }
    std::size_t start = pos;
    while (pos < src.size() && atom_char(src[pos])) ++pos;
    std::string word = src.substr(start, pos - start);
    bool numeric = !word.empty() &&
                   (std::isdigit(static_cast<unsigned char>(word[0])) ||
                    (word[0] == '-' && word.size() > 1 &&
                     std::isdigit(static_cast<unsigned char>(word[1]))));
    if (numeric) {
      try {
        return sexpr::num(std::stoll(word));
      } catch (const std::exception&) {
        pos = start;
        fail("malformed number");
      }
    }
    return sexpr::sym(std::move(word));
  }

  sexpr top() {
    sexpr e = one();
    skip_ws();
    if (pos != src.size()) fail("trailing input");
    return e;
  }
};

struct env_node {
  std::string name;
  sexpr val;
  std::shared_ptr<const env_node> next;
};
using env = std::shared_ptr<const env_node>;

env bind(std::string name, sexpr val, env next) {
  return std::make_shared<const env_node>(
      env_node{std::move(name), std::move(val), std::move(next)});
}

const sexpr* lookup(const env& e, const std::string& name) {
  for (const env_node* n = e.get(); n != nullptr; n = n->next.get()) {
    if (n->name == name) return &n->val;
  }
  return nullptr;
}

bool is_builtin(const std::string& name) {
  static const char* names[] = {"+", "-", "*", "=", "cons", "car", "cdr",
                                "list"};
  for (const char* n : names) {
    if (name == n) return true;
  }
  return false;
}

struct machine {
  std::uint64_t fuel;

  result run(const sexpr& e, const env& en) {
    if (fuel == 0) return std::nullopt;
    --fuel;
    switch (e.k()) {
      case sexpr::kind::num:
      case sexpr::kind::nil:
        return e;
      case sexpr::kind::sym: {
        if (const sexpr* v = lookup(en, e.name())) return *v;
        if (e.name() == "t" || is_builtin(e.name())) return e;
        return std::nullopt;  // unbound symbol
      }
      case sexpr::kind::pair:
        return form(e, en);
    }
    return std::nullopt;
  }

  result form(const sexpr& e, const env& en) {
    if (!e.is_list()) return std::nullopt;
    const std::vector<sexpr> items = e.items();
    const sexpr& op = items[0];

    if (op.is_sym("quote")) {
      if (items.size() != 2) return std::nullopt;
      return items[1];
    }
    if (op.is_sym("eval")) {
      if (items.size() != 2) return std::nullopt;
      auto v = run(items[1], en);
      if (!v) return std::nullopt;
      return run(*v, nullptr);  // the result is evaluated at top level
    }
    if (op.is_sym("if")) {
      if (items.size() != 4) return std::nullopt;
      auto c = run(items[1], en);
      if (!c) return std::nullopt;
      return run(c->k() == sexpr::kind::nil ? items[3] : items[2], en);
    }
    if (op.is_sym("lambda")) {
      if (!well_formed_lambda(e)) return std::nullopt;
      return e;  // a lambda denotes its own S-expression
    }
    if (op.is_sym("let")) {
      if (items.size() != 3 || !items[1].is_list()) return std::nullopt;
      env inner = en;
      for (const sexpr& binding : items[1].items()) {
        if (!binding.is_list()) return std::nullopt;
        auto parts = binding.items();
        if (parts.size() != 2 || parts[0].k() != sexpr::kind::sym) {
          return std::nullopt;
        }
        auto v = run(parts[1], en);  // plain let: all in the outer env
        if (!v) return std::nullopt;
        inner = bind(parts[0].name(), *v, inner);
      }
      return run(items[2], inner);
    }

    auto f = run(op, en);
    if (!f) return std::nullopt;
    std::vector<sexpr> args;
    args.reserve(items.size() - 1);
    for (std::size_t i = 1; i < items.size(); ++i) {
      auto v = run(items[i], en);
      if (!v) return std::nullopt;
      args.push_back(std::move(*v));
    }
    return apply(*f, args, en);
  }

  static bool well_formed_lambda(const sexpr& e) {
    if (!e.is_list()) return false;
    auto items = e.items();
    if (items.size() != 3 || !items[1].is_list()) return false;
    for (const sexpr& p : items[1].items()) {
      if (p.k() != sexpr::kind::sym) return false;
    }
    return true;
  }

  result apply(const sexpr& f, const std::vector<sexpr>& args, const env&) {
    if (f.k() == sexpr::kind::sym) return builtin(f.name(), args);
    if (f.k() == sexpr::kind::pair && f.head().is_sym("lambda") &&
        well_formed_lambda(f)) {
      auto items = f.items();
      auto params = items[1].items();
      if (params.size() != args.size()) return std::nullopt;
      env inner = nullptr;  // closures carry no environment
      for (std::size_t i = 0; i < params.size(); ++i) {
        inner = bind(params[i].name(), args[i], inner);
      }
      return run(items[2], inner);
    }
    return std::nullopt;  // not applicable
  }

  result builtin(const std::string& name, const std::vector<sexpr>& args) {
    auto all_nums = [&] {
      for (const auto& a : args) {
        if (a.k() != sexpr::kind::num) return false;
      }
      return true;
    };
    if (name == "+") {
      if (!all_nums()) return std::nullopt;
      long long acc = 0;
      for (const auto& a : args) acc += a.number();
      return sexpr::num(acc);
    }
    if (name == "*") {
      if (!all_nums()) return std::nullopt;
      long long acc = 1;
      for (const auto& a : args) acc *= a.number();
      return sexpr::num(acc);
    }
    if (name == "-") {
      if (args.empty() || !all_nums()) return std::nullopt;
      if (args.size() == 1) return sexpr::num(-args[0].number());
      long long acc = args[0].number();
      for (std::size_t i = 1; i < args.size(); ++i) acc -= args[i].number();
      return sexpr::num(acc);
    }
    if (name == "=") {
      if (args.size() != 2 || !all_nums()) return std::nullopt;
      return args[0].number() == args[1].number() ? sexpr::sym("t")
                                                  : sexpr::nil();
    }
    if (name == "cons") {
      if (args.size() != 2) return std::nullopt;
      return sexpr::pair(args[0], args[1]);
    }
    if (name == "car") {
      if (args.size() != 1 || args[0].k() != sexpr::kind::pair) {
        return std::nullopt;
      }
      return args[0].head();
    }
    if (name == "cdr") {
      if (args.size() != 1 || args[0].k() != sexpr::kind::pair) {
        return std::nullopt;
      }
      return args[0].tail();
    }
    if (name == "list") return sexpr::list(args);
    return std::nullopt;
  }
};

}  // namespace

sexpr read(const std::string& s) {
  reader r{s};
  return r.top();
}

result interp(const sexpr& e, std::uint64_t fuel) {
  machine m{fuel};
  return m.run(e, nullptr);
}

sexpr quote_of(const sexpr& e) {
  return sexpr::list({sexpr::sym("quote"), e});
}

sexpr eval_of(const sexpr& e, std::uint64_t fuel) {
  if (!interp(e, fuel)) {
    throw membership_error("minilisp: eval needs an expression with a value: " +
                           show(e));
  }
  return sexpr::list({sexpr::sym("eval"), e});
}

namespace {

bool is_marker_form(const sexpr& e, const char* name) {
  if (e.k() != sexpr::kind::pair || !e.head().is_sym(name)) return false;
  return e.is_list() && e.items().size() == 2;
}

// No stray marker symbols and no nested backquote anywhere inside.
void reject_markers(const sexpr& e, bool inside_splice) {
  if (e.k() == sexpr::kind::sym) {
    if (e.name() == "backquote") {
      throw input_error("nested backquote is unsupported");
    }
    if (e.name() == "unquote") {
      throw parse_error("comma outside backquote", 0);
    }
    return;
  }
  if (e.k() != sexpr::kind::pair) return;
  reject_markers(e.head(), inside_splice);
  reject_markers(e.tail(), inside_splice);
}

}  // namespace

marked_expr<sexpr> expand_backquote(const sexpr& e) {
  if (is_marker_form(e, "unquote")) {
    throw parse_error("comma outside backquote", 0);
  }
  if (!is_marker_form(e, "backquote")) {
    throw input_error("not a backquote expression: " + show(e));
  }
  const sexpr body = e.items()[1];

  marked_expr<sexpr> m{body, {}};
  auto walk = [&](auto&& self, const sexpr& t,
                  const position& at) -> sexpr {
    if (is_marker_form(t, "unquote")) {
      const sexpr splice = t.items()[1];
      reject_markers(splice, true);
      m.marks.emplace_back(at, splice);
      return splice;  // the stripped base keeps the splice expression
    }
    if (t.k() == sexpr::kind::sym) {
      reject_markers(t, false);
      return t;
    }
    if (t.k() != sexpr::kind::pair) return t;
    if (t.is_list()) {
      auto items = t.items();
      std::vector<sexpr> walked;
      walked.reserve(items.size());
      for (std::size_t i = 0; i < items.size(); ++i) {
        walked.push_back(self(self, items[i], at.child(i)));
      }
      return sexpr::list(std::move(walked));
    }
    return sexpr::pair(self(self, t.head(), at.child(0)),
                       self(self, t.tail(), at.child(1)));
  };
  m.base = walk(walk, body, position::root());
  return m;
}

namespace {

result splice_walk(const sexpr& t, std::uint64_t fuel) {
  if (is_marker_form(t, "unquote")) return interp(t.items()[1], fuel);
  if (t.k() == sexpr::kind::sym &&
      (t.name() == "backquote" || t.name() == "unquote")) {
    return std::nullopt;
  }
  if (t.k() != sexpr::kind::pair) return t;
  if (t.head().is_sym("backquote")) return std::nullopt;  // nested
  if (t.is_list()) {
    std::vector<sexpr> out;
    for (const sexpr& item : t.items()) {
      auto v = splice_walk(item, fuel);
      if (!v) return std::nullopt;
      out.push_back(std::move(*v));
    }
    return sexpr::list(std::move(out));
  }
  auto h = splice_walk(t.head(), fuel);
  auto tl = splice_walk(t.tail(), fuel);
  if (!h || !tl) return std::nullopt;
  return sexpr::pair(std::move(*h), std::move(*tl));
}

}  // namespace

result interp_backquote(const sexpr& e, std::uint64_t fuel) {
  if (is_marker_form(e, "backquote")) {
    return splice_walk(e.items()[1], fuel);
  }
  return interp(e, fuel);
}

value framework::sem_value(const expr_type& e) const {
  auto v = interp(e, fuel_);
  if (!v) return value(id(), bottom_value{});
  return value(id(), *v);
}

std::optional<framework::expr_type> framework::syn_inverse(
    const value& v) const {
  if (const auto* e = v.payload_if<sexpr>()) return *e;
  return std::nullopt;
}

std::optional<framework::expr_type> framework::eval(const expr_type& e) const {
  if (!in_syntax(e)) {
    throw membership_error(
        "minilisp: eval needs an expression with a value: " + show(e));
  }
  return eval_of(e, fuel_);
}

std::size_t framework::child_count(const expr_type& e) const {
  if (e.k() != sexpr::kind::pair) return 0;
  if (e.is_list()) return e.items().size();
  return 2;
}

framework::expr_type framework::child(const expr_type& e,
                                      std::size_t i) const {
  if (e.k() != sexpr::kind::pair) {
    throw input_error("minilisp: atom has no children");
  }
  if (e.is_list()) {
    auto items = e.items();
    if (i >= items.size()) {
      throw input_error("minilisp: child index out of range");
    }
    return items[i];
  }
  if (i >= 2) throw input_error("minilisp: child index out of range");
  return i == 0 ? e.head() : e.tail();
}

framework::expr_type framework::with_child(const expr_type& e, std::size_t i,
                                           const expr_type& sub) const {
  if (e.k() != sexpr::kind::pair) {
    throw input_error("minilisp: atom has no children");
  }
  if (e.is_list()) {
    auto items = e.items();
    if (i >= items.size()) {
      throw input_error("minilisp: child index out of range");
    }
    items[i] = sub;
    return sexpr::list(std::move(items));
  }
  if (i >= 2) throw input_error("minilisp: child index out of range");
  return i == 0 ? sexpr::pair(sub, e.tail()) : sexpr::pair(e.head(), sub);
}

}  // namespace quosyn::lisp
