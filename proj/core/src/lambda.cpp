#include "quosyn/lambda.hpp"

#include <algorithm>
#include <array>
#include <cctype>

namespace quosyn::lam {

namespace {

std::vector<std::string> merge_sorted(const std::vector<std::string>& a,
                                      const std::vector<std::string>& b) {
  std::vector<std::string> out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                 std::back_inserter(out));
  return out;
}

std::vector<std::string> erase_sorted(const std::vector<std::string>& a,
                                      const std::string& x) {
  std::vector<std::string> out;
  out.reserve(a.size());
  for (const auto& v : a) {
    if (v != x) out.push_back(v);
  }
  return out;
}

bool contains_sorted(const std::vector<std::string>& a, const std::string& x) {
  return std::binary_search(a.begin(), a.end(), x);
}

}  // namespace

term term::var(std::string name) {
  if (name.empty()) throw input_error("lambda: empty variable name");
  std::vector<std::string> fv = {name};
  return term(std::make_shared<const node>(
      node{kind::var, std::move(name), {}, std::move(fv)}));
}

term term::app(term f, term a) {
  auto fv = merge_sorted(f.free_vars(), a.free_vars());
  return term(std::make_shared<const node>(
      node{kind::app, {}, {std::move(f), std::move(a)}, std::move(fv)}));
}

term term::abs(std::string binder, term body) {
  if (binder.empty()) throw input_error("lambda: empty binder name");
  auto fv = erase_sorted(body.free_vars(), binder);
  return term(std::make_shared<const node>(
      node{kind::abs, std::move(binder), {std::move(body)}, std::move(fv)}));
}

bool term::free_in(const std::string& name) const {
  return contains_sorted(n_->fv, name);
}

const std::vector<std::string>& term::free_vars() const { return n_->fv; }

std::size_t term::size() const {
  std::size_t n = 1;
  for (const auto& c : n_->kids) n += c.size();
  return n;
}

bool term::operator==(const term& other) const {
  if (n_ == other.n_) return true;
  if (n_->k != other.n_->k || n_->name != other.n_->name) return false;
  if (n_->kids.size() != other.n_->kids.size()) return false;
  for (std::size_t i = 0; i < n_->kids.size(); ++i) {
    if (!(n_->kids[i] == other.n_->kids[i])) return false;
  }
  return true;
}

term with_child(const term& t, std::size_t i, term sub) {
  if (i >= t.arity()) throw input_error("lambda: child index out of range");
  switch (t.k()) {
    case term::kind::app:
      return i == 0 ? term::app(std::move(sub), t.arg())
                    : term::app(t.fn(), std::move(sub));
    case term::kind::abs:
      return term::abs(t.binder(), std::move(sub));
    default:
      throw input_error("lambda: node has no children");
  }
}

namespace {

struct term_parser {
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

  bool at_lambda() {
    skip_ws();
    if (pos < src.size() && src[pos] == '\\') return true;
    return src.compare(pos, 2, "\xCE\xBB") == 0;  // UTF-8 lambda
  }

  void eat_lambda() {
    if (src[pos] == '\\') {
      ++pos;
    } else {
      pos += 2;
    }
  }

  bool at_ident() {
    skip_ws();
    return pos < src.size() &&
           std::isalpha(static_cast<unsigned char>(src[pos]));
  }

  std::string ident() {
    skip_ws();
    if (!at_ident()) fail("expected identifier");
    std::size_t start = pos;
    while (pos < src.size() &&
           std::isalnum(static_cast<unsigned char>(src[pos]))) {
      ++pos;
    }
    return src.substr(start, pos - start);
  }

  term lambda() {
    eat_lambda();
    std::vector<std::string> binders;
    while (at_ident()) binders.push_back(ident());
    if (binders.empty()) fail("expected binder after lambda");
    skip_ws();
    if (pos >= src.size() || src[pos] != '.') fail("expected '.' after binders");
    ++pos;
    term body = expr();
    for (auto it = binders.rbegin(); it != binders.rend(); ++it) {
      body = term::abs(*it, std::move(body));
    }
    return body;
  }

  std::optional<term> atom() {
    skip_ws();
    if (pos >= src.size()) return std::nullopt;
    if (src[pos] == '(') {
      ++pos;
      term inner = expr();
      skip_ws();
      if (pos >= src.size() || src[pos] != ')') fail("expected ')'");
      ++pos;
      return inner;
    }
    if (at_ident()) return term::var(ident());
    return std::nullopt;
  }

  term expr() {
    if (at_lambda()) return lambda();
    auto first = atom();
    if (!first) fail("expected a term");
    term acc = std::move(*first);
    while (true) {
      if (at_lambda()) {  // trailing lambda binds as the last argument
        acc = term::app(std::move(acc), lambda());
        return acc;
      }
      auto next = atom();
      if (!next) break;
      acc = term::app(std::move(acc), std::move(*next));
    }
    return acc;
  }

  term top() {
    term t = expr();
    skip_ws();
    if (pos != src.size()) fail("trailing input");
    return t;
  }
};

void show_into(const term& t, std::string& out) {
  switch (t.k()) {
    case term::kind::var:
      out += t.name();
      break;
    case term::kind::abs:
      out += '\\';
      out += t.binder();
      out += ". ";
      show_into(t.body(), out);
      break;
    case term::kind::app: {
      const term& f = t.fn();
      if (f.k() == term::kind::abs) {
        out += '(';
        show_into(f, out);
        out += ')';
      } else {
        show_into(f, out);
      }
      out += ' ';
      const term& a = t.arg();
      if (a.k() == term::kind::var) {
        show_into(a, out);
      } else {
        out += '(';
        show_into(a, out);
        out += ')';
      }
      break;
    }
  }
}

}  // namespace

term parse_term(const std::string& s) {
  term_parser p{s};
  return p.top();
}

std::string show(const term& t) {
  std::string out;
  show_into(t, out);
  return out;
}

namespace {

bool alpha_eq_rec(const term& a, const term& b,
                  std::vector<std::pair<std::string, std::string>>& binders) {
  if (a.k() != b.k()) return false;
  switch (a.k()) {
    case term::kind::var: {
      for (auto it = binders.rbegin(); it != binders.rend(); ++it) {
        const bool la = it->first == a.name();
        const bool lb = it->second == b.name();
        if (la || lb) return la && lb;
      }
      return a.name() == b.name();  // both free
    }
    case term::kind::app:
      return alpha_eq_rec(a.fn(), b.fn(), binders) &&
             alpha_eq_rec(a.arg(), b.arg(), binders);
    case term::kind::abs: {
      binders.emplace_back(a.binder(), b.binder());
      bool ok = alpha_eq_rec(a.body(), b.body(), binders);
      binders.pop_back();
      return ok;
    }
  }
  return false;
}

}  // namespace

bool alpha_eq(const term& a, const term& b) {
  std::vector<std::pair<std::string, std::string>> binders;
  return alpha_eq_rec(a, b, binders);
}

bool is_normal(const term& t) {
  switch (t.k()) {
    case term::kind::var:
      return true;
    case term::kind::abs:
      return is_normal(t.body());
    case term::kind::app:
      if (t.fn().k() == term::kind::abs) return false;
      return is_normal(t.fn()) && is_normal(t.arg());
  }
  return false;
}

std::optional<normal_form> as_normal(term t) {
  if (!is_normal(t)) return std::nullopt;
  return normal_form(std::move(t));
}

namespace {

std::string fresh_name(const std::vector<const term*>& avoid_terms,
                       const std::string& also_avoid) {
  for (std::size_t k = 0;; ++k) {
    std::string cand = "_" + std::to_string(k);
    if (cand == also_avoid) continue;
    bool clash = false;
    for (const term* t : avoid_terms) {
      if (t->free_in(cand)) {
        clash = true;
        break;
      }
    }
    if (!clash) return cand;
  }
}

}  // namespace

term subst(const term& t, const std::string& name, const term& s) {
  if (!t.free_in(name)) return t;
  switch (t.k()) {
    case term::kind::var:
      return s;
    case term::kind::app:
      return term::app(subst(t.fn(), name, s), subst(t.arg(), name, s));
    case term::kind::abs: {
      // name is free in t, so the binder differs from it
      if (s.free_in(t.binder())) {
        std::string fresh = fresh_name({&s, &t.body()}, name);
        term renamed = subst(t.body(), t.binder(), term::var(fresh));
        return term::abs(fresh, subst(renamed, name, s));
      }
      return term::abs(t.binder(), subst(t.body(), name, s));
    }
  }
  return t;
}

namespace {

struct reducer {
  std::uint64_t fuel;
  bool exhausted = false;

  term whnf(term t) {
    std::vector<term> spine;
    while (!exhausted) {
      if (t.k() == term::kind::app) {
        spine.push_back(t.arg());
        t = t.fn();
        continue;
      }
      if (t.k() == term::kind::abs && !spine.empty()) {
        if (fuel == 0) {
          exhausted = true;
          break;
        }
        --fuel;
        term arg = std::move(spine.back());
        spine.pop_back();
        t = subst(t.body(), t.binder(), arg);
        continue;
      }
      break;
    }
    for (auto it = spine.rbegin(); it != spine.rend(); ++it) {
      t = term::app(std::move(t), std::move(*it));
    }
    return t;
  }

  term nf(term t) {
    t = whnf(std::move(t));
    if (exhausted) return t;
    switch (t.k()) {
      case term::kind::var:
        return t;
      case term::kind::abs:
        return term::abs(t.binder(), nf(t.body()));
      case term::kind::app: {
        // head is stuck: normalize the spine parts
        term f = nf(t.fn());
        if (exhausted) return t;
        term a = nf(t.arg());
        return term::app(std::move(f), std::move(a));
      }
    }
    return t;
  }
};

}  // namespace

std::optional<normal_form> beta_nf(const term& t, std::uint64_t fuel) {
  if (is_normal(t)) return normal_form(t);
  reducer r{fuel};
  term out = r.nf(t);
  if (r.exhausted) return std::nullopt;
  return normal_form(std::move(out));
}

namespace {

// The schema's a, b, c at one node: plain names when they stay clear of the
// payload's free variables, numbered otherwise.
std::array<std::string, 3> schema_names(const term& payload) {
  auto ok = [&](const std::string& n) { return !payload.free_in(n); };
  if (ok("a") && ok("b") && ok("c")) return {"a", "b", "c"};
  for (std::size_t k = 1;; ++k) {
    std::string a = "a" + std::to_string(k);
    std::string b = "b" + std::to_string(k);
    std::string c = "c" + std::to_string(k);
    if (ok(a) && ok(b) && ok(c)) return {a, b, c};
  }
}

term wrap_schema(const std::array<std::string, 3>& n, term body) {
  return term::abs(n[0], term::abs(n[1], term::abs(n[2], std::move(body))));
}

}  // namespace

term rep(const term& t) {
  const auto names = schema_names(t);
  switch (t.k()) {
    case term::kind::var:
      return wrap_schema(names, term::app(term::var(names[0]), t));
    case term::kind::app:
      return wrap_schema(
          names, term::app(term::app(term::var(names[1]), rep(t.fn())),
                           rep(t.arg())));
    case term::kind::abs:
      return wrap_schema(
          names,
          term::app(term::var(names[2]), term::abs(t.binder(), rep(t.body()))));
  }
  return t;
}

std::optional<term> rep_inverse(const term& t) {
  if (t.k() != term::kind::abs) return std::nullopt;
  const std::string& a = t.binder();
  const term& t1 = t.body();
  if (t1.k() != term::kind::abs) return std::nullopt;
  const std::string& b = t1.binder();
  const term& t2 = t1.body();
  if (t2.k() != term::kind::abs) return std::nullopt;
  const std::string& c = t2.binder();
  if (a == b || b == c || a == c) return std::nullopt;
  const term& body = t2.body();
  if (body.k() != term::kind::app) return std::nullopt;

  const term& f = body.fn();
  const term& x = body.arg();
  if (f.k() == term::kind::var && f.name() == a) {
    // variable case: \a b c. a x
    if (x.k() != term::kind::var) return std::nullopt;
    if (x.name() == a || x.name() == b || x.name() == c) return std::nullopt;
    return x;
  }
  if (f.k() == term::kind::var && f.name() == c) {
    // abstraction case: \a b c. c (\x. <M>)
    if (x.k() != term::kind::abs) return std::nullopt;
    auto inner = rep_inverse(x.body());
    if (!inner) return std::nullopt;
    return term::abs(x.binder(), std::move(*inner));
  }
  if (f.k() == term::kind::app && f.fn().k() == term::kind::var &&
      f.fn().name() == b) {
    // application case: \a b c. b <M> <N>
    auto m = rep_inverse(f.arg());
    auto n = rep_inverse(x);
    if (!m || !n) return std::nullopt;
    return term::app(std::move(*m), std::move(*n));
  }
  return std::nullopt;
}

const term& self_interp_term() {
  static const term e = [] {
    term y = parse_term("\\f. (\\x. f (x x)) (\\x. f (x x))");
    term body = parse_term(
        "\\e. \\m. m (\\x. x) (\\m. \\n. (e m) (e n)) (\\m. \\v. e (m v))");
    return term::app(std::move(y), std::move(body));
  }();
  return e;
}

std::optional<normal_form> run_self_interp(const term& t, std::uint64_t fuel) {
  return beta_nf(term::app(self_interp_term(), rep(t)), fuel);
}

value framework::sem_value(const expr_type& e) const {
  auto nf = beta_nf(e, fuel_);
  if (!nf) return value(id(), bottom_value{});
  return value(id(), nf_value{nf->t});
}

std::optional<framework::expr_type> framework::syn_inverse(
    const value& v) const {
  if (const auto* nf = v.payload_if<nf_value>()) return rep_inverse(nf->t);
  return std::nullopt;
}

std::optional<framework::expr_type> framework::eval(const expr_type& e) const {
  if (!in_syntax(e)) {
    throw membership_error("lambda: eval needs a normal form");
  }
  if (!rep_inverse(e)) return std::nullopt;  // off the schema image
  return term::app(self_interp_term(), e);
}

term church(unsigned n) {
  term body = term::var("z");
  for (unsigned i = 0; i < n; ++i) {
    body = term::app(term::var("s"), std::move(body));
  }
  return term::abs("s", term::abs("z", std::move(body)));
}

std::optional<unsigned> church_to_nat(const term& t, std::uint64_t fuel) {
  term probe = term::app(term::app(t, term::var("S")), term::var("Z"));
  auto nf = beta_nf(probe, fuel);
  if (!nf) return std::nullopt;
  unsigned count = 0;
  const term* cur = &nf->t;
  while (cur->k() == term::kind::app) {
    if (cur->fn().k() != term::kind::var || cur->fn().name() != "S") {
      return std::nullopt;
    }
    ++count;
    cur = &cur->arg();
  }
  if (cur->k() != term::kind::var || cur->name() != "Z") return std::nullopt;
  return count;
}

}  // namespace quosyn::lam
