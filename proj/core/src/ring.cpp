#include "quosyn/ring.hpp"

#include <algorithm>
#include <cctype>

namespace quosyn::ring {

ring_expr ring_expr::cnst(long long c) {
  return ring_expr(std::make_shared<const node>(node{kind::cnst, c, 0, {}}));
}
ring_expr ring_expr::var(std::uint32_t index) {
  return ring_expr(
      std::make_shared<const node>(node{kind::var, 0, index, {}}));
}
ring_expr ring_expr::add(ring_expr a, ring_expr b) {
  return ring_expr(std::make_shared<const node>(
      node{kind::add, 0, 0, {std::move(a), std::move(b)}}));
}
ring_expr ring_expr::mul(ring_expr a, ring_expr b) {
  return ring_expr(std::make_shared<const node>(
      node{kind::mul, 0, 0, {std::move(a), std::move(b)}}));
}
ring_expr ring_expr::neg(ring_expr a) {
  return ring_expr(
      std::make_shared<const node>(node{kind::neg, 0, 0, {std::move(a)}}));
}

std::size_t ring_expr::size() const {
  std::size_t n = 1;
  for (const auto& c : n_->kids) n += c.size();
  return n;
}

bool ring_expr::operator==(const ring_expr& other) const {
  if (n_ == other.n_) return true;
  if (n_->k != other.n_->k || n_->c != other.n_->c ||
      n_->index != other.n_->index) {
    return false;
  }
  if (n_->kids.size() != other.n_->kids.size()) return false;
  for (std::size_t i = 0; i < n_->kids.size(); ++i) {
    if (!(n_->kids[i] == other.n_->kids[i])) return false;
  }
  return true;
}

poly poly::pconst(long long c) {
  return poly(std::make_shared<const node>(node{kind::pconst, c, 0, {}}));
}
poly poly::pvar(std::uint32_t index) {
  return poly(std::make_shared<const node>(node{kind::pvar, 0, index, {}}));
}
poly poly::pplus(poly a, poly b) {
  return poly(std::make_shared<const node>(
      node{kind::pplus, 0, 0, {std::move(a), std::move(b)}}));
}
poly poly::pmult(poly a, poly b) {
  return poly(std::make_shared<const node>(
      node{kind::pmult, 0, 0, {std::move(a), std::move(b)}}));
}
poly poly::popp(poly a) {
  return poly(
      std::make_shared<const node>(node{kind::popp, 0, 0, {std::move(a)}}));
}

std::size_t poly::size() const {
  std::size_t n = 1;
  for (const auto& c : n_->kids) n += c.size();
  return n;
}

bool poly::operator==(const poly& other) const {
  if (n_ == other.n_) return true;
  if (n_->k != other.n_->k || n_->c != other.n_->c ||
      n_->index != other.n_->index) {
    return false;
  }
  if (n_->kids.size() != other.n_->kids.size()) return false;
  for (std::size_t i = 0; i < n_->kids.size(); ++i) {
    if (!(n_->kids[i] == other.n_->kids[i])) return false;
  }
  return true;
}

ring_expr with_child(const ring_expr& e, std::size_t i, ring_expr sub) {
  if (i >= e.arity()) throw input_error("ring: child index out of range");
  switch (e.k()) {
    case ring_expr::kind::add:
      return i == 0 ? ring_expr::add(std::move(sub), e.child(1))
                    : ring_expr::add(e.child(0), std::move(sub));
    case ring_expr::kind::mul:
      return i == 0 ? ring_expr::mul(std::move(sub), e.child(1))
                    : ring_expr::mul(e.child(0), std::move(sub));
    case ring_expr::kind::neg:
      return ring_expr::neg(std::move(sub));
    default:
      throw input_error("ring: node has no children");
  }
}

poly with_child(const poly& p, std::size_t i, poly sub) {
  if (i >= p.arity()) throw input_error("ring: child index out of range");
  switch (p.k()) {
    case poly::kind::pplus:
      return i == 0 ? poly::pplus(std::move(sub), p.child(1))
                    : poly::pplus(p.child(0), std::move(sub));
    case poly::kind::pmult:
      return i == 0 ? poly::pmult(std::move(sub), p.child(1))
                    : poly::pmult(p.child(0), std::move(sub));
    case poly::kind::popp:
      return poly::popp(std::move(sub));
    default:
      throw input_error("ring: node has no children");
  }
}

std::uint32_t total_degree(const monomial& m) {
  std::uint32_t d = 0;
  for (const auto& [idx, e] : m.exps) d += e;
  return d;
}

bool monomial_order(const monomial& a, const monomial& b) {
  const auto da = total_degree(a);
  const auto db = total_degree(b);
  if (da != db) return da > db;
  // same degree: lex on exponent vectors by ascending variable index,
  // higher exponent on the earliest differing variable first
  auto ia = a.exps.begin();
  auto ib = b.exps.begin();
  while (ia != a.exps.end() && ib != b.exps.end()) {
    if (ia->first != ib->first) return ia->first < ib->first;
    if (ia->second != ib->second) return ia->second > ib->second;
    ++ia;
    ++ib;
  }
  return ia != a.exps.end();
}

normal_poly normal_poly::from_monomials(std::vector<monomial> ms) {
  std::map<std::map<std::uint32_t, std::uint32_t>, long long> collect;
  for (auto& m : ms) collect[m.exps] += m.coeff;
  std::vector<monomial> out;
  for (auto& [exps, coeff] : collect) {
    if (coeff != 0) out.push_back(monomial{coeff, exps});
  }
  std::sort(out.begin(), out.end(), monomial_order);
  normal_poly n;
  n.ms_ = std::move(out);
  return n;
}

std::string show(const ring_expr& e) {
  switch (e.k()) {
    case ring_expr::kind::cnst:
      return std::to_string(e.constant());
    case ring_expr::kind::var:
      return "x" + std::to_string(e.index());
    case ring_expr::kind::add:
      return "(" + show(e.child(0)) + " + " + show(e.child(1)) + ")";
    case ring_expr::kind::mul:
      return "(" + show(e.child(0)) + " * " + show(e.child(1)) + ")";
    case ring_expr::kind::neg:
      return "-" + show(e.child(0));
  }
  return {};
}

std::string show(const poly& p) {
  switch (p.k()) {
    case poly::kind::pconst:
      return "Pconst " + std::to_string(p.constant());
    case poly::kind::pvar:
      return "Pvar " + std::to_string(p.index());
    case poly::kind::pplus:
      return "Pplus(" + show(p.child(0)) + ", " + show(p.child(1)) + ")";
    case poly::kind::pmult:
      return "Pmult(" + show(p.child(0)) + ", " + show(p.child(1)) + ")";
    case poly::kind::popp:
      return "Popp(" + show(p.child(0)) + ")";
  }
  return {};
}

namespace {

std::string show_monomial(const monomial& m, bool leading) {
  std::string out;
  long long coeff = m.coeff;
  if (leading) {
    if (coeff < 0) {
      out += "-";
      coeff = -coeff;
    }
  } else {
    out += coeff < 0 ? " - " : " + ";
    if (coeff < 0) coeff = -coeff;
  }
  std::vector<std::string> factors;
  if (coeff != 1 || m.exps.empty()) factors.push_back(std::to_string(coeff));
  for (const auto& [idx, e] : m.exps) {
    std::string v = "x" + std::to_string(idx);
    if (e > 1) v += "^" + std::to_string(e);
    factors.push_back(std::move(v));
  }
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i) out += "*";
    out += factors[i];
  }
  return out;
}

}  // namespace

std::string show(const normal_poly& n) {
  if (n.monomials().empty()) return "0";
  std::string out;
  bool leading = true;
  for (const auto& m : n.monomials()) {
    out += show_monomial(m, leading);
    leading = false;
  }
  return out;
}

poly pquote(const ring_expr& e) {
  switch (e.k()) {
    case ring_expr::kind::cnst:
      return poly::pconst(e.constant());
    case ring_expr::kind::var:
      return poly::pvar(e.index());
    case ring_expr::kind::add:
      return poly::pplus(pquote(e.child(0)), pquote(e.child(1)));
    case ring_expr::kind::mul:
      return poly::pmult(pquote(e.child(0)), pquote(e.child(1)));
    case ring_expr::kind::neg:
      return poly::popp(pquote(e.child(0)));
  }
  return poly::pconst(0);
}

ring_expr interp_p(const poly& p) {
  switch (p.k()) {
    case poly::kind::pconst:
      return ring_expr::cnst(p.constant());
    case poly::kind::pvar:
      return ring_expr::var(p.index());
    case poly::kind::pplus:
      return ring_expr::add(interp_p(p.child(0)), interp_p(p.child(1)));
    case poly::kind::pmult:
      return ring_expr::mul(interp_p(p.child(0)), interp_p(p.child(1)));
    case poly::kind::popp:
      return ring_expr::neg(interp_p(p.child(0)));
  }
  return ring_expr::cnst(0);
}

namespace {

std::vector<monomial> expand(const poly& p) {
  switch (p.k()) {
    case poly::kind::pconst:
      if (p.constant() == 0) return {};
      return {monomial{p.constant(), {}}};
    case poly::kind::pvar:
      return {monomial{1, {{p.index(), 1}}}};
    case poly::kind::pplus: {
      auto a = expand(p.child(0));
      auto b = expand(p.child(1));
      a.insert(a.end(), b.begin(), b.end());
      return a;
    }
    case poly::kind::pmult: {
      auto a = expand(p.child(0));
      auto b = expand(p.child(1));
      std::vector<monomial> out;
      out.reserve(a.size() * b.size());
      for (const auto& ma : a) {
        for (const auto& mb : b) {
          monomial m;
          m.coeff = ma.coeff * mb.coeff;
          m.exps = ma.exps;
          for (const auto& [idx, e] : mb.exps) m.exps[idx] += e;
          out.push_back(std::move(m));
        }
      }
      return out;
    }
    case poly::kind::popp: {
      auto a = expand(p.child(0));
      for (auto& m : a) m.coeff = -m.coeff;
      return a;
    }
  }
  return {};
}

}  // namespace

normal_poly normalize(const poly& p) {
  return normal_poly::from_monomials(expand(p));
}

poly to_poly(const normal_poly& n) {
  if (n.monomials().empty()) return poly::pconst(0);
  std::vector<poly> terms;
  for (const auto& m : n.monomials()) {
    std::vector<poly> factors;
    if (m.coeff != 1 || m.exps.empty()) factors.push_back(poly::pconst(m.coeff));
    for (const auto& [idx, e] : m.exps) {
      for (std::uint32_t i = 0; i < e; ++i) factors.push_back(poly::pvar(idx));
    }
    poly t = factors.back();
    for (auto it = factors.rbegin() + 1; it != factors.rend(); ++it) {
      t = poly::pmult(*it, std::move(t));
    }
    terms.push_back(std::move(t));
  }
  poly out = terms.back();
  for (auto it = terms.rbegin() + 1; it != terms.rend(); ++it) {
    out = poly::pplus(*it, std::move(out));
  }
  return out;
}

long long eval_ring(const ring_expr& e, const ring_env& phi) {
  switch (e.k()) {
    case ring_expr::kind::cnst:
      return e.constant();
    case ring_expr::kind::var: {
      auto it = phi.find(e.index());
      if (it == phi.end()) {
        throw input_error("ring: no assignment for x" +
                          std::to_string(e.index()));
      }
      return it->second;
    }
    case ring_expr::kind::add:
      return eval_ring(e.child(0), phi) + eval_ring(e.child(1), phi);
    case ring_expr::kind::mul:
      return eval_ring(e.child(0), phi) * eval_ring(e.child(1), phi);
    case ring_expr::kind::neg:
      return -eval_ring(e.child(0), phi);
  }
  return 0;
}

long long eval_normal(const normal_poly& n, const ring_env& phi) {
  long long acc = 0;
  for (const auto& m : n.monomials()) {
    long long term = m.coeff;
    for (const auto& [idx, e] : m.exps) {
      auto it = phi.find(idx);
      if (it == phi.end()) {
        throw input_error("ring: no assignment for x" + std::to_string(idx));
      }
      for (std::uint32_t i = 0; i < e; ++i) term *= it->second;
    }
    acc += term;
  }
  return acc;
}

namespace {

struct ring_parser {
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

  bool eat(char c) {
    skip_ws();
    if (pos < src.size() && src[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  ring_expr factor() {
    skip_ws();
    if (pos >= src.size()) fail("unexpected end of expression");
    if (eat('-')) return ring_expr::neg(factor());
    if (eat('(')) {
      ring_expr e = sum();
      if (!eat(')')) fail("expected ')'");
      return e;
    }
    if (src[pos] == 'x') {
      ++pos;
      std::size_t start = pos;
      while (pos < src.size() &&
             std::isdigit(static_cast<unsigned char>(src[pos]))) {
        ++pos;
      }
      if (start == pos) fail("expected variable index after 'x'");
      return ring_expr::var(
          static_cast<std::uint32_t>(std::stoul(src.substr(start, pos - start))));
    }
    if (std::isdigit(static_cast<unsigned char>(src[pos]))) {
      std::size_t start = pos;
      while (pos < src.size() &&
             std::isdigit(static_cast<unsigned char>(src[pos]))) {
        ++pos;
      }
      return ring_expr::cnst(std::stoll(src.substr(start, pos - start)));
    }
    fail("expected a constant, variable, or '('");
  }

  ring_expr product() {
    ring_expr e = factor();
    while (eat('*')) e = ring_expr::mul(std::move(e), factor());
    return e;
  }

  ring_expr sum() {
    ring_expr e = product();
    while (true) {
      skip_ws();
      if (eat('+')) {
        e = ring_expr::add(std::move(e), product());
      } else if (pos < src.size() && src[pos] == '-') {
        // binary minus: a - b reads as a + (-b)
        ++pos;
        e = ring_expr::add(std::move(e), ring_expr::neg(product()));
      } else {
        break;
      }
    }
    return e;
  }

  ring_expr top() {
    ring_expr e = sum();
    skip_ws();
    if (pos != src.size()) fail("trailing input");
    return e;
  }
};

}  // namespace

ring_expr parse_ring(const std::string& s) {
  ring_parser p{s};
  return p.top();
}

value framework::sem_value(const expr_type& e) const {
  if (const auto* r = std::get_if<ring_expr>(&e)) {
    return value(id(), normal_value{normalize(pquote(*r))});
  }
  return value(id(), std::get<poly>(e));
}

value framework::syn_value(const expr_type& e) const {
  if (!in_object(e)) {
    throw membership_error("ring: syn_value needs a ring expression");
  }
  return value(id(), pquote(std::get<ring_expr>(e)));
}

std::optional<framework::expr_type> framework::syn_inverse(
    const value& v) const {
  if (const auto* p = v.payload_if<poly>()) return of(interp_p(*p));
  return std::nullopt;
}

framework::expr_type framework::quote(const expr_type& e) const {
  if (!in_object(e)) {
    throw membership_error("ring: quote needs a ring expression");
  }
  return of(pquote(std::get<ring_expr>(e)));
}

std::optional<framework::expr_type> framework::eval(const expr_type& e) const {
  if (!in_syntax(e)) {
    throw membership_error("ring: eval needs a polynomial expression");
  }
  return of(interp_p(std::get<poly>(e)));
}

std::string framework::expr_text(const expr_type& e) const {
  if (const auto* r = std::get_if<ring_expr>(&e)) return show(*r);
  return show(std::get<poly>(e));
}

std::size_t framework::child_count(const expr_type& e) const {
  if (const auto* r = std::get_if<ring_expr>(&e)) return r->arity();
  return std::get<poly>(e).arity();
}

framework::expr_type framework::child(const expr_type& e,
                                      std::size_t i) const {
  if (const auto* r = std::get_if<ring_expr>(&e)) return of(r->child(i));
  return of(std::get<poly>(e).child(i));
}

framework::expr_type framework::with_child(const expr_type& e, std::size_t i,
                                           const expr_type& sub) const {
  if (const auto* r = std::get_if<ring_expr>(&e)) {
    const auto* c = std::get_if<ring_expr>(&sub);
    if (c == nullptr) {
      throw input_error("ring: replacement does not fit a ring slot");
    }
    return of(ring::with_child(*r, i, *c));
  }
  const auto* c = std::get_if<poly>(&sub);
  if (c == nullptr) {
    throw input_error("ring: replacement does not fit a polynomial slot");
  }
  return of(ring::with_child(std::get<poly>(e), i, *c));
}

}  // namespace quosyn::ring
