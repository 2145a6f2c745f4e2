#include <map>

#include "doctest.h"
#include "quosyn/gen.hpp"
#include "quosyn/prop.hpp"

using namespace quosyn;
using prop::formula;

namespace {

// Brute-force truth-table evaluation over a total assignment; the oracle the
// simplifier is checked against.
bool tt_eval(const formula& f, const std::map<std::string, bool>& m) {
  switch (f.k()) {
    case formula::kind::true_lit:
      return true;
    case formula::kind::false_lit:
      return false;
    case formula::kind::var:
      return m.at(f.name());
    case formula::kind::neg:
      return !tt_eval(f.lhs(), m);
    case formula::kind::conj:
      return tt_eval(f.lhs(), m) && tt_eval(f.rhs(), m);
    case formula::kind::disj:
      return tt_eval(f.lhs(), m) || tt_eval(f.rhs(), m);
  }
  return false;
}

void collect_vars(const formula& f, std::map<std::string, bool>& m) {
  if (f.k() == formula::kind::var) m[f.name()] = false;
  for (std::size_t i = 0; i < f.arity(); ++i) collect_vars(f.child(i), m);
}

}  // namespace

TEST_CASE("parse recovers the worked example") {
  formula f = prop::parse("p & true");
  CHECK(f == formula::conj(formula::var("p"), formula::t()));
  CHECK(prop::parse("true") == formula::t());
}

TEST_CASE("parse rejects malformed input with an offset") {
  CHECK_THROWS_AS(prop::parse("p & ("), parse_error);
  try {
    prop::parse("p & (");
  } catch (const parse_error& e) {
    CHECK(e.offset == 5);
  }
  CHECK_THROWS_AS(prop::parse(""), parse_error);
  CHECK_THROWS_AS(prop::parse("p &"), parse_error);
  CHECK_THROWS_AS(prop::parse("p q"), parse_error);
}

TEST_CASE("print is the canonical grammar") {
  CHECK(prop::print(formula::var("p")) == "p");
  CHECK(prop::print(formula::conj(formula::var("p"), formula::t())) ==
        "p & true");
  CHECK(prop::print(formula::neg(formula::t())) == "~true");
  // precedence and associativity
  CHECK(prop::print(prop::parse("p | q & r")) == "p | q & r");
  CHECK(prop::print(prop::parse("(p | q) & r")) == "(p | q) & r");
  CHECK(prop::print(prop::parse("p | (q | r)")) == "p | (q | r)");
  CHECK(prop::print(prop::parse("p | q | r")) == "p | q | r");
  CHECK(prop::print(prop::parse("~(p & q)")) == "~(p & q)");
}

TEST_CASE("round trip on generated formulas") {
  harness::rng r(101);
  for (int i = 0; i < 1000; ++i) {
    formula f = harness::gen_formula(r, 20);
    CHECK(prop::parse(prop::print(f)) == f);
    CHECK(prop::is_canonical(prop::print(f)));
  }
}

TEST_CASE("value reproduces the worked example and constants") {
  prop::assignment empty;
  CHECK(prop::value(formula::conj(formula::var("p"), formula::t()), empty) ==
        formula::var("p"));
  CHECK(prop::value(formula::t(), empty) == formula::t());
  prop::assignment q_false;
  q_false.set("q", false);
  CHECK(prop::value(formula::disj(formula::var("q"), formula::f()), q_false) ==
        formula::f());
}

TEST_CASE("value agrees with the truth table under total assignments") {
  harness::rng r(77);
  for (int i = 0; i < 500; ++i) {
    formula f = harness::gen_formula(r, 20);
    std::map<std::string, bool> m;
    collect_vars(f, m);
    prop::assignment phi;
    for (auto& [k, v] : m) {
      v = r.chance(1, 2);
      phi.set(k, v);
    }
    formula simplified = prop::value(f, phi);
    const bool expect = tt_eval(f, m);
    CHECK(simplified == (expect ? formula::t() : formula::f()));
  }
}

TEST_CASE("simplification commutes with assignment completion") {
  harness::rng r(78);
  for (int i = 0; i < 500; ++i) {
    formula f = harness::gen_formula(r, 20);
    std::map<std::string, bool> m;
    collect_vars(f, m);
    prop::assignment partial;
    prop::assignment total;
    for (auto& [k, v] : m) {
      v = r.chance(1, 2);
      total.set(k, v);
      if (r.chance(1, 2)) partial.set(k, v);
    }
    CHECK(prop::value(prop::value(f, partial), total) == prop::value(f, total));
  }
}

TEST_CASE("value is idempotent") {
  harness::rng r(79);
  for (int i = 0; i < 500; ++i) {
    formula f = harness::gen_formula(r, 20);
    prop::assignment phi;
    if (r.chance(1, 2)) phi.set("p", r.chance(1, 2));
    if (r.chance(1, 3)) phi.set("q", r.chance(1, 2));
    formula once = prop::value(f, phi);
    CHECK(prop::value(once, phi) == once);
  }
}

TEST_CASE("interpret composes parse, value, print") {
  prop::assignment empty;
  CHECK(prop::interpret("p & true", empty) == "p");
  CHECK(prop::interpret("true | false", empty) == "true");
  prop::assignment p_true;
  p_true.set("p", true);
  CHECK(prop::interpret("~~p", p_true) == "true");
}

TEST_CASE("assignment text parsing") {
  prop::assignment phi = prop::assignment::parse_text("p=T,q=F");
  CHECK(phi.lookup("p") == true);
  CHECK(phi.lookup("q") == false);
  CHECK(!phi.lookup("r").has_value());
  CHECK_THROWS_AS(prop::assignment::parse_text("p"), parse_error);
  CHECK_THROWS_AS(prop::assignment::parse_text("p=X"), parse_error);
}

TEST_CASE("prop framework: quotation is parsing, evaluation is printing") {
  prop::framework fw;
  auto e = prop::framework::text("p & true");
  CHECK(fw.in_object(e));
  auto q = fw.quote(e);
  CHECK(fw.in_syntax(q));
  CHECK(fw.sem_value(q) == fw.syn_value(e));
  auto back = fw.eval(q);
  REQUIRE(back.has_value());
  CHECK(fw.expr_equal(*back, e));

  // non-canonical strings sit outside the object language
  CHECK(!fw.in_object(prop::framework::text("p&true")));
  CHECK(!fw.in_object(prop::framework::text("p & (")));
  CHECK_THROWS_AS(fw.quote(prop::framework::text("p&true")), membership_error);
  CHECK_THROWS_AS(fw.eval(e), membership_error);  // strings are not L_syn
}

TEST_CASE("prop framework: semantic values respect the assignment") {
  prop::assignment p_true;
  p_true.set("p", true);
  prop::framework fw(p_true);
  CHECK(fw.sem_value(prop::framework::text("true")) ==
        value("prop", truth_value{true}));
  CHECK(fw.sem_value(prop::framework::text("p & true")) ==
        value("prop", truth_value{true}));
  // unmapped variables default to false
  CHECK(fw.sem_value(prop::framework::text("q")) ==
        value("prop", truth_value{false}));
}
