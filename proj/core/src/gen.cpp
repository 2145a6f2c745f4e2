#include "quosyn/gen.hpp"

#include <algorithm>

#include "quosyn/position.hpp"

namespace quosyn::harness {

std::uint64_t sub_seed(std::uint64_t seed, std::uint64_t index) {
  rng r(seed ^ (0xA0761D6478BD642FULL + index * 0xE7037ED1A0B428DBULL));
  return r.next();
}

std::uint64_t property_seed(std::uint64_t seed, std::string_view name) {
  std::uint64_t h = 0xCBF29CE484222325ULL;  // FNV-1a
  for (char c : name) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001B3ULL;
  }
  return sub_seed(seed, h);
}

prop::formula gen_formula(rng& r, std::size_t max_size) {
  static const char* vars[] = {"p", "q", "r", "s"};
  if (max_size <= 1) {
    switch (r.below(4)) {
      case 0:
        return prop::formula::t();
      case 1:
        return prop::formula::f();
      default:
        return prop::formula::var(vars[r.below(4)]);
    }
  }
  switch (r.below(8)) {
    case 0:
      return prop::formula::t();
    case 1:
      return prop::formula::f();
    case 2:
      return prop::formula::var(vars[r.below(4)]);
    case 3:
    case 4:
      return prop::formula::neg(gen_formula(r, max_size - 1));
    default: {
      if (max_size < 3) return prop::formula::var(vars[r.below(4)]);
      const std::size_t left = 1 + r.below(max_size - 2);
      prop::formula a = gen_formula(r, left);
      prop::formula b = gen_formula(r, max_size - 1 - left);
      return r.chance(1, 2) ? prop::formula::conj(std::move(a), std::move(b))
                            : prop::formula::disj(std::move(a), std::move(b));
    }
  }
}

namespace {

using strlang::str_term;
using strlang::term_sort;

// May produce value-undefined terms; callers filter.
str_term gen_raw_str_term(rng& r, std::size_t max_size, term_sort target) {
  // printable symbols to draw constants from
  static const char pool[] = "pq~&|() true";
  auto sym = [&] {
    return str_term::sym(pool[r.below(sizeof(pool) - 1)]);
  };
  if (target == term_sort::symbol) {
    if (max_size >= 2 && r.chance(1, 3)) {
      return str_term::head(
          gen_raw_str_term(r, max_size - 1, term_sort::string));
    }
    return sym();
  }
  if (max_size <= 1) return str_term::nil();
  switch (r.below(4)) {
    case 0:
      return str_term::nil();
    case 1:
      if (max_size >= 2) {
        return str_term::tail(
            gen_raw_str_term(r, max_size - 1, term_sort::string));
      }
      return str_term::nil();
    default: {
      if (max_size < 3) return str_term::nil();
      const std::size_t left = 1 + r.below(std::min<std::size_t>(max_size - 2, 3));
      str_term h = gen_raw_str_term(r, left, term_sort::symbol);
      str_term t = gen_raw_str_term(r, max_size - 1 - left, term_sort::string);
      return str_term::cons(std::move(h), std::move(t));
    }
  }
}

}  // namespace

strlang::expr gen_strlang_object(rng& r, std::size_t max_size) {
  if (r.chance(1, 2)) return strlang::expr(gen_formula(r, max_size));
  for (int attempt = 0; attempt < 64; ++attempt) {
    term_sort target = r.chance(1, 4) ? term_sort::symbol : term_sort::string;
    str_term t = gen_raw_str_term(r, max_size, target);
    if (strlang::term_value(t).has_value()) return strlang::expr(std::move(t));
  }
  return strlang::expr(str_term::nil());
}

strlang::expr gen_strlang_syntax(rng& r, std::size_t max_size) {
  if (r.chance(1, 3)) {
    return strlang::expr(strlang::quote_str(gen_strlang_object(r, max_size)));
  }
  for (int attempt = 0; attempt < 64; ++attempt) {
    str_term t = gen_raw_str_term(r, max_size, term_sort::string);
    if (strlang::term_value(t).has_value()) return strlang::expr(std::move(t));
  }
  return strlang::expr(str_term::nil());
}

goedel::arith gen_arith_term(rng& r, std::size_t max_size, bool allow_quote) {
  using goedel::arith;
  const auto& vars = goedel::variable_names();
  if (max_size <= 1) {
    return r.chance(1, 3) ? arith::var(vars[r.below(vars.size())])
                          : arith::zero();
  }
  switch (r.below(allow_quote ? 7 : 6)) {
    case 0:
      return arith::zero();
    case 1:
      return arith::var(vars[r.below(vars.size())]);
    case 2:
    case 3:
      return arith::succ(gen_arith_term(r, max_size - 1, allow_quote));
    case 6:
      return arith::quote_t(gen_arith_expr(r, max_size - 1, allow_quote));
    default: {
      if (max_size < 3) return arith::zero();
      const std::size_t left = 1 + r.below(max_size - 2);
      arith a = gen_arith_term(r, left, allow_quote);
      arith b = gen_arith_term(r, max_size - 1 - left, allow_quote);
      return r.chance(1, 2) ? arith::plus(std::move(a), std::move(b))
                            : arith::times(std::move(a), std::move(b));
    }
  }
}

namespace {

goedel::arith gen_arith_formula(rng& r, std::size_t max_size,
                                bool allow_quote) {
  using goedel::arith;
  const auto& vars = goedel::variable_names();
  if (max_size < 3) {
    return arith::eq(arith::zero(), arith::zero());
  }
  switch (r.below(6)) {
    case 0:
    case 1: {
      const std::size_t left = 1 + r.below(max_size - 2);
      return arith::eq(gen_arith_term(r, left, allow_quote),
                       gen_arith_term(r, max_size - 1 - left, allow_quote));
    }
    case 2:
      return arith::not_f(gen_arith_formula(r, max_size - 1, allow_quote));
    case 3:
      return arith::forall(vars[r.below(vars.size())],
                           gen_arith_formula(r, max_size - 1, allow_quote));
    default: {
      if (max_size < 7) {
        const std::size_t left = 1 + r.below(max_size - 2);
        return arith::eq(gen_arith_term(r, left, allow_quote),
                         gen_arith_term(r, max_size - 1 - left, allow_quote));
      }
      const std::size_t left = 3 + r.below(max_size - 6);
      goedel::arith a = gen_arith_formula(r, left, allow_quote);
      goedel::arith b = gen_arith_formula(r, max_size - 1 - left, allow_quote);
      return arith::and_f(std::move(a), std::move(b));
    }
  }
}

}  // namespace

goedel::arith gen_arith_expr(rng& r, std::size_t max_size, bool allow_quote) {
  if (max_size >= 3 && r.chance(1, 2)) {
    return gen_arith_formula(r, max_size, allow_quote);
  }
  return gen_arith_term(r, max_size, allow_quote);
}

goedel::arith gen_goedel_syntax(rng& r, std::size_t max_size,
                                goedel::framework::mode m) {
  using goedel::arith;
  switch (m) {
    case goedel::framework::mode::meta:
      return gen_arith_term(r, max_size, false);
    case goedel::framework::mode::builtin:
      return gen_arith_term(r, max_size, true);
    case goedel::framework::mode::total: {
      // terms whose value is a code: quotations, optionally padded with
      // value-preserving arithmetic
      arith q = goedel::quote_meta(gen_arith_expr(r, std::max<std::size_t>(max_size / 2, 1), false));
      switch (r.below(3)) {
        case 0:
          return q;
        case 1:
          return arith::plus(q, arith::times(arith::zero(),
                                             gen_arith_term(r, 3, false)));
        default:
          return arith::plus(arith::times(gen_arith_term(r, 3, false),
                                          arith::zero()),
                             q);
      }
    }
  }
  return arith::zero();
}

lisp::sexpr gen_sexpr(rng& r, std::size_t max_size) {
  using lisp::sexpr;
  static const char* syms[] = {"a", "b",   "x",   "y",    "f",
                               "+", "*",   "car", "cons", "t",
                               "q", "foo", "bar", "list"};
  if (max_size <= 1) {
    switch (r.below(3)) {
      case 0:
        return sexpr::num(r.range(-9, 9));
      case 1:
        return sexpr::sym(syms[r.below(std::size(syms))]);
      default:
        return sexpr::nil();
    }
  }
  if (r.chance(1, 4)) return gen_sexpr(r, 1);
  if (r.chance(1, 10)) {  // improper pair
    const std::size_t left = 1 + r.below(max_size - 1);
    return sexpr::pair(gen_sexpr(r, left),
                       gen_sexpr(r, std::max<std::size_t>(max_size - 1 - left, 1)));
  }
  std::size_t budget = max_size - 1;
  std::vector<sexpr> items;
  const std::size_t count = 1 + r.below(std::min<std::size_t>(budget, 4));
  for (std::size_t i = 0; i < count && budget > 0; ++i) {
    const std::size_t take = 1 + r.below(std::min<std::size_t>(budget, 6));
    items.push_back(gen_sexpr(r, take));
    budget -= std::min(budget, take);
  }
  return sexpr::list(std::move(items));
}

namespace {

lisp::sexpr gen_defined_numeric(rng& r, std::size_t max_size) {
  using lisp::sexpr;
  if (max_size <= 1) return sexpr::num(r.range(-9, 9));
  switch (r.below(4)) {
    case 0:
      return sexpr::num(r.range(-9, 9));
    default: {
      static const char* ops[] = {"+", "-", "*"};
      std::size_t budget = max_size - 1;
      std::vector<sexpr> items;
      items.push_back(sexpr::sym(ops[r.below(3)]));
      const std::size_t count = 1 + r.below(2);
      for (std::size_t i = 0; i < count && budget > 0; ++i) {
        const std::size_t take = 1 + r.below(std::min<std::size_t>(budget, 5));
        items.push_back(gen_defined_numeric(r, take));
        budget -= std::min(budget, take);
      }
      return sexpr::list(std::move(items));
    }
  }
}

}  // namespace

lisp::sexpr gen_lisp_defined(rng& r, std::size_t max_size,
                             std::uint64_t fuel) {
  using lisp::sexpr;
  for (int attempt = 0; attempt < 64; ++attempt) {
    sexpr cand = sexpr::nil();
    switch (r.below(8)) {
      case 0:
        cand = sexpr::num(r.range(-99, 99));
        break;
      case 1:
        cand = sexpr::sym("t");
        break;
      case 2:
        cand = sexpr::nil();
        break;
      case 3:
        cand = lisp::quote_of(gen_sexpr(r, std::max<std::size_t>(max_size - 2, 1)));
        break;
      case 4:
        cand = gen_defined_numeric(r, max_size);
        break;
      case 5: {
        // (if (= a b) x y)
        sexpr a = gen_defined_numeric(r, 2);
        sexpr b = gen_defined_numeric(r, 2);
        sexpr x = gen_defined_numeric(r, 3);
        sexpr y = gen_defined_numeric(r, 3);
        cand = sexpr::list({sexpr::sym("if"),
                            sexpr::list({sexpr::sym("="), a, b}), x, y});
        break;
      }
      case 6: {
        sexpr payload = gen_sexpr(r, std::max<std::size_t>(max_size / 2, 1));
        cand = sexpr::list(
            {sexpr::sym(r.chance(1, 2) ? "cons" : "list"),
             lisp::quote_of(payload),
             lisp::quote_of(gen_sexpr(r, std::max<std::size_t>(max_size / 4, 1)))});
        break;
      }
      default: {
        // ((lambda (v) v) arg)
        sexpr arg = gen_defined_numeric(r, 3);
        cand = sexpr::list(
            {sexpr::list({sexpr::sym("lambda"),
                          sexpr::list({sexpr::sym("v")}), sexpr::sym("v")}),
             arg});
        break;
      }
    }
    if (lisp::interp(cand, fuel).has_value()) return cand;
  }
  return lisp::sexpr::num(0);
}

lisp::sexpr gen_backquote(rng& r, std::size_t max_size, std::uint64_t fuel) {
  using lisp::sexpr;
  const lisp::framework f(fuel);
  sexpr base = gen_sexpr(r, max_size);
  auto all = positions(f, base);
  // A comma cannot mark the dotted tail of a pair: (a . ,x) would dissolve
  // into the proper list (a unquote x).
  auto markable = [&](const position& p) {
    if (p.is_root()) return true;
    std::vector<std::size_t> pp(p.path().begin(), p.path().end() - 1);
    auto parent = subexpr_at(f, base, position(std::move(pp)));
    if (!parent) return false;
    return parent->is_list() || p.path().back() == 0;
  };
  // pick up to three pairwise disjoint positions
  std::vector<position> chosen;
  const std::size_t want = r.below(4);
  for (std::size_t i = 0; i < all.size() * 2 && chosen.size() < want; ++i) {
    const position& cand = all[r.below(all.size())];
    if (!markable(cand)) continue;
    bool ok = true;
    for (const auto& p : chosen) {
      if (!disjoint(p, cand)) {
        ok = false;
        break;
      }
    }
    if (ok) chosen.push_back(cand);
  }
  sexpr marked = base;
  for (const auto& p : chosen) {
    sexpr splice_expr = gen_lisp_defined(r, 5, fuel);
    marked = replace_at(f, marked, p,
                        sexpr::list({sexpr::sym("unquote"), splice_expr}));
  }
  return sexpr::list({sexpr::sym("backquote"), marked});
}

lam::term gen_lam_term(rng& r, std::size_t max_size) {
  using lam::term;
  static const char* vars[] = {"x", "y", "z", "f", "g"};
  if (max_size <= 1) return term::var(vars[r.below(std::size(vars))]);
  switch (r.below(4)) {
    case 0:
      return term::var(vars[r.below(std::size(vars))]);
    case 1:
    case 2:
      return term::abs(vars[r.below(std::size(vars))],
                       gen_lam_term(r, max_size - 1));
    default: {
      if (max_size < 3) return term::var(vars[r.below(std::size(vars))]);
      const std::size_t left = 1 + r.below(max_size - 2);
      term a = gen_lam_term(r, left);
      term b = gen_lam_term(r, max_size - 1 - left);
      return term::app(std::move(a), std::move(b));
    }
  }
}

lam::term gen_lam_normalizing(rng& r, std::size_t max_size,
                              std::uint64_t fuel) {
  for (int attempt = 0; attempt < 64; ++attempt) {
    lam::term t = gen_lam_term(r, max_size);
    if (!lam::beta_nf(t, 2000)) continue;
    if (lam::run_self_interp(t, fuel)) return t;
  }
  return lam::church(static_cast<unsigned>(r.below(4)));
}

ring::ring_expr gen_ring_expr(rng& r, std::size_t max_size,
                              std::uint32_t max_vars,
                              std::uint32_t max_degree) {
  using ring::ring_expr;
  if (max_size <= 1) {
    if (max_degree >= 1 && r.chance(2, 3)) {
      return ring_expr::var(static_cast<std::uint32_t>(r.below(max_vars)));
    }
    return ring_expr::cnst(r.range(-9, 9));
  }
  switch (r.below(6)) {
    case 0:
      return ring_expr::cnst(r.range(-9, 9));
    case 1:
      if (max_degree >= 1) {
        return ring_expr::var(static_cast<std::uint32_t>(r.below(max_vars)));
      }
      return ring_expr::cnst(r.range(-9, 9));
    case 2:
      return ring_expr::neg(
          gen_ring_expr(r, max_size - 1, max_vars, max_degree));
    case 3: {
      if (max_size < 3 || max_degree == 0) {
        return ring_expr::cnst(r.range(-9, 9));
      }
      const std::size_t left = 1 + r.below(max_size - 2);
      const std::uint32_t dl =
          static_cast<std::uint32_t>(r.below(max_degree + 1));
      return ring_expr::mul(
          gen_ring_expr(r, left, max_vars, dl),
          gen_ring_expr(r, max_size - 1 - left, max_vars, max_degree - dl));
    }
    default: {
      if (max_size < 3) return ring_expr::cnst(r.range(-9, 9));
      const std::size_t left = 1 + r.below(max_size - 2);
      return ring_expr::add(
          gen_ring_expr(r, left, max_vars, max_degree),
          gen_ring_expr(r, max_size - 1 - left, max_vars, max_degree));
    }
  }
}

ring::poly gen_poly(rng& r, std::size_t max_size, std::uint32_t max_vars,
                    std::uint32_t max_degree) {
  return ring::pquote(gen_ring_expr(r, max_size, max_vars, max_degree));
}

}  // namespace quosyn::harness
