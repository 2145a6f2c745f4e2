#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "quosyn/framework.hpp"

namespace quosyn {

// A path of child indices from the root; the empty path is the root itself.
// Prints as a dotted index string ("0.1.0"; the root prints empty).
class position {
 public:
  position() = default;
  explicit position(std::vector<std::size_t> path) : path_(std::move(path)) {}

  static position root() { return position{}; }

  position child(std::size_t i) const {
    auto p = path_;
    p.push_back(i);
    return position(std::move(p));
  }

  std::span<const std::size_t> path() const { return path_; }
  bool is_root() const { return path_.empty(); }
  std::size_t depth() const { return path_.size(); }

  bool prefix_of(const position& other) const {
    if (path_.size() > other.path_.size()) return false;
    return std::equal(path_.begin(), path_.end(), other.path_.begin());
  }

  std::string text() const {
    std::string out;
    for (std::size_t i = 0; i < path_.size(); ++i) {
      if (i) out += '.';
      out += std::to_string(path_[i]);
    }
    return out;
  }

  bool operator==(const position&) const = default;

 private:
  std::vector<std::size_t> path_;
};

// Two positions address disjoint subexpressions iff neither is a prefix of
// the other.
inline bool disjoint(const position& a, const position& b) {
  return !a.prefix_of(b) && !b.prefix_of(a);
}

// Every valid position of e, in preorder; the length is the subexpression
// count.
template <navigable_framework F>
std::vector<position> positions(const F& f, const typename F::expr_type& e) {
  std::vector<position> out;
  auto walk = [&](auto&& self, const typename F::expr_type& t,
                  const position& at) -> void {
    out.push_back(at);
    const std::size_t n = f.child_count(t);
    for (std::size_t i = 0; i < n; ++i) {
      self(self, f.child(t, i), at.child(i));
    }
  };
  walk(walk, e, position::root());
  return out;
}

template <navigable_framework F>
std::optional<typename F::expr_type> subexpr_at(const F& f,
                                                const typename F::expr_type& e,
                                                const position& p) {
  typename F::expr_type cur = e;
  for (std::size_t i : p.path()) {
    if (i >= f.child_count(cur)) return std::nullopt;
    cur = f.child(cur, i);
  }
  return cur;
}

template <navigable_framework F>
typename F::expr_type replace_at(const F& f, const typename F::expr_type& e,
                                 const position& p,
                                 const typename F::expr_type& sub,
                                 std::size_t depth = 0) {
  if (depth == p.depth()) return sub;
  const std::size_t i = p.path()[depth];
  if (i >= f.child_count(e)) {
    throw input_error("replace_at: invalid position " + p.text());
  }
  return f.with_child(e, i, replace_at(f, f.child(e, i), p, sub, depth + 1));
}

// An object-language expression with pairwise disjoint marked positions,
// each carrying a splice expression: m = e<(p1,e1),...,(pn,en)>.
template <class Expr>
struct marked_expr {
  Expr base;
  std::vector<std::pair<position, Expr>> marks;
};

template <navigable_framework F>
void validate_marks(const F& f, const marked_expr<typename F::expr_type>& m) {
  if (!f.in_object(m.base)) {
    throw membership_error("marked expression base outside the object language of " +
                           std::string(f.id()));
  }
  for (const auto& [p, splice] : m.marks) {
    if (!subexpr_at(f, m.base, p)) {
      throw input_error("marked expression: invalid position " + p.text());
    }
  }
  for (std::size_t i = 0; i < m.marks.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (!disjoint(m.marks[i].first, m.marks[j].first)) {
        throw input_error("marked expression: overlapping positions " +
                          m.marks[i].first.text() + " and " +
                          m.marks[j].first.text());
      }
    }
  }
}

// S(m): simultaneously replaces each marked slot with the direct evaluation
// of its splice expression.  Because the positions are pairwise disjoint the
// replacement order cannot matter.  Absent if some direct evaluation is
// absent or a replacement does not fit the slot's grammatical category,
// which is realized by re-validating membership of the spliced result.
template <navigable_framework F>
std::optional<typename F::expr_type> splice(
    const F& f, const marked_expr<typename F::expr_type>& m) {
  validate_marks(f, m);
  for (const auto& [p, s] : m.marks) {
    if (!f.in_syntax(s)) {
      throw membership_error("splice expression outside the syntax language of " +
                             std::string(f.id()));
    }
  }
  typename F::expr_type result = m.base;
  for (const auto& [p, s] : m.marks) {
    auto v = direct_eval(f, s);
    if (!v) return std::nullopt;
    try {
      result = replace_at(f, result, p, *v);
    } catch (const input_error&) {
      return std::nullopt;  // replacement does not fit the slot
    }
  }
  if (!f.in_object(result)) return std::nullopt;
  return result;
}

// Quasiquotation: Q-bar = Q . S, defined exactly where S is.
template <navigable_framework F>
std::optional<typename F::expr_type> quasiquote(
    const F& f, const marked_expr<typename F::expr_type>& m) {
  auto s = splice(f, m);
  if (!s) return std::nullopt;
  return f.quote(*s);
}

}  // namespace quosyn
