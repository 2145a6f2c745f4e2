#pragma once

#include <cstddef>
#include <utility>

#include "quosyn/position.hpp"

namespace quosyn::harness {

template <navigable_framework F>
std::size_t expr_size(const F& f, const typename F::expr_type& e) {
  std::size_t n = 1;
  const std::size_t count = f.child_count(e);
  for (std::size_t i = 0; i < count; ++i) n += expr_size(f, f.child(e, i));
  return n;
}

// Greedy structural shrinking: repeatedly hoist a child over its parent
// anywhere in the tree, keeping the first replacement that still satisfies
// the failure predicate and stays in the object language.  The result is no
// larger than the input and terminates because every accepted step strictly
// shrinks the tree.
template <navigable_framework F, class Pred>
typename F::expr_type minimize(const F& f, typename F::expr_type failing,
                               Pred&& pred) {
  bool shrunk = true;
  while (shrunk) {
    shrunk = false;
    for (const position& p : positions(f, failing)) {
      auto sub = subexpr_at(f, failing, p);
      if (!sub) continue;
      const std::size_t kids = f.child_count(*sub);
      for (std::size_t i = 0; i < kids && !shrunk; ++i) {
        typename F::expr_type candidate = failing;
        try {
          candidate = replace_at(f, failing, p, f.child(*sub, i));
          if (!f.in_object(candidate)) continue;
          if (pred(candidate)) {
            failing = std::move(candidate);
            shrunk = true;
          }
        } catch (const input_error&) {
          // replacement does not fit this slot; try the next one
        } catch (const membership_error&) {
        }
      }
      if (shrunk) break;
    }
  }
  return failing;
}

}  // namespace quosyn::harness
