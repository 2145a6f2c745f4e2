#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "quosyn/goedel.hpp"
#include "quosyn/lambda.hpp"
#include "quosyn/minilisp.hpp"
#include "quosyn/prop.hpp"
#include "quosyn/ring.hpp"
#include "quosyn/strlang.hpp"

namespace quosyn::harness {

// splitmix64: platform-independent, so identical seeds give identical
// reports everywhere.
class rng {
 public:
  explicit rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : next() % n; }

  long long range(long long lo, long long hi) {  // inclusive
    return lo + static_cast<long long>(
                    below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  bool chance(unsigned num, unsigned den) { return below(den) < num; }

 private:
  std::uint64_t state_;
};

// Stable per-trial sub-seeds: results do not depend on trial scheduling.
std::uint64_t sub_seed(std::uint64_t seed, std::uint64_t index);
// Stable per-property seed bases.
std::uint64_t property_seed(std::uint64_t seed, std::string_view name);

struct gen_config {
  std::string instance_id;
  std::size_t max_size = 20;
  std::uint64_t seed = 0;
  std::uint64_t trials = 1000;
};

// Size-bounded generators, one per grammar; every constructor of the
// instance grammar is reachable and node counts stay within max_size.

prop::formula gen_formula(rng& r, std::size_t max_size);

strlang::expr gen_strlang_object(rng& r, std::size_t max_size);
strlang::expr gen_strlang_syntax(rng& r, std::size_t max_size);

goedel::arith gen_arith_term(rng& r, std::size_t max_size, bool allow_quote);
goedel::arith gen_arith_expr(rng& r, std::size_t max_size, bool allow_quote);
goedel::arith gen_goedel_syntax(rng& r, std::size_t max_size,
                                goedel::framework::mode m);

lisp::sexpr gen_sexpr(rng& r, std::size_t max_size);
lisp::sexpr gen_lisp_defined(rng& r, std::size_t max_size, std::uint64_t fuel);
// An unnested backquote whose splices all have values.
lisp::sexpr gen_backquote(rng& r, std::size_t max_size, std::uint64_t fuel);

lam::term gen_lam_term(rng& r, std::size_t max_size);
// A term whose normal form and whose self-interpretation both converge
// within the given fuel.
lam::term gen_lam_normalizing(rng& r, std::size_t max_size,
                              std::uint64_t fuel);

ring::ring_expr gen_ring_expr(rng& r, std::size_t max_size,
                              std::uint32_t max_vars = 4,
                              std::uint32_t max_degree = 5);
ring::poly gen_poly(rng& r, std::size_t max_size, std::uint32_t max_vars = 4,
                    std::uint32_t max_degree = 5);

}  // namespace quosyn::harness
