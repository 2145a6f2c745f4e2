#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace quosyn {

// One axiom/property over a sample set.  `seed` is the suite seed, except
// when a counterexample was recorded, in which case it is the failing
// trial's derived sub-seed so the trial can be reproduced in isolation.
struct property_record {
  std::string name;
  std::uint64_t trials = 0;
  std::uint64_t passes = 0;
  std::optional<std::string> counterexample;
  std::uint64_t seed = 0;
};

struct check_report {
  std::string instance;
  std::vector<property_record> properties;

  bool all_passed() const;
  const property_record* find(const std::string& name) const;

  // Stable shape:
  //   {"instance": str,
  //    "properties": [{"name": str, "trials": int, "passes": int,
  //                    "counterexample": str|null, "seed": int}]}
  std::string to_json() const;
  std::string to_text() const;
};

// Tallies one property run; keeps the first failure as the counterexample.
class property_tally {
 public:
  property_tally(std::string name, std::uint64_t suite_seed)
      : rec_{std::move(name), 0, 0, std::nullopt, suite_seed} {}

  void pass() {
    ++rec_.trials;
    ++rec_.passes;
  }

  void fail(std::string witness, std::uint64_t sub_seed) {
    ++rec_.trials;
    if (!rec_.counterexample) {
      rec_.counterexample = std::move(witness);
      rec_.seed = sub_seed;
    }
  }

  void tally(bool ok, const std::string& witness, std::uint64_t sub_seed) {
    if (ok) {
      pass();
    } else {
      fail(witness, sub_seed);
    }
  }

  property_record finish() const { return rec_; }

 private:
  property_record rec_;
};

}  // namespace quosyn
