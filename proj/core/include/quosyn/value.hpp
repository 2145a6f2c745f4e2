#pragma once

#include <memory>
#include <string>
#include <typeinfo>
#include <utility>

#include "quosyn/errors.hpp"

namespace quosyn {

// A semantic or syntactic value, type-erased and tagged with the instance it
// came from.  Equality is structural on the payload; comparing values from
// two different instances is a membership error, not `false`.
//
// Syntactic values are not a separate type: every instance keeps its
// syntactic domain inside its semantic domain, so syn_value results compare
// directly against sem_value results.
//
// Payload requirements: operator== against its own type and a free function
// `std::string to_text(const T&)` findable by ADL.
class value {
  struct base {
    virtual ~base() = default;
    virtual bool equals(const base& other) const = 0;
    virtual std::string text() const = 0;
  };

  template <class T>
  struct model final : base {
    T payload;
    explicit model(T p) : payload(std::move(p)) {}
    bool equals(const base& other) const override {
      auto* m = dynamic_cast<const model<T>*>(&other);
      return m != nullptr && payload == m->payload;
    }
    std::string text() const override { return to_text(payload); }
  };

 public:
  template <class T>
  value(std::string instance, T payload)
      : instance_(std::move(instance)),
        impl_(std::make_shared<model<T>>(std::move(payload))) {}

  const std::string& instance() const noexcept { return instance_; }
  std::string text() const { return impl_->text(); }

  friend bool operator==(const value& a, const value& b) {
    if (a.instance_ != b.instance_) {
      throw membership_error("cannot compare values of instance '" +
                             a.instance_ + "' and '" + b.instance_ + "'");
    }
    return a.impl_->equals(*b.impl_);
  }
  friend bool operator!=(const value& a, const value& b) { return !(a == b); }

  template <class T>
  const T* payload_if() const noexcept {
    auto* m = dynamic_cast<const model<T>*>(impl_.get());
    return m ? &m->payload : nullptr;
  }

 private:
  std::string instance_;
  std::shared_ptr<const base> impl_;
};

// Shared payload kinds used by several instances.

struct truth_value {
  bool v = false;
  bool operator==(const truth_value&) const = default;
};
inline std::string to_text(const truth_value& t) { return t.v ? "T" : "F"; }

struct text_value {
  std::string s;
  bool operator==(const text_value&) const = default;
};
inline std::string to_text(const text_value& t) { return "\"" + t.s + "\""; }

struct symbol_value {
  char c = '\0';
  bool operator==(const symbol_value&) const = default;
};
inline std::string to_text(const symbol_value& s) {
  return std::string("'") + s.c + "'";
}

// The undefinedness marker: interpreter failure or fuel exhaustion, kept as
// a first-class semantic value where an instance's domain includes it.
struct bottom_value {
  bool operator==(const bottom_value&) const = default;
};
inline std::string to_text(const bottom_value&) { return "\xE2\x8A\xA5"; }

}  // namespace quosyn
