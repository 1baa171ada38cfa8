#pragma once

#include <cstdint>
#include <string>

#include "tempoflow/errors.hpp"

namespace tempoflow {

// A finite nonnegative amount or the symbolic Unbounded value.
// Unbounded is its own state, never a sentinel integer.
class Cap {
 public:
  constexpr Cap() : finite_(true), value_(0) {}
  constexpr Cap(std::int64_t v) : finite_(true), value_(v) {}  // NOLINT: implicit by design

  static constexpr Cap unbounded() {
    Cap c;
    c.finite_ = false;
    return c;
  }

  constexpr bool is_unbounded() const { return !finite_; }
  constexpr bool is_finite() const { return finite_; }

  std::int64_t value() const {
    if (!finite_) throw DomainError("unbounded capacity has no finite value");
    return value_;
  }

  friend constexpr bool operator==(const Cap& a, const Cap& b) {
    return a.finite_ == b.finite_ && (!a.finite_ || a.value_ == b.value_);
  }
  // Unbounded compares greater than every finite value.
  friend constexpr bool operator<(const Cap& a, const Cap& b) {
    if (a.finite_ && b.finite_) return a.value_ < b.value_;
    return a.finite_ && !b.finite_;
  }
  friend constexpr bool operator<=(const Cap& a, const Cap& b) { return !(b < a); }
  friend constexpr bool operator>(const Cap& a, const Cap& b) { return b < a; }
  friend constexpr bool operator>=(const Cap& a, const Cap& b) { return !(a < b); }

  friend constexpr Cap min(const Cap& a, const Cap& b) { return a < b ? a : b; }

  std::string str() const { return finite_ ? std::to_string(value_) : "inf"; }

 private:
  bool finite_;
  std::int64_t value_ = 0;
};

}  // namespace tempoflow
