#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace dyer {

// A vertex label f(v) or a diagram bond label: a finite integer >= 2 or
// infinity. Infinity is encoded as 0 internally.
class Order {
 public:
  Order() : value_(2) {}

  static Order finite(std::uint32_t v) {
    if (v < 2) throw std::invalid_argument("finite Order must be >= 2");
    Order o;
    o.value_ = v;
    return o;
  }
  static Order infinity() {
    Order o;
    o.value_ = 0;
    return o;
  }

  bool is_finite() const { return value_ != 0; }
  bool is_infinite() const { return value_ == 0; }

  std::uint32_t finite_value() const {
    if (!is_finite()) throw std::logic_error("Order is infinite");
    return value_;
  }

  friend bool operator==(Order a, Order b) { return a.value_ == b.value_; }
  friend bool operator!=(Order a, Order b) { return a.value_ != b.value_; }

  // Text form used by the .dyer format.
  std::string to_string() const {
    return is_finite() ? std::to_string(value_) : std::string("inf");
  }

 private:
  std::uint32_t value_;
};

// A group cardinality: a positive integer or infinity.
class GroupOrder {
 public:
  GroupOrder() : finite_(true), value_(1) {}

  static GroupOrder finite(std::uint64_t v) {
    GroupOrder o;
    o.finite_ = true;
    o.value_ = v;
    return o;
  }
  static GroupOrder infinity() {
    GroupOrder o;
    o.finite_ = false;
    o.value_ = 0;
    return o;
  }

  bool is_finite() const { return finite_; }
  bool is_infinite() const { return !finite_; }

  std::uint64_t finite_value() const {
    if (!finite_) throw std::logic_error("GroupOrder is infinite");
    return value_;
  }

  friend bool operator==(GroupOrder a, GroupOrder b) {
    return a.finite_ == b.finite_ && a.value_ == b.value_;
  }
  friend bool operator!=(GroupOrder a, GroupOrder b) { return !(a == b); }

  std::string to_string() const {
    return finite_ ? std::to_string(value_) : std::string("infinity");
  }

 private:
  bool finite_;
  std::uint64_t value_;
};

// Multiplies two 64-bit counts, throwing instead of wrapping.
inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_mul_overflow(a, b, &r))
    throw std::overflow_error("group order exceeds 64-bit range");
  return r;
}

}  // namespace dyer
