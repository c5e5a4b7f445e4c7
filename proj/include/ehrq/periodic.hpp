#pragma once

#include <cstddef>
#include <vector>

#include "ehrq/rational.hpp"

namespace ehrq {

// A function Z -> Q of finite period, stored as the value list of one period.
// The declared period is kept as constructed; reduction to the minimal period
// is the explicit canonicalize() step, never automatic.
class PeriodicRational {
 public:
  PeriodicRational() : values_(1) {}
  explicit PeriodicRational(std::vector<Rational> values);

  std::size_t period() const { return values_.size(); }
  const std::vector<Rational>& values() const { return values_; }

  // values[n mod period], least nonnegative representative.
  const Rational& evaluate(const Int& n) const;
  const Rational& operator()(const Int& n) const { return evaluate(n); }

  // The unique representation whose period is the smallest divisor of the
  // stored period describing the same function.
  PeriodicRational canonicalize() const;

  // Representation equality (same period and value list). Function equality
  // is periodic_equal.
  bool operator==(const PeriodicRational& o) const = default;

 private:
  std::vector<Rational> values_;
};

// True iff f and g agree as functions Z -> Q (compared on lcm of periods).
bool periodic_equal(const PeriodicRational& f, const PeriodicRational& g);

}  // namespace ehrq
