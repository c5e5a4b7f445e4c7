#include "ehrq/periodic.hpp"

#include <numeric>

namespace ehrq {

PeriodicRational::PeriodicRational(std::vector<Rational> values)
    : values_(std::move(values)) {
  if (values_.empty()) {
    throw InvalidArgs("periodic function needs a positive period");
  }
}

const Rational& PeriodicRational::evaluate(const Int& n) const {
  Int idx = mod_floor(n, Int(static_cast<unsigned long>(values_.size())));
  return values_[to_size(idx)];
}

PeriodicRational PeriodicRational::canonicalize() const {
  const std::size_t p = values_.size();
  for (std::size_t m = 1; m < p; ++m) {
    if (p % m != 0) continue;
    bool ok = true;
    for (std::size_t i = m; i < p && ok; ++i) {
      ok = values_[i] == values_[i % m];
    }
    if (ok) {
      return PeriodicRational(
          std::vector<Rational>(values_.begin(), values_.begin() + m));
    }
  }
  return *this;
}

bool periodic_equal(const PeriodicRational& f, const PeriodicRational& g) {
  const std::size_t n = std::lcm(f.period(), g.period());
  for (std::size_t i = 0; i < n; ++i) {
    if (f.values()[i % f.period()] != g.values()[i % g.period()]) return false;
  }
  return true;
}

}  // namespace ehrq
