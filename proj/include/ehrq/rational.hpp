#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>

#include "ehrq/errors.hpp"

namespace ehrq {

// Arbitrary-precision integer. All counting and modular work goes through
// this type; machine ints appear only in hot loops with proven bounds.
using Int = mpz_class;

Int gcd(const Int& a, const Int& b);

// Least nonnegative representative of a mod m (m > 0).
Int mod_floor(const Int& a, const Int& m);

// x with a*x == 1 (mod m), 1 <= x <= m-1. Requires m >= 2 and gcd(a,m) = 1,
// otherwise throws NotInvertible.
Int mod_inverse(const Int& a, const Int& m);

// Converts n to size_t, throwing InvalidArgs when it does not fit.
std::size_t to_size(const Int& n);

/// Exact rational scalar, always in lowest terms with positive denominator.
class Rational {
 public:
  Rational() : q_(0) {}
  Rational(int n) : q_(n) {}
  Rational(long n) : q_(n) {}
  Rational(const Int& n) : q_(n) {}
  Rational(const Int& num, const Int& den);

  // Accepts "n" or "n/d" (d > 0 after sign normalization); canonicalizes.
  static Rational parse(std::string_view text);

  Int numerator() const { return q_.get_num(); }
  Int denominator() const { return q_.get_den(); }
  bool is_integer() const { return q_.get_den() == 1; }
  Int floor() const;

  // "n/d" in lowest terms, "n" alone when d = 1.
  std::string str() const { return q_.get_str(); }

  Rational operator-() const;
  Rational operator+(const Rational& o) const;
  Rational operator-(const Rational& o) const;
  Rational operator*(const Rational& o) const;
  Rational operator/(const Rational& o) const;  // throws DivisionByZero
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  bool operator==(const Rational& o) const { return q_ == o.q_; }
  bool operator!=(const Rational& o) const { return q_ != o.q_; }
  bool operator<(const Rational& o) const { return q_ < o.q_; }
  bool operator<=(const Rational& o) const { return q_ <= o.q_; }
  bool operator>(const Rational& o) const { return q_ > o.q_; }
  bool operator>=(const Rational& o) const { return q_ >= o.q_; }

  double to_double() const { return q_.get_d(); }

 private:
  mpq_class q_;  // kept canonical
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

// ((x)) = x - floor(x) - 1/2 for non-integer x, 0 for integers.
// Odd and 1-periodic.
Rational sawtooth(const Rational& x);

}  // namespace ehrq
