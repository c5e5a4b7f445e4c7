#include "ehrq/rational.hpp"

#include <cctype>
#include <ostream>

namespace ehrq {

Int gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Int mod_floor(const Int& a, const Int& m) {
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

Int mod_inverse(const Int& a, const Int& m) {
  if (m < 2) {
    throw NotInvertible("mod_inverse: modulus must be >= 2, got " + m.get_str());
  }
  Int inv;
  if (mpz_invert(inv.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0) {
    throw NotInvertible("mod_inverse: gcd(" + a.get_str() + ", " + m.get_str() +
                        ") != 1");
  }
  return inv;  // mpz_invert yields the least nonnegative representative
}

std::size_t to_size(const Int& n) {
  if (n < 0 || !n.fits_ulong_p()) {
    throw InvalidArgs("value out of range for an in-memory table: " + n.get_str());
  }
  return static_cast<std::size_t>(n.get_ui());
}

Rational::Rational(const Int& num, const Int& den) {
  if (den == 0) {
    throw DivisionByZero("rational with zero denominator");
  }
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  const auto malformed = [&] {
    return InvalidArgs("malformed rational: \"" + std::string(text) + "\"");
  };
  std::size_t i = 0;
  if (i < text.size() && text[i] == '-') ++i;
  std::size_t num_start = i;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
  if (i == num_start) throw malformed();
  Int num(std::string(text.substr(0, i)), 10);
  Int den(1);
  if (i < text.size()) {
    if (text[i] != '/') throw malformed();
    ++i;
    std::size_t den_start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == den_start || i != text.size()) throw malformed();
    den = Int(std::string(text.substr(den_start)), 10);
    if (den == 0) throw malformed();
  }
  return Rational(num, den);
}

Int Rational::floor() const {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
  return q;
}

Rational Rational::operator-() const {
  Rational r;
  r.q_ = -q_;
  return r;
}

Rational Rational::operator+(const Rational& o) const {
  Rational r;
  r.q_ = q_ + o.q_;
  return r;
}

Rational Rational::operator-(const Rational& o) const {
  Rational r;
  r.q_ = q_ - o.q_;
  return r;
}

Rational Rational::operator*(const Rational& o) const {
  Rational r;
  r.q_ = q_ * o.q_;
  return r;
}

Rational Rational::operator/(const Rational& o) const {
  if (o.q_ == 0) {
    throw DivisionByZero("rational division by zero");
  }
  Rational r;
  r.q_ = q_ / o.q_;
  return r;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

Rational sawtooth(const Rational& x) {
  if (x.is_integer()) return Rational(0);
  return x - Rational(x.floor()) - Rational(1, 2);
}

}  // namespace ehrq
