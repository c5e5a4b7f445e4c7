#include "ehrq/polymod.hpp"

#include <utility>

namespace ehrq {

namespace {

// Dense polynomial over Q without trailing zeros; {} is the zero polynomial.
using Poly = std::vector<Rational>;

void trim(Poly& p) {
  while (!p.empty() && p.back() == Rational(0)) p.pop_back();
}

Poly sub(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

Poly mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      r[i + j] += a[i] * b[j];
    }
  }
  trim(r);
  return r;
}

// r := r mod d; returns the quotient. d must be nonzero.
Poly divmod(Poly& r, const Poly& d) {
  Poly q;
  if (r.size() >= d.size()) q.assign(r.size() - d.size() + 1, Rational(0));
  while (r.size() >= d.size()) {
    const Rational factor = r.back() / d.back();
    const std::size_t shift = r.size() - d.size();
    q[shift] = factor;
    for (std::size_t i = 0; i < d.size(); ++i) {
      r[shift + i] -= factor * d[i];
    }
    trim(r);
  }
  return q;
}

Poly all_ones(std::size_t order) { return Poly(order, Rational(1)); }

}  // namespace

PolyMod::PolyMod(std::size_t order, std::vector<Rational> coef)
    : order_(order), coef_(std::move(coef)) {}

PolyMod PolyMod::zero(std::size_t order) {
  if (order < 1) throw InvalidArgs("modulus order must be positive");
  return PolyMod(order, std::vector<Rational>(order - 1, Rational(0)));
}

PolyMod PolyMod::one(std::size_t order) {
  PolyMod r = zero(order);
  if (order > 1) r.coef_[0] = Rational(1);
  return r;
}

PolyMod PolyMod::from_coefficients(std::size_t order, std::vector<Rational> coef) {
  if (order < 1) throw InvalidArgs("modulus order must be positive");
  if (coef.size() + 1 != order) {
    throw InvalidArgs("coefficient list must have length order - 1");
  }
  return PolyMod(order, std::move(coef));
}

PolyMod PolyMod::monomial(std::size_t order, const Int& exponent) {
  PolyMod r = zero(order);
  if (order == 1) return r;
  const std::size_t e = to_size(mod_floor(exponent, Int(static_cast<unsigned long>(order))));
  if (e < order - 1) {
    r.coef_[e] = Rational(1);
  } else {
    for (auto& c : r.coef_) c = Rational(-1);
  }
  return r;
}

PolyMod PolyMod::operator+(const PolyMod& o) const {
  if (order_ != o.order_) throw InvalidArgs("mixed modulus orders");
  PolyMod r = *this;
  for (std::size_t i = 0; i < coef_.size(); ++i) r.coef_[i] += o.coef_[i];
  return r;
}

PolyMod PolyMod::operator-(const PolyMod& o) const {
  if (order_ != o.order_) throw InvalidArgs("mixed modulus orders");
  PolyMod r = *this;
  for (std::size_t i = 0; i < coef_.size(); ++i) r.coef_[i] -= o.coef_[i];
  return r;
}

PolyMod PolyMod::operator*(const PolyMod& o) const {
  if (order_ != o.order_) throw InvalidArgs("mixed modulus orders");
  const std::size_t b = order_;
  if (b == 1) return *this;
  // Convolve with exponents wrapped mod b, then fold the x^{b-1} bucket.
  std::vector<Rational> acc(b, Rational(0));
  for (std::size_t i = 0; i < coef_.size(); ++i) {
    if (coef_[i] == Rational(0)) continue;
    for (std::size_t j = 0; j < o.coef_.size(); ++j) {
      std::size_t e = i + j;
      if (e >= b) e -= b;
      acc[e] += coef_[i] * o.coef_[j];
    }
  }
  std::vector<Rational> out(acc.begin(), acc.begin() + (b - 1));
  const Rational& top = acc[b - 1];
  if (top != Rational(0)) {
    for (auto& c : out) c -= top;
  }
  return PolyMod(b, std::move(out));
}

PolyMod PolyMod::times_x() const {
  const std::size_t b = order_;
  if (b == 1) return *this;
  std::vector<Rational> out(b - 1, Rational(0));
  const Rational& top = coef_[b - 2];
  out[0] = -top;
  for (std::size_t j = 1; j < b - 1; ++j) out[j] = coef_[j - 1] - top;
  return PolyMod(b, std::move(out));
}

PolyMod PolyMod::inverse() const {
  const std::size_t b = order_;
  if (b == 1) return *this;  // zero ring
  Poly p = coef_;
  trim(p);
  if (p.empty()) throw NotInvertible("zero residue has no inverse");

  // Extended Euclid over Q[x] against the all-ones modulus.
  Poly old_r = all_ones(b), r = p;
  Poly old_t, t = {Rational(1)};
  while (!r.empty()) {
    Poly rem = old_r;
    Poly q = divmod(rem, r);
    old_r = std::exchange(r, std::move(rem));
    Poly new_t = sub(old_t, mul(q, t));
    old_t = std::exchange(t, std::move(new_t));
  }
  if (old_r.size() != 1) {
    throw NotInvertible("residue shares a factor with the modulus");
  }
  const Rational scale = Rational(1) / old_r[0];
  for (auto& c : old_t) c *= scale;
  divmod(old_t, all_ones(b));
  old_t.resize(b - 1, Rational(0));
  return PolyMod(b, std::move(old_t));
}

Rational PolyMod::sum_over_roots() const {
  if (order_ == 1) return Rational(0);
  Rational total = coef_[0] * Rational(Int(static_cast<unsigned long>(order_)) - 1);
  for (std::size_t j = 1; j < coef_.size(); ++j) total -= coef_[j];
  return total;
}

}  // namespace ehrq
