#include "ehrq/ehrhart.hpp"

#include "ehrq/singularity.hpp"

namespace ehrq {

namespace {

void require_positive_coprime(const Int& a, const Int& b) {
  if (a < 1 || b < 1) throw InvalidArgs("parts must be positive integers");
  if (gcd(a, b) != 1) {
    throw InvalidArgs("parts " + a.get_str() + " and " + b.get_str() +
                      " are not coprime");
  }
}

void require_positive_pairwise_coprime(const Int& a, const Int& b, const Int& c) {
  require_positive_coprime(a, b);
  require_positive_coprime(a, c);
  require_positive_coprime(b, c);
}

}  // namespace

WeightVector::WeightVector(Int w0, Int w1, Int w2) : w_{w0, w1, w2} {
  for (int i = 0; i < 3; ++i) {
    if (w_[i] < 1) {
      throw InvalidArgs("weight w" + std::to_string(i) + " = " + w_[i].get_str() +
                        " must be a positive integer");
    }
  }
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      Int g = gcd(w_[i], w_[j]);
      if (g != 1) {
        throw InvalidArgs("weights must be pairwise coprime: gcd(w" +
                          std::to_string(i) + " = " + w_[i].get_str() + ", w" +
                          std::to_string(j) + " = " + w_[j].get_str() + ") = " +
                          g.get_str());
      }
    }
  }
}

Count count_triangle_le(const Int& a, const Int& b, const Int& t) {
  require_positive_coprime(a, b);
  if (t < 0) return {Int(0), true};
  Int total = 0;
  for (Int y = 0; b * y <= t; ++y) {
    total += (t - b * y) / a + 1;
  }
  return {total, false};
}

Count count_simplex_eq(const Int& a, const Int& b, const Int& c, const Int& t) {
  require_positive_pairwise_coprime(a, b, c);
  if (t < 0) return {Int(0), true};
  const Int ab = a * b;
  const Int ainv = (b == 1) ? Int(0) : mod_inverse(a, b);
  Int total = 0;
  for (Int z = 0; c * z <= t; ++z) {
    const Int s = t - c * z;
    // Solutions of ax + by = s: x runs over one residue class mod b.
    const Int x0 = (b == 1) ? Int(0) : mod_floor(ainv * mod_floor(s, b), b);
    const Int ax0 = a * x0;
    if (ax0 <= s) total += (s - ax0) / ab + 1;
  }
  return {total, false};
}

Rational poly_part(const Int& a, const Int& b, const Int& c, const Int& t) {
  require_positive_pairwise_coprime(a, b, c);
  const Int abc = a * b * c;
  return Rational(t * t, 2 * abc) + Rational(t * (a + b + c), 2 * abc) +
         Rational(3 * (a * b + a * c + b * c) + a * a + b * b + c * c, 12 * abc);
}

DenumerantFormula::DenumerantFormula(Int a, Int b, Int c)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {
  require_positive_pairwise_coprime(a_, b_, c_);
  fds_a_ = fourier_dedekind_table({b_, c_}, a_);
  fds_b_ = fourier_dedekind_table({a_, c_}, b_);
  fds_c_ = fourier_dedekind_table({a_, b_}, c_);
}

Rational DenumerantFormula::evaluate(const Int& t) const {
  return poly_part(a_, b_, c_, t) + fds_a_.evaluate(-t) + fds_b_.evaluate(-t) +
         fds_c_.evaluate(-t);
}

Rational popoviciu_2d(const Int& a, const Int& b, const Int& t) {
  return DenumerantFormula(a, b, 1).evaluate(t);
}

Rational popoviciu_3d(const Int& a, const Int& b, const Int& c, const Int& t) {
  return DenumerantFormula(a, b, c).evaluate(t);
}

Rational virtual_genus(const WeightVector& w, const Int& t) {
  return Rational(t * (t - w.sum()), 2 * w.product()) + Rational(1);
}

QuasiPolynomial::QuasiPolynomial(PeriodicRational c0, PeriodicRational c1,
                                 PeriodicRational c2)
    : coef_{std::move(c0), std::move(c1), std::move(c2)} {}

Rational QuasiPolynomial::evaluate(const Int& d) const {
  return coef_[0].evaluate(d) + coef_[1].evaluate(d) * Rational(d) +
         coef_[2].evaluate(d) * Rational(d * d);
}

QuasiPolynomial ehrhart_quasipolynomial(const WeightVector& w) {
  const Int wbar = w.product();
  const Int wsum = w.sum();

  // Per-vertex correction tables, one per weight > 1, indexed by the degree.
  std::vector<PeriodicRational> vertex_tables;
  for (int i = 0; i < 3; ++i) {
    if (w[i] > 1) {
      vertex_tables.push_back(
          delta_table_for_local_type(QuotientType(w[i], w[i + 1], w[i + 2])));
    }
  }

  const std::size_t period = to_size(wbar);
  std::vector<Rational> a0;
  a0.reserve(period);
  for (std::size_t d = 0; d < period; ++d) {
    const Int degree = Int(static_cast<unsigned long>(d)) + wsum;
    Rational value(1);
    for (const auto& table : vertex_tables) {
      value -= table.evaluate(degree);
    }
    a0.push_back(std::move(value));
  }

  return QuasiPolynomial(PeriodicRational(std::move(a0)),
                         PeriodicRational({Rational(wsum, 2 * wbar)}),
                         PeriodicRational({Rational(1, 2 * wbar)}));
}

Rational ehrhart_at_multiple(const WeightVector& w, const Int& k) {
  if (k < 0) throw InvalidArgs("multiple k must be nonnegative");
  return Rational(k * (k * w.product() + w.sum()), 2) + Rational(1);
}

}  // namespace ehrq
