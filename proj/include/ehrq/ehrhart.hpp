#pragma once

#include <array>

#include "ehrq/dedekind.hpp"
#include "ehrq/periodic.hpp"
#include "ehrq/rational.hpp"

namespace ehrq {

/// Triple of pairwise coprime positive weights (w0, w1, w2).
class WeightVector {
 public:
  WeightVector(Int w0, Int w1, Int w2);

  // Cyclic access: operator[](3) == operator[](0).
  const Int& operator[](int i) const { return w_[((i % 3) + 3) % 3]; }
  Int product() const { return w_[0] * w_[1] * w_[2]; }  // w-bar
  Int sum() const { return w_[0] + w_[1] + w_[2]; }      // |w|

 private:
  std::array<Int, 3> w_;
};

// Result of a lattice-point enumeration. A negative dilation is rejected by
// reporting count 0 with the flag set.
struct Count {
  Int value{0};
  bool negative_dilation{false};
};

// #{(x,y) in Z^2, x,y >= 0 : ax + by <= t} by row enumeration.
// Requires gcd(a,b) = 1. The brute-force oracle for the 2d closed form.
Count count_triangle_le(const Int& a, const Int& b, const Int& t);

// #{(x,y,z) in Z^3 nonnegative : ax + by + cz = t} for pairwise coprime
// a,b,c, enumerated per z-slice with residue-stepped counting of ax + by = s.
// The brute-force oracle for everything downstream.
Count count_simplex_eq(const Int& a, const Int& b, const Int& c, const Int& t);

// The quadratic part of the closed-form denumerant:
//   t^2/(2abc) + (t/2)(1/ab + 1/ac + 1/bc)
//     + (3(ab+ac+bc) + a^2+b^2+c^2)/(12abc).
Rational poly_part(const Int& a, const Int& b, const Int& c, const Int& t);

// Closed form p_{a,b,c}(t) = poly_part + the three Fourier-Dedekind terms
// s_{-t}(a,b;c) + s_{-t}(b,c;a) + s_{-t}(a,c;b). The Fourier-Dedekind tables
// are built once per (a,b,c), so a dilation sweep costs O(1) rational ops per
// point after construction.
class DenumerantFormula {
 public:
  DenumerantFormula(Int a, Int b, Int c);
  Rational evaluate(const Int& t) const;

 private:
  Int a_, b_, c_;
  PeriodicRational fds_a_, fds_b_, fds_c_;  // s_n(..., x) indexed by n
};

// p_{a,b,1}(t): equals count_triangle_le(a, b, t) for every t >= 0, and is
// defined for every integer t by the formulas as written.
Rational popoviciu_2d(const Int& a, const Int& b, const Int& t);

// p_{a,b,c}(t): equals count_simplex_eq(a, b, c, t) for every t >= 0.
Rational popoviciu_3d(const Int& a, const Int& b, const Int& c, const Int& t);

// t(t - |w|)/(2 w-bar) + 1.
Rational virtual_genus(const WeightVector& w, const Int& t);

// Degree-2 quasi-polynomial with periodic rational coefficients;
// coefficient(i) multiplies d^i.
class QuasiPolynomial {
 public:
  QuasiPolynomial(PeriodicRational c0, PeriodicRational c1, PeriodicRational c2);

  const PeriodicRational& coefficient(int i) const { return coef_.at(i); }
  Rational evaluate(const Int& d) const;

 private:
  std::array<PeriodicRational, 3> coef_;
};

// The lattice-point counter of the weighted triangle
//   {x,y,z >= 0, w0 x + w1 y + w2 z = d}
// as a closed form: quadratic and linear coefficients 1/(2 w-bar) and
// |w|/(2 w-bar), constant term of period w-bar equal to
// 1 - sum of the per-vertex corrections at d + |w|. O(w-bar) to build,
// O(1) rational ops per evaluation.
QuasiPolynomial ehrhart_quasipolynomial(const WeightVector& w);

// Count at the dilation k*w-bar: k(k*w-bar + |w|)/2 + 1. Requires k >= 0.
Rational ehrhart_at_multiple(const WeightVector& w, const Int& k);

}  // namespace ehrq
