#pragma once

#include <vector>

#include "ehrq/periodic.hpp"
#include "ehrq/rational.hpp"

namespace ehrq {

// Classical Dedekind sum s(a,b) = sum_{j=1}^{b-1} ((ja/b))((j/b)), evaluated
// by direct summation. Requires gcd(a,b) = 1, b >= 1; the b = 1 sum is empty.
Rational dedekind_sum_naive(const Int& a, const Int& b);

// Same value as dedekind_sum_naive on every input, computed by Euclidean
// descent through the reciprocity law
//   s(a,b) = -s(b,a) - 1/4 + (1 + a^2 + b^2)/(12ab)
// together with s(a mod b, b) = s(a,b); O(log b) arithmetic steps.
Rational dedekind_sum_fast(const Int& a, const Int& b);

// Fourier-Dedekind sum
//   s_n(a_1,...,a_m; b) = (1/b) sum_{k=1}^{b-1} xi^{kn} / prod_i (1 - xi^{k a_i})
// over a primitive b-th root of unity xi, evaluated exactly in the quotient
// ring of rational polynomials modulo 1 + x + ... + x^{b-1}. Requires
// gcd(a_i, b) = 1 for every a_i; returns 0 when b = 1.
Rational fourier_dedekind_sum(const Int& n, const std::vector<Int>& a_list,
                              const Int& b);

// All b values s_n(a_list; b) for n = 0..b-1 as a period-b function (one ring
// inversion instead of b). table.evaluate(n) == fourier_dedekind_sum(n, ...).
PeriodicRational fourier_dedekind_table(const std::vector<Int>& a_list,
                                        const Int& b);

}  // namespace ehrq
