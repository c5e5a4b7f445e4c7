#pragma once

#include <cstddef>
#include <vector>

#include "ehrq/rational.hpp"

namespace ehrq {

// Residue of a univariate rational polynomial modulo 1 + x + ... + x^{b-1}.
//
// The roots of the modulus are exactly the nontrivial b-th roots of unity, so
// one residue carries an evaluation at all of them simultaneously. Working
// identities: x^b == 1 and x^{b-1} == -(1 + x + ... + x^{b-2}).
class PolyMod {
 public:
  static PolyMod zero(std::size_t order);
  static PolyMod one(std::size_t order);
  // x^(e mod b), reduced.
  static PolyMod monomial(std::size_t order, const Int& exponent);
  // Residue with the given coefficients of x^0 .. x^{b-2}.
  static PolyMod from_coefficients(std::size_t order, std::vector<Rational> coef);

  std::size_t order() const { return order_; }
  // Coefficients of x^0 .. x^{b-2}.
  const std::vector<Rational>& coefficients() const { return coef_; }

  PolyMod operator+(const PolyMod& o) const;
  PolyMod operator-(const PolyMod& o) const;
  PolyMod operator*(const PolyMod& o) const;

  // Multiplication by x; cheaper than the general product.
  PolyMod times_x() const;

  // Throws NotInvertible when the residue shares a factor with the modulus.
  PolyMod inverse() const;

  // Sum of the evaluations at every root of the modulus: the power sums of
  // those roots are b-1 for exponent 0 and -1 otherwise.
  Rational sum_over_roots() const;

  bool operator==(const PolyMod& o) const = default;

 private:
  PolyMod(std::size_t order, std::vector<Rational> coef);

  std::size_t order_;
  std::vector<Rational> coef_;
};

}  // namespace ehrq
