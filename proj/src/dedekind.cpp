#include "ehrq/dedekind.hpp"

#include "ehrq/polymod.hpp"

namespace ehrq {

namespace {

void require_coprime(const Int& a, const Int& b) {
  if (b < 1) {
    throw InvalidArgs("dedekind sum: modulus must be positive, got " + b.get_str());
  }
  if (gcd(a, b) != 1) {
    throw InvalidArgs("dedekind sum: gcd(" + a.get_str() + ", " + b.get_str() +
                      ") != 1");
  }
}

Int int128_to_int(__int128 v) {
  const bool neg = v < 0;
  unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v)
                            : static_cast<unsigned __int128>(v);
  Int hi(static_cast<unsigned long>(u >> 64));
  Int r = (hi << 64) + Int(static_cast<unsigned long>(u));
  return neg ? Int(-r) : r;
}

void require_fds_args(const std::vector<Int>& a_list, const Int& b) {
  if (b < 1) {
    throw InvalidArgs("fourier-dedekind sum: modulus must be positive");
  }
  if (a_list.empty()) {
    throw InvalidArgs("fourier-dedekind sum: empty coefficient list");
  }
  for (const Int& a : a_list) {
    if (gcd(a, b) != 1) {
      throw InvalidArgs("fourier-dedekind sum: gcd(" + a.get_str() + ", " +
                        b.get_str() + ") != 1 makes a denominator factor vanish");
    }
  }
}

PolyMod denominator_product(std::size_t order, const std::vector<Int>& a_list) {
  PolyMod denom = PolyMod::one(order);
  for (const Int& a : a_list) {
    denom = denom * (PolyMod::one(order) - PolyMod::monomial(order, a));
  }
  return denom;
}

}  // namespace

Rational dedekind_sum_naive(const Int& a, const Int& b) {
  require_coprime(a, b);
  if (b == 1) return Rational(0);

  // For 0 < j < b and gcd(a,b) = 1 neither j/b nor ja/b is an integer, so
  // each term is ((2(ja mod b) - b)/(2b)) * ((2j - b)/(2b)); the whole sum
  // sits over the common denominator 4b^2.
  if (b < Int(1) << 31) {
    const long bl = b.get_si();
    const long al = mod_floor(a, b).get_si();
    __int128 acc = 0;
    long r = 0;
    for (long j = 1; j < bl; ++j) {
      r += al;
      if (r >= bl) r -= bl;
      acc += static_cast<__int128>(2 * r - bl) * (2 * j - bl);
    }
    return Rational(int128_to_int(acc), 4 * b * b);
  }

  Int acc = 0;
  Int r = 0;
  const Int ared = mod_floor(a, b);
  for (Int j = 1; j < b; ++j) {
    r += ared;
    if (r >= b) r -= b;
    acc += (2 * r - b) * (2 * j - b);
  }
  return Rational(acc, 4 * b * b);
}

Rational dedekind_sum_fast(const Int& a_in, const Int& b_in) {
  require_coprime(a_in, b_in);
  Int a = mod_floor(a_in, b_in);
  Int b = b_in;
  Rational total(0);
  int sign = 1;
  while (true) {
    if (b == 1) return total;
    if (b < 64) {
      const Rational base = dedekind_sum_naive(a, b);
      return sign > 0 ? total + base : total - base;
    }
    // 1 <= a < b here since gcd(a,b) = 1.
    const Rational flip =
        Rational(-1, 4) + Rational(1 + a * a + b * b, 12 * a * b);
    total = sign > 0 ? total + flip : total - flip;
    sign = -sign;
    Int next = mod_floor(b, a);
    b = a;
    a = next;
  }
}

Rational fourier_dedekind_sum(const Int& n, const std::vector<Int>& a_list,
                              const Int& b) {
  require_fds_args(a_list, b);
  if (b == 1) return Rational(0);
  const std::size_t order = to_size(b);
  const PolyMod residue = denominator_product(order, a_list).inverse() *
                          PolyMod::monomial(order, n);
  return residue.sum_over_roots() / Rational(b);
}

PeriodicRational fourier_dedekind_table(const std::vector<Int>& a_list,
                                        const Int& b) {
  require_fds_args(a_list, b);
  if (b == 1) return PeriodicRational({Rational(0)});
  const std::size_t order = to_size(b);
  // One inversion; the numerator x^n then steps through the period.
  PolyMod residue = denominator_product(order, a_list).inverse();
  std::vector<Rational> values;
  values.reserve(order);
  values.push_back(residue.sum_over_roots() / Rational(b));
  for (std::size_t n = 1; n < order; ++n) {
    residue = residue.times_x();
    values.push_back(residue.sum_over_roots() / Rational(b));
  }
  return PeriodicRational(std::move(values));
}

}  // namespace ehrq
