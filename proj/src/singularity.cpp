#include "ehrq/singularity.hpp"

namespace ehrq {

QuotientType::QuotientType(Int d, Int a, Int b) : d_(std::move(d)) {
  if (d_ < 1) {
    throw InvalidType("quotient order must be positive, got " + d_.get_str());
  }
  a_ = mod_floor(a, d_);
  b_ = mod_floor(b, d_);
  if (gcd(gcd(d_, a_), b_) != 1) {
    throw InvalidType("type (" + d_.get_str() + "; " + a.get_str() + ", " +
                      b.get_str() + ") has gcd(d, a, b) != 1");
  }
}

bool QuotientType::is_normalized() const {
  return gcd(d_, a_) == 1 && gcd(d_, b_) == 1;
}

QuotientType normalize_type(const QuotientType& t) {
  const Int e = gcd(t.d(), t.a());
  const Int f = gcd(t.d(), t.b());
  return QuotientType(t.d() / (e * f), t.a() / e, t.b() / f);
}

NormalizedForm::NormalizedForm(Int p, Int q, Int unit)
    : p_(std::move(p)), q_(std::move(q)), unit_(std::move(unit)) {
  if (p_ < 1) throw InvalidArgs("order p must be positive");
  if (gcd(p_, q_) != 1) {
    throw InvalidArgs("form (p; -1, q) needs gcd(p, q) = 1, got p = " +
                      p_.get_str() + ", q = " + q_.get_str());
  }
}

NormalizedForm to_minus_one_form(const QuotientType& t) {
  if (!t.is_normalized()) {
    throw NotNormalized("type (" + t.d().get_str() + "; " + t.a().get_str() +
                        ", " + t.b().get_str() + ") is not normalized");
  }
  if (t.d() == 1) {
    throw SmoothPoint("order-1 type is a smooth point");
  }
  const Int m = mod_floor(-mod_inverse(t.a(), t.d()), t.d());
  const Int q = mod_floor(m * t.b(), t.d());
  return NormalizedForm(t.d(), q, m);
}

Int count_A(const Int& p, const Int& q, const Int& r) {
  if (p < 1 || q < 1) throw InvalidArgs("p and q must be positive");
  if (gcd(p, q) != 1) throw InvalidArgs("count_A needs gcd(p, q) = 1");
  if (r < 0) throw InvalidArgs("count_A needs r >= 0");
  const Int qr = q * r;
  Int total = 0;
  for (Int i = 1; p * i < qr; ++i) {
    total += (qr - p * i) / q;  // number of j in [1, (qr - pi)/q]
  }
  return total;
}

Rational delta_comb(const Int& p, const Int& q, const Int& r) {
  if (p < 1 || q < 1) throw InvalidArgs("p and q must be positive");
  if (gcd(p, q) != 1) throw InvalidArgs("delta_comb needs gcd(p, q) = 1");
  return Rational(r * (q * r - p - q + 1), 2 * p);
}

CombinatorialInvariants combinatorial_invariants(const Int& p, const Int& q,
                                                 const Int& r) {
  CombinatorialInvariants inv;
  inv.p = p;
  inv.q = q;
  inv.r = r;
  inv.A = count_A(p, q, r);
  inv.delta = delta_comb(p, q, r);
  inv.Delta = Rational(inv.A) - inv.delta;
  return inv;
}

Rational delta_invariant(const NormalizedForm& form, const Int& k) {
  if (form.p() == 1) return Rational(0);
  const Int r = mod_floor(mod_inverse(form.q(), form.p()) * k, form.p());
  return combinatorial_invariants(form.p(), form.q(), r).Delta;
}

PeriodicRational delta_table_for_local_type(const QuotientType& t) {
  if (!t.is_normalized()) {
    throw NotNormalized("correction table needs a normalized type");
  }
  if (t.d() == 1) return PeriodicRational({Rational(0)});
  const NormalizedForm form = to_minus_one_form(t);
  const std::size_t d = to_size(t.d());
  std::vector<Rational> values;
  values.reserve(d);
  for (std::size_t k = 0; k < d; ++k) {
    values.push_back(
        delta_invariant(form, form.transport(Int(static_cast<unsigned long>(k)))));
  }
  return PeriodicRational(std::move(values));
}

Rational delta_at_projective_vertex(const WeightVector& w, int vertex,
                                    const Int& degree) {
  const Int& p = w[vertex];
  if (p == 1) return Rational(0);
  const Int& wn = w[vertex + 1];
  const Int& wnn = w[vertex + 2];
  const Int q = mod_floor(-(mod_inverse(wn, p) * wnn), p);
  const Int r = mod_floor(mod_inverse(wnn, p) * degree, p);
  return Rational(count_A(p, q, r)) - delta_comb(p, q, r);
}

Rational delta_single_blowup(const Int& nu, const Int& d, const Int& p,
                             const Int& q, const Int& e) {
  if (nu < 1 || d < 1 || p < 1 || q < 1 || e < 1) {
    throw InvalidArgs("blow-up data must be positive");
  }
  return Rational(nu * (nu - p - q + e), 2 * d * p * q);
}

LedgerReport ledger_check(const std::vector<GermLedgerEntry>& entries,
                          const QuotientType& local_type) {
  const PeriodicRational table = delta_table_for_local_type(local_type);
  LedgerReport report;
  for (const GermLedgerEntry& entry : entries) {
    LedgerEntryCheck check;
    check.entry = entry;
    if (entry.k < 0 || Int(static_cast<long>(entry.k)) >= local_type.d()) {
      throw InvalidArgs("ledger entry index k = " + std::to_string(entry.k) +
                        " outside [0, d)");
    }
    check.computed_Delta = table.evaluate(Int(static_cast<long>(entry.k)));
    check.declared_matches = entry.Delta == check.computed_Delta;
    if (entry.delta_P && entry.kappa_P) {
      check.identity_checked = true;
      check.identity_holds =
          *entry.delta_P - *entry.kappa_P == check.computed_Delta;
    } else if (entry.delta_P) {
      check.kappa_filled = *entry.delta_P - check.computed_Delta;
    }
    check.pass = check.declared_matches &&
                 (!check.identity_checked || check.identity_holds);
    report.all_pass = report.all_pass && check.pass;
    report.entries.push_back(std::move(check));
  }
  return report;
}

Rational adjunction_genus(const WeightVector& w, const Int& degree,
                          const Rational& kappa_sum) {
  const Int t = degree - w.sum();
  const Rational sections =
      (t < 0) ? Rational(0) : ehrhart_quasipolynomial(w).evaluate(t);
  return sections - kappa_sum;
}

Rational h0_from_genus(const WeightVector&, const Int&, const Rational& genus,
                       const Rational& kappa_sum) {
  return genus + kappa_sum;
}

}  // namespace ehrq
