#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ehrq/ehrhart.hpp"
#include "ehrq/periodic.hpp"
#include "ehrq/rational.hpp"

namespace ehrq {

// Cyclic quotient surface singularity datum (d; a, b): the plane divided by
// the order-d cyclic group acting with weights (a, b). Requires
// gcd(d, a, b) = 1; a and b are stored as least nonnegative residues mod d.
class QuotientType {
 public:
  QuotientType(Int d, Int a, Int b);

  const Int& d() const { return d_; }
  const Int& a() const { return a_; }
  const Int& b() const { return b_; }

  // gcd(d,a) = gcd(d,b) = 1.
  bool is_normalized() const;

 private:
  Int d_, a_, b_;
};

// (d; a, b) -> (d/((d,a)(d,b)); a/(d,a), b/(d,b)). Idempotent on normalized
// input; the result is always normalized.
QuotientType normalize_type(const QuotientType& t);

// Presentation X(p; -1, q) of a normalized type, together with the rescaling
// unit m that reached it: (m*a, m*b) == (-1, q) mod p. A germ index k in the
// original presentation corresponds to m*k mod p here.
class NormalizedForm {
 public:
  NormalizedForm(Int p, Int q, Int unit);

  const Int& p() const { return p_; }
  const Int& q() const { return q_; }
  const Int& unit() const { return unit_; }

  // Index transport original -> (-1, q) presentation: k |-> m*k mod p.
  Int transport(const Int& k) const { return mod_floor(unit_ * k, p_); }

 private:
  Int p_, q_, unit_;
};

// Requires a normalized type with d >= 2 (SmoothPoint for d = 1,
// NotNormalized otherwise).
NormalizedForm to_minus_one_form(const QuotientType& t);

// #{(i,j) in Z^2 : pi + qj <= qr, i >= 1, j >= 1} by row enumeration.
// Requires gcd(p,q) = 1, r >= 0.
Int count_A(const Int& p, const Int& q, const Int& r);

// r(qr - p - q + 1)/(2p), the smooth-model count the lattice count above is
// measured against; any integer r is accepted, the formula as written.
Rational delta_comb(const Int& p, const Int& q, const Int& r);

// The full bundle at one residue: the lattice count A, the smooth-model value
// delta, and their difference Delta = A - delta, which only depends on
// r mod p.
struct CombinatorialInvariants {
  Int p, q, r;
  Int A;
  Rational delta;
  Rational Delta;
};

CombinatorialInvariants combinatorial_invariants(const Int& p, const Int& q,
                                                 const Int& r);

// Correction invariant of X(p; -1, q) at index k:
//   count_A(p, q, r) - delta_comb(p, q, r)  with  r = q^{-1} k mod p.
// Periodic in k of period p; 0 when p = 1.
Rational delta_invariant(const NormalizedForm& form, const Int& k);

// Period-d table of the correction invariant indexed by the local degree in
// the original presentation (d; a, b); the unit transport is applied
// internally. d = 1 gives the constant 0.
PeriodicRational delta_table_for_local_type(const QuotientType& t);

// Correction at the coordinate vertex `vertex` of the weighted plane for a
// curve of the given degree: local type X(w_i; w_{i+1}, w_{i+2}) presented as
// X(w_i; -1, q_i) with q_i = -w_{i+1}^{-1} w_{i+2} mod w_i, evaluated at
// r_i = w_{i+2}^{-1} degree mod w_i. Zero when w_i = 1.
Rational delta_at_projective_vertex(const WeightVector& w, int vertex,
                                    const Int& degree);

// One weighted blow-up's contribution to the delta invariant of a germ:
//   nu(nu - p - q + e) / (2dpq)
// for a (p,q)-blow-up at a point of order d, multiplicity nu, and e the
// index of the exceptional divisor.
Rational delta_single_blowup(const Int& nu, const Int& d, const Int& p,
                             const Int& q, const Int& e);

// One row of a local-invariant ledger at a quotient point: the correction
// Delta at local degree k, optionally with the germ's delta invariant, its
// adjunction-condition count kappa, and informational data.
struct GermLedgerEntry {
  long long k = 0;
  Rational Delta;
  std::optional<Rational> delta_P;
  std::optional<Rational> kappa_P;
  std::optional<long long> branches;
  std::string equation;
  std::string point_label;
};

struct LedgerEntryCheck {
  GermLedgerEntry entry;
  Rational computed_Delta;              // from delta_table_for_local_type
  bool declared_matches = false;        // entry.Delta == computed_Delta
  bool identity_checked = false;        // both delta_P and kappa_P present
  bool identity_holds = false;          // delta_P - kappa_P == computed_Delta
  std::optional<Rational> kappa_filled; // delta_P - Delta when kappa absent
  bool pass = false;
};

struct LedgerReport {
  std::vector<LedgerEntryCheck> entries;
  bool all_pass = true;
};

// Checks Delta(k) = delta - kappa per entry against the type's correction
// table, fills kappa = delta - Delta where only delta is given. Inconsistent
// entries are reported as failures, never thrown.
LedgerReport ledger_check(const std::vector<GermLedgerEntry>& entries,
                          const QuotientType& local_type);

// Genus of a degree-`degree` curve from the count of global sections and the
// total adjunction-condition count: count(degree - |w|) - kappa_sum, where a
// negative dilation contributes 0.
Rational adjunction_genus(const WeightVector& w, const Int& degree,
                          const Rational& kappa_sum);

// Inverse direction: genus + kappa_sum, which must reproduce the count.
Rational h0_from_genus(const WeightVector& w, const Int& degree,
                       const Rational& genus, const Rational& kappa_sum);

}  // namespace ehrq
