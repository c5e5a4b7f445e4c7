#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <numeric>

#include "ehrq/json_io.hpp"
#include "ehrq/singularity.hpp"

using namespace ehrq;

namespace {

bool coprime(long a, long b) { return std::gcd(a, b) == 1; }

PeriodicRational table(long d, long a, long b) {
  return delta_table_for_local_type(QuotientType(d, a, b));
}

}  // namespace

TEST_CASE("quotient type construction and normalization") {
  const QuotientType t(7, 2, 3);
  CHECK(t.is_normalized());
  CHECK(normalize_type(t).d() == 7);

  const QuotientType u(4, 2, 1);
  CHECK(!u.is_normalized());
  const QuotientType un = normalize_type(u);
  CHECK(un.d() == 2);
  CHECK(un.a() == 1);
  CHECK(un.b() == 1);
  CHECK(un.is_normalized());

  const QuotientType smooth(1, 0, 0);
  CHECK(smooth.is_normalized());
  CHECK(normalize_type(smooth).d() == 1);

  CHECK_THROWS_AS(QuotientType(4, 2, 2), InvalidType);
  CHECK_THROWS_AS(QuotientType(0, 1, 1), InvalidType);

  // negative entries are reduced mod d
  const QuotientType reduced(7, -1, 2);
  CHECK(reduced.a() == 6);
}

TEST_CASE("normalization is idempotent and always lands on a normalized type") {
  for (long d = 1; d <= 30; ++d) {
    for (long a = 0; a < d; ++a) {
      for (long b = 0; b < d; ++b) {
        if (std::gcd(std::gcd(d, a), b) != 1) continue;
        const QuotientType n = normalize_type(QuotientType(d, a, b));
        CHECK(n.is_normalized());
        const QuotientType nn = normalize_type(n);
        CHECK(nn.d() == n.d());
        CHECK(nn.a() == n.a());
        CHECK(nn.b() == n.b());
      }
    }
  }
}

TEST_CASE("presentation with first weight -1") {
  const NormalizedForm f = to_minus_one_form(QuotientType(7, 2, 3));
  CHECK(f.p() == 7);
  CHECK(f.unit() == 3);  // 2*3 = 6 = -1 mod 7
  CHECK(f.q() == 2);
  CHECK(mod_floor(f.unit() * 2, 7) == 6);  // (m*a, m*b) = (-1, q)
  CHECK(mod_floor(f.unit() * 3, 7) == f.q());

  const NormalizedForm g = to_minus_one_form(QuotientType(2, 1, 1));
  CHECK(g.p() == 2);
  CHECK(g.unit() == 1);
  CHECK(g.q() == 1);

  const NormalizedForm h = to_minus_one_form(QuotientType(3, 1, 2));
  CHECK(h.p() == 3);
  CHECK(h.unit() == 2);
  CHECK(h.q() == 1);

  CHECK_THROWS_AS(to_minus_one_form(QuotientType(4, 2, 1)), NotNormalized);
  CHECK_THROWS_AS(to_minus_one_form(QuotientType(1, 0, 0)), SmoothPoint);
}

TEST_CASE("count_A examples") {
  CHECK(count_A(7, 2, 5) == 1);
  CHECK(count_A(2, 1, 1) == 0);
  CHECK(count_A(1, 1, 3) == 3);
  CHECK_THROWS_AS(count_A(4, 2, 3), InvalidArgs);
  CHECK_THROWS_AS(count_A(3, 2, -1), InvalidArgs);
}

TEST_CASE("delta_comb examples") {
  CHECK(delta_comb(1, 1, 4) == Rational(6));  // C(4,2)
  CHECK(delta_comb(7, 2, 5) == Rational(5, 7));
  CHECK(delta_comb(2, 1, 1) == Rational(-1, 4));
  // (1,1): the combinatorial form equals the exact count
  for (long d = 0; d <= 12; ++d) {
    CHECK(Rational(count_A(1, 1, d)) == delta_comb(1, 1, d));
  }
}

TEST_CASE("count and smooth-model difference only depends on r mod p") {
  for (long p = 1; p <= 12; ++p) {
    for (long q = 1; q <= 12; ++q) {
      if (!coprime(p, q)) continue;
      for (long a = 1; a <= 4; ++a) {
        // r = pa: count equals the combinatorial value exactly
        CHECK(Rational(count_A(p, q, p * a)) == delta_comb(p, q, p * a));
        for (long r = 0; r <= 3 * p; ++r) {
          const long r1 = r + p * a;
          // both difference identities, exact
          CHECK(delta_comb(p, q, r1) - delta_comb(p, q, r) ==
                delta_comb(p, q, r1 - r) + Rational(Int(a) * q * r));
          CHECK(Rational(count_A(p, q, r1) - count_A(p, q, r)) ==
                Rational(count_A(p, q, r1 - r)) + Rational(Int(a) * q * r));
          // hence the difference is r mod p invariant
          CHECK(Rational(count_A(p, q, r)) - delta_comb(p, q, r) ==
                Rational(count_A(p, q, r1)) - delta_comb(p, q, r1));
        }
      }
    }
  }
}

TEST_CASE("combinatorial invariant bundle") {
  const CombinatorialInvariants inv = combinatorial_invariants(7, 2, 5);
  CHECK(inv.A == 1);
  CHECK(inv.delta == Rational(5, 7));
  CHECK(inv.Delta == Rational(2, 7));
  CHECK(inv.Delta == Rational(inv.A) - inv.delta);
  // the difference only depends on r mod p
  for (long r = 0; r <= 10; ++r) {
    CHECK(combinatorial_invariants(7, 2, r).Delta ==
          combinatorial_invariants(7, 2, r + 7).Delta);
  }
}

TEST_CASE("delta invariant examples") {
  CHECK(delta_invariant(NormalizedForm(2, 1, 1), 1) == Rational(1, 4));
  CHECK(delta_invariant(NormalizedForm(7, 2, 3), 3) == Rational(2, 7));
  CHECK(delta_invariant(NormalizedForm(3, 1, 2), 0) == Rational(0));
  const NormalizedForm f(7, 2, 3);
  for (long k = -8; k <= 8; ++k) {
    CHECK(delta_invariant(f, k) == delta_invariant(f, k + 7));
  }
}

TEST_CASE("correction tables reproduce the reference rows") {
  const PeriodicRational t7 = table(7, 2, 3);
  const std::vector<Rational> row7 = {Rational(0),    Rational(2, 7),
                                      Rational(3, 7), Rational(3, 7),
                                      Rational(2, 7), Rational(0),
                                      Rational(4, 7)};
  CHECK(t7.values() == row7);

  CHECK(table(2, 1, 1).values() ==
        std::vector<Rational>{Rational(0), Rational(1, 4)});
  CHECK(table(3, 1, 2).values() ==
        std::vector<Rational>{Rational(0), Rational(1, 3), Rational(1, 3)});
  CHECK(table(1, 0, 0).values() == std::vector<Rational>{Rational(0)});
  CHECK_THROWS_AS(delta_table_for_local_type(QuotientType(4, 2, 1)), NotNormalized);
}

TEST_CASE("degree-shifted rows as they enter the weighted-plane formula") {
  // With |w| = 12 for weights (2,3,7), the vertex tables enter at d + 12.
  const PeriodicRational t7 = table(7, 2, 3);
  const std::vector<Rational> shifted = {Rational(0),    Rational(4, 7),
                                         Rational(0),    Rational(2, 7),
                                         Rational(3, 7), Rational(3, 7),
                                         Rational(2, 7)};
  for (long d = 0; d < 7; ++d) {
    CHECK(t7.evaluate(d + 12) == shifted[static_cast<std::size_t>(d)]);
  }
  // the period-2 and period-3 rows are invariant under the same shift
  for (long d = 0; d < 6; ++d) {
    CHECK(table(2, 1, 1).evaluate(d + 12) == table(2, 1, 1).evaluate(d));
    CHECK(table(3, 1, 2).evaluate(d + 12) == table(3, 1, 2).evaluate(d));
  }
}

TEST_CASE("vertex corrections of the weighted plane") {
  const WeightVector w(2, 3, 7);
  CHECK(delta_at_projective_vertex(w, 2, 66) == Rational(3, 7));
  CHECK(delta_at_projective_vertex(w, 0, 12) == Rational(0));
  CHECK(delta_at_projective_vertex(w, 1, 13) == Rational(1, 3));
  // degree 13: virtual genus is fully eaten by the three corrections
  const Rational sum = delta_at_projective_vertex(w, 0, 13) +
                       delta_at_projective_vertex(w, 1, 13) +
                       delta_at_projective_vertex(w, 2, 13);
  CHECK(sum == Rational(97, 84));
  CHECK(virtual_genus(w, 13) == Rational(97, 84));
}

TEST_CASE("vertex corrections agree with the local-type tables") {
  // every ordered pairwise-coprime triple with product <= 210
  long triples = 0;
  for (long w0 = 1; w0 <= 210; ++w0) {
    for (long w1 = 1; w0 * w1 <= 210; ++w1) {
      if (!coprime(w0, w1)) continue;
      for (long w2 = 1; w0 * w1 * w2 <= 210; ++w2) {
        if (!coprime(w0, w2) || !coprime(w1, w2)) continue;
        ++triples;
        const WeightVector w(w0, w1, w2);
        const long wbar = w0 * w1 * w2;
        for (int i = 0; i < 3; ++i) {
          if (w[i] == 1) {
            CHECK(delta_at_projective_vertex(w, i, wbar - 1) == Rational(0));
            continue;
          }
          const PeriodicRational t =
              delta_table_for_local_type(QuotientType(w[i], w[i + 1], w[i + 2]));
          for (long D = 0; D < wbar; ++D) {
            CHECK(delta_at_projective_vertex(w, i, D) == t.evaluate(D));
          }
        }
      }
    }
  }
  CHECK(triples >= 25);
}

TEST_CASE("virtual genus minus corrections counts lattice points") {
  const long weight_sets[][3] = {{2, 3, 7}, {1, 2, 3}};
  for (const auto& ws : weight_sets) {
    const WeightVector w(ws[0], ws[1], ws[2]);
    const long wsum = static_cast<long>(w.sum().get_si());
    const long wbar = static_cast<long>(w.product().get_si());
    for (long D = wsum; D <= wsum + 2 * wbar; ++D) {
      Rational value = virtual_genus(w, D);
      for (int i = 0; i < 3; ++i) value -= delta_at_projective_vertex(w, i, D);
      CHECK(value.is_integer());
      CHECK(value >= Rational(0));
      CHECK(value == Rational(count_simplex_eq(w[0], w[1], w[2], D - wsum).value));
    }
  }
}

TEST_CASE("single blow-up contribution") {
  CHECK(delta_single_blowup(8, 7, 2, 3, 7) == Rational(20, 21));
  CHECK(delta_single_blowup(2, 1, 1, 1, 1) == Rational(1));    // ordinary node
  CHECK(delta_single_blowup(3, 1, 2, 3, 1) == Rational(-1, 4));
  // reference germ at local degree 1 on X(7;2,3): 20/21 + 1/3 = 9/7
  CHECK(delta_single_blowup(8, 7, 2, 3, 7) + Rational(1, 3) == Rational(9, 7));
  CHECK_THROWS_AS(delta_single_blowup(0, 1, 1, 1, 1), InvalidArgs);
}

TEST_CASE("ledger checking") {
  const QuotientType x711(2, 1, 1);
  GermLedgerEntry bad;
  bad.k = 1;
  bad.Delta = Rational(1, 4);
  bad.delta_P = Rational(1, 4);
  bad.kappa_P = Rational(1);
  const LedgerReport r = ledger_check({bad}, x711);
  CHECK(!r.all_pass);
  CHECK(r.entries[0].declared_matches);  // 1/4 is the table value
  CHECK(r.entries[0].identity_checked);
  CHECK(!r.entries[0].identity_holds);   // 1/4 != 1/4 - 1

  GermLedgerEntry fill;
  fill.k = 1;
  fill.Delta = Rational(2, 7);
  fill.delta_P = Rational(9, 7);
  const LedgerReport rf = ledger_check({fill}, QuotientType(7, 2, 3));
  CHECK(rf.all_pass);
  REQUIRE(rf.entries[0].kappa_filled.has_value());
  CHECK(*rf.entries[0].kappa_filled == Rational(1));

  GermLedgerEntry out_of_range;
  out_of_range.k = 7;
  out_of_range.Delta = Rational(0);
  CHECK_THROWS_AS(ledger_check({out_of_range}, QuotientType(7, 2, 3)), InvalidArgs);
}

TEST_CASE("reference ledger file passes all columns") {
  std::ifstream in(std::string(EHRQ_DATA_DIR) + "/table1_X7_2_3.json");
  REQUIRE(in.good());
  nlohmann::json j;
  in >> j;
  const LedgerFile file = ledger_from_json(j);
  CHECK(file.local_type.d() == 7);
  REQUIRE(file.entries.size() == 7);
  const LedgerReport report = ledger_check(file.entries, file.local_type);
  CHECK(report.all_pass);
  for (const auto& e : report.entries) {
    CHECK(e.declared_matches);
    CHECK(e.identity_checked);
    CHECK(e.identity_holds);
  }
}

TEST_CASE("genus bookkeeping") {
  const WeightVector w(2, 3, 7);
  CHECK(adjunction_genus(w, 42, Rational(0)) == Rational(16));
  CHECK(adjunction_genus(w, 12, Rational(0)) == Rational(1));
  CHECK(adjunction_genus(WeightVector(1, 1, 1), 3, Rational(0)) == Rational(1));
  // degree below |w|: the section count is 0
  CHECK(adjunction_genus(w, 5, Rational(2)) == Rational(-2));

  // round trip: h0 = genus + kappa reproduces the section count
  const QuasiPolynomial qp = ehrhart_quasipolynomial(w);
  for (long d : {12, 13, 20, 42, 54}) {
    const Rational kappa(3, 7);
    const Rational genus = adjunction_genus(w, d, kappa);
    CHECK(h0_from_genus(w, d, genus, kappa) == qp.evaluate(d - 12));
  }
}
