#pragma once

#include <json.hpp>

#include "ehrq/ehrhart.hpp"
#include "ehrq/periodic.hpp"
#include "ehrq/singularity.hpp"

namespace ehrq {

// Rationals serialize as canonical "n/d" strings ("n" when d = 1);
// periodic functions as {"period": p, "values": [...]}.
nlohmann::json to_json(const PeriodicRational& f);
PeriodicRational periodic_from_json(const nlohmann::json& j);

// {"weights": [w0,w1,w2], "coefficients": [c0, c1, c2], "period": w-bar}
// with coefficient i multiplying d^i.
nlohmann::json quasipoly_to_json(const WeightVector& w, const QuasiPolynomial& qp);

// Local-invariant ledger file:
// {"local_type": [d,a,b], "entries": [{"k":0, "Delta":"0", ...}, ...]}.
struct LedgerFile {
  QuotientType local_type;
  std::vector<GermLedgerEntry> entries;
};
LedgerFile ledger_from_json(const nlohmann::json& j);

nlohmann::json to_json(const LedgerReport& report, const QuotientType& local_type);

}  // namespace ehrq
