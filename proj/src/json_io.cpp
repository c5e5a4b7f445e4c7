#include "ehrq/json_io.hpp"

namespace ehrq {

namespace {

using nlohmann::json;

Int int_from_json(const json& j, const char* what) {
  if (!j.is_number_integer()) {
    throw InvalidArgs(std::string(what) + " must be an integer");
  }
  return Int(j.get<long>());
}

Rational rational_from_json(const json& j, const char* what) {
  if (j.is_number_integer()) return Rational(Int(j.get<long>()));
  if (!j.is_string()) {
    throw InvalidArgs(std::string(what) + " must be a rational string");
  }
  return Rational::parse(j.get<std::string>());
}

long long int_to_number(const Int& n) {
  if (!n.fits_slong_p()) {
    throw InvalidArgs("integer too large for JSON number: " + n.get_str());
  }
  return static_cast<long long>(n.get_si());
}

}  // namespace

json to_json(const PeriodicRational& f) {
  json values = json::array();
  for (const Rational& v : f.values()) values.push_back(v.str());
  return json{{"period", f.period()}, {"values", values}};
}

PeriodicRational periodic_from_json(const json& j) {
  if (!j.is_object() || !j.contains("period") || !j.contains("values")) {
    throw InvalidArgs("periodic function needs {\"period\", \"values\"}");
  }
  const Int period = int_from_json(j["period"], "period");
  if (!j["values"].is_array()) throw InvalidArgs("values must be an array");
  std::vector<Rational> values;
  for (const auto& v : j["values"]) {
    values.push_back(rational_from_json(v, "value"));
  }
  if (period < 1 || to_size(period) != values.size()) {
    throw InvalidArgs("declared period does not match the value list");
  }
  return PeriodicRational(std::move(values));
}

json quasipoly_to_json(const WeightVector& w, const QuasiPolynomial& qp) {
  json coefficients = json::array();
  for (int i = 0; i < 3; ++i) coefficients.push_back(to_json(qp.coefficient(i)));
  return json{
      {"weights", {int_to_number(w[0]), int_to_number(w[1]), int_to_number(w[2])}},
      {"coefficients", coefficients},
      {"period", int_to_number(w.product())}};
}

LedgerFile ledger_from_json(const json& j) {
  if (!j.is_object() || !j.contains("local_type") || !j.contains("entries")) {
    throw InvalidArgs("ledger needs {\"local_type\", \"entries\"}");
  }
  const json& lt = j["local_type"];
  if (!lt.is_array() || lt.size() != 3) {
    throw InvalidArgs("local_type must be [d, a, b]");
  }
  LedgerFile file{QuotientType(int_from_json(lt[0], "d"), int_from_json(lt[1], "a"),
                               int_from_json(lt[2], "b")),
                  {}};
  for (const auto& e : j["entries"]) {
    GermLedgerEntry entry;
    if (!e.contains("k") || !e.contains("Delta")) {
      throw InvalidArgs("ledger entry needs at least \"k\" and \"Delta\"");
    }
    entry.k = e["k"].get<long long>();
    entry.Delta = rational_from_json(e["Delta"], "Delta");
    if (e.contains("delta")) entry.delta_P = rational_from_json(e["delta"], "delta");
    if (e.contains("kappa")) entry.kappa_P = rational_from_json(e["kappa"], "kappa");
    if (e.contains("branches")) entry.branches = e["branches"].get<long long>();
    if (e.contains("equation")) entry.equation = e["equation"].get<std::string>();
    if (e.contains("label")) entry.point_label = e["label"].get<std::string>();
    file.entries.push_back(std::move(entry));
  }
  return file;
}

json to_json(const LedgerReport& report, const QuotientType& local_type) {
  json entries = json::array();
  for (const LedgerEntryCheck& c : report.entries) {
    json e{{"k", c.entry.k},
           {"Delta", c.entry.Delta.str()},
           {"computed_Delta", c.computed_Delta.str()},
           {"declared_matches", c.declared_matches},
           {"pass", c.pass}};
    if (c.entry.delta_P) e["delta"] = c.entry.delta_P->str();
    if (c.entry.kappa_P) e["kappa"] = c.entry.kappa_P->str();
    if (c.identity_checked) e["identity_holds"] = c.identity_holds;
    if (c.kappa_filled) e["kappa_filled"] = c.kappa_filled->str();
    entries.push_back(std::move(e));
  }
  return json{{"local_type",
               {int_to_number(local_type.d()), int_to_number(local_type.a()),
                int_to_number(local_type.b())}},
              {"entries", entries},
              {"all_pass", report.all_pass}};
}

}  // namespace ehrq
