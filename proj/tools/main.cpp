// Command-line front end: exact lattice-point counts for weighted projective
// triangles, Dedekind sums, and quotient-singularity correction tables.
// Results go to stdout, diagnostics to stderr.
// Exit codes: 0 success, 1 verification mismatch, 2 invalid input.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "ehrq/dedekind.hpp"
#include "ehrq/ehrhart.hpp"
#include "ehrq/json_io.hpp"
#include "ehrq/singularity.hpp"

namespace {

using ehrq::Int;
using ehrq::Rational;
using nlohmann::json;

enum class Format { text, json, csv };

Format parse_format(const std::string& s) {
  if (s == "text") return Format::text;
  if (s == "json") return Format::json;
  if (s == "csv") return Format::csv;
  throw ehrq::InvalidArgs("unknown output format: " + s);
}

void reject_csv(Format f, const char* what) {
  if (f == Format::csv) {
    throw ehrq::InvalidArgs(std::string("csv output is not defined for ") + what +
                            "; use text or json");
  }
}

Int parse_int(const std::string& s) {
  std::size_t i = (!s.empty() && s[0] == '-') ? 1 : 0;
  if (i == s.size()) throw ehrq::InvalidArgs("malformed integer: \"" + s + "\"");
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
      throw ehrq::InvalidArgs("malformed integer: \"" + s + "\"");
    }
  }
  return Int(s, 10);
}

std::vector<Int> parse_int_list(const std::string& s) {
  std::vector<Int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_int(item));
  if (s.empty() || s.back() == ',') {
    throw ehrq::InvalidArgs("malformed integer list: \"" + s + "\"");
  }
  return out;
}

ehrq::WeightVector parse_weights(const std::string& s) {
  std::vector<Int> v = parse_int_list(s);
  if (v.size() != 3) {
    throw ehrq::InvalidArgs("expected three comma-separated weights, got \"" + s +
                            "\"");
  }
  return ehrq::WeightVector(v[0], v[1], v[2]);
}

ehrq::QuotientType parse_type(const std::string& s) {
  std::vector<Int> v = parse_int_list(s);
  if (v.size() != 3) {
    throw ehrq::InvalidArgs("expected a type d,a,b, got \"" + s + "\"");
  }
  return ehrq::QuotientType(v[0], v[1], v[2]);
}

long long to_number(const Int& n) {
  if (!n.fits_slong_p()) {
    throw ehrq::InvalidArgs("value too large for a JSON number: " + n.get_str());
  }
  return static_cast<long long>(n.get_si());
}

std::string bracket_list(const std::vector<Rational>& values) {
  std::string out = "[";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ", ";
    out += values[i].str();
  }
  return out + "]";
}

void emit_json(const json& j) { std::cout << j.dump(2) << "\n"; }

int run_quasipoly(const std::string& weights, Format fmt) {
  const ehrq::WeightVector w = parse_weights(weights);
  const ehrq::QuasiPolynomial qp = ehrq::ehrhart_quasipolynomial(w);
  switch (fmt) {
    case Format::text:
      std::cout << "Eh(d) = " << qp.coefficient(2).values()[0] << " d^2 + "
                << qp.coefficient(1).values()[0] << " d + a0(d)\n"
                << "a0 period " << qp.coefficient(0).period() << "\n"
                << "a0 = " << bracket_list(qp.coefficient(0).values()) << "\n";
      break;
    case Format::json:
      emit_json(ehrq::quasipoly_to_json(w, qp));
      break;
    case Format::csv: {
      const auto& a0 = qp.coefficient(0).values();
      for (std::size_t d = 0; d < a0.size(); ++d) {
        std::cout << d << "," << a0[d] << "\n";
      }
      break;
    }
  }
  return 0;
}

int run_eval(const std::string& weights, const std::string& degree_s, bool check,
             Format fmt) {
  const ehrq::WeightVector w = parse_weights(weights);
  const Int d = parse_int(degree_s);
  const ehrq::QuasiPolynomial qp = ehrq::ehrhart_quasipolynomial(w);
  const Rational value = qp.evaluate(d);
  bool match = true;
  Int oracle;
  if (check) {
    const ehrq::Count c = ehrq::count_simplex_eq(w[0], w[1], w[2], d);
    if (c.negative_dilation) {
      throw ehrq::InvalidArgs("--check needs a nonnegative degree");
    }
    oracle = c.value;
    match = value == Rational(oracle);
  }
  switch (fmt) {
    case Format::text:
      std::cout << value << "\n";
      if (check && !match) {
        std::cerr << "mismatch: formula " << value << " vs enumeration " << oracle
                  << "\n";
      }
      break;
    case Format::json: {
      json j{{"weights", {to_number(w[0]), to_number(w[1]), to_number(w[2])}},
             {"degree", to_number(d)},
             {"value", value.str()}};
      if (check) {
        j["oracle"] = oracle.get_str();
        j["match"] = match;
      }
      emit_json(j);
      break;
    }
    case Format::csv:
      std::cout << d << "," << value << "\n";
      break;
  }
  return match ? 0 : 1;
}

int run_count(const std::string& weights, const std::string& degree_s, Format fmt) {
  const ehrq::WeightVector w = parse_weights(weights);
  const Int t = parse_int(degree_s);
  const ehrq::Count c = ehrq::count_simplex_eq(w[0], w[1], w[2], t);
  switch (fmt) {
    case Format::text:
      std::cout << c.value << "\n";
      break;
    case Format::json:
      emit_json(json{{"weights", {to_number(w[0]), to_number(w[1]), to_number(w[2])}},
                     {"degree", to_number(t)},
                     {"count", c.value.get_str()},
                     {"negative_dilation", c.negative_dilation}});
      break;
    case Format::csv:
      std::cout << t << "," << c.value << "\n";
      break;
  }
  if (c.negative_dilation) {
    std::cerr << "negative dilation " << t << " rejected; the count is reported as 0\n";
    return 2;
  }
  return 0;
}

int run_verify(const std::string& weights, long long dmax, Format fmt) {
  if (dmax < 0) throw ehrq::InvalidArgs("--dmax must be nonnegative");
  const ehrq::WeightVector w = parse_weights(weights);
  const ehrq::QuasiPolynomial qp = ehrq::ehrhart_quasipolynomial(w);
  struct Mismatch {
    long long d;
    Rational formula;
    Int oracle;
  };
  std::vector<Mismatch> mismatches;
  std::vector<Rational> values;
  values.reserve(static_cast<std::size_t>(dmax) + 1);
  for (long long d = 0; d <= dmax; ++d) {
    const Rational formula = qp.evaluate(Int(static_cast<long>(d)));
    const Int oracle =
        ehrq::count_simplex_eq(w[0], w[1], w[2], Int(static_cast<long>(d))).value;
    if (formula != Rational(oracle)) mismatches.push_back({d, formula, oracle});
    values.push_back(formula);
  }
  switch (fmt) {
    case Format::text:
      for (const auto& m : mismatches) {
        std::cout << "d=" << m.d << " formula=" << m.formula
                  << " oracle=" << m.oracle << " MISMATCH\n";
      }
      std::cout << (mismatches.empty() ? "ok" : "failed") << ": " << (dmax + 1)
                << " degrees checked, " << mismatches.size() << " mismatches\n";
      break;
    case Format::json: {
      json ms = json::array();
      for (const auto& m : mismatches) {
        ms.push_back(json{{"d", m.d},
                          {"formula", m.formula.str()},
                          {"oracle", m.oracle.get_str()}});
      }
      emit_json(json{{"weights", {to_number(w[0]), to_number(w[1]), to_number(w[2])}},
                     {"dmax", dmax},
                     {"checked", dmax + 1},
                     {"mismatches", ms},
                     {"all_match", mismatches.empty()}});
      break;
    }
    case Format::csv:
      for (long long d = 0; d <= dmax; ++d) {
        std::cout << d << "," << values[static_cast<std::size_t>(d)] << "\n";
      }
      for (const auto& m : mismatches) {
        std::cerr << "d=" << m.d << " formula=" << m.formula
                  << " oracle=" << m.oracle << " MISMATCH\n";
      }
      break;
  }
  return mismatches.empty() ? 0 : 1;
}

int run_dedekind(const std::string& a_s, const std::string& b_s, bool check,
                 Format fmt) {
  reject_csv(fmt, "dedekind");
  const Int a = parse_int(a_s), b = parse_int(b_s);
  const Rational value = ehrq::dedekind_sum_fast(a, b);
  bool match = true;
  if (check) match = value == ehrq::dedekind_sum_naive(a, b);
  if (fmt == Format::text) {
    std::cout << value << "\n";
  } else {
    json j{{"a", a.get_str()}, {"b", b.get_str()}, {"value", value.str()}};
    if (check) j["match"] = match;
    emit_json(j);
  }
  if (!match) {
    std::cerr << "mismatch between reciprocity descent and direct summation\n";
    return 1;
  }
  return 0;
}

int run_fourier(const std::string& n_s, const std::string& a_list_s,
                const std::string& b_s, Format fmt) {
  reject_csv(fmt, "fourier");
  const Int n = parse_int(n_s), b = parse_int(b_s);
  const std::vector<Int> a_list = parse_int_list(a_list_s);
  const Rational value = ehrq::fourier_dedekind_sum(n, a_list, b);
  if (fmt == Format::text) {
    std::cout << value << "\n";
  } else {
    json as = json::array();
    for (const Int& a : a_list) as.push_back(a.get_str());
    emit_json(json{{"n", n.get_str()},
                   {"a_list", as},
                   {"b", b.get_str()},
                   {"value", value.str()}});
  }
  return 0;
}

int run_popoviciu(const std::string& a_s, const std::string& b_s,
                  const std::string& c_s, const std::string& t_s, Format fmt) {
  reject_csv(fmt, "popoviciu");
  const Int a = parse_int(a_s), b = parse_int(b_s), t = parse_int(t_s);
  Rational value;
  json j{{"a", a.get_str()}, {"b", b.get_str()}, {"t", t.get_str()}};
  if (c_s.empty()) {
    value = ehrq::popoviciu_2d(a, b, t);
  } else {
    const Int c = parse_int(c_s);
    value = ehrq::popoviciu_3d(a, b, c, t);
    j["c"] = c.get_str();
  }
  if (fmt == Format::text) {
    std::cout << value << "\n";
  } else {
    j["value"] = value.str();
    emit_json(j);
  }
  return 0;
}

int run_delta_table(const std::string& type_s, Format fmt) {
  const ehrq::QuotientType t = parse_type(type_s);
  const ehrq::PeriodicRational table = ehrq::delta_table_for_local_type(t);
  switch (fmt) {
    case Format::text:
      std::cout << "period " << table.period() << "\n"
                << bracket_list(table.values()) << "\n";
      break;
    case Format::json: {
      json j = ehrq::to_json(table);
      j["local_type"] = {to_number(t.d()), to_number(t.a()), to_number(t.b())};
      emit_json(j);
      break;
    }
    case Format::csv:
      for (std::size_t k = 0; k < table.period(); ++k) {
        std::cout << k << "," << table.values()[k] << "\n";
      }
      break;
  }
  return 0;
}

int run_delta(const std::string& weights, int vertex, const std::string& degree_s,
              Format fmt) {
  reject_csv(fmt, "delta");
  if (vertex < 0 || vertex > 2) {
    throw ehrq::InvalidArgs("--vertex must be 0, 1 or 2");
  }
  const ehrq::WeightVector w = parse_weights(weights);
  const Int degree = parse_int(degree_s);
  const Rational value = ehrq::delta_at_projective_vertex(w, vertex, degree);
  if (fmt == Format::text) {
    std::cout << value << "\n";
  } else {
    emit_json(json{{"weights", {to_number(w[0]), to_number(w[1]), to_number(w[2])}},
                   {"vertex", vertex},
                   {"degree", to_number(degree)},
                   {"value", value.str()}});
  }
  return 0;
}

int run_ledger_check(const std::string& path, Format fmt) {
  reject_csv(fmt, "ledger-check");
  std::ifstream in(path);
  if (!in) throw ehrq::InvalidArgs("cannot open ledger file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ehrq::InvalidArgs("malformed ledger JSON: " + std::string(e.what()));
  }
  const ehrq::LedgerFile file = ehrq::ledger_from_json(j);
  const ehrq::LedgerReport report = ehrq::ledger_check(file.entries, file.local_type);
  if (fmt == Format::text) {
    for (const auto& c : report.entries) {
      std::cout << "k=" << c.entry.k << " Delta=" << c.entry.Delta;
      if (c.entry.delta_P) std::cout << " delta=" << *c.entry.delta_P;
      if (c.entry.kappa_P) std::cout << " kappa=" << *c.entry.kappa_P;
      if (c.kappa_filled) std::cout << " kappa_filled=" << *c.kappa_filled;
      std::cout << (c.pass ? " pass" : " FAIL") << "\n";
    }
    std::cout << (report.all_pass ? "all entries consistent\n"
                                  : "inconsistent entries found\n");
  } else {
    emit_json(ehrq::to_json(report, file.local_type));
  }
  return report.all_pass ? 0 : 1;
}

int run_adjunction(const std::string& weights, const std::string& degree_s,
                   const std::string& kappa_s, Format fmt) {
  reject_csv(fmt, "adjunction");
  const ehrq::WeightVector w = parse_weights(weights);
  const Int degree = parse_int(degree_s);
  const Rational kappa_sum = Rational::parse(kappa_s);
  const Rational genus = ehrq::adjunction_genus(w, degree, kappa_sum);
  const Rational h0 = ehrq::h0_from_genus(w, degree, genus, kappa_sum);
  if (fmt == Format::text) {
    std::cout << "genus = " << genus << "\n" << "h0 = " << h0 << "\n";
  } else {
    emit_json(json{{"weights", {to_number(w[0]), to_number(w[1]), to_number(w[2])}},
                   {"degree", to_number(degree)},
                   {"kappa_sum", kappa_sum.str()},
                   {"genus", genus.str()},
                   {"h0", h0.str()}});
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Ehrhart quasi-polynomials of weighted projective triangles"};
  app.require_subcommand(1);

  std::string weights, degree, a_s, b_s, c_s, t_s, n_s, a_list_s;
  std::string type_s, file_s, kappa_s = "0", format_s = "text";
  long long dmax = 0;
  int vertex = 0;
  bool check = false;

  const auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format_s, "Output format: text, json or csv")
        ->default_str("text");
  };

  CLI::App* quasipoly =
      app.add_subcommand("quasipoly", "Closed-form counting quasi-polynomial");
  quasipoly->add_option("--weights", weights, "w0,w1,w2")->required();
  add_format(quasipoly);

  CLI::App* eval = app.add_subcommand("eval", "Evaluate the closed form");
  eval->add_option("--weights", weights, "w0,w1,w2")->required();
  eval->add_option("--degree", degree, "dilation d")->required();
  eval->add_flag("--check", check, "also run the enumeration oracle");
  add_format(eval);

  CLI::App* count = app.add_subcommand("count", "Brute-force enumeration only");
  count->add_option("--weights", weights, "w0,w1,w2")->required();
  count->add_option("--degree", degree, "dilation t")->required();
  add_format(count);

  CLI::App* verify =
      app.add_subcommand("verify", "Sweep formula against enumeration");
  verify->add_option("--weights", weights, "w0,w1,w2")->required();
  verify->add_option("--dmax", dmax, "largest dilation to check")->required();
  add_format(verify);

  CLI::App* dedekind = app.add_subcommand("dedekind", "Classical Dedekind sum");
  dedekind->add_option("--a", a_s)->required();
  dedekind->add_option("--b", b_s)->required();
  dedekind->add_flag("--check", check, "cross-check against direct summation");
  add_format(dedekind);

  CLI::App* fourier = app.add_subcommand("fourier", "Fourier-Dedekind sum");
  fourier->add_option("--n", n_s)->required();
  fourier->add_option("--a-list", a_list_s, "comma-separated a_1,...,a_m")
      ->required();
  fourier->add_option("--b", b_s)->required();
  add_format(fourier);

  CLI::App* popoviciu =
      app.add_subcommand("popoviciu", "Closed-form denumerant p_{a,b[,c]}(t)");
  popoviciu->add_option("--a", a_s)->required();
  popoviciu->add_option("--b", b_s)->required();
  popoviciu->add_option("--c", c_s);
  popoviciu->add_option("--t", t_s)->required();
  add_format(popoviciu);

  CLI::App* delta_table =
      app.add_subcommand("delta-table", "Correction table of a quotient type");
  delta_table->add_option("--type", type_s, "d,a,b")->required();
  add_format(delta_table);

  CLI::App* delta =
      app.add_subcommand("delta", "Single vertex correction of a weighted plane");
  delta->add_option("--weights", weights, "w0,w1,w2")->required();
  delta->add_option("--vertex", vertex, "0, 1 or 2")->required();
  delta->add_option("--degree", degree, "degree the correction is evaluated at")
      ->required();
  add_format(delta);

  CLI::App* ledger =
      app.add_subcommand("ledger-check", "Validate a local-invariant ledger file");
  ledger->add_option("--file", file_s, "ledger JSON path")->required();
  add_format(ledger);

  CLI::App* adjunction =
      app.add_subcommand("adjunction", "Genus and section count of a curve");
  adjunction->add_option("--weights", weights, "w0,w1,w2")->required();
  adjunction->add_option("--degree", degree, "curve degree d")->required();
  adjunction->add_option("--kappa-sum", kappa_s,
                         "total adjunction-condition count (rational)");
  add_format(adjunction);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    const Format fmt = parse_format(format_s);
    if (quasipoly->parsed()) return run_quasipoly(weights, fmt);
    if (eval->parsed()) return run_eval(weights, degree, check, fmt);
    if (count->parsed()) return run_count(weights, degree, fmt);
    if (verify->parsed()) return run_verify(weights, dmax, fmt);
    if (dedekind->parsed()) return run_dedekind(a_s, b_s, check, fmt);
    if (fourier->parsed()) return run_fourier(n_s, a_list_s, b_s, fmt);
    if (popoviciu->parsed()) return run_popoviciu(a_s, b_s, c_s, t_s, fmt);
    if (delta_table->parsed()) return run_delta_table(type_s, fmt);
    if (delta->parsed()) return run_delta(weights, vertex, degree, fmt);
    if (ledger->parsed()) return run_ledger_check(file_s, fmt);
    if (adjunction->parsed()) return run_adjunction(weights, degree, kappa_s, fmt);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
