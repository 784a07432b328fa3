#pragma once

// JSON and text renderings.  Term order is fixed (nu-exponents ascending,
// exponent vectors descending-lex, grid entries column-major) so output is
// deterministic.

#include <cstdint>
#include <limits>
#include <sstream>
#include <string>

#include "json.hpp"
#include "qfrieze/classical.hpp"
#include "qfrieze/coefficients.hpp"
#include "qfrieze/frieze.hpp"
#include "qfrieze/report.hpp"
#include "qfrieze/seed.hpp"
#include "qfrieze/torus.hpp"

namespace qfrieze {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "qfrieze-1";

// Integers that overflow int64 are written as decimal strings.
inline Json integer_to_json(const Integer& c) {
  if (c >= std::numeric_limits<std::int64_t>::min() && c <= std::numeric_limits<std::int64_t>::max()) {
    return static_cast<std::int64_t>(c);
  }
  return c.str();
}

inline Integer integer_from_json(const Json& j) {
  if (j.is_string()) return Integer(j.get<std::string>());
  return Integer(j.get<std::int64_t>());
}

inline Json to_json(const NuPoly& p) {
  Json arr = Json::array();
  for (const auto& [e, c] : p.terms()) arr.push_back(Json::array({e, integer_to_json(c)}));
  return arr;
}

inline NuPoly nupoly_from_json(const Json& j) {
  NuPoly p;
  for (const auto& term : j) p.add_term(term.at(0).get<int>(), integer_from_json(term.at(1)));
  return p;
}

inline Json to_json(const TorusElement& t) {
  Json arr = Json::array();
  for (const auto& [u, c] : t.terms()) {
    Json term;
    term["exp"] = u.entries();
    term["coeff"] = to_json(c);
    arr.push_back(std::move(term));
  }
  return arr;
}

inline TorusElement torus_from_json(int n, const Json& j) {
  TorusElement t(n);
  for (const auto& term : j) {
    t.add_term(ExponentVector(term.at("exp").get<std::vector<int>>()),
               nupoly_from_json(term.at("coeff")));
  }
  return t;
}

inline Json to_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (int r = 0; r < m.size(); ++r) {
    Json row = Json::array();
    for (int c = 0; c < m.size(); ++c) row.push_back(m.at(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline Json to_json(const QuantumSeed& s) {
  Json j;
  j["schema"] = kSchemaVersion;
  j["n"] = s.rank();
  j["B"] = to_json(s.b.matrix());
  j["Lambda"] = to_json(s.lambda.matrix());
  Json cluster = Json::array();
  for (const auto& y : s.cluster) cluster.push_back(to_json(y));
  j["cluster"] = std::move(cluster);
  return j;
}

inline Json to_json(const FriezeGrid& g) {
  Json j;
  j["schema"] = kSchemaVersion;
  j["n"] = g.rank();
  j["j_min"] = g.j_min();
  j["j_max"] = g.j_max();
  Json entries = Json::array();
  for (const auto& [c, v] : g.entries()) {
    Json e;
    e["i"] = c.i;
    e["j"] = c.j;
    e["terms"] = to_json(v);
    entries.push_back(std::move(e));
  }
  j["entries"] = std::move(entries);
  return j;
}

inline Json to_json(const CommLaurent& p) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms()) {
    Json t;
    t["exp"] = e;
    t["coeff"] = integer_to_json(c);
    terms.push_back(std::move(t));
  }
  Json j;
  j["terms"] = std::move(terms);
  return j;
}

inline Json to_json(const CheckResult& r) {
  Json j;
  j["check"] = r.name;
  j["status"] = r.passed ? "pass" : "fail";
  if (r.counterexample) j["counterexample"] = *r.counterexample;
  if (!r.detail.empty()) j["detail"] = r.detail;
  return j;
}

inline Json to_json(const VerificationReport& report) {
  Json j;
  j["schema"] = kSchemaVersion;
  Json checks = Json::array();
  for (const auto& c : report.checks) checks.push_back(to_json(c));
  j["checks"] = std::move(checks);
  j["summary"] = {{"pass", report.pass_count()}, {"fail", report.fail_count()}};
  return j;
}

// --- text ---------------------------------------------------------------

// nu^k as a power of q: q^{1/2}, q, q^{-3/2}, q^2.  Empty for k = 0.
inline std::string format_q_power(int k) {
  if (k == 0) return "";
  if (k % 2 != 0) return "q^{" + std::to_string(k) + "/2}";
  const int half = k / 2;
  return half == 1 ? "q" : "q^" + std::to_string(half);
}

// One signed term a * nu^k, without leading sign handling.
inline std::string format_scaled(const Integer& magnitude, int k, const std::string& monomial) {
  std::string out;
  const std::string q = format_q_power(k);
  if (magnitude != 1 || (q.empty() && monomial.empty())) out += magnitude.str();
  out += q;
  out += monomial;
  return out;
}

inline std::string format_nupoly(const NuPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    const bool negative = c < 0;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    out += format_scaled(negative ? Integer(-c) : c, e, "");
    first = false;
  }
  return out;
}

// X^{-e1+e2}; the zero vector renders as the empty string.
inline std::string format_monomial(const ExponentVector& u) {
  if (u.is_zero()) return "";
  std::string out = "X^{";
  bool first = true;
  for (int t = 0; t < u.rank(); ++t) {
    const int a = u[t];
    if (a == 0) continue;
    if (a < 0) {
      out += "-";
    } else if (!first) {
      out += "+";
    }
    if (a != 1 && a != -1) out += std::to_string(a < 0 ? -a : a);
    out += "e" + std::to_string(t + 1);
    first = false;
  }
  return out + "}";
}

inline std::string format_torus(const TorusElement& t) {
  if (t.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [u, c] : t.terms()) {
    const std::string mono = format_monomial(u);
    bool negative = false;
    std::string body;
    if (c.size() == 1) {
      const auto& [e, a] = *c.terms().begin();
      negative = a < 0;
      body = format_scaled(negative ? Integer(-a) : a, e, mono);
    } else {
      body = "(" + format_nupoly(c) + ")" + mono;
    }
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    out += body;
    first = false;
  }
  return out;
}

inline std::string format_matrix(const IntMatrix& m) {
  std::ostringstream os;
  os << "[";
  for (int r = 0; r < m.size(); ++r) {
    os << (r ? ", [" : "[");
    for (int c = 0; c < m.size(); ++c) os << (c ? ", " : "") << m.at(r, c);
    os << "]";
  }
  os << "]";
  return os.str();
}

inline std::string format_grid(const FriezeGrid& g) {
  std::string out;
  for (const auto& [c, v] : g.entries()) out += to_string(c) + " = " + format_torus(v) + "\n";
  return out;
}

inline std::string format_seed(const QuantumSeed& s) {
  std::string out = "B = " + format_matrix(s.b.matrix()) + "\n";
  out += "Lambda = " + format_matrix(s.lambda.matrix()) + "\n";
  for (std::size_t k = 0; k < s.cluster.size(); ++k) {
    out += "Y" + std::to_string(k + 1) + " = " + format_torus(s.cluster[k]) + "\n";
  }
  return out;
}

inline std::string format_report(const VerificationReport& report) {
  std::string out;
  for (const auto& c : report.checks) {
    out += (c.passed ? "PASS " : "FAIL ") + c.name;
    if (c.counterexample) out += "  counterexample: " + *c.counterexample;
    if (!c.detail.empty()) out += "  (" + c.detail + ")";
    out += "\n";
  }
  out += std::to_string(report.pass_count()) + " passed, " + std::to_string(report.fail_count()) +
         " failed\n";
  return out;
}

}  // namespace qfrieze
