#pragma once

// Commutative side: the specialization q -> 1 of torus elements, and an
// independent classical frieze used as an oracle for the quantum one.  The
// classical arithmetic below deliberately does not reuse the torus routines.

#include <algorithm>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qfrieze/coefficients.hpp"
#include "qfrieze/errors.hpp"
#include "qfrieze/frieze.hpp"
#include "qfrieze/report.hpp"
#include "qfrieze/torus.hpp"

namespace qfrieze {

// Commutative Laurent polynomial in x_1..x_n over Z.
class CommLaurent {
 public:
  using Exponent = std::vector<int>;
  using TermMap = std::map<Exponent, Integer, std::greater<>>;

  CommLaurent() = default;
  explicit CommLaurent(int n) : n_(n) {}

  static CommLaurent constant(int n, const Integer& c) {
    CommLaurent r(n);
    r.add_term(Exponent(static_cast<std::size_t>(n), 0), c);
    return r;
  }
  static CommLaurent variable(int n, int i) {
    Exponent e(static_cast<std::size_t>(n), 0);
    e[static_cast<std::size_t>(i - 1)] = 1;
    CommLaurent r(n);
    r.add_term(e, 1);
    return r;
  }

  int rank() const { return n_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Exponent& e, const Integer& c) {
    if (static_cast<int>(e.size()) != n_) throw RankMismatch("classical exponent length");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  CommLaurent& operator+=(const CommLaurent& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  CommLaurent& operator-=(const CommLaurent& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  friend CommLaurent operator+(CommLaurent a, const CommLaurent& b) { return a += b; }
  friend CommLaurent operator-(CommLaurent a, const CommLaurent& b) { return a -= b; }

  friend CommLaurent operator*(const CommLaurent& a, const CommLaurent& b) {
    if (a.n_ != b.n_) throw RankMismatch("classical ranks differ");
    CommLaurent r(a.n_);
    Exponent sum(static_cast<std::size_t>(a.n_));
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        for (std::size_t t = 0; t < sum.size(); ++t) sum[t] = ea[t] + eb[t];
        r.add_term(sum, ca * cb);
      }
    return r;
  }

  bool has_positive_coefficients() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second > 0; });
  }

  friend bool operator==(const CommLaurent&, const CommLaurent&) = default;

 private:
  int n_ = 0;
  TermMap terms_;
};

// Exact quotient p / d by lex leading terms.
inline CommLaurent divide_exact(const CommLaurent& p, const CommLaurent& d) {
  if (d.is_zero()) throw NotDivisible("classical division by zero");
  const int n = d.rank();
  CommLaurent quotient(n);
  if (p.is_zero()) return quotient;

  std::vector<int> lo(static_cast<std::size_t>(n)), hi(static_cast<std::size_t>(n));
  for (std::size_t t = 0; t < lo.size(); ++t) {
    auto [pmin, pmax] = std::minmax_element(p.terms().begin(), p.terms().end(),
                                            [t](const auto& a, const auto& b) { return a.first[t] < b.first[t]; });
    auto [dmin, dmax] = std::minmax_element(d.terms().begin(), d.terms().end(),
                                            [t](const auto& a, const auto& b) { return a.first[t] < b.first[t]; });
    lo[t] = pmin->first[t] - dmin->first[t];
    hi[t] = pmax->first[t] - dmax->first[t];
  }

  const auto& [d_exp, d_coeff] = *d.terms().begin();
  CommLaurent rest = p;
  while (!rest.is_zero()) {
    const auto& [r_exp, r_coeff] = *rest.terms().begin();
    CommLaurent::Exponent w(r_exp.size());
    for (std::size_t t = 0; t < w.size(); ++t) {
      w[t] = r_exp[t] - d_exp[t];
      if (w[t] < lo[t] || w[t] > hi[t]) throw NotDivisible("classical quotient leaves a remainder");
    }
    Integer c, remainder;
    boost::multiprecision::divide_qr(r_coeff, d_coeff, c, remainder);
    if (remainder != 0) throw NotDivisible("classical coefficient quotient is not integral");
    CommLaurent step(n);
    step.add_term(w, c);
    quotient += step;
    rest -= d * step;
  }
  return quotient;
}

// q -> 1, X^u -> x^u.
inline CommLaurent specialize(const TorusElement& e) {
  CommLaurent r(e.rank());
  for (const auto& [u, c] : e.terms()) r.add_term(u.entries(), specialize_nu_one(c));
  return r;
}

using ClassicalFrieze = std::map<GridCoord, CommLaurent>;

// f(i,0) = x_i, f(i,j) f(i,j+1) - f(i-1,j+1) f(i+1,j) = 1.  Any n >= 2.
inline ClassicalFrieze classical_frieze(int n, int j_min, int j_max) {
  if (n < 2) throw InvalidRank("rank must be at least 2");
  if (j_min > 0 || j_max < 0) throw IndexOutOfRange("window must contain column 0");
  const CommLaurent one = CommLaurent::constant(n, 1);
  ClassicalFrieze f;
  auto get = [&](int i, int j) -> const CommLaurent& {
    if (i == 0 || i == n + 1) return one;
    return f.at({i, j});
  };
  for (int i = 1; i <= n; ++i) f.emplace(GridCoord{i, 0}, CommLaurent::variable(n, i));
  for (int j = 0; j < j_max; ++j)
    for (int i = 1; i <= n; ++i)
      f.emplace(GridCoord{i, j + 1}, divide_exact(one + get(i - 1, j + 1) * get(i + 1, j), get(i, j)));
  for (int j = 0; j > j_min; --j)
    for (int i = n; i >= 1; --i)
      f.emplace(GridCoord{i, j - 1}, divide_exact(one + get(i - 1, j) * get(i + 1, j - 1), get(i, j)));
  return f;
}

// sigma(f(i,j)) == classical f(i,j) over the grid's window.
inline CheckResult cross_check(const FriezeGrid& grid, const ClassicalFrieze& classical) {
  for (const auto& [c, v] : grid.entries()) {
    auto it = classical.find(c);
    if (it == classical.end()) return CheckResult::fail("specialization", to_string(c) + " missing classically");
    if (specialize(v) != it->second) {
      return CheckResult::fail("specialization", to_string(c) + " disagrees with the classical frieze");
    }
  }
  return CheckResult::pass("specialization", std::to_string(grid.entries().size()) + " entries");
}

inline CheckResult cross_check(int n, int j_min, int j_max) {
  return cross_check(frieze_of_variables(n, j_min, j_max), classical_frieze(n, j_min, j_max));
}

}  // namespace qfrieze
