#pragma once

// Laurent polynomials in nu over the integers, nu = q^{1/2}.  This is the
// scalar ring Z[q^{+-1/2}] of the quantum torus.

#include <boost/multiprecision/cpp_int.hpp>

#include <initializer_list>
#include <map>
#include <string>
#include <utility>

#include "qfrieze/errors.hpp"

namespace qfrieze {

using Integer = boost::multiprecision::cpp_int;

class NuPoly {
 public:
  using TermMap = std::map<int, Integer>;

  NuPoly() = default;
  NuPoly(long long constant) {  // NOLINT(google-explicit-constructor)
    if (constant != 0) terms_.emplace(0, Integer(constant));
  }
  NuPoly(std::initializer_list<std::pair<int, long long>> terms) {
    for (const auto& [e, c] : terms) add_term(e, Integer(c));
  }

  // c * nu^exponent
  static NuPoly monomial(int exponent, Integer c = 1) {
    NuPoly p;
    p.add_term(exponent, std::move(c));
    return p;
  }
  static NuPoly nu(int exponent = 1) { return monomial(exponent); }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  int low_degree() const { return terms_.begin()->first; }
  int high_degree() const { return terms_.rbegin()->first; }

  Integer coefficient(int exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? Integer(0) : it->second;
  }

  void add_term(int exponent, const Integer& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(exponent, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  // Multiplication by nu^k.
  NuPoly shifted(int k) const {
    if (k == 0) return *this;
    NuPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e + k, c);
    return r;
  }

  // nu -> nu^{-1}
  NuPoly bar() const {
    NuPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(-e, c);
    return r;
  }

  bool is_palindromic() const { return bar() == *this; }

  bool has_nonnegative_coefficients() const {
    for (const auto& [e, c] : terms_) {
      if (c < 0) return false;
    }
    return true;
  }

  NuPoly& operator+=(const NuPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  NuPoly& operator-=(const NuPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  NuPoly operator-() const {
    NuPoly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
  }
  friend NuPoly operator+(NuPoly a, const NuPoly& b) { return a += b; }
  friend NuPoly operator-(NuPoly a, const NuPoly& b) { return a -= b; }

  friend NuPoly operator*(const NuPoly& a, const NuPoly& b) {
    NuPoly r;
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
    }
    return r;
  }
  NuPoly& operator*=(const NuPoly& o) { return *this = *this * o; }

  friend bool operator==(const NuPoly&, const NuPoly&) = default;

 private:
  TermMap terms_;  // exponent -> nonzero coefficient
};

inline NuPoly multiply(const NuPoly& a, const NuPoly& b) { return a * b; }

// Returns y with d * y == p.  Long division from the lowest nu-exponent up;
// throws NotDivisible as soon as a step is not exact.
inline NuPoly exact_divide(const NuPoly& p, const NuPoly& d) {
  if (d.is_zero()) throw NotDivisible("division by the zero polynomial");
  if (p.is_zero()) return {};

  // The quotient's support lies in [lo(p)-lo(d), hi(p)-hi(d)].
  const int d_lo = d.low_degree();
  const int q_lo = p.low_degree() - d_lo;
  const int q_hi = p.high_degree() - d.high_degree();
  const Integer& d_lc = d.terms().begin()->second;

  NuPoly quotient;
  NuPoly rest = p;
  while (!rest.is_zero()) {
    const auto& [e, c] = *rest.terms().begin();
    const int qe = e - d_lo;
    if (qe < q_lo || qe > q_hi) {
      throw NotDivisible("polynomial quotient leaves a remainder");
    }
    Integer qc;
    Integer remainder;
    boost::multiprecision::divide_qr(c, d_lc, qc, remainder);
    if (remainder != 0) throw NotDivisible("coefficient quotient is not integral");
    NuPoly step = NuPoly::monomial(qe, qc);
    quotient += step;
    rest -= d * step;
  }
  return quotient;
}

// Evaluation at nu = 1.
inline Integer specialize_nu_one(const NuPoly& a) {
  Integer sum = 0;
  for (const auto& [e, c] : a.terms()) sum += c;
  return sum;
}

}  // namespace qfrieze
