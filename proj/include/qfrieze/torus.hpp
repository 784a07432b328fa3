#pragma once

// The based quantum torus T(Lambda): Z[nu^{+-1}]-linear combinations of
// basis monomials X^u, u in Z^n, with X^u X^v = nu^{Lambda(u,v)} X^{u+v}.
//
// Elements do not carry their form.  Every product or quotient takes the
// LambdaForm explicitly, so the same element can be read under different
// forms.

#include <algorithm>
#include <compare>
#include <functional>
#include <initializer_list>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qfrieze/coefficients.hpp"
#include "qfrieze/errors.hpp"

namespace qfrieze {

class ExponentVector {
 public:
  ExponentVector() = default;
  explicit ExponentVector(int n) : entries_(static_cast<std::size_t>(n), 0) {}
  explicit ExponentVector(std::vector<int> entries) : entries_(std::move(entries)) {}
  ExponentVector(std::initializer_list<int> entries) : entries_(entries) {}

  // e_i, 1-based.
  static ExponentVector basis(int n, int i) {
    if (i < 1 || i > n) {
      throw IndexOutOfRange("basis index " + std::to_string(i) + " outside 1.." +
                            std::to_string(n));
    }
    ExponentVector e(n);
    e.entries_[static_cast<std::size_t>(i - 1)] = 1;
    return e;
  }

  int rank() const { return static_cast<int>(entries_.size()); }
  int operator[](int idx) const { return entries_[static_cast<std::size_t>(idx)]; }
  int& operator[](int idx) { return entries_[static_cast<std::size_t>(idx)]; }
  const std::vector<int>& entries() const { return entries_; }

  bool is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(), [](int x) { return x == 0; });
  }

  ExponentVector& operator+=(const ExponentVector& o) {
    check_rank(o);
    for (std::size_t t = 0; t < entries_.size(); ++t) entries_[t] += o.entries_[t];
    return *this;
  }
  ExponentVector& operator-=(const ExponentVector& o) {
    check_rank(o);
    for (std::size_t t = 0; t < entries_.size(); ++t) entries_[t] -= o.entries_[t];
    return *this;
  }
  ExponentVector operator-() const {
    ExponentVector r = *this;
    for (int& x : r.entries_) x = -x;
    return r;
  }
  friend ExponentVector operator+(ExponentVector a, const ExponentVector& b) { return a += b; }
  friend ExponentVector operator-(ExponentVector a, const ExponentVector& b) { return a -= b; }

  // Lexicographic; translation invariant.
  friend auto operator<=>(const ExponentVector&, const ExponentVector&) = default;
  friend bool operator==(const ExponentVector&, const ExponentVector&) = default;

 private:
  void check_rank(const ExponentVector& o) const {
    if (o.entries_.size() != entries_.size()) {
      throw RankMismatch("exponent vectors of length " + std::to_string(entries_.size()) +
                         " and " + std::to_string(o.entries_.size()));
    }
  }

  std::vector<int> entries_;
};

// Square integer matrix, row-major, 0-based access.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(int n) : n_(n), data_(static_cast<std::size_t>(n) * n, 0) {}
  IntMatrix(std::initializer_list<std::initializer_list<int>> rows)
      : IntMatrix(static_cast<int>(rows.size())) {
    int r = 0;
    for (const auto& row : rows) {
      if (static_cast<int>(row.size()) != n_) throw RankMismatch("matrix is not square");
      int c = 0;
      for (int v : row) at(r, c++) = v;
      ++r;
    }
  }

  static IntMatrix identity(int n) {
    IntMatrix m(n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  int size() const { return n_; }
  int at(int r, int c) const { return data_[index(r, c)]; }
  int& at(int r, int c) { return data_[index(r, c)]; }

  IntMatrix transposed() const {
    IntMatrix t(n_);
    for (int r = 0; r < n_; ++r)
      for (int c = 0; c < n_; ++c) t.at(c, r) = at(r, c);
    return t;
  }

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.n_ != b.n_) throw RankMismatch("matrix sizes differ");
    IntMatrix p(a.n_);
    for (int r = 0; r < a.n_; ++r)
      for (int k = 0; k < a.n_; ++k) {
        const int ark = a.at(r, k);
        if (ark == 0) continue;
        for (int c = 0; c < a.n_; ++c) p.at(r, c) += ark * b.at(k, c);
      }
    return p;
  }

  bool is_skew_symmetric() const {
    for (int r = 0; r < n_; ++r)
      for (int c = r; c < n_; ++c)
        if (at(r, c) != -at(c, r)) return false;
    return true;
  }

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t index(int r, int c) const { return static_cast<std::size_t>(r) * n_ + c; }

  int n_ = 0;
  std::vector<int> data_;
};

// Skew-symmetric integer form Lambda(u, v) = u^T Lambda v.
class LambdaForm {
 public:
  LambdaForm() = default;
  explicit LambdaForm(IntMatrix m) : m_(std::move(m)) {
    if (!m_.is_skew_symmetric()) throw InconsistentInput("Lambda must be skew-symmetric");
  }

  int rank() const { return m_.size(); }
  const IntMatrix& matrix() const { return m_; }
  // 1-based entry Lambda_{i,j}
  int entry(int i, int j) const { return m_.at(i - 1, j - 1); }

  long long operator()(const ExponentVector& u, const ExponentVector& v) const {
    check(u);
    check(v);
    const int n = rank();
    long long total = 0;
    for (int r = 0; r < n; ++r) {
      if (u[r] == 0) continue;
      long long row = 0;
      for (int c = 0; c < n; ++c) row += static_cast<long long>(m_.at(r, c)) * v[c];
      total += u[r] * row;
    }
    return total;
  }

  friend bool operator==(const LambdaForm&, const LambdaForm&) = default;

 private:
  void check(const ExponentVector& u) const {
    if (u.rank() != rank()) {
      throw RankMismatch("exponent vector of length " + std::to_string(u.rank()) +
                         " against a form of rank " + std::to_string(rank()));
    }
  }

  IntMatrix m_;
};

inline long long lambda_eval(const LambdaForm& form, const ExponentVector& u,
                             const ExponentVector& v) {
  return form(u, v);
}

class TorusElement {
 public:
  // Descending lex: begin() is the leading term.
  using TermMap = std::map<ExponentVector, NuPoly, std::greater<>>;

  TorusElement() = default;
  explicit TorusElement(int n) : rank_(n) {}

  static TorusElement zero(int n) { return TorusElement(n); }
  static TorusElement scalar(int n, const NuPoly& c) {
    return monomial(ExponentVector(n), c);
  }
  static TorusElement one(int n) { return scalar(n, NuPoly(1)); }
  static TorusElement monomial(const ExponentVector& u, const NuPoly& c = NuPoly(1)) {
    TorusElement t(u.rank());
    t.add_term(u, c);
    return t;
  }
  // X_i = X^{e_i}, 1-based.
  static TorusElement generator(int n, int i) { return monomial(ExponentVector::basis(n, i)); }

  int rank() const { return rank_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  const ExponentVector& leading_exponent() const { return terms_.begin()->first; }
  const NuPoly& leading_coefficient() const { return terms_.begin()->second; }

  NuPoly coefficient(const ExponentVector& u) const {
    auto it = terms_.find(u);
    return it == terms_.end() ? NuPoly() : it->second;
  }

  void add_term(const ExponentVector& u, const NuPoly& c) {
    if (u.rank() != rank_) {
      throw RankMismatch("term of rank " + std::to_string(u.rank()) + " in element of rank " +
                         std::to_string(rank_));
    }
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(u, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  // Multiplication by the central scalar nu^k.
  TorusElement shifted(int k) const {
    TorusElement r(rank_);
    for (const auto& [u, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), u, c.shifted(k));
    return r;
  }

  TorusElement scaled(const NuPoly& s) const {
    TorusElement r(rank_);
    if (s.is_zero()) return r;
    for (const auto& [u, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), u, c * s);
    return r;
  }

  TorusElement& operator+=(const TorusElement& o) {
    check_rank(o);
    for (const auto& [u, c] : o.terms_) add_term(u, c);
    return *this;
  }
  TorusElement& operator-=(const TorusElement& o) {
    check_rank(o);
    for (const auto& [u, c] : o.terms_) add_term(u, -c);
    return *this;
  }
  TorusElement operator-() const { return scaled(NuPoly(-1)); }
  friend TorusElement operator+(TorusElement a, const TorusElement& b) { return a += b; }
  friend TorusElement operator-(TorusElement a, const TorusElement& b) { return a -= b; }

  friend bool operator==(const TorusElement&, const TorusElement&) = default;

 private:
  void check_rank(const TorusElement& o) const {
    if (o.rank_ != rank_) {
      throw RankMismatch("torus elements of rank " + std::to_string(rank_) + " and " +
                         std::to_string(o.rank_));
    }
  }

  int rank_ = 0;
  TermMap terms_;
};

namespace detail {

inline void require_rank(const LambdaForm& form, const TorusElement& a) {
  if (a.rank() != form.rank()) {
    throw RankMismatch("torus element of rank " + std::to_string(a.rank()) +
                       " against a form of rank " + std::to_string(form.rank()));
  }
}

// acc += sign * (c_a X^ua) * (c_b X^ub) for every pair of terms.
inline void accumulate_product(const LambdaForm& form, const TorusElement& a,
                               const TorusElement& b, TorusElement& acc) {
  for (const auto& [u, cu] : a.terms()) {
    for (const auto& [v, cv] : b.terms()) {
      acc.add_term(u + v, (cu * cv).shifted(static_cast<int>(form(u, v))));
    }
  }
}

// Shared body of left and right division.  `left` selects d*y = p over y*d = p.
inline TorusElement divide(const LambdaForm& form, const TorusElement& d, const TorusElement& p,
                           bool left) {
  require_rank(form, d);
  require_rank(form, p);
  if (d.is_zero()) throw NotDivisible("division by the zero torus element");
  const int n = form.rank();
  if (p.is_zero()) return TorusElement::zero(n);

  // Coordinatewise extremes add under multiplication (T(Lambda) is a domain),
  // so every quotient exponent lies in this box.
  std::vector<int> lo(n), hi(n);
  for (int t = 0; t < n; ++t) {
    int p_lo = p.leading_exponent()[t], p_hi = p_lo, d_lo = d.leading_exponent()[t], d_hi = d_lo;
    for (const auto& [u, c] : p.terms()) {
      p_lo = std::min(p_lo, u[t]);
      p_hi = std::max(p_hi, u[t]);
    }
    for (const auto& [u, c] : d.terms()) {
      d_lo = std::min(d_lo, u[t]);
      d_hi = std::max(d_hi, u[t]);
    }
    lo[t] = p_lo - d_lo;
    hi[t] = p_hi - d_hi;
    if (lo[t] > hi[t]) throw NotDivisible("Newton box of the quotient is empty");
  }

  const ExponentVector& d_lead = d.leading_exponent();
  const NuPoly& d_lc = d.leading_coefficient();

  TorusElement quotient(n);
  TorusElement rest = p;
  while (!rest.is_zero()) {
    const ExponentVector r_lead = rest.leading_exponent();
    const ExponentVector w = r_lead - d_lead;
    for (int t = 0; t < n; ++t) {
      if (w[t] < lo[t] || w[t] > hi[t]) throw NotDivisible("torus quotient leaves a remainder");
    }
    const long long twist = left ? form(d_lead, w) : form(w, d_lead);
    const NuPoly c = exact_divide(rest.leading_coefficient(), d_lc.shifted(static_cast<int>(twist)));
    const TorusElement step = TorusElement::monomial(w, c);
    quotient += step;
    TorusElement product(n);
    if (left) {
      accumulate_product(form, d, step, product);
    } else {
      accumulate_product(form, step, d, product);
    }
    rest -= product;
    if (!rest.is_zero() && !(rest.leading_exponent() < r_lead)) {
      throw NotDivisible("leading exponent failed to decrease");
    }
  }
  return quotient;
}

}  // namespace detail

inline TorusElement multiply(const LambdaForm& form, const TorusElement& a, const TorusElement& b) {
  detail::require_rank(form, a);
  detail::require_rank(form, b);
  TorusElement r(form.rank());
  detail::accumulate_product(form, a, b, r);
  return r;
}

// Left-to-right product of any number of factors.
inline TorusElement multiply(const LambdaForm& form, std::initializer_list<TorusElement> factors) {
  TorusElement r = TorusElement::one(form.rank());
  for (const auto& f : factors) r = multiply(form, r, f);
  return r;
}

// y with d * y == p.
inline TorusElement left_divide(const LambdaForm& form, const TorusElement& d,
                                const TorusElement& p) {
  return detail::divide(form, d, p, true);
}

// y with y * d == p.
inline TorusElement right_divide(const LambdaForm& form, const TorusElement& p,
                                 const TorusElement& d) {
  return detail::divide(form, d, p, false);
}

// Diagnostic only: nu -> nu^{-1} with basis monomials fixed.
inline TorusElement bar(const TorusElement& a) {
  TorusElement r(a.rank());
  for (const auto& [u, c] : a.terms()) r.add_term(u, c.bar());
  return r;
}

inline bool is_bar_invariant(const TorusElement& a) {
  return std::all_of(a.terms().begin(), a.terms().end(),
                     [](const auto& term) { return term.second.is_palindromic(); });
}

inline bool has_nonnegative_coefficients(const TorusElement& a) {
  return std::all_of(a.terms().begin(), a.terms().end(),
                     [](const auto& term) { return term.second.has_nonnegative_coefficients(); });
}

// a * b == nu^{2 * exponent} * b * a
inline bool quasi_commute(const LambdaForm& form, const TorusElement& a, const TorusElement& b,
                          long long q_exponent) {
  return multiply(form, a, b) == multiply(form, b, a).shifted(static_cast<int>(2 * q_exponent));
}

}  // namespace qfrieze
