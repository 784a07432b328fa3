#pragma once

// Quantum signed continuants P_{m,i} = P_m(X'_i, ..., X'_{i+m-1}) built from
// the one-step mutations X'_i of the initial seed:
//
//   P_{0,i} = 1,  P_{1,i} = X'_i,
//   P_{m+1,i} = P_{m,i} X'_{i+m} - nu^{-1} P_{m-1,i}        (m even)
//   P_{m+1,i} = nu^{-1} (P_{m,i} X'_{i+m} - P_{m-1,i})      (m odd)
//
// and sweeps that check the identities these satisfy.

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "qfrieze/errors.hpp"
#include "qfrieze/frieze.hpp"
#include "qfrieze/report.hpp"
#include "qfrieze/seed.hpp"
#include "qfrieze/torus.hpp"

namespace qfrieze {

class ContinuantTable {
 public:
  explicit ContinuantTable(int n)
      : n_(n), form_((require_even_rank(n), linear_a_lambda(n))), x_prime_(one_step_mutations(n)) {
    const TorusElement one = TorusElement::one(n);
    for (int i = 1; i <= n + 1; ++i) values_.emplace(std::pair{0, i}, one);
    for (int i = 1; i <= n; ++i) values_.emplace(std::pair{1, i}, x_prime(i));
    for (int m = 1; m < n; ++m) {
      for (int i = 1; i + m <= n; ++i) values_.emplace(std::pair{m + 1, i}, step(m, i, at(m, i), at(m - 1, i)));
    }
  }

  int rank() const { return n_; }
  const LambdaForm& form() const { return form_; }

  // X'_i, 1-based.
  const TorusElement& x_prime(int i) const {
    if (i < 1 || i > n_) throw IndexOutOfRange("X'_" + std::to_string(i) + " does not exist");
    return x_prime_[static_cast<std::size_t>(i - 1)];
  }

  static bool is_valid_index(int n, int m, int i) { return m >= 0 && i >= 1 && i + m - 1 <= n; }

  const TorusElement& at(int m, int i) const {
    if (!is_valid_index(n_, m, i)) {
      throw IndexOutOfRange("P_{" + std::to_string(m) + "," + std::to_string(i) +
                            "} needs 0 <= m, 1 <= i, i+m-1 <= " + std::to_string(n_));
    }
    return values_.at({m, i});
  }

  // Same recursion without the table; used to check the memoized values.
  TorusElement compute_uncached(int m, int i) const {
    if (!is_valid_index(n_, m, i)) throw IndexOutOfRange("continuant index out of range");
    if (m == 0) return TorusElement::one(n_);
    if (m == 1) return x_prime(i);
    return step(m - 1, i, compute_uncached(m - 1, i), compute_uncached(m - 2, i));
  }

 private:
  // P_{m+1,i} from P_{m,i} and P_{m-1,i}, m >= 1.
  TorusElement step(int m, int i, const TorusElement& p_m, const TorusElement& p_prev) const {
    const TorusElement lead = multiply(form_, p_m, x_prime(i + m));
    if (m % 2 == 0) return lead - p_prev.shifted(-1);
    return (lead - p_prev).shifted(-1);
  }

  int n_;
  LambdaForm form_;
  std::vector<TorusElement> x_prime_;
  std::map<std::pair<int, int>, TorusElement> values_;
};

inline TorusElement continuant(int n, int m, int i) {
  if (!ContinuantTable::is_valid_index(n, m, i)) {
    throw IndexOutOfRange("P_{" + std::to_string(m) + "," + std::to_string(i) + "} out of range");
  }
  return ContinuantTable(n).at(m, i);
}

namespace detail {

inline std::string triple(const char* a, int x, const char* b, int y, const char* c, int z) {
  return std::string(a) + "=" + std::to_string(x) + " " + b + "=" + std::to_string(y) + " " + c +
         "=" + std::to_string(z);
}

}  // namespace detail

// (a) X'_i X'_{i+1} - 1 = q (X'_{i+1} X'_i - 1)
// (b) X'_i X'_{i+k} = q^{(-1)^{k-1}} X'_{i+k} X'_i,                  k > 1
// (c) P_{m,i} X'_{i+m-1+k} = q^{(-1)^{k-1}} X'_{i+m-1+k} P_{m,i}    m odd, k > 1
//     P_{m,i} X'_{i+m-1+k} = X'_{i+m-1+k} P_{m,i}                   m even, k > 1
inline CheckResult verify_quasi_commutation(const ContinuantTable& table) {
  const int n = table.rank();
  const LambdaForm& form = table.form();
  const TorusElement one = TorusElement::one(n);
  const char* name = "quasi-commutation";
  std::size_t checked = 0;

  for (int i = 1; i < n; ++i) {
    const auto& a = table.x_prime(i);
    const auto& b = table.x_prime(i + 1);
    if (multiply(form, a, b) - one != (multiply(form, b, a) - one).shifted(2)) {
      return CheckResult::fail(name, "(a) i=" + std::to_string(i));
    }
    ++checked;
  }
  for (int i = 1; i < n; ++i) {
    for (int k = 2; k <= n - i; ++k) {
      const int sign = k % 2 == 0 ? -1 : 1;  // (-1)^{k-1}
      if (!quasi_commute(form, table.x_prime(i), table.x_prime(i + k), sign)) {
        return CheckResult::fail(name, "(b) " + detail::triple("i", i, "k", k, "m", 1));
      }
      ++checked;
    }
  }
  for (int m = 1; m <= n; ++m) {
    for (int k = 2; m - 1 + k <= n - 1; ++k) {
      for (int i = 1; i <= n - (m - 1 + k); ++i) {
        const int q_exp = m % 2 == 0 ? 0 : (k % 2 == 0 ? -1 : 1);
        if (!quasi_commute(form, table.at(m, i), table.x_prime(i + m - 1 + k), q_exp)) {
          return CheckResult::fail(name, "(c) " + detail::triple("i", i, "k", k, "m", m));
        }
        ++checked;
      }
    }
  }
  return CheckResult::pass(name, std::to_string(checked) + " identities");
}

// P_{m+1,i} = X'_{i+m} P_{m,i} - nu P_{m-1,i}      (m even)
// P_{m+1,i} = nu (X'_{i+m} P_{m,i} - P_{m-1,i})    (m odd)
inline CheckResult verify_left_recursion(const ContinuantTable& table) {
  const int n = table.rank();
  std::size_t checked = 0;
  for (int m = 1; m < n; ++m) {
    for (int i = 1; i <= n - m; ++i) {
      const TorusElement lead = multiply(table.form(), table.x_prime(i + m), table.at(m, i));
      const TorusElement rhs = m % 2 == 0 ? lead - table.at(m - 1, i).shifted(1)
                                          : (lead - table.at(m - 1, i)).shifted(1);
      if (rhs != table.at(m + 1, i)) {
        return CheckResult::fail("left-recursion", "m=" + std::to_string(m) + " i=" + std::to_string(i));
      }
      ++checked;
    }
  }
  return CheckResult::pass("left-recursion", std::to_string(checked) + " identities");
}

// P_{m,i} P_{m,i+1} = nu P_{m+1,i} P_{m-1,i+1} + 1,  m >= 1, 1 <= i <= n-m
inline CheckResult verify_frieze_relation(const ContinuantTable& table) {
  const int n = table.rank();
  const LambdaForm& form = table.form();
  const TorusElement one = TorusElement::one(n);
  std::size_t checked = 0;
  for (int m = 1; m < n; ++m) {
    for (int i = 1; i <= n - m; ++i) {
      const TorusElement lhs = multiply(form, table.at(m, i), table.at(m, i + 1));
      const TorusElement rhs =
          multiply(form, table.at(m + 1, i), table.at(m - 1, i + 1)).shifted(1) + one;
      if (lhs != rhs) {
        return CheckResult::fail("continuant-frieze-relation",
                                 "m=" + std::to_string(m) + " i=" + std::to_string(i));
      }
      ++checked;
    }
  }
  return CheckResult::pass("continuant-frieze-relation", std::to_string(checked) + " identities");
}

// f(i,0) = X_i and f(i,j) = P_{i,j} on the fundamental domain, and the cluster
// variables are X_1..X_n disjoint union {P_{j,i} | 1 <= i <= n, 1 <= j <= n-i+1}.
inline CheckResult verify_main_theorem(const ContinuantTable& table, const GammaValues& variables) {
  const int n = table.rank();
  const char* name = "main-theorem";
  for (const auto& [c, v] : variables) {
    const TorusElement expected =
        c.j == 0 ? TorusElement::generator(n, c.i) : table.at(c.i, c.j);
    if (v != expected) return CheckResult::fail(name, to_string(c) + " differs from its formula");
  }

  std::vector<TorusElement> generators;
  for (int i = 1; i <= n; ++i) generators.push_back(TorusElement::generator(n, i));
  std::vector<TorusElement> continuants;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n - i + 1; ++j) continuants.push_back(table.at(j, i));

  auto contains = [](const std::vector<TorusElement>& pool, const TorusElement& x) {
    for (const auto& y : pool)
      if (y == x) return true;
    return false;
  };
  for (std::size_t a = 0; a < continuants.size(); ++a) {
    if (contains(generators, continuants[a])) {
      return CheckResult::fail(name, "a continuant coincides with an initial variable");
    }
    for (std::size_t b = a + 1; b < continuants.size(); ++b)
      if (continuants[a] == continuants[b]) {
        return CheckResult::fail(name, "two continuants in the union coincide");
      }
  }
  std::vector<TorusElement> union_set = generators;
  union_set.insert(union_set.end(), continuants.begin(), continuants.end());
  if (union_set.size() != variables.size()) {
    return CheckResult::fail(name, "union has " + std::to_string(union_set.size()) +
                                       " elements, fundamental domain has " +
                                       std::to_string(variables.size()));
  }
  for (const auto& [c, v] : variables)
    if (!contains(union_set, v)) return CheckResult::fail(name, to_string(c) + " is not in the union");
  return CheckResult::pass(name, std::to_string(generators.size()) + " + " +
                                     std::to_string(continuants.size()) + " = " +
                                     std::to_string(union_set.size()) + " cluster variables");
}

}  // namespace qfrieze
