#pragma once

// Quantum frieze patterns on ZQ for the linearly oriented A_n quiver:
//
//   f(i,j) f(i,j+1) - nu f(i-1,j+1) f(i+1,j) = 1,   f(0,j) = f(n+1,j) = 1.
//
// Rows are 1..n, columns are integers.  Entries live in the initial quantum
// torus.

#include <algorithm>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qfrieze/errors.hpp"
#include "qfrieze/report.hpp"
#include "qfrieze/seed.hpp"
#include "qfrieze/torus.hpp"

namespace qfrieze {

struct GridCoord {
  int i = 1;
  int j = 0;

  friend bool operator==(const GridCoord&, const GridCoord&) = default;
  // Column-major: all of column j before column j+1.
  friend bool operator<(const GridCoord& a, const GridCoord& b) {
    return a.j != b.j ? a.j < b.j : a.i < b.i;
  }
};

inline std::string to_string(const GridCoord& c) {
  return "f(" + std::to_string(c.i) + "," + std::to_string(c.j) + ")";
}

using GammaValues = std::map<GridCoord, TorusElement>;

// (i,j) -> (n-i+1, j+i+1)
inline GridCoord phi(int n, const GridCoord& c) { return {n - c.i + 1, c.j + c.i + 1}; }

inline GridCoord phi_inverse(int n, const GridCoord& c) {
  const int i = n - c.i + 1;
  return {i, c.j - i - 1};
}

inline bool in_fundamental_domain(int n, const GridCoord& c) {
  return c.i >= 1 && c.i <= n && c.j >= 0 && c.i + c.j <= n + 1;
}

// {(i,j) | j >= 0, i + j <= n + 1}, column-major; n(n+3)/2 points.
inline std::vector<GridCoord> fundamental_domain(int n) {
  require_even_rank(n);
  std::vector<GridCoord> out;
  for (int j = 0; j <= n; ++j)
    for (int i = 1; i <= n && i + j <= n + 1; ++i) out.push_back({i, j});
  return out;
}

inline std::pair<int, int> default_window(int n) { return {-(n + 3), 2 * (n + 3)}; }

class FriezeGrid {
 public:
  using Entries = std::map<GridCoord, TorusElement>;

  FriezeGrid(int n, int j_min, int j_max, LambdaForm form, Entries entries)
      : n_(n), j_min_(j_min), j_max_(j_max), form_(std::move(form)), entries_(std::move(entries)) {
    if (j_min_ > j_max_) throw IndexOutOfRange("empty column window");
    for (int j = j_min_; j <= j_max_; ++j)
      for (int i = 1; i <= n_; ++i)
        if (!entries_.contains({i, j})) {
          throw InconsistentInput("grid is missing " + to_string(GridCoord{i, j}));
        }
    if (entries_.size() != static_cast<std::size_t>(n_) * (j_max_ - j_min_ + 1)) {
      throw InconsistentInput("grid holds entries outside its window");
    }
  }

  int rank() const { return n_; }
  int j_min() const { return j_min_; }
  int j_max() const { return j_max_; }
  const LambdaForm& form() const { return form_; }
  const Entries& entries() const { return entries_; }

  bool contains(const GridCoord& c) const {
    return c.j >= j_min_ && c.j <= j_max_ && c.i >= 0 && c.i <= n_ + 1;
  }

  // Boundary rows 0 and n+1 read as 1.
  TorusElement at(const GridCoord& c) const {
    if (!contains(c)) throw IndexOutOfRange(to_string(c) + " is outside the grid window");
    if (c.i == 0 || c.i == n_ + 1) return TorusElement::one(n_);
    return entries_.at(c);
  }
  TorusElement at(int i, int j) const { return at(GridCoord{i, j}); }

  // Replaces one entry; used to build perturbed grids in fault-injection checks.
  FriezeGrid with_entry(const GridCoord& c, TorusElement value) const {
    if (!entries_.contains(c)) throw IndexOutOfRange(to_string(c) + " is not a grid entry");
    FriezeGrid copy = *this;
    copy.entries_[c] = std::move(value);
    return copy;
  }

 private:
  int n_;
  int j_min_;
  int j_max_;
  LambdaForm form_;
  Entries entries_;
};

namespace detail {

inline TorusElement one_plus_nu_product(const LambdaForm& form, const TorusElement& a,
                                        const TorusElement& b) {
  TorusElement p = multiply(form, a, b).shifted(1);
  p += TorusElement::one(form.rank());
  return p;
}

}  // namespace detail

// The frieze with f(i,0) = X_i on columns [j_min, j_max].
inline FriezeGrid frieze_of_variables(int n, int j_min, int j_max) {
  require_even_rank(n);
  if (j_min > 0 || j_max < 0) {
    throw IndexOutOfRange("window [" + std::to_string(j_min) + ", " + std::to_string(j_max) +
                          "] must contain column 0");
  }
  const LambdaForm form = linear_a_lambda(n);
  const TorusElement one = TorusElement::one(n);
  FriezeGrid::Entries f;
  auto get = [&](int i, int j) -> const TorusElement& {
    if (i == 0 || i == n + 1) return one;
    return f.at({i, j});
  };

  for (int i = 1; i <= n; ++i) f.emplace(GridCoord{i, 0}, TorusElement::generator(n, i));

  // Row i of column j+1 needs row i-1 of the same column.
  for (int j = 0; j < j_max; ++j) {
    for (int i = 1; i <= n; ++i) {
      const TorusElement p = detail::one_plus_nu_product(form, get(i - 1, j + 1), get(i + 1, j));
      f.emplace(GridCoord{i, j + 1}, left_divide(form, get(i, j), p));
    }
  }
  // Row i of column j-1 needs row i+1 of the same column.
  for (int j = 0; j > j_min; --j) {
    for (int i = n; i >= 1; --i) {
      const TorusElement p = detail::one_plus_nu_product(form, get(i - 1, j), get(i + 1, j - 1));
      f.emplace(GridCoord{i, j - 1}, right_divide(form, p, get(i, j)));
    }
  }
  return FriezeGrid(n, j_min, j_max, form, std::move(f));
}

inline FriezeGrid frieze_of_variables(int n) {
  const auto [lo, hi] = default_window(n);
  return frieze_of_variables(n, lo, hi);
}

inline FriezeGrid restrict_window(const FriezeGrid& grid, int j_min, int j_max) {
  if (j_min < grid.j_min() || j_max > grid.j_max()) {
    throw IndexOutOfRange("requested window is not inside the computed window");
  }
  FriezeGrid::Entries kept;
  for (const auto& [c, v] : grid.entries())
    if (c.j >= j_min && c.j <= j_max) kept.emplace(c, v);
  return FriezeGrid(grid.rank(), j_min, j_max, grid.form(), std::move(kept));
}

// Reads every window size, including windows that do not contain column 0.
inline FriezeGrid frieze_of_variables_window(int n, int j_min, int j_max) {
  if (j_min > j_max) throw IndexOutOfRange("j_min exceeds j_max");
  const FriezeGrid full = frieze_of_variables(n, std::min(j_min, 0), std::max(j_max, 0));
  return restrict_window(full, j_min, j_max);
}

// Rebuilds the frieze on the fundamental domain from f(1,0), ..., f(1,n).
inline GammaValues frieze_from_mouth(int n, std::span<const TorusElement> mouth) {
  require_even_rank(n);
  if (mouth.size() != static_cast<std::size_t>(n) + 1) {
    throw IndexOutOfRange("mouth must supply exactly n+1 values");
  }
  const LambdaForm form = linear_a_lambda(n);
  const TorusElement one = TorusElement::one(n);
  GammaValues f;
  auto get = [&](int i, int j) -> const TorusElement& {
    if (i == 0 || i == n + 1) return one;
    return f.at({i, j});
  };

  for (int j = 0; j <= n; ++j) {
    if (mouth[static_cast<std::size_t>(j)].rank() != n) throw RankMismatch("mouth value rank");
    f.emplace(GridCoord{1, j}, mouth[static_cast<std::size_t>(j)]);
  }
  // nu f(i-1,j+1) f(i+1,j) = f(i,j) f(i,j+1) - 1
  for (int i = 1; i < n; ++i) {
    for (int j = 0; i + 1 + j <= n + 1; ++j) {
      TorusElement rhs = multiply(form, get(i, j), get(i, j + 1)) - one;
      rhs = rhs.shifted(-1);
      f.emplace(GridCoord{i + 1, j}, i == 1 ? rhs : left_divide(form, get(i - 1, j + 1), rhs));
    }
  }
  // Relations whose four participants are all known but were not used above.
  for (const auto& [c, v] : GammaValues(f)) {
    const GridCoord right{c.i, c.j + 1};
    const GridCoord up{c.i - 1, c.j + 1};
    const GridCoord down{c.i + 1, c.j};
    auto known = [&](const GridCoord& x) { return x.i == 0 || x.i == n + 1 || f.contains(x); };
    if (!known(right) || !known(up) || !known(down)) continue;
    const TorusElement lhs = multiply(form, v, get(right.i, right.j)) -
                             multiply(form, get(up.i, up.j), get(down.i, down.j)).shifted(1);
    if (lhs != one) {
      throw InconsistentInput("mouth values break the unimodular rule at " + to_string(c));
    }
  }
  return f;
}

// Unimodular rule at every position whose four participants are in the window.
inline CheckResult check_unimodular(const FriezeGrid& grid) {
  const int n = grid.rank();
  const TorusElement one = TorusElement::one(n);
  std::size_t checked = 0;
  for (int j = grid.j_min(); j < grid.j_max(); ++j) {
    for (int i = 1; i <= n; ++i) {
      const TorusElement lhs = multiply(grid.form(), grid.at(i, j), grid.at(i, j + 1)) -
                               multiply(grid.form(), grid.at(i - 1, j + 1), grid.at(i + 1, j))
                                   .shifted(1);
      if (lhs != one) return CheckResult::fail("frieze-relations", to_string(GridCoord{i, j}));
      ++checked;
    }
  }
  return CheckResult::pass("frieze-relations", std::to_string(checked) + " positions");
}

// f(phi(c)) == f(c) for every pair inside the window.
inline CheckResult check_periodicity(const FriezeGrid& grid) {
  const int n = grid.rank();
  std::size_t pairs = 0;
  for (const auto& [c, v] : grid.entries()) {
    const GridCoord image = phi(n, c);
    if (!grid.contains(image)) continue;
    ++pairs;
    if (grid.at(image) != v) {
      return CheckResult::fail("periodicity", to_string(c) + " != " + to_string(image));
    }
  }
  if (pairs == 0) throw IndexOutOfRange("window contains no phi-pair");
  return CheckResult::pass("periodicity", std::to_string(pairs) + " phi-pairs");
}

inline std::size_t count_distinct(const GammaValues& values) {
  std::vector<const TorusElement*> seen;
  for (const auto& [c, v] : values) {
    bool fresh = true;
    for (const auto* s : seen)
      if (*s == v) {
        fresh = false;
        break;
      }
    if (fresh) seen.push_back(&v);
  }
  return seen.size();
}

inline GammaValues restrict_to_fundamental_domain(const FriezeGrid& grid) {
  GammaValues out;
  for (const auto& c : fundamental_domain(grid.rank())) out.emplace(c, grid.at(c));
  return out;
}

// The quantum cluster variables, indexed by the fundamental domain.
inline GammaValues cluster_variables(int n) {
  require_even_rank(n);
  GammaValues out = restrict_to_fundamental_domain(frieze_of_variables(n, 0, n + 1));
  if (count_distinct(out) != out.size()) {
    throw InconsistentInput("frieze values on the fundamental domain are not distinct");
  }
  return out;
}

// Not implied by the frieze relations: nonnegative coefficients and
// nu-palindromic coefficients, expected from positivity results for quantum
// cluster variables.
inline CheckResult check_positivity(const FriezeGrid& grid) {
  for (const auto& [c, v] : grid.entries()) {
    if (!has_nonnegative_coefficients(v)) {
      return CheckResult::fail("diagnostics", to_string(c) + " has a negative coefficient");
    }
    if (!is_bar_invariant(v)) {
      return CheckResult::fail("diagnostics", to_string(c) + " is not nu-palindromic");
    }
  }
  return CheckResult::pass("diagnostics",
                           "literature-based: nonnegative, palindromic coefficients on " +
                               std::to_string(grid.entries().size()) + " entries");
}

}  // namespace qfrieze
