#pragma once

// Quantum seeds (B, Lambda, cluster) for the linearly oriented A_n quiver and
// their mutations.  Cluster variables always live in the torus of the initial
// seed; a seed's own Lambda only supplies the quasi-commutation exponents of
// its cluster.

#include <algorithm>
#include <cstdlib>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qfrieze/errors.hpp"
#include "qfrieze/torus.hpp"

namespace qfrieze {

class ExchangeMatrix {
 public:
  ExchangeMatrix() = default;
  explicit ExchangeMatrix(IntMatrix m) : m_(std::move(m)) {
    if (!m_.is_skew_symmetric()) throw InconsistentInput("B must be skew-symmetric");
  }

  int rank() const { return m_.size(); }
  const IntMatrix& matrix() const { return m_; }
  // 1-based b_{i,j}
  int entry(int i, int j) const { return m_.at(i - 1, j - 1); }

  friend bool operator==(const ExchangeMatrix&, const ExchangeMatrix&) = default;

 private:
  IntMatrix m_;
};

// b_{i,i+1} = 1, b_{i+1,i} = -1.
inline ExchangeMatrix linear_a_exchange_matrix(int n) {
  IntMatrix b(n);
  for (int i = 0; i + 1 < n; ++i) {
    b.at(i, i + 1) = 1;
    b.at(i + 1, i) = -1;
  }
  return ExchangeMatrix(std::move(b));
}

// Lambda_{i,j} = 1 for i odd, j even, i < j; -1 for i even, j odd, i > j
// (1-based parity).
inline LambdaForm linear_a_lambda(int n) {
  IntMatrix l(n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (i % 2 == 1 && j % 2 == 0 && i < j) l.at(i - 1, j - 1) = 1;
      if (i % 2 == 0 && j % 2 == 1 && i > j) l.at(i - 1, j - 1) = -1;
    }
  return LambdaForm(std::move(l));
}

struct QuantumSeed {
  ExchangeMatrix b;
  LambdaForm lambda;
  std::vector<TorusElement> cluster;
  // Form of the torus the cluster variables are expressed in.
  LambdaForm ambient;

  int rank() const { return b.rank(); }

  // B^T Lambda == I
  bool is_compatible() const {
    return b.matrix().transposed() * lambda.matrix() == IntMatrix::identity(rank());
  }

  friend bool operator==(const QuantumSeed&, const QuantumSeed&) = default;
};

inline QuantumSeed initial_seed(int n) {
  require_even_rank(n);
  QuantumSeed seed{linear_a_exchange_matrix(n), linear_a_lambda(n), {}, {}};
  seed.ambient = seed.lambda;
  const IntMatrix id = IntMatrix::identity(n);
  if (seed.lambda.matrix() * seed.b.matrix().transposed() != id || !seed.is_compatible()) {
    throw InconsistentInput("Lambda is not the inverse of B^T");
  }
  seed.cluster.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) seed.cluster.push_back(TorusElement::generator(n, i));
  return seed;
}

struct LabelledFactor {
  TorusElement value;
  ExponentVector label;
};

// Weyl-normalized product: nu^{-sum_{a<b} lambda_ab} Z_1 ... Z_m, where
// Z_a Z_b = q^{lambda_ab} Z_b Z_a and lambda_ab = frame(label_a, label_b).
// Products are taken in the torus of `ambient`.
inline TorusElement normalized_product(const LambdaForm& ambient, const LambdaForm& frame,
                                       std::span<const LabelledFactor> factors) {
  long long correction = 0;
  for (std::size_t a = 0; a < factors.size(); ++a) {
    for (std::size_t b = a + 1; b < factors.size(); ++b) {
      const long long lam = frame(factors[a].label, factors[b].label);
      if (!quasi_commute(ambient, factors[a].value, factors[b].value, lam)) {
        throw NotQuasiCommuting("factors " + std::to_string(a) + " and " + std::to_string(b) +
                                " do not satisfy Z_a Z_b = q^" + std::to_string(lam) +
                                " Z_b Z_a");
      }
      correction += lam;
    }
  }
  TorusElement r = TorusElement::one(ambient.rank());
  for (const auto& f : factors) r = multiply(ambient, r, f.value);
  return r.shifted(static_cast<int>(-correction));
}

namespace detail {

inline int positive_part(int x) { return x > 0 ? x : 0; }

inline void require_direction(const QuantumSeed& seed, int k) {
  if (k < 1 || k > seed.rank()) {
    throw DirectionOutOfRange("mutation direction " + std::to_string(k) + " outside 1.." +
                              std::to_string(seed.rank()));
  }
}

// nu^{Lambda(e_k, v)} times the normalized product of the cluster variables
// with multiplicities v.  Dividing it on the left by Y_k gives M(-e_k + v).
inline TorusElement exchange_numerator(const QuantumSeed& seed, int k, const ExponentVector& v) {
  const int n = seed.rank();
  std::vector<LabelledFactor> factors;
  for (int i = 1; i <= n; ++i) {
    for (int rep = 0; rep < v[i - 1]; ++rep) {
      factors.push_back({seed.cluster[static_cast<std::size_t>(i - 1)],
                         ExponentVector::basis(n, i)});
    }
  }
  return normalized_product(seed.ambient, seed.lambda, factors)
      .shifted(static_cast<int>(seed.lambda(ExponentVector::basis(n, k), v)));
}

}  // namespace detail

// Mutation in direction k (1-based).
inline QuantumSeed mutate(const QuantumSeed& seed, int k) {
  detail::require_direction(seed, k);
  const int n = seed.rank();
  const int kk = k - 1;
  const IntMatrix& b = seed.b.matrix();

  IntMatrix b_new(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == kk || j == kk) {
        b_new.at(i, j) = -b.at(i, j);
      } else {
        b_new.at(i, j) =
            b.at(i, j) +
            (std::abs(b.at(i, kk)) * b.at(kk, j) + b.at(i, kk) * std::abs(b.at(kk, j))) / 2;
      }
    }

  IntMatrix e = IntMatrix::identity(n);
  for (int i = 0; i < n; ++i) e.at(i, kk) = i == kk ? -1 : detail::positive_part(-b.at(i, kk));

  ExponentVector v_plus(n), v_minus(n);
  for (int i = 0; i < n; ++i) {
    v_plus[i] = detail::positive_part(b.at(i, kk));
    v_minus[i] = detail::positive_part(-b.at(i, kk));
  }

  QuantumSeed next = seed;
  next.b = ExchangeMatrix(std::move(b_new));
  next.lambda = LambdaForm(e.transposed() * seed.lambda.matrix() * e);
  // Y'_k = M(-e_k + v_plus) + M(-e_k + v_minus).  The two summands need not
  // be Laurent separately once Y_k is not a monomial, so divide the sum.
  next.cluster[static_cast<std::size_t>(kk)] =
      left_divide(seed.ambient, seed.cluster[static_cast<std::size_t>(kk)],
                  detail::exchange_numerator(seed, k, v_plus) +
                      detail::exchange_numerator(seed, k, v_minus));

  if (!next.is_compatible()) {
    throw InconsistentInput("mutation at " + std::to_string(k) + " broke B^T Lambda = I");
  }
  for (int i = 1; i <= n; ++i) {
    if (i == k) continue;
    const auto& yk = next.cluster[static_cast<std::size_t>(kk)];
    const auto& yi = next.cluster[static_cast<std::size_t>(i - 1)];
    if (!quasi_commute(next.ambient, yk, yi, next.lambda.entry(k, i))) {
      throw NotQuasiCommuting("mutated variable " + std::to_string(k) +
                              " does not quasi-commute with variable " + std::to_string(i));
    }
  }
  return next;
}

inline QuantumSeed mutate_sequence(const QuantumSeed& seed, std::span<const int> directions) {
  QuantumSeed current = seed;
  for (int k : directions) current = mutate(current, k);
  return current;
}

inline QuantumSeed mutate_sequence(const QuantumSeed& seed, std::initializer_list<int> directions) {
  return mutate_sequence(seed, std::span<const int>(directions.begin(), directions.size()));
}

// X'_i: the variable obtained from the initial cluster by the single mutation
// at i, for i = 1..n.
inline std::vector<TorusElement> one_step_mutations(int n) {
  const QuantumSeed seed = initial_seed(n);
  std::vector<TorusElement> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) out.push_back(mutate(seed, i).cluster[static_cast<std::size_t>(i - 1)]);
  return out;
}

}  // namespace qfrieze
