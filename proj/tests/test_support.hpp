#pragma once

// Generators and independent reference computations shared by the suites.
// Nothing here calls the subset DP.

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "quon/quon.hpp"

namespace quon::testing {

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(0x5eed'c0de);
  return gen;
}

inline Rational random_rational(std::mt19937_64& g, int span = 9) {
  std::uniform_int_distribution<int> num(-span, span), den(1, span);
  Rational r(num(g), den(g));
  r.canonicalize();
  return r;
}

inline QPolynomial random_poly(std::mt19937_64& g, int max_degree = 5) {
  std::uniform_int_distribution<int> deg(-1, max_degree);
  const int d = deg(g);
  std::vector<Rational> c;
  for (int k = 0; k <= d; ++k) c.push_back(random_rational(g));
  return QPolynomial(std::move(c));
}

/// Random rational coefficients c(P), roughly a third of them zero.
inline RepCoefficients random_rep(std::size_t n, std::mt19937_64& g) {
  RepCoefficients rep;
  rep.n = n;
  rep.label = "random";
  std::uniform_int_distribution<int> keep(0, 2);
  for (auto& p : enumerate_permutations(n))
    if (keep(g) != 0) rep.coeffs.emplace(std::move(p), random_rational(g));
  rep.coeffs[Permutation::identity(n)] = Rational(1) + abs(random_rational(g));
  rep.validate();
  return rep;
}

inline DeltaMatrix random_matrix(std::size_t n, double density, std::mt19937_64& g) {
  std::bernoulli_distribution bit(density);
  DeltaMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m.set(i, j, bit(g));
  return m;
}

inline OperatorWord random_word(std::size_t n, std::size_t alphabet, std::mt19937_64& g) {
  std::uniform_int_distribution<std::size_t> pick(0, alphabet - 1);
  OperatorWord w;
  for (std::size_t i = 0; i < n; ++i) w.labels.emplace_back("k" + std::to_string(pick(g)));
  return w;
}

inline OperatorWord word_of(std::initializer_list<const char*> labels) {
  OperatorWord w;
  for (const char* l : labels) w.labels.emplace_back(l);
  return w;
}

/// Inversions counted straight from the image vector.
inline std::size_t count_inversions(const std::vector<int>& images) {
  std::size_t c = 0;
  for (std::size_t i = 0; i < images.size(); ++i)
    for (std::size_t j = i + 1; j < images.size(); ++j) c += images[i] > images[j];
  return c;
}

/// prod_{m=1}^{n} (1 + q + ... + q^{m-1}): generating function of inversions on S_n.
inline QPolynomial q_factorial(std::size_t n) {
  QPolynomial out(1);
  for (std::size_t m = 1; m <= n; ++m) {
    std::vector<Rational> ones(m, Rational(1));
    out *= QPolynomial(std::move(ones));
  }
  return out;
}

/// q -> -q.
inline QPolynomial negate_q(const QPolynomial& p) {
  std::vector<Rational> c(p.coefficients().begin(), p.coefficients().end());
  for (std::size_t k = 1; k < c.size(); k += 2) c[k] = -c[k];
  return QPolynomial(std::move(c));
}

/// sum_{P,P'} c(P) c(P') q^{i(P^-1 P')}, by explicit double enumeration.
inline QPolynomial brute_normalization(const RepCoefficients& rep) {
  std::vector<Rational> coeffs(rep.n * (rep.n - 1) / 2 + 1);
  for (const auto& [p, cp] : rep.coeffs) {
    std::vector<int> inv(rep.n);
    for (std::size_t i = 0; i < rep.n; ++i) inv[p[i]] = static_cast<int>(i);
    for (const auto& [pp, cpp] : rep.coeffs) {
      std::vector<int> r(rep.n);
      for (std::size_t i = 0; i < rep.n; ++i) r[i] = inv[pp[i]];
      coeffs[count_inversions(r)] += cp * cpp;
    }
  }
  return QPolynomial(std::move(coeffs));
}

}  // namespace quon::testing
