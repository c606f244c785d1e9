#pragma once

// Multi-quon states built from representation-weighted operator words, their
// normalization polynomials, Gram matrices, and isotypic weights.

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <cmath>
#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "quon/character_table.hpp"
#include "quon/errors.hpp"
#include "quon/parallel.hpp"
#include "quon/permutation.hpp"
#include "quon/qpoly.hpp"
#include "quon/wick.hpp"

namespace quon {

/// Finite linear combination of equal-length words; zero coefficients are never stored.
class StateVector {
 public:
  void add(const OperatorWord& word, const Rational& c) {
    if (c == 0) return;
    if (!terms_.empty() && terms_.begin()->first.size() != word.size())
      throw ContractViolation("state vector words must share one length");
    auto [it, inserted] = terms_.emplace(word, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  const std::map<OperatorWord, Rational>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }

  Rational at(const OperatorWord& word) const {
    auto it = terms_.find(word);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  friend bool operator==(const StateVector&, const StateVector&) = default;

 private:
  std::map<OperatorWord, Rational> terms_;
};

/// Slot i of the result holds word[P(i)].
inline OperatorWord permute_word(const OperatorWord& word, const Permutation& p) {
  if (p.size() != word.size()) throw ContractViolation("permutation degree differs from word length");
  OperatorWord out;
  out.labels.reserve(word.size());
  for (std::size_t i = 0; i < word.size(); ++i) out.labels.push_back(word[p[i]]);
  return out;
}

/// sum_P c(P) a+(labels[P(0)]) ... a+(labels[P(n-1)]) |0>.
inline StateVector build_state(const std::vector<ModeLabel>& labels, const RepCoefficients& rep) {
  if (labels.size() != rep.n)
    throw ContractViolation("build_state: " + std::to_string(labels.size()) + " labels for a representation of S_" +
                            std::to_string(rep.n));
  const OperatorWord base{labels};
  StateVector state;
  for (const auto& [perm, c] : rep.coeffs) state.add(permute_word(base, perm), c);
  return state;
}

/// Bilinear extension of the word scalar product (coefficients are real).
inline QPolynomial scalar_product(const StateVector& left, const StateVector& right) {
  QPolynomial total;
  for (const auto& [lw, lc] : left.terms())
    for (const auto& [rw, rc] : right.terms()) {
      QPolynomial sp = scalar_product(lw, rw);
      if (!sp.is_zero()) total += sp * Rational(lc * rc);
    }
  return total;
}

/**
 * The normalization polynomial P_r(q) of a representation-weighted state of
 * distinct labels: sum_{P,P'} c(P) c(P') q^{i(P^-1 P')}. The normalization
 * constant then satisfies |N_r(q)|^2 P_r(q) = 1 wherever P_r(q) > 0.
 *
 * Repeated labels are refused: the degree bound n(n-1)/2 is only claimed for
 * constituents in distinct modes.
 */
inline QPolynomial normalization_poly(const RepCoefficients& rep, const std::vector<ModeLabel>& labels) {
  if (labels.size() != rep.n) throw ContractViolation("normalization_poly: label count differs from representation degree");
  if (std::set<ModeLabel>(labels.begin(), labels.end()).size() != labels.size())
    throw Unsupported("normalization_poly requires distinct labels");
  const StateVector state = build_state(labels, rep);
  return scalar_product(state, state);
}

/// Labels "1".."n".
inline std::vector<ModeLabel> default_labels(std::size_t n) {
  std::vector<ModeLabel> labels;
  for (std::size_t i = 1; i <= n; ++i) labels.emplace_back(std::to_string(i));
  return labels;
}

struct GramMatrix {
  std::vector<OperatorWord> words;
  std::vector<QPolynomial> entries;  // row-major

  std::size_t dimension() const { return words.size(); }
  const QPolynomial& at(std::size_t i, std::size_t j) const { return entries[i * words.size() + j]; }

  Eigen::MatrixXd evaluate(double q) const {
    const std::size_t d = dimension();
    Eigen::MatrixXd m(d, d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) m(i, j) = at(i, j).eval(q);
    return m;
  }
};

/// Entries (i, j) = scalar_product(words[i], words[j]); rows are filled in parallel.
inline GramMatrix gram(std::vector<OperatorWord> words, std::size_t workers = 1) {
  for (const auto& w : words)
    if (w.size() != words.front().size()) throw ContractViolation("gram: words of mixed length");
  GramMatrix g;
  g.words = std::move(words);
  const std::size_t d = g.words.size();
  g.entries.resize(d * d);
  detail::strided_for(d, workers, [&](std::size_t, std::size_t i) {
    for (std::size_t j = 0; j < d; ++j) g.entries[i * d + j] = scalar_product(g.words[i], g.words[j]);
  });
  return g;
}

/// All n! place permutations of the given labels, lexicographic in P.
inline std::vector<OperatorWord> permutation_basis(const std::vector<ModeLabel>& labels) {
  std::vector<OperatorWord> words;
  const OperatorWord base{labels};
  for (const auto& p : enumerate_permutations(labels.size())) words.push_back(permute_word(base, p));
  return words;
}

struct PsdReport {
  bool pass = false;
  double min_eigenvalue = 0.0;
  Eigen::VectorXd witness;          // eigenvector of the minimum eigenvalue
  bool outside_convex_range = false;  // |q| > 1
};

inline double default_psd_tolerance(std::size_t dimension) { return 1e-10 * static_cast<double>(std::max<std::size_t>(dimension, 1)); }

inline PsdReport check_psd(const GramMatrix& g, double q, double tolerance) {
  if (!(tolerance > 0)) throw ContractViolation("check_psd: tolerance must be positive");
  PsdReport report;
  report.outside_convex_range = q < -1.0 || q > 1.0;
  if (g.dimension() == 0) {
    report.pass = true;
    return report;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(g.evaluate(q));
  if (solver.info() != Eigen::Success) throw ContractViolation("check_psd: eigen-solver did not converge");
  report.min_eigenvalue = solver.eigenvalues()(0);
  report.witness = solver.eigenvectors().col(0);
  report.pass = report.min_eigenvalue >= -tolerance;
  return report;
}

/**
 * Exact squared norms of the isotypic components of the canonical n-quon word
 * (1, 2, ..., n). The central idempotent of irrep lambda,
 * (d/n!) sum_P chi(P) P, is applied to the word and its norm taken with the
 * permutation-basis Gram matrix G(P, Q) = q^{i(P^-1 Q)}. The components sum to
 * the norm of the word, which is 1.
 */
inline std::vector<std::pair<std::string, QPolynomial>> irrep_norm_polys(std::size_t n) {
  const CharacterTable& table = character_table(n);
  const auto perms = enumerate_permutations(n);
  const Rational order(static_cast<unsigned long>(factorial(n)));

  // Gram entries depend on P^-1 Q only; tabulate q^{i(P^-1 Q)} as exponents.
  std::vector<std::size_t> exponent(perms.size() * perms.size());
  for (std::size_t a = 0; a < perms.size(); ++a) {
    const Permutation inv = perms[a].inverse();
    for (std::size_t b = 0; b < perms.size(); ++b) exponent[a * perms.size() + b] = inversion_number(inv * perms[b]);
  }

  std::vector<std::pair<std::string, QPolynomial>> out;
  for (const auto& irrep : table.irreps) {
    std::vector<Rational> v(perms.size());
    for (std::size_t a = 0; a < perms.size(); ++a)
      v[a] = Rational(irrep.dimension() * table.character(irrep, perms[a])) / order;
    std::vector<Rational> coeffs(n * (n - 1) / 2 + 1);
    for (std::size_t a = 0; a < perms.size(); ++a) {
      if (v[a] == 0) continue;
      for (std::size_t b = 0; b < perms.size(); ++b) coeffs[exponent[a * perms.size() + b]] += v[a] * v[b];
    }
    out.emplace_back(irrep.label, QPolynomial(std::move(coeffs)));
  }
  return out;
}

/// Probability weight of each irrep of S_n in the n-quon state of distinct labels.
inline std::vector<std::pair<std::string, double>> irrep_weights(std::size_t n, double q) {
  if (!(q > -1.0 && q < 1.0)) throw ContractViolation("irrep_weights: q must lie in the open interval (-1, 1)");
  const auto polys = irrep_norm_polys(n);
  std::vector<std::pair<std::string, double>> out;
  double total = 0.0;
  for (const auto& [label, poly] : polys) {
    out.emplace_back(label, poly.eval(q));
    total += out.back().second;
  }
  for (auto& [label, w] : out) w /= total;
  return out;
}

}  // namespace quon
