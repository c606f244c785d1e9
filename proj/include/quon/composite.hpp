#pragma once

/**
 * Statistics of bound states of n quons.
 *
 * A composite with tag t is the state sum_P c(P) a+(t:y_P(0)) ... a+(t:y_P(n-1))
 * where y are distinct internal labels and the tag stands for the bound-state
 * coordinate (its delta function). Two composites b+(t1) b+(t2)|0> and
 * b+(u1) b+(u2)|0> are compared by expanding both sides into 2n-operator words
 * and classifying every contributing bijection by block structure:
 *
 *   direct    first block -> first block, second -> second
 *   exchange  first block -> second block, second -> first
 *   cross     any bijection splitting a block across both composites
 *
 * The exchange class carries an extra q^{n^2}: each of the n lines of one
 * block crosses each of the n lines of the other.
 */

#include <cstddef>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "quon/config.hpp"
#include "quon/errors.hpp"
#include "quon/fock.hpp"
#include "quon/parallel.hpp"
#include "quon/permutation.hpp"
#include "quon/qpoly.hpp"
#include "quon/wick.hpp"

namespace quon {

struct CompositeSpec {
  std::size_t n = 0;
  std::vector<std::string> internal_labels;
  RepCoefficients rep;

  static CompositeSpec make(const RepCoefficients& rep) {
    CompositeSpec spec;
    spec.n = rep.n;
    for (std::size_t i = 1; i <= rep.n; ++i) spec.internal_labels.push_back(std::to_string(i));
    spec.rep = rep;
    spec.validate();
    return spec;
  }

  void validate() const {
    if (n == 0) throw ContractViolation("composite needs at least one constituent");
    if (internal_labels.size() != n) throw ContractViolation("composite: internal label count differs from n");
    if (std::set<std::string>(internal_labels.begin(), internal_labels.end()).size() != n)
      throw ContractViolation("composite: internal labels must be distinct");
    if (rep.n != n) throw ContractViolation("composite: representation degree differs from n");
  }

  std::vector<ModeLabel> labels(const std::string& tag) const {
    std::vector<ModeLabel> out;
    out.reserve(n);
    for (const auto& internal : internal_labels) out.emplace_back(tag, internal);
    return out;
  }
};

inline StateVector composite_word(const CompositeSpec& spec, const std::string& tag) {
  spec.validate();
  return build_state(spec.labels(tag), spec.rep);
}

/// Bilinear word concatenation: first's operators occupy the leading slots.
inline StateVector product_state(const StateVector& first, const StateVector& second) {
  StateVector out;
  for (const auto& [w1, c1] : first.terms())
    for (const auto& [w2, c2] : second.terms()) {
      OperatorWord w = w1;
      w.labels.insert(w.labels.end(), w2.labels.begin(), w2.labels.end());
      out.add(w, c1 * c2);
    }
  return out;
}

struct TwoCompositeResult {
  QPolynomial direct;
  QPolynomial exchange;
  QPolynomial cross;
  std::size_t n = 0;

  QPolynomial total() const { return direct + exchange + cross; }
  friend bool operator==(const TwoCompositeResult&, const TwoCompositeResult&) = default;
};

using TagPair = std::pair<std::string, std::string>;

namespace detail {

/// Operator words of both sides rewritten over small integer label codes.
struct CodedSide {
  std::vector<std::vector<std::uint8_t>> words;
  std::vector<Rational> coeffs;
};

struct CodedPair {
  CodedSide left, right;
};

inline CodedPair encode(const StateVector& left, const StateVector& right) {
  std::map<ModeLabel, std::uint8_t> codes;
  auto code_side = [&](const StateVector& s) {
    CodedSide side;
    for (const auto& [w, c] : s.terms()) {
      std::vector<std::uint8_t> coded;
      for (const auto& label : w.labels) {
        auto [it, inserted] = codes.emplace(label, static_cast<std::uint8_t>(codes.size()));
        if (inserted && codes.size() > 255) throw BudgetExceeded("too many distinct labels");
        coded.push_back(it->second);
      }
      side.words.push_back(std::move(coded));
      side.coeffs.push_back(c);
    }
    return side;
  };
  CodedPair out;
  out.left = code_side(left);
  out.right = code_side(right);
  return out;
}

inline void accumulate(std::vector<Rational>& dst, std::size_t power, const Rational& c) {
  if (dst.size() <= power) dst.resize(power + 1);
  dst[power] += c;
}

}  // namespace detail

/// Direct / exchange / cross split of the two-composite scalar product for any
/// tag configuration, including coinciding tags.
inline TwoCompositeResult decompose_two_composite(const CompositeSpec& spec, const TagPair& left, const TagPair& right) {
  spec.validate();
  const StateVector lhs = product_state(composite_word(spec, left.first), composite_word(spec, left.second));
  const StateVector rhs = product_state(composite_word(spec, right.first), composite_word(spec, right.second));
  const detail::CodedPair coded = detail::encode(lhs, rhs);
  const std::size_t width = 2 * spec.n;

  std::vector<Rational> direct, exchange, cross;
  auto add_weighted = [](std::vector<Rational>& dst, const detail::InversionCounts& counts, const Rational& w) {
    if (dst.size() < counts.size()) dst.resize(counts.size());
    for (std::size_t k = 0; k < counts.size(); ++k)
      if (counts[k] != 0) dst[k] += w * Rational(static_cast<unsigned long>(counts[k]));
  };
  DeltaMatrix m(width, width);
  for (std::size_t a = 0; a < coded.left.words.size(); ++a) {
    const auto& lw = coded.left.words[a];
    for (std::size_t b = 0; b < coded.right.words.size(); ++b) {
      const auto& rw = coded.right.words[b];
      for (std::size_t i = 0; i < width; ++i)
        for (std::size_t j = 0; j < width; ++j) m.set(i, j, lw[i] == rw[j]);
      const auto split = detail::q_permanent_block_counts(m, spec.n);
      const Rational weight = coded.left.coeffs[a] * coded.right.coeffs[b];
      add_weighted(direct, split.preserving, weight);
      add_weighted(exchange, split.swapping, weight);
      add_weighted(cross, split.mixed, weight);
    }
  }
  TwoCompositeResult out;
  out.n = spec.n;
  out.direct = QPolynomial(std::move(direct));
  out.exchange = QPolynomial(std::move(exchange));
  out.cross = QPolynomial(std::move(cross));
  return out;
}

/**
 * Scalar product of b+(t1) b+(t2)|0> with b+(u1) b+(u2)|0>, split into direct,
 * exchange and cross contributions. Uses the block-classified subset DP on
 * every pair of expanded words. Each side must hold two distinct composites.
 */
inline TwoCompositeResult two_composite_scalar(const CompositeSpec& spec, const TagPair& left, const TagPair& right) {
  if (left.first == left.second || right.first == right.second)
    throw ContractViolation("two_composite_scalar: the two composites on each side need distinct tags");
  return decompose_two_composite(spec, left, right);
}

/**
 * Reference route for two_composite_scalar without the distinct-tag
 * precondition. Enumerates every bijection R of S_{2n}, classifies it by
 * block structure, and for each left word w picks up the one right word v with
 * v[R(i)] = w[i] for all i, the only word whose delta product survives R.
 * Work is split by R(0).
 */
inline TwoCompositeResult oracle_two_composite(const CompositeSpec& spec, const TagPair& left, const TagPair& right,
                                               std::size_t workers = 1) {
  spec.validate();
  const std::size_t n = spec.n;
  const std::size_t width = 2 * n;
  if (width > config::enumeration_cap())
    throw BudgetExceeded("composite oracle enumerates S_" + std::to_string(width) + ", above the enumeration cap " +
                         std::to_string(config::enumeration_cap()));

  const StateVector lhs = product_state(composite_word(spec, left.first), composite_word(spec, left.second));
  const StateVector rhs = product_state(composite_word(spec, right.first), composite_word(spec, right.second));
  const detail::CodedPair coded = detail::encode(lhs, rhs);

  auto pack = [width](const auto& word) {
    std::uint64_t key = 0;
    for (std::size_t i = 0; i < width; ++i) key = (key << 8) | word[i];
    return key;
  };
  std::unordered_map<std::uint64_t, Rational> right_index;
  for (std::size_t b = 0; b < coded.right.words.size(); ++b) right_index.emplace(pack(coded.right.words[b]), coded.right.coeffs[b]);

  struct Partial {
    std::vector<Rational> direct, exchange, cross;
  };
  const std::size_t slots = std::max<std::size_t>(workers, 1);
  std::vector<Partial> partial(slots);

  detail::strided_for(width, workers, [&](std::size_t worker, std::size_t first) {
    std::vector<int> rest;
    for (std::size_t j = 0; j < width; ++j)
      if (j != first) rest.push_back(static_cast<int>(j));
    std::vector<int> image(width);
    std::vector<std::uint8_t> target(width);
    image[0] = static_cast<int>(first);
    do {
      std::copy(rest.begin(), rest.end(), image.begin() + 1);
      std::size_t to_first = 0;
      for (std::size_t i = 0; i < n; ++i)
        if (static_cast<std::size_t>(image[i]) < n) ++to_first;
      std::size_t inversions = 0;
      for (std::size_t i = 0; i < width; ++i)
        for (std::size_t j = i + 1; j < width; ++j)
          if (image[i] > image[j]) ++inversions;
      auto& bucket = to_first == n ? partial[worker].direct : to_first == 0 ? partial[worker].exchange : partial[worker].cross;
      for (std::size_t a = 0; a < coded.left.words.size(); ++a) {
        const auto& lw = coded.left.words[a];
        for (std::size_t i = 0; i < width; ++i) target[image[i]] = lw[i];
        auto hit = right_index.find(pack(target));
        if (hit == right_index.end()) continue;
        detail::accumulate(bucket, inversions, coded.left.coeffs[a] * hit->second);
      }
    } while (std::next_permutation(rest.begin(), rest.end()));
  });

  TwoCompositeResult out;
  out.n = n;
  for (auto& p : partial) {
    out.direct += QPolynomial(std::move(p.direct));
    out.exchange += QPolynomial(std::move(p.exchange));
    out.cross += QPolynomial(std::move(p.cross));
  }
  return out;
}

enum class Route { dynamic_programming, oracle };

/// Matching of S_{2n} that swaps the two blocks and keeps the order inside each.
inline Permutation block_swap_matching(std::size_t n) {
  std::vector<int> images(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    images[i] = static_cast<int>(i + n);
    images[i + n] = static_cast<int>(i);
  }
  return Permutation::from_zero_based(std::move(images));
}

/**
 * Extracts k with exchange = q^k * direct, where direct is taken from the
 * configuration (t1, t2) vs (t1, t2) and exchange from (t1, t2) vs (t2, t1).
 * Also checks direct = P_r(q)^2, so that after normalization the direct term
 * is exactly 1. Throws TheoremViolation if any identity fails or k != n^2.
 */
inline std::size_t effective_exponent(const CompositeSpec& spec, Route route = Route::dynamic_programming) {
  spec.validate();
  const TagPair a{"t1", "t2"};
  const TagPair swapped{"t2", "t1"};
  const auto run = [&](const TagPair& right) {
    return route == Route::oracle ? oracle_two_composite(spec, a, right) : two_composite_scalar(spec, a, right);
  };
  const TwoCompositeResult same = run(a);
  const TwoCompositeResult exch = run(swapped);

  const QPolynomial norm = normalization_poly(spec.rep, spec.labels("t1"));
  if (!(same.direct == norm * norm))
    throw TheoremViolation("direct term " + to_string(same.direct) + " differs from P_r(q)^2 = " + to_string(norm * norm));
  if (!same.exchange.is_zero() || !same.cross.is_zero() || !exch.direct.is_zero() || !exch.cross.is_zero())
    throw TheoremViolation("distinct composite tags left a non-matching contribution");

  // Lowest nonzero powers fix the shift; the full identity is then checked.
  auto lowest = [](const QPolynomial& p) {
    std::size_t k = 0;
    while (p.coeff(k) == 0) ++k;
    return k;
  };
  if (exch.exchange.is_zero()) throw TheoremViolation("exchange term vanished");
  const std::size_t low_direct = lowest(same.direct);
  const std::size_t low_exchange = lowest(exch.exchange);
  if (low_exchange < low_direct) throw TheoremViolation("exchange term has lower order than the direct term");
  const std::size_t shift = low_exchange - low_direct;
  if (!(exch.exchange == QPolynomial::monomial(shift) * same.direct))
    throw TheoremViolation("exchange " + to_string(exch.exchange) + " is not a monomial multiple of direct " + to_string(same.direct));
  if (shift != spec.n * spec.n)
    throw TheoremViolation("exchange shift q^" + std::to_string(shift) + " differs from q^" + std::to_string(spec.n * spec.n));
  return shift;
}

enum class Statistics { bose, fermi };

inline std::string to_string(Statistics s) { return s == Statistics::bose ? "boson" : "fermion"; }

/// Composite statistics at the Bose (q = 1) or Fermi (q = -1) point: q^{n^2} evaluated there.
inline Statistics weo_limit_check(std::size_t n, Statistics constituent) {
  if (n == 0) throw ContractViolation("weo_limit_check: n must be positive");
  const Rational q = constituent == Statistics::bose ? 1 : -1;
  const Rational value = QPolynomial::q().pow_substitute(n * n).eval(q);
  return value == 1 ? Statistics::bose : Statistics::fermi;
}

/// Cross contribution of the two-composite product. With shared tags all four
/// composites sit on the same coordinate; otherwise the pairing is distinct
/// and the cross term vanishes identically.
inline QPolynomial cross_term_magnitude(const CompositeSpec& spec, bool shared_tags) {
  if (shared_tags) return decompose_two_composite(spec, {"t", "t"}, {"t", "t"}).cross;
  return two_composite_scalar(spec, {"t1", "t2"}, {"t1", "t2"}).cross;
}

}  // namespace quon
