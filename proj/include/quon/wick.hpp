#pragma once

/**
 * Vacuum scalar products of quon creation-operator words.
 *
 * With a a+ - q a+ a = delta and a|0> = 0, the scalar product of two words of
 * equal length is the sum over bijections R between their slots of
 * q^{i(R)} prod_i delta(left_i, right_{R(i)}), i(R) being the inversion number.
 * Two independent routes are provided:
 *
 *  - q_permanent: dynamic programming over the set of right-hand slots already
 *    matched, rows processed in order. Assigning column j to row i adds one
 *    inversion per already used column greater than j. O(2^n n) steps.
 *  - oracle_*: explicit enumeration of all n! bijections, counting inversions
 *    pair by pair. Used as the reference for the DP.
 *
 * Integer counts are accumulated per power of q and converted to exact
 * polynomials at the end; every coefficient is bounded by n! <= 16!.
 */

#include <algorithm>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "quon/config.hpp"
#include "quon/errors.hpp"
#include "quon/parallel.hpp"
#include "quon/qpoly.hpp"

namespace quon {

/// A mode carried by a creation operator. delta(k, l) = 1 iff both fields match.
struct ModeLabel {
  std::optional<std::string> composite_tag;
  std::string internal_index;

  ModeLabel() = default;
  ModeLabel(std::string internal) : internal_index(std::move(internal)) {}  // NOLINT(implicit)
  ModeLabel(const char* internal) : internal_index(internal) {}             // NOLINT(implicit)
  ModeLabel(std::string tag, std::string internal) : composite_tag(std::move(tag)), internal_index(std::move(internal)) {}

  friend auto operator<=>(const ModeLabel&, const ModeLabel&) = default;
  friend bool operator==(const ModeLabel&, const ModeLabel&) = default;
};

/// "tag:internal" or bare "internal".
inline std::string to_string(const ModeLabel& label) {
  return label.composite_tag ? *label.composite_tag + ":" + label.internal_index : label.internal_index;
}

inline ModeLabel parse_mode_label(const std::string& text) {
  if (text.empty()) throw ParseError("empty mode label");
  const auto colon = text.find(':');
  if (colon == std::string::npos) return ModeLabel(text);
  if (colon == 0 || colon + 1 == text.size() || text.find(':', colon + 1) != std::string::npos)
    throw ParseError("bad mode label '" + text + "', expected 'tag:internal' or 'internal'");
  return ModeLabel(text.substr(0, colon), text.substr(colon + 1));
}

/// Creation operators a+(labels[0]) ... a+(labels[n-1]) applied to the vacuum.
struct OperatorWord {
  std::vector<ModeLabel> labels;

  std::size_t size() const { return labels.size(); }
  const ModeLabel& operator[](std::size_t i) const { return labels[i]; }

  friend auto operator<=>(const OperatorWord&, const OperatorWord&) = default;
  friend bool operator==(const OperatorWord&, const OperatorWord&) = default;
};

inline std::string to_string(const OperatorWord& word) {
  std::string out = "(";
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i > 0) out += ",";
    out += to_string(word[i]);
  }
  return out + ")";
}

/// Comma-separated labels, e.g. "k1,k2" or "p1:1,p1:2".
inline OperatorWord parse_word(const std::string& text) {
  OperatorWord word;
  if (text.empty()) return word;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) word.labels.push_back(parse_mode_label(item));
  if (text.back() == ',') throw ParseError("trailing comma in word '" + text + "'");
  return word;
}

/// Square-or-not 0/1 matrix; entry (i, j) = delta(left_i, right_j).
class DeltaMatrix {
 public:
  DeltaMatrix() = default;
  DeltaMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols, 0) {}

  static DeltaMatrix from_words(const OperatorWord& left, const OperatorWord& right) {
    DeltaMatrix m(left.size(), right.size());
    for (std::size_t i = 0; i < left.size(); ++i)
      for (std::size_t j = 0; j < right.size(); ++j) m.set(i, j, left[i] == right[j]);
    return m;
  }

  static DeltaMatrix from_rows(const std::vector<std::vector<int>>& rows) {
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    DeltaMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw ContractViolation("ragged delta matrix");
      for (std::size_t j = 0; j < cols; ++j) {
        if (rows[i][j] != 0 && rows[i][j] != 1) throw ContractViolation("delta matrix entries must be 0 or 1");
        m.set(i, j, rows[i][j] == 1);
      }
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j] != 0; }
  void set(std::size_t i, std::size_t j, bool v) { entries_[i * cols_ + j] = v ? 1 : 0; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::uint8_t> entries_;
};

/// Parses whitespace-separated 0/1 rows, one row per line; '#' lines skipped.
inline DeltaMatrix parse_delta_matrix(std::istream& in) {
  std::vector<std::vector<int>> rows;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos || line.front() == '#') continue;
    std::stringstream ss(line);
    std::string cell;
    std::vector<int> row;
    while (ss >> cell) {
      if (cell != "0" && cell != "1")
        throw ParseError("matrix line " + std::to_string(line_no) + ": entry '" + cell + "' is not 0 or 1");
      row.push_back(cell == "1" ? 1 : 0);
    }
    if (!rows.empty() && row.size() != rows.front().size())
      throw ParseError("matrix line " + std::to_string(line_no) + ": row length differs from the first row");
    rows.push_back(std::move(row));
  }
  return DeltaMatrix::from_rows(rows);
}

namespace detail {

// counts[k] = number of contributing bijections with k inversions.
using InversionCounts = std::vector<std::uint64_t>;
using Layer = std::map<std::uint32_t, InversionCounts>;

inline void add_shifted(InversionCounts& dst, const InversionCounts& src, std::size_t shift) {
  if (dst.size() < src.size() + shift) dst.resize(src.size() + shift, 0);
  for (std::size_t k = 0; k < src.size(); ++k) dst[k + shift] += src[k];
}

inline QPolynomial to_polynomial(const InversionCounts& counts) {
  std::vector<Rational> coeffs(counts.size());
  for (std::size_t k = 0; k < counts.size(); ++k) coeffs[k] = Rational(static_cast<unsigned long>(counts[k]));
  return QPolynomial(std::move(coeffs));
}

inline std::vector<std::uint32_t> row_masks(const DeltaMatrix& m) {
  std::vector<std::uint32_t> masks(m.rows(), 0);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m.at(i, j)) masks[i] |= std::uint32_t{1} << j;
  return masks;
}

/// Advances the subset DP from row `from` to row `to` (exclusive).
inline Layer advance(Layer layer, const std::vector<std::uint32_t>& rows, std::size_t from, std::size_t to) {
  for (std::size_t i = from; i < to && !layer.empty(); ++i) {
    Layer next;
    for (const auto& [used, counts] : layer) {
      std::uint32_t free = rows[i] & ~used;
      while (free != 0) {
        const int j = std::countr_zero(free);
        free &= free - 1;
        const std::size_t crossings = std::popcount(used >> (j + 1));
        add_shifted(next[used | (std::uint32_t{1} << j)], counts, crossings);
      }
    }
    layer = std::move(next);
  }
  return layer;
}

inline void check_square(const DeltaMatrix& m) {
  if (m.rows() != m.cols())
    throw ContractViolation("q-permanent needs a square matrix, got " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  if (m.rows() > config::kQPermanentCap)
    throw BudgetExceeded("q-permanent is capped at n <= " + std::to_string(config::kQPermanentCap));
}

inline bool has_empty_line(const DeltaMatrix& m, const std::vector<std::uint32_t>& rows) {
  std::uint32_t covered = 0;
  for (auto r : rows) {
    if (r == 0) return true;
    covered |= r;
  }
  const std::uint32_t all = m.cols() == 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << m.cols()) - 1;
  return covered != all;
}

}  // namespace detail

/// Sum over bijections R of q^{i(R)} prod_i m[i, R(i)].
inline QPolynomial q_permanent(const DeltaMatrix& m) {
  detail::check_square(m);
  if (m.rows() == 0) return QPolynomial(1);
  const auto rows = detail::row_masks(m);
  if (detail::has_empty_line(m, rows)) return {};
  detail::Layer start;
  start[0] = detail::InversionCounts{1};
  const auto done = detail::advance(std::move(start), rows, 0, m.rows());
  if (done.empty()) return {};
  return detail::to_polynomial(done.begin()->second);
}

/// q-permanent split by where the first `split` rows land.
struct BlockClassifiedPermanent {
  QPolynomial preserving;  // rows [0, split) onto columns [0, split)
  QPolynomial swapping;    // rows [0, split) onto columns [n - split, n)
  QPolynomial mixed;       // everything else

  QPolynomial total() const { return preserving + swapping + mixed; }
};

namespace detail {

struct BlockCounts {
  InversionCounts preserving, swapping, mixed;
};

inline BlockCounts q_permanent_block_counts(const DeltaMatrix& m, std::size_t split) {
  check_square(m);
  const std::size_t n = m.rows();
  if (split > n) throw ContractViolation("block split beyond matrix size");
  BlockCounts out;
  if (n == 0) {
    out.preserving = InversionCounts{1};
    return out;
  }
  const auto rows = row_masks(m);
  if (has_empty_line(m, rows)) return out;

  const std::uint32_t low = (std::uint32_t{1} << split) - 1;
  const std::uint32_t high = low << (n - split);
  Layer start;
  start[0] = InversionCounts{1};
  const auto middle = advance(std::move(start), rows, 0, split);

  Layer preserving, swapping, mixed;
  for (const auto& [used, counts] : middle) {
    // With split == 0 or 2 split == n both masks may coincide; preserving wins.
    if (used == low)
      preserving.emplace(used, counts);
    else if (used == high)
      swapping.emplace(used, counts);
    else
      mixed.emplace(used, counts);
  }
  auto finish = [&](Layer layer) {
    auto done = advance(std::move(layer), rows, split, n);
    return done.empty() ? InversionCounts{} : std::move(done.begin()->second);
  };
  out.preserving = finish(std::move(preserving));
  out.swapping = finish(std::move(swapping));
  out.mixed = finish(std::move(mixed));
  return out;
}

}  // namespace detail

/// Classifies each bijection by the set of columns used by the first `split`
/// rows. When split == n - split the swapping class is the block exchange.
inline BlockClassifiedPermanent q_permanent_by_block(const DeltaMatrix& m, std::size_t split) {
  const auto counts = detail::q_permanent_block_counts(m, split);
  return {detail::to_polynomial(counts.preserving), detail::to_polynomial(counts.swapping), detail::to_polynomial(counts.mixed)};
}

/// Brute-force q-permanent: all n! bijections, inversions counted pairwise.
/// Work is split by the column assigned to row 0.
inline QPolynomial oracle_q_permanent(const DeltaMatrix& m, std::size_t workers = 1) {
  if (m.rows() != m.cols()) throw ContractViolation("q-permanent needs a square matrix");
  const std::size_t n = m.rows();
  if (n > config::kOracleWordBudget)
    throw BudgetExceeded("oracle enumeration is budgeted at n <= " + std::to_string(config::kOracleWordBudget) + " (9!)");
  if (n == 0) return QPolynomial(1);

  std::vector<detail::InversionCounts> partial(workers == 0 ? 1 : workers, detail::InversionCounts(n * (n - 1) / 2 + 1, 0));
  detail::strided_for(n, workers, [&](std::size_t worker, std::size_t first) {
    std::vector<int> rest;
    for (std::size_t j = 0; j < n; ++j)
      if (j != first) rest.push_back(static_cast<int>(j));
    std::vector<int> image(n);
    image[0] = static_cast<int>(first);
    do {
      std::copy(rest.begin(), rest.end(), image.begin() + 1);
      bool alive = true;
      for (std::size_t i = 0; i < n && alive; ++i) alive = m.at(i, image[i]);
      if (!alive) continue;
      std::size_t inversions = 0;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          if (image[i] > image[j]) ++inversions;
      ++partial[worker][inversions];
    } while (std::next_permutation(rest.begin(), rest.end()));
  });
  detail::InversionCounts total(n * (n - 1) / 2 + 1, 0);
  for (const auto& p : partial) detail::add_shifted(total, p, 0);
  return detail::to_polynomial(total);
}

/// (left|0>, right|0>). Words of different length give 0: a surviving
/// annihilator reaches the vacuum.
inline QPolynomial scalar_product(const OperatorWord& left, const OperatorWord& right) {
  if (left.size() != right.size()) return {};
  return q_permanent(DeltaMatrix::from_words(left, right));
}

inline QPolynomial oracle_scalar_product(const OperatorWord& left, const OperatorWord& right, std::size_t workers = 1) {
  if (left.size() != right.size()) return {};
  return oracle_q_permanent(DeltaMatrix::from_words(left, right), workers);
}

}  // namespace quon
