#pragma once

// Permutations of S_n in one-line notation, acting as place permutations on
// operator words: slot i of the permuted word holds the operator originally
// in slot P(i).

#include <algorithm>
#include <compare>
#include <cstddef>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "quon/config.hpp"
#include "quon/errors.hpp"
#include "quon/qpoly.hpp"

namespace quon {

class Permutation {
 public:
  Permutation() = default;

  static Permutation identity(std::size_t n) {
    Permutation p;
    p.images_.resize(n);
    std::iota(p.images_.begin(), p.images_.end(), 0);
    return p;
  }

  /// Zero-based images; throws unless they form a bijection on {0..n-1}.
  static Permutation from_zero_based(std::vector<int> images) {
    std::vector<bool> seen(images.size(), false);
    for (int v : images) {
      if (v < 0 || static_cast<std::size_t>(v) >= images.size() || seen[v])
        throw ContractViolation("permutation images are not a bijection");
      seen[v] = true;
    }
    Permutation p;
    p.images_ = std::move(images);
    return p;
  }

  /// One-line notation with images in 1..n, as written in the literature.
  static Permutation from_one_based(const std::vector<int>& images) {
    std::vector<int> zero(images.size());
    std::transform(images.begin(), images.end(), zero.begin(), [](int v) { return v - 1; });
    return from_zero_based(std::move(zero));
  }

  std::size_t size() const { return images_.size(); }
  int operator[](std::size_t i) const { return images_[i]; }
  const std::vector<int>& images() const { return images_; }

  Permutation inverse() const {
    Permutation p;
    p.images_.resize(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) p.images_[images_[i]] = static_cast<int>(i);
    return p;
  }

  /// (this * other)(i) = this(other(i)).
  Permutation operator*(const Permutation& other) const {
    if (other.size() != size()) throw ContractViolation("composing permutations of different degree");
    Permutation p;
    p.images_.resize(size());
    for (std::size_t i = 0; i < size(); ++i) p.images_[i] = images_[other.images_[i]];
    return p;
  }

  /// Partition of n by cycle lengths, descending.
  std::vector<int> cycle_type() const {
    std::vector<bool> visited(size(), false);
    std::vector<int> lengths;
    for (std::size_t start = 0; start < size(); ++start) {
      if (visited[start]) continue;
      int len = 0;
      for (std::size_t i = start; !visited[i]; i = images_[i]) {
        visited[i] = true;
        ++len;
      }
      lengths.push_back(len);
    }
    std::sort(lengths.rbegin(), lengths.rend());
    return lengths;
  }

  friend auto operator<=>(const Permutation&, const Permutation&) = default;
  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

/// Number of pairs i < j with P(i) > P(j); the minimum crossing count of the
/// contraction diagram drawn for P.
inline std::size_t inversion_number(const Permutation& p) {
  std::size_t count = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) ++count;
  return count;
}

inline int sign(const Permutation& p) { return inversion_number(p) % 2 == 0 ? 1 : -1; }

/// "(2,1,3)": one-based one-line notation.
inline std::string to_string(const Permutation& p) {
  std::string out = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(p[i] + 1);
  }
  return out + ")";
}

/// All n! permutations in lexicographic order. Refuses n above the enumeration cap.
inline std::vector<Permutation> enumerate_permutations(std::size_t n, std::size_t cap = config::enumeration_cap()) {
  if (n == 0) throw ContractViolation("enumerate requires n >= 1");
  if (n > cap)
    throw BudgetExceeded("refusing to enumerate S_" + std::to_string(n) + ": " + std::to_string(n) +
                         "! exceeds the enumeration cap n <= " + std::to_string(cap) +
                         " (raise QUON_ENUM_CAP to override)");
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 0);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation::from_zero_based(images));
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

inline std::size_t factorial(std::size_t n) {
  std::size_t f = 1;
  for (std::size_t k = 2; k <= n; ++k) f *= k;
  return f;
}

/// Coefficients c_r(P) selecting a combination of place-permuted words.
struct RepCoefficients {
  std::size_t n = 0;
  std::map<Permutation, Rational> coeffs;
  std::string label;

  /// Drops zero entries and checks arity and non-triviality.
  void validate() {
    if (n == 0) throw ContractViolation("representation needs n >= 1");
    std::erase_if(coeffs, [](const auto& kv) { return kv.second == 0; });
    for (const auto& [perm, c] : coeffs)
      if (perm.size() != n) throw ContractViolation("coefficient key " + to_string(perm) + " is not in S_" + std::to_string(n));
    if (coeffs.empty()) throw ContractViolation("representation coefficients are all zero");
  }

  Rational at(const Permutation& p) const {
    auto it = coeffs.find(p);
    return it == coeffs.end() ? Rational(0) : it->second;
  }
};

enum class RepKind { symmetric, antisymmetric };

/// symmetric: c(P) = 1. antisymmetric: c(P) = (-1)^i(P).
inline RepCoefficients preset_rep(std::size_t n, RepKind kind) {
  RepCoefficients rep;
  rep.n = n;
  rep.label = kind == RepKind::symmetric ? "symmetric" : "antisymmetric";
  for (auto& p : enumerate_permutations(n)) {
    const int c = kind == RepKind::symmetric ? 1 : sign(p);
    rep.coeffs.emplace(std::move(p), Rational(c));
  }
  rep.validate();
  return rep;
}

/// Reads "images<TAB>coefficient" lines, images one-based and comma separated,
/// e.g. "2,1,3\t-1/2". '#' starts a comment line.
inline RepCoefficients parse_rep(std::istream& in, std::string label = "custom") {
  RepCoefficients rep;
  rep.label = std::move(label);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    const auto where = [&] { return "representation line " + std::to_string(line_no) + ": "; };
    const auto tab = line.find('\t');
    if (tab == std::string::npos) throw ParseError(where() + "expected '<permutation>\\t<coefficient>'");
    std::vector<int> images;
    std::stringstream perm_text(line.substr(0, tab));
    std::string item;
    while (std::getline(perm_text, item, ',')) {
      try {
        std::size_t used = 0;
        images.push_back(std::stoi(item, &used));
        if (used != item.size()) throw ParseError("");
      } catch (const std::exception&) {
        throw ParseError(where() + "bad permutation entry '" + item + "'");
      }
    }
    Permutation p;
    try {
      p = Permutation::from_one_based(images);
    } catch (const ContractViolation& e) {
      throw ParseError(where() + e.what());
    }
    if (rep.n == 0) rep.n = p.size();
    if (p.size() != rep.n) throw ParseError(where() + "permutation degree differs from earlier lines");
    std::string coeff_text = line.substr(tab + 1);
    Rational c;
    try {
      c = parse_qpoly(coeff_text).coeff(0);
      if (parse_qpoly(coeff_text).degree() > 0) throw ParseError("");
    } catch (const ParseError&) {
      throw ParseError(where() + "bad coefficient '" + coeff_text + "'");
    }
    if (!rep.coeffs.emplace(p, c).second) throw ParseError(where() + "duplicate permutation " + to_string(p));
  }
  if (rep.n == 0) throw ParseError("representation file has no entries");
  rep.validate();
  return rep;
}

inline RepCoefficients load_rep(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open representation file '" + path + "'");
  return parse_rep(in, path);
}

}  // namespace quon
