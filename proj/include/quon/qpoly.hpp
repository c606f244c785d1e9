#pragma once

/**
 * Exact polynomials in the deformation parameter q.
 *
 * Coefficients are arbitrary-precision rationals stored by ascending power,
 * index 0 being the constant term. The representation is canonical: the
 * highest stored coefficient is never zero, and the zero polynomial stores
 * nothing, so structural equality is polynomial identity.
 */

#include <gmpxx.h>

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "quon/errors.hpp"

namespace quon {

using Rational = mpq_class;

class QPolynomial {
 public:
  QPolynomial() = default;
  QPolynomial(const Rational& constant) : coeffs_{constant} { trim(); }  // NOLINT(implicit)
  QPolynomial(long constant) : coeffs_{Rational(constant)} { trim(); }    // NOLINT(implicit)
  explicit QPolynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
  QPolynomial(std::initializer_list<long> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (long c : coeffs) coeffs_.emplace_back(c);
    trim();
  }

  static QPolynomial monomial(std::size_t power, const Rational& c = 1) {
    if (c == 0) return {};
    std::vector<Rational> coeffs(power + 1);
    coeffs[power] = c;
    return QPolynomial(std::move(coeffs));
  }

  static QPolynomial q() { return monomial(1); }

  bool is_zero() const { return coeffs_.empty(); }

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

  std::span<const Rational> coefficients() const { return coeffs_; }

  Rational coeff(std::size_t power) const {
    return power < coeffs_.size() ? coeffs_[power] : Rational(0);
  }

  QPolynomial& operator+=(const QPolynomial& other) {
    if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
    for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
    trim();
    return *this;
  }

  QPolynomial& operator-=(const QPolynomial& other) {
    if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
    for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] -= other.coeffs_[k];
    trim();
    return *this;
  }

  QPolynomial& operator*=(const Rational& scalar) {
    if (scalar == 0) {
      coeffs_.clear();
      return *this;
    }
    for (auto& c : coeffs_) c *= scalar;
    return *this;
  }

  /// Adds c * q^power in place.
  void add_term(std::size_t power, const Rational& c) {
    if (c == 0) return;
    if (power >= coeffs_.size()) coeffs_.resize(power + 1);
    coeffs_[power] += c;
    trim();
  }

  friend QPolynomial operator+(QPolynomial a, const QPolynomial& b) { return a += b; }
  friend QPolynomial operator-(QPolynomial a, const QPolynomial& b) { return a -= b; }
  friend QPolynomial operator-(QPolynomial a) { return a *= Rational(-1); }
  friend QPolynomial operator*(QPolynomial a, const Rational& s) { return a *= s; }
  friend QPolynomial operator*(const Rational& s, QPolynomial a) { return a *= s; }

  friend QPolynomial operator*(const QPolynomial& a, const QPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return QPolynomial(std::move(out));
  }

  QPolynomial& operator*=(const QPolynomial& other) { return *this = *this * other; }

  friend bool operator==(const QPolynomial& a, const QPolynomial& b) { return a.coeffs_ == b.coeffs_; }

  /// Horner evaluation, exact.
  Rational eval(const Rational& x) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  double eval(double x) const {
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + it->get_d();
    return acc;
  }

  /// Substitutes q -> q^m: the coefficient of q^k moves to q^(m k).
  QPolynomial pow_substitute(std::size_t m) const {
    if (m == 0) throw ContractViolation("pow_substitute requires m >= 1");
    if (is_zero()) return {};
    std::vector<Rational> out(m * (coeffs_.size() - 1) + 1);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) out[m * k] = coeffs_[k];
    return QPolynomial(std::move(out));
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<Rational> coeffs_;
};

inline Rational eval(const QPolynomial& p, const Rational& x) { return p.eval(x); }
inline double eval(const QPolynomial& p, double x) { return p.eval(x); }
inline QPolynomial pow_substitute(const QPolynomial& p, std::size_t m) { return p.pow_substitute(m); }

/// Ascending powers, zero terms omitted, e.g. "1 + 2*q + 2*q^2 + q^3". Zero renders "0".
inline std::string to_string(const QPolynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  const auto coeffs = p.coefficients();
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    const Rational& c = coeffs[k];
    if (c == 0) continue;
    const bool negative = c < 0;
    const Rational magnitude = abs(c);
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (k == 0) {
      out += magnitude.get_str();
      continue;
    }
    if (magnitude != 1) out += magnitude.get_str() + "*";
    out += "q";
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

inline std::ostream& operator<<(std::ostream& os, const QPolynomial& p) { return os << to_string(p); }

namespace detail {

inline Rational parse_rational(std::string_view text, std::string_view whole) {
  if (text.empty()) throw ParseError("empty coefficient in polynomial '" + std::string(whole) + "'");
  const auto slash = text.find('/');
  auto check_digits = [&](std::string_view digits) {
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](unsigned char ch) { return std::isdigit(ch); }))
      throw ParseError("bad coefficient '" + std::string(text) + "' in polynomial '" + std::string(whole) + "'");
  };
  check_digits(text.substr(0, slash));
  if (slash != std::string_view::npos) {
    check_digits(text.substr(slash + 1));
    if (text.substr(slash + 1).find_first_not_of('0') == std::string_view::npos)
      throw ParseError("zero denominator in polynomial '" + std::string(whole) + "'");
  }
  Rational r(std::string(text), 10);
  r.canonicalize();
  return r;
}

}  // namespace detail

/// Parses the format produced by to_string. Whitespace is insignificant.
inline QPolynomial parse_qpoly(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  if (s.empty()) throw ParseError("empty polynomial");

  QPolynomial result;
  std::size_t pos = 0;
  bool first = true;
  while (pos < s.size()) {
    bool negative = false;
    if (s[pos] == '+' || s[pos] == '-') {
      negative = s[pos] == '-';
      ++pos;
    } else if (!first) {
      throw ParseError("expected '+' or '-' at offset " + std::to_string(pos) + " in '" + s + "'");
    }
    first = false;
    const std::size_t end = s.find_first_of("+-", pos);
    const std::string_view term = std::string_view(s).substr(pos, end == std::string::npos ? std::string::npos : end - pos);
    pos = end == std::string::npos ? s.size() : end;
    if (term.empty()) throw ParseError("empty term in '" + s + "'");

    Rational coeff = 1;
    std::size_t power = 0;
    const auto qpos = term.find('q');
    if (qpos == std::string_view::npos) {
      coeff = detail::parse_rational(term, s);
    } else {
      std::string_view head = term.substr(0, qpos);
      if (!head.empty()) {
        if (head.back() != '*') throw ParseError("expected '*' before q in '" + s + "'");
        coeff = detail::parse_rational(head.substr(0, head.size() - 1), s);
      }
      std::string_view tail = term.substr(qpos + 1);
      power = 1;
      if (!tail.empty()) {
        if (tail.front() != '^' || tail.size() < 2 ||
            !std::all_of(tail.begin() + 1, tail.end(), [](unsigned char ch) { return std::isdigit(ch); }))
          throw ParseError("bad exponent '" + std::string(tail) + "' in '" + s + "'");
        power = std::stoul(std::string(tail.substr(1)));
      }
    }
    result.add_term(power, negative ? Rational(-coeff) : coeff);
  }
  return result;
}

}  // namespace quon
