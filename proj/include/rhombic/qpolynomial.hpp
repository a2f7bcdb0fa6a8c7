#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rhombic/error.hpp"

namespace rhombic {

/// Polynomial in q with nonnegative integer coefficients, coeffs()[k] being
/// the coefficient of q^k. The zero polynomial has no coefficients.
class QPolynomial {
 public:
  using Coefficient = std::uint64_t;

  QPolynomial() = default;
  QPolynomial(std::initializer_list<Coefficient> coeffs) : coeffs_(coeffs) { trim(); }
  explicit QPolynomial(std::vector<Coefficient> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static QPolynomial one() { return QPolynomial{1}; }

  static QPolynomial monomial(int degree) {
    std::vector<Coefficient> c(degree + 1, 0);
    c[degree] = 1;
    return QPolynomial(std::move(c));
  }

  const std::vector<Coefficient>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

  Coefficient at_one() const {
    Coefficient sum = 0;
    for (Coefficient c : coeffs_) sum = checked_add(sum, c);
    return sum;
  }

  bool is_palindromic() const { return std::equal(coeffs_.begin(), coeffs_.end(), coeffs_.rbegin()); }

  QPolynomial& operator+=(const QPolynomial& other) {
    if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), 0);
    for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] = checked_add(coeffs_[k], other.coeffs_[k]);
    trim();
    return *this;
  }

  friend QPolynomial operator+(QPolynomial a, const QPolynomial& b) { return a += b; }

  friend QPolynomial operator*(const QPolynomial& a, const QPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Coefficient> c(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
        c[i + j] = checked_add(c[i + j], checked_mul(a.coeffs_[i], b.coeffs_[j]));
      }
    }
    return QPolynomial(std::move(c));
  }

  QPolynomial& operator*=(const QPolynomial& other) { return *this = *this * other; }

  QPolynomial pow(int exponent) const {
    QPolynomial out = one();
    for (int k = 0; k < exponent; ++k) out *= *this;
    return out;
  }

  friend bool operator==(const QPolynomial&, const QPolynomial&) = default;

  /// e.g. "1 + 2q + 2q^2 + q^3"
  std::string to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
      if (coeffs_[k] == 0) continue;
      if (!out.empty()) out += " + ";
      if (coeffs_[k] != 1 || k == 0) out += std::to_string(coeffs_[k]);
      if (k >= 1) out += 'q';
      if (k >= 2) out += '^' + std::to_string(k);
    }
    return out;
  }

 private:
  static Coefficient checked_add(Coefficient a, Coefficient b) {
    Coefficient r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("q-polynomial coefficient overflow");
    return r;
  }

  static Coefficient checked_mul(Coefficient a, Coefficient b) {
    Coefficient r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("q-polynomial coefficient overflow");
    return r;
  }

  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<Coefficient> coeffs_;
};

/// [i]_q = 1 + q + ... + q^{i-1}
inline QPolynomial q_integer(int i) {
  if (i < 1) throw InvalidInput("q-integer needs i >= 1");
  return QPolynomial(std::vector<QPolynomial::Coefficient>(i, 1));
}

/// [i]_q! = [i]_q [i-1]_q ... [1]_q
inline QPolynomial q_factorial(int i) {
  if (i < 1) throw InvalidInput("q-factorial needs i >= 1");
  QPolynomial out = QPolynomial::one();
  for (int k = 2; k <= i; ++k) out *= q_integer(k);
  return out;
}

}  // namespace rhombic
