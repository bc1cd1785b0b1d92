#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace bruhat {

/// Polynomial in q with arbitrary-precision integer coefficients.
/// coefficients()[k] is the coefficient of q^k; never has a trailing zero,
/// and the zero polynomial has no coefficients.
class QPolynomial {
 public:
  QPolynomial() = default;
  explicit QPolynomial(std::vector<mpz_class> coefficients);
  QPolynomial(std::initializer_list<long> coefficients);

  static QPolynomial constant(long c);
  /// c * q^k.
  static QPolynomial monomial(long c, int k);

  /// Parses "1 + q + 3q^2", "q - 1", "-2q^3 + q", "0".
  static QPolynomial parse(std::string_view text);

  [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  [[nodiscard]] int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  /// Coefficient of q^k, zero outside the stored range.
  [[nodiscard]] mpz_class operator[](int k) const;
  [[nodiscard]] const std::vector<mpz_class>& coefficients() const { return coeffs_; }
  [[nodiscard]] mpz_class leading() const { return is_zero() ? mpz_class(0) : coeffs_.back(); }

  [[nodiscard]] mpz_class evaluate(const mpz_class& q) const;
  /// q^shift * p.
  [[nodiscard]] QPolynomial shifted(int shift) const;
  /// q^d * p(q^{-1}) for d >= degree().
  [[nodiscard]] QPolynomial mirrored(int d) const;

  QPolynomial& operator+=(const QPolynomial& other);
  QPolynomial& operator-=(const QPolynomial& other);
  QPolynomial& operator*=(const QPolynomial& other);

  friend QPolynomial operator+(QPolynomial a, const QPolynomial& b) { return a += b; }
  friend QPolynomial operator-(QPolynomial a, const QPolynomial& b) { return a -= b; }
  friend QPolynomial operator*(QPolynomial a, const QPolynomial& b) { return a *= b; }
  friend QPolynomial operator-(QPolynomial a);
  friend bool operator==(const QPolynomial& a, const QPolynomial& b) { return a.coeffs_ == b.coeffs_; }

  /// Ascending-degree text: "1 + q + 3q^2", "-1 + q".
  [[nodiscard]] std::string to_string() const;
  /// Coefficients as decimal strings, for JSON.
  [[nodiscard]] std::vector<std::string> coefficient_strings() const;
  static QPolynomial from_coefficient_strings(const std::vector<std::string>& coeffs);

 private:
  void trim();
  std::vector<mpz_class> coeffs_;
};

/// Laurent polynomial in t: stored exponents are low(), low()+1, ...
class LaurentPolynomial {
 public:
  LaurentPolynomial() = default;
  LaurentPolynomial(int low, std::vector<mpz_class> coefficients);

  /// p(t^2).
  static LaurentPolynomial from_q_squared(const QPolynomial& p);
  /// t^k.
  static LaurentPolynomial monomial(const mpz_class& c, int k);

  [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
  [[nodiscard]] int low() const { return low_; }
  /// Largest exponent with nonzero coefficient; undefined for zero.
  [[nodiscard]] int high() const { return low_ + static_cast<int>(coeffs_.size()) - 1; }
  [[nodiscard]] mpz_class operator[](int exponent) const;

  LaurentPolynomial& operator+=(const LaurentPolynomial& other);
  LaurentPolynomial& operator-=(const LaurentPolynomial& other);
  LaurentPolynomial& operator*=(const LaurentPolynomial& other);
  friend LaurentPolynomial operator*(LaurentPolynomial a, const LaurentPolynomial& b) { return a *= b; }
  friend bool operator==(const LaurentPolynomial&, const LaurentPolynomial&) = default;

 private:
  void normalize();
  int low_ = 0;
  std::vector<mpz_class> coeffs_;
};

enum class Comparison { Equal, LessEqual, GreaterEqual, Incomparable };

/// Coefficientwise comparison of a against b, reporting the tightest relation.
[[nodiscard]] Comparison compare_coefficientwise(const QPolynomial& a, const QPolynomial& b);
[[nodiscard]] const char* to_string(Comparison c);

}  // namespace bruhat
