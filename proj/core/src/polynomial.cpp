#include "bruhat/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "bruhat/permutation.hpp"

namespace bruhat {

QPolynomial::QPolynomial(std::vector<mpz_class> coefficients) : coeffs_(std::move(coefficients)) {
  trim();
}

QPolynomial::QPolynomial(std::initializer_list<long> coefficients) {
  coeffs_.reserve(coefficients.size());
  for (long c : coefficients) coeffs_.emplace_back(c);
  trim();
}

QPolynomial QPolynomial::constant(long c) { return monomial(c, 0); }

QPolynomial QPolynomial::monomial(long c, int k) {
  std::vector<mpz_class> v(static_cast<std::size_t>(k) + 1);
  v[k] = c;
  return QPolynomial(std::move(v));
}

void QPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

mpz_class QPolynomial::operator[](int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[k];
}

mpz_class QPolynomial::evaluate(const mpz_class& q) const {
  mpz_class acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * q + *it;
  return acc;
}

QPolynomial QPolynomial::shifted(int shift) const {
  if (is_zero()) return {};
  std::vector<mpz_class> v(static_cast<std::size_t>(shift), mpz_class(0));
  v.insert(v.end(), coeffs_.begin(), coeffs_.end());
  return QPolynomial(std::move(v));
}

QPolynomial QPolynomial::mirrored(int d) const {
  if (degree() > d) throw InternalInvariantError("mirror degree below polynomial degree");
  std::vector<mpz_class> v(static_cast<std::size_t>(d) + 1, mpz_class(0));
  for (int k = 0; k <= degree(); ++k) v[d - k] = coeffs_[k];
  return QPolynomial(std::move(v));
}

QPolynomial& QPolynomial::operator+=(const QPolynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), 0);
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
  trim();
  return *this;
}

QPolynomial& QPolynomial::operator-=(const QPolynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), 0);
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] -= other.coeffs_[k];
  trim();
  return *this;
}

QPolynomial& QPolynomial::operator*=(const QPolynomial& other) {
  if (is_zero() || other.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<mpz_class> out(coeffs_.size() + other.coeffs_.size() - 1, mpz_class(0));
  for (std::size_t a = 0; a < coeffs_.size(); ++a) {
    if (coeffs_[a] == 0) continue;
    for (std::size_t b = 0; b < other.coeffs_.size(); ++b) out[a + b] += coeffs_[a] * other.coeffs_[b];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

QPolynomial operator-(QPolynomial a) {
  for (auto& c : a.coeffs_) c = -c;
  return a;
}

std::string QPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (int k = 0; k <= degree(); ++k) {
    const mpz_class& c = coeffs_[k];
    if (c == 0) continue;
    const bool negative = c < 0;
    const mpz_class mag = abs(c);
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (k == 0 || mag != 1) out += mag.get_str();
    if (k >= 1) out += "q";
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out;
}

QPolynomial QPolynomial::parse(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s.empty()) throw BruhatError("empty polynomial");
  QPolynomial result;
  std::size_t pos = 0;
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (pos != 0) {
      throw BruhatError("expected + or - in polynomial '" + std::string(text) + "'");
    }
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    mpz_class coeff = 1;
    const bool has_digits = pos > start;
    if (has_digits) coeff = mpz_class(s.substr(start, pos - start));
    int exponent = 0;
    if (pos < s.size() && s[pos] == 'q') {
      ++pos;
      exponent = 1;
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) throw BruhatError("missing exponent in '" + std::string(text) + "'");
        exponent = std::stoi(s.substr(start, pos - start));
      }
    } else if (!has_digits) {
      throw BruhatError("bad term in polynomial '" + std::string(text) + "'");
    }
    std::vector<mpz_class> term(static_cast<std::size_t>(exponent) + 1, mpz_class(0));
    term[exponent] = sign * coeff;
    result += QPolynomial(std::move(term));
  }
  return result;
}

std::vector<std::string> QPolynomial::coefficient_strings() const {
  std::vector<std::string> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(c.get_str());
  return out;
}

QPolynomial QPolynomial::from_coefficient_strings(const std::vector<std::string>& coeffs) {
  std::vector<mpz_class> v;
  v.reserve(coeffs.size());
  for (const auto& c : coeffs) v.emplace_back(c);
  return QPolynomial(std::move(v));
}

LaurentPolynomial::LaurentPolynomial(int low, std::vector<mpz_class> coefficients)
    : low_(low), coeffs_(std::move(coefficients)) {
  normalize();
}

void LaurentPolynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  std::size_t lead = 0;
  while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
  if (lead > 0) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
    low_ += static_cast<int>(lead);
  }
  if (coeffs_.empty()) low_ = 0;
}

LaurentPolynomial LaurentPolynomial::from_q_squared(const QPolynomial& p) {
  if (p.is_zero()) return {};
  std::vector<mpz_class> v(2 * static_cast<std::size_t>(p.degree()) + 1, mpz_class(0));
  for (int k = 0; k <= p.degree(); ++k) v[2 * k] = p[k];
  return {0, std::move(v)};
}

LaurentPolynomial LaurentPolynomial::monomial(const mpz_class& c, int k) { return {k, {c}}; }

mpz_class LaurentPolynomial::operator[](int exponent) const {
  const int k = exponent - low_;
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[k];
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& other) {
  if (other.is_zero()) return *this;
  if (is_zero()) return *this = other;
  const int lo = std::min(low_, other.low_);
  const int hi = std::max(high(), other.high());
  std::vector<mpz_class> v(static_cast<std::size_t>(hi - lo) + 1, mpz_class(0));
  for (int e = lo; e <= hi; ++e) v[e - lo] = (*this)[e] + other[e];
  low_ = lo;
  coeffs_ = std::move(v);
  normalize();
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& other) {
  LaurentPolynomial neg = other;
  for (auto& c : neg.coeffs_) c = -c;
  return *this += neg;
}

LaurentPolynomial& LaurentPolynomial::operator*=(const LaurentPolynomial& other) {
  if (is_zero() || other.is_zero()) return *this = LaurentPolynomial{};
  std::vector<mpz_class> v(coeffs_.size() + other.coeffs_.size() - 1, mpz_class(0));
  for (std::size_t a = 0; a < coeffs_.size(); ++a) {
    for (std::size_t b = 0; b < other.coeffs_.size(); ++b) v[a + b] += coeffs_[a] * other.coeffs_[b];
  }
  low_ += other.low_;
  coeffs_ = std::move(v);
  normalize();
  return *this;
}

Comparison compare_coefficientwise(const QPolynomial& a, const QPolynomial& b) {
  bool some_less = false;
  bool some_greater = false;
  const int top = std::max(a.degree(), b.degree());
  for (int k = 0; k <= top; ++k) {
    const mpz_class x = a[k];
    const mpz_class y = b[k];
    if (x < y) some_less = true;
    if (x > y) some_greater = true;
  }
  if (some_less && some_greater) return Comparison::Incomparable;
  if (some_less) return Comparison::LessEqual;
  if (some_greater) return Comparison::GreaterEqual;
  return Comparison::Equal;
}

const char* to_string(Comparison c) {
  switch (c) {
    case Comparison::Equal:
      return "equal";
    case Comparison::LessEqual:
      return "less-equal";
    case Comparison::GreaterEqual:
      return "greater-equal";
    case Comparison::Incomparable:
      return "incomparable";
  }
  return "?";
}

}  // namespace bruhat
