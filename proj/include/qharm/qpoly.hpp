#pragma once

#include "qharm/bigrat.hpp"

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qharm {

/// Dense univariate polynomial in q over Q. Coefficients are stored by
/// ascending power with no trailing zeros; the zero polynomial is empty.
class QPoly {
 public:
  QPoly() = default;
  QPoly(const BigRat& constant);  // NOLINT(google-explicit-constructor)
  QPoly(long constant) : QPoly(BigRat(constant)) {}  // NOLINT(google-explicit-constructor)
  explicit QPoly(std::vector<BigRat> coeffs);

  /// c * q^power
  static QPoly monomial(const BigRat& c, std::size_t power);
  /// The indeterminate q.
  static QPoly q() { return monomial(1, 1); }

  const std::vector<BigRat>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  BigRat coeff(std::size_t power) const;
  /// Leading coefficient; zero for the zero polynomial.
  BigRat lead() const;

  BigRat eval(const BigRat& at) const;
  QPoly monic() const;

  QPoly& operator+=(const QPoly& o);
  QPoly& operator-=(const QPoly& o);
  QPoly& operator*=(const QPoly& o);
  QPoly& operator*=(const BigRat& c);

  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  friend QPoly operator*(QPoly a, const BigRat& c) { return a *= c; }
  friend QPoly operator*(const BigRat& c, QPoly a) { return a *= c; }
  QPoly operator-() const;

  friend bool operator==(const QPoly& a, const QPoly& b) { return a.coeffs_ == b.coeffs_; }

  /// Canonical text: ascending powers, e.g. "1-q+2q^2+(1/3)q^5".
  std::string to_string() const;

 private:
  void trim();
  std::vector<BigRat> coeffs_;
};

/// Quotient and remainder of Euclidean division. Throws std::domain_error
/// when b is zero.
std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b);

/// a / b when b divides a; throws std::domain_error otherwise.
QPoly exact_div(const QPoly& a, const QPoly& b);

/// Monic greatest common divisor. gcd(p, 0) = monic(p); both zero throws
/// std::domain_error.
QPoly gcd(const QPoly& a, const QPoly& b);

/// Inverse of QPoly::to_string. Also accepts "*" between a coefficient and
/// q, and whitespace. Throws std::invalid_argument on malformed text.
QPoly parse_qpoly(std::string_view text);

/// Reference Euclidean remainder-sequence gcd over Q. Much slower than
/// gcd(); kept as an independent oracle.
QPoly gcd_euclid(QPoly a, QPoly b);

}  // namespace qharm
