#pragma once

#include "qharm/bigrat.hpp"
#include "qharm/qpoly.hpp"

#include <stdexcept>
#include <string>
#include <string_view>

namespace qharm {

/// Raised when a rational function is evaluated at, or has a limit taken
/// toward, a pole.
class PoleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Element of Q(q) in canonical form: gcd(num, den) = 1 and den monic, so
/// structural equality is mathematical equality.
class QRatFn {
 public:
  QRatFn() : den_(1) {}
  QRatFn(const BigRat& c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  QRatFn(long c) : QRatFn(BigRat(c)) {}          // NOLINT(google-explicit-constructor)
  QRatFn(const QPoly& p) : num_(p), den_(1) {}   // NOLINT(google-explicit-constructor)
  /// Reduces on construction. Throws std::domain_error when den is zero.
  QRatFn(const QPoly& num, const QPoly& den);

  static QRatFn q() { return QRatFn(QPoly::q()); }

  const QPoly& num() const { return num_; }
  const QPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }

  /// Multiplicative inverse. Throws std::domain_error on zero.
  QRatFn inverse() const;
  /// q^e for any integer e.
  static QRatFn q_pow(long e);

  QRatFn& operator+=(const QRatFn& o);
  QRatFn& operator-=(const QRatFn& o);
  QRatFn& operator*=(const QRatFn& o);
  QRatFn& operator/=(const QRatFn& o);

  friend QRatFn operator+(QRatFn a, const QRatFn& b) { return a += b; }
  friend QRatFn operator-(QRatFn a, const QRatFn& b) { return a -= b; }
  friend QRatFn operator*(QRatFn a, const QRatFn& b) { return a *= b; }
  friend QRatFn operator/(QRatFn a, const QRatFn& b) { return a /= b; }
  QRatFn operator-() const;

  friend bool operator==(const QRatFn& a, const QRatFn& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

  /// "(num)/(den)", or the numerator alone when den = 1.
  std::string to_string() const;

 private:
  struct Reduced {};
  QRatFn(QPoly num, QPoly den, Reduced) : num_(std::move(num)), den_(std::move(den)) {}

  QPoly num_;
  QPoly den_;
};

enum class ArithOp { add, sub, mul, div };
QRatFn ratfn_arith(const QRatFn& a, const QRatFn& b, ArithOp op);

/// Equality decided by cross-multiplication, independent of canonical form.
bool equal_by_cross_multiplication(const QRatFn& a, const QRatFn& b);

/// Exact value at q0. Throws PoleError when den(q0) = 0.
BigRat ratfn_eval(const QRatFn& f, const BigRat& q0);

/// Finite limit as q -> 1. Throws PoleError when the limit is infinite.
BigRat ratfn_limit_q1(const QRatFn& f);

/// Parses "(num)/(den)" or a bare polynomial.
QRatFn parse_qratfn(std::string_view text);

}  // namespace qharm
